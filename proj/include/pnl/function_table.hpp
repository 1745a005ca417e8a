#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pnl/affine.hpp"
#include "pnl/vector_space.hpp"

namespace pnl {

/// Exhaustive value table of F: F_p^n -> F_p^m. Entry x is the canonical
/// index of F(x).
class FunctionTable {
 public:
  FunctionTable(unsigned p, unsigned n, unsigned m, std::vector<Index> values);

  /// Tabulates `fn` over every input index.
  template <class Fn>
  static FunctionTable tabulate(unsigned p, unsigned n, unsigned m, Fn&& fn) {
    const auto size = ipow(p, n);
    std::vector<Index> v(size);
    for (std::uint64_t x = 0; x < size; ++x) v[x] = fn(static_cast<Index>(x));
    return FunctionTable(p, n, m, std::move(v));
  }

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  std::uint64_t domain_size() const { return values_.size(); }
  std::uint64_t codomain_size() const { return ipow(p_, m_); }
  const std::vector<Index>& values() const { return values_; }
  Index operator()(Index x) const { return values_[x]; }
  Index at(Index x) const;

  VectorSpace source() const { return {p_, n_}; }
  VectorSpace target() const { return {p_, m_}; }

  /// Component function x -> <b, F(x)> as prime-field digits.
  std::vector<unsigned> component(Index b) const;

  /// F + G pointwise (same shape).
  FunctionTable plus(const FunctionTable& other) const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  unsigned p_, n_, m_;
  std::vector<Index> values_;
};

/// |{x : F(x+a) - F(x) = b}| for every b.
std::vector<std::uint64_t> derivative_histogram(const FunctionTable& f, Index a);

/// Every nonzero-shift derivative takes each value exactly p^{n-m} times.
bool is_perfect_nonlinear(const FunctionTable& f);

/// A1 o F o A2 + A. Omitted maps default to identity (A1, A2) or zero (A).
FunctionTable apply_affine(const FunctionTable& f, const std::optional<AffineMap>& outer,
                           const std::optional<AffineMap>& inner,
                           const std::optional<AffineMap>& added);

/// Table file format: first line "p n m", then p^n lines of values.
FunctionTable read_table(std::istream& in);
void write_table(std::ostream& out, const FunctionTable& f);
FunctionTable load_table(const std::string& path);
void save_table(const std::string& path, const FunctionTable& f);

}  // namespace pnl
