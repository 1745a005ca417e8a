#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "pnl/arith.hpp"
#include "pnl/vector_space.hpp"

namespace pnl {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_{p^n} = F_p[z]/(f(z)) for a monic irreducible f.
///
/// Elements are handled by canonical index: the coefficient vector in the
/// power basis 1, z, ..., z^{n-1}, read as a little-endian base-p integer.
/// Below `table_threshold` elements the constructor builds log/antilog
/// tables; above it multiplication falls back to polynomial arithmetic and
/// operations that need discrete logarithms throw CapExceeded.
class Field {
 public:
  static constexpr std::uint64_t kDefaultTableThreshold = 1594323;  // 3^13

  /// Validates p and the modulus. With no modulus the pinned built-in table
  /// is consulted (p in {2,3,5,7,11}, n <= 13).
  static FieldPtr create(unsigned p, unsigned n,
                         std::optional<std::vector<unsigned>> modulus = std::nullopt,
                         std::uint64_t table_threshold = kDefaultTableThreshold);

  /// Pinned modulus, coefficients low to high (length n+1, monic).
  static std::optional<std::vector<unsigned>> builtin_modulus(unsigned p, unsigned n);

  /// Rabin's irreducibility test for a monic polynomial over F_p.
  static bool is_irreducible(unsigned p, const std::vector<unsigned>& monic);

  unsigned p() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint64_t size() const { return size_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  const VectorSpace& space() const { return space_; }
  bool has_tables() const { return !exp_.empty(); }

  /// Generator of the multiplicative group.
  Index primitive() const { return primitive_; }

  Index one() const { return 1; }
  Index add(Index x, Index y) const { return space_.add(x, y); }
  Index sub(Index x, Index y) const { return space_.sub(x, y); }
  Index neg(Index x) const { return space_.neg(x); }
  Index mul(Index x, Index y) const;
  Index inv(Index x) const;
  Index div(Index x, Index y) const { return mul(x, inv(y)); }
  Index pow(Index x, std::uint64_t e) const;

  /// x^{p^k}.
  Index frobenius(Index x, unsigned k = 1) const;

  /// Discrete log to the base primitive(); requires tables, x != 0.
  std::uint64_t log(Index x) const;
  /// primitive()^e; requires tables.
  Index exp(std::uint64_t e) const;

  /// Relative trace Tr^n_m(x) = sum_{i < n/m} x^{p^{i m}}, returned as an
  /// element of this field lying in the degree-m subfield.
  Index trace(Index x, unsigned m) const;
  /// Absolute trace as a prime-field digit.
  unsigned absolute_trace(Index x) const { return static_cast<unsigned>(trace(x, 1)); }

  /// True iff x is a nonzero d-th power of some element of F*.
  bool is_power(Index x, std::uint64_t d) const;
  bool is_square(Index x) const { return is_power(x, 2); }

  /// Primitive element of the degree-m subfield: primitive()^{(q-1)/(p^m-1)}.
  Index subfield_generator(unsigned m) const;

 private:
  Field(unsigned p, unsigned n, std::vector<unsigned> modulus, std::uint64_t threshold);
  Index poly_mul(Index x, Index y) const;
  Index poly_pow(Index x, std::uint64_t e) const;
  bool has_order(Index g, std::uint64_t order) const;

  unsigned p_;
  unsigned n_;
  std::uint64_t size_;
  std::vector<unsigned> modulus_;
  VectorSpace space_;
  // reduce_[k] = z^{n+k} mod f as digit vector, for k < n-1
  std::vector<std::vector<unsigned>> reduce_;
  Index primitive_ = 0;
  std::vector<Index> exp_;
  std::vector<std::uint32_t> log_;
};

/// Inner-product conventions on F_p^n.
enum class ScalarProduct { CoordinateDot, TraceProduct, SplitTrace };

/// <x, y> under the chosen convention. CoordinateDot needs only the
/// field's vector space; TraceProduct uses Tr(xy) in `field`; SplitTrace
/// views x, y as pairs (low half, high half) over `half` = F_{p^{n/2}}.
unsigned scalar_product(Index x, Index y, ScalarProduct convention, const Field& field);
unsigned split_trace_product(Index x, Index y, const Field& half);

/// Coordinates of subfield elements with respect to the basis
/// 1, g, ..., g^{m-1} where g = field.subfield_generator(m). For m == n the
/// encoding is the identity; for m == 1 it is the constant digit.
class SubfieldCoordinates {
 public:
  SubfieldCoordinates(FieldPtr field, unsigned m);

  unsigned m() const { return m_; }
  const Field& field() const { return *field_; }
  /// Throws RangeError if x is not in the subfield.
  Index encode(Index x) const;
  Index decode(Index coords) const { return decode_.at(coords); }

 private:
  FieldPtr field_;
  unsigned m_;
  std::vector<Index> decode_;
  std::vector<std::int64_t> encode_;  // -1 outside the subfield
};

/// Value type pairing an index with its owning field.
class FieldElement {
 public:
  FieldElement(FieldPtr owner, Index index) : owner_(std::move(owner)), index_(index) {
    if (index_ >= owner_->size()) throw Error(Errc::IndexOutOfRange, "element index out of range");
  }

  const Field& field() const { return *owner_; }
  const FieldPtr& owner() const { return owner_; }
  Index index() const { return index_; }
  std::vector<unsigned> coefficients() const { return owner_->space().digits(index_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.owner_, a.owner_->add(a.index_, b.index_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.owner_, a.owner_->sub(a.index_, b.index_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.owner_, a.owner_->mul(a.index_, b.index_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return {a.owner_, a.owner_->div(a.index_, b.index_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.owner_ == b.owner_ && a.index_ == b.index_;
  }
  FieldElement pow(std::uint64_t e) const { return {owner_, owner_->pow(index_, e)}; }
  FieldElement trace(unsigned m) const { return {owner_, owner_->trace(index_, m)}; }

 private:
  FieldPtr owner_;
  Index index_;
};

}  // namespace pnl
