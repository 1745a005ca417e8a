#include "pnl/function_table.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pnl {

FunctionTable::FunctionTable(unsigned p, unsigned n, unsigned m, std::vector<Index> values)
    : p_(p), n_(n), m_(m), values_(std::move(values)) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (values_.size() != ipow(p, n))
    throw Error(Errc::DimensionMismatch, "table length " + std::to_string(values_.size()) +
                                             " differs from p^n = " + std::to_string(ipow(p, n)));
  const auto cod = ipow(p, m);
  for (auto v : values_)
    if (v >= cod) throw Error(Errc::IndexOutOfRange, "table value " + std::to_string(v) + " exceeds p^m");
}

Index FunctionTable::at(Index x) const {
  if (x >= values_.size()) throw Error(Errc::IndexOutOfRange, "input index out of range");
  return values_[x];
}

std::vector<unsigned> FunctionTable::component(Index b) const {
  if (b >= codomain_size()) throw Error(Errc::IndexOutOfRange, "component index out of range");
  VectorSpace t = target();
  std::vector<unsigned> out(values_.size());
  for (std::size_t x = 0; x < values_.size(); ++x) out[x] = t.dot(b, values_[x]);
  return out;
}

FunctionTable FunctionTable::plus(const FunctionTable& other) const {
  if (other.p_ != p_ || other.n_ != n_ || other.m_ != m_)
    throw Error(Errc::ShapeMismatch, "tables have different shapes");
  VectorSpace t = target();
  std::vector<Index> v(values_.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = t.add(values_[x], other.values_[x]);
  return {p_, n_, m_, std::move(v)};
}

std::vector<std::uint64_t> derivative_histogram(const FunctionTable& f, Index a) {
  if (a >= f.domain_size()) throw Error(Errc::IndexOutOfRange, "shift index out of range");
  const VectorSpace src = f.source(), dst = f.target();
  std::vector<std::uint64_t> hist(f.codomain_size(), 0);
  for (Index x = 0; x < f.domain_size(); ++x) ++hist[dst.sub(f(src.add(x, a)), f(x))];
  return hist;
}

bool is_perfect_nonlinear(const FunctionTable& f) {
  if (f.m() > f.n()) return false;
  const std::uint64_t expected = ipow(f.p(), f.n() - f.m());
  const VectorSpace src = f.source(), dst = f.target();
  std::vector<std::uint64_t> hist(f.codomain_size());
  for (Index a = 1; a < f.domain_size(); ++a) {
    std::fill(hist.begin(), hist.end(), 0);
    for (Index x = 0; x < f.domain_size(); ++x) {
      auto& bin = hist[dst.sub(f(src.add(x, a)), f(x))];
      if (++bin > expected) return false;
    }
  }
  return true;
}

FunctionTable apply_affine(const FunctionTable& f, const std::optional<AffineMap>& outer,
                           const std::optional<AffineMap>& inner,
                           const std::optional<AffineMap>& added) {
  if (outer) {
    if (outer->p != f.p() || outer->source_dim() != f.m() || outer->target_dim() != f.m())
      throw Error(Errc::DimensionMismatch, "outer map must act on F_p^m");
    if (!outer->is_permutation()) throw Error(Errc::NotAPermutation, "outer map is not invertible");
  }
  if (inner) {
    if (inner->p != f.p() || inner->source_dim() != f.n() || inner->target_dim() != f.n())
      throw Error(Errc::DimensionMismatch, "inner map must act on F_p^n");
    if (!inner->is_permutation()) throw Error(Errc::NotAPermutation, "inner map is not invertible");
  }
  if (added && (added->p != f.p() || added->source_dim() != f.n() || added->target_dim() != f.m()))
    throw Error(Errc::DimensionMismatch, "added map must go from F_p^n to F_p^m");
  const VectorSpace dst = f.target();
  return FunctionTable::tabulate(f.p(), f.n(), f.m(), [&](Index x) {
    Index y = f(inner ? (*inner)(x) : x);
    if (outer) y = (*outer)(y);
    if (added) y = dst.add(y, (*added)(x));
    return y;
  });
}

FunctionTable read_table(std::istream& in) {
  unsigned p = 0, n = 0, m = 0;
  if (!(in >> p >> n >> m)) throw Error(Errc::FormatError, "missing 'p n m' header");
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  const auto size = ipow(p, n);
  if (size > (std::uint64_t{1} << 32)) throw Error(Errc::CapExceeded, "table too large");
  std::vector<Index> v(size);
  for (std::uint64_t i = 0; i < size; ++i) {
    std::uint64_t value;
    if (!(in >> value)) throw Error(Errc::FormatError, "expected " + std::to_string(size) + " values, got " + std::to_string(i));
    if (value >= ipow(p, m)) throw Error(Errc::FormatError, "value out of range on line " + std::to_string(i + 2));
    v[i] = static_cast<Index>(value);
  }
  std::string extra;
  if (in >> extra) throw Error(Errc::FormatError, "trailing data after table");
  return {p, n, m, std::move(v)};
}

void write_table(std::ostream& out, const FunctionTable& f) {
  out << f.p() << ' ' << f.n() << ' ' << f.m() << '\n';
  for (auto v : f.values()) out << v << '\n';
}

FunctionTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::FormatError, "cannot open " + path);
  return read_table(in);
}

void save_table(const std::string& path, const FunctionTable& f) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::FormatError, "cannot write " + path);
  write_table(out, f);
}

}  // namespace pnl
