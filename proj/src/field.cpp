#include "pnl/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pnl {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NoBuiltinModulus: return "NoBuiltinModulus";
    case Errc::DegreeNotDividing: return "DegreeNotDividing";
    case Errc::ConventionMismatch: return "ConventionMismatch";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::PrimeMismatch: return "PrimeMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::VariableOutOfRange: return "VariableOutOfRange";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotBijective: return "NotBijective";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::NotBalanced: return "NotBalanced";
    case Errc::NotOPolynomial: return "NotOPolynomial";
    case Errc::BadLambda: return "BadLambda";
    case Errc::BadParameters: return "BadParameters";
    case Errc::BadGcd: return "BadGcd";
    case Errc::NotBent: return "NotBent";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::RangeError: return "RangeError";
    case Errc::ZeroComponent: return "ZeroComponent";
    case Errc::NotSingleOutput: return "NotSingleOutput";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::InconsistentTotals: return "InconsistentTotals";
    case Errc::NotPerfectNonlinear: return "NotPerfectNonlinear";
    case Errc::ShapeViolation: return "ShapeViolation";
    case Errc::ConstraintViolation: return "ConstraintViolation";
    case Errc::OddPrime: return "OddPrime";
    case Errc::OddN: return "OddN";
    case Errc::WrongShape: return "WrongShape";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::FormatError: return "FormatError";
  }
  return "Unknown";
}

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool is_square(std::uint64_t v) {
  auto r = isqrt(v);
  return r * r == v;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 r = 1 % mod, b = base % mod;
  while (exp) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

int legendre(std::int64_t l, unsigned p) {
  if (p == 2) throw Error(Errc::EvenPrime, "Legendre symbol needs an odd prime");
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  unsigned r = mod_p(l, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) { return static_cast<unsigned>(powmod(a, p - 2, p)); }

Poly poly_mod(Poly a, const Poly& f, unsigned p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const unsigned lead_inv = inv_mod(f.back(), p);
  while (a.size() > n) {
    unsigned c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - n;
    for (std::size_t j = 0; j <= n; ++j) a[shift + j] = (a[shift + j] + p * p - c * f[j] % p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, unsigned p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, unsigned p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

}  // namespace

bool Field::is_irreducible(unsigned p, const std::vector<unsigned>& monic) {
  Poly f = monic;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  const Poly x{0, 1};
  // x^{p^k} mod f for k = 1..n
  std::vector<Poly> frob(n + 1);
  frob[0] = poly_mod(x, f, p);
  for (std::size_t k = 1; k <= n; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
  if (poly_sub(frob[n], frob[0], p) != Poly{}) return false;
  for (auto r : prime_divisors(n)) {
    Poly g = poly_gcd(f, poly_sub(frob[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldPtr Field::create(unsigned p, unsigned n, std::optional<std::vector<unsigned>> modulus,
                       std::uint64_t table_threshold) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (n == 0) throw Error(Errc::BadParameters, "extension degree must be at least 1");
  std::vector<unsigned> f;
  if (modulus) {
    f = *modulus;
    if (f.size() != n + 1 || f.back() != 1)
      throw Error(Errc::ReducibleModulus, "modulus must be monic of degree " + std::to_string(n));
    for (auto c : f)
      if (c >= p) throw Error(Errc::ReducibleModulus, "modulus coefficient out of range");
    if (!is_irreducible(p, f)) throw Error(Errc::ReducibleModulus, "modulus is reducible over F_p");
  } else {
    auto b = builtin_modulus(p, n);
    if (!b)
      throw Error(Errc::NoBuiltinModulus,
                  "no built-in modulus for p=" + std::to_string(p) + ", n=" + std::to_string(n));
    f = *b;
  }
  return FieldPtr(new Field(p, n, std::move(f), table_threshold));
}

Field::Field(unsigned p, unsigned n, std::vector<unsigned> modulus, std::uint64_t threshold)
    : p_(p), n_(n), size_(ipow(p, n)), modulus_(std::move(modulus)), space_(p, n) {
  // z^{n+k} mod f
  Poly cur(modulus_.begin(), modulus_.end() - 1);
  for (auto& c : cur) c = (p_ - c) % p_;  // z^n = -(f_0 + ... + f_{n-1} z^{n-1})
  for (unsigned k = 0; k + 1 < n_; ++k) {
    Poly padded = cur;
    padded.resize(n_, 0);
    reduce_.push_back(padded);
    // multiply by z
    Poly next(n_ + 1, 0);
    for (unsigned i = 0; i < n_; ++i) next[i + 1] = padded[i];
    cur = poly_mod(next, modulus_, p_);
  }

  const std::uint64_t order = size_ - 1;
  if (order == 1) {
    primitive_ = 1;
  } else {
    for (Index g = 1; g < size_; ++g)
      if (has_order(g, order)) {
        primitive_ = g;
        break;
      }
  }

  if (size_ <= threshold) {
    exp_.resize(order);
    log_.assign(size_, 0);
    Index x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = poly_mul(x, primitive_);
    }
  }
}

bool Field::has_order(Index g, std::uint64_t order) const {
  if (poly_pow(g, order) != 1) return false;
  for (auto r : prime_divisors(order))
    if (poly_pow(g, order / r) == 1) return false;
  return true;
}

Index Field::poly_mul(Index x, Index y) const {
  if (x == 0 || y == 0) return 0;
  if (n_ == 1) return static_cast<Index>(std::uint64_t{x} * y % p_);
  unsigned a[32], b[32];
  unsigned prod[64] = {};
  for (unsigned i = 0; i < n_; ++i) {
    a[i] = x % p_;
    x /= p_;
    b[i] = y % p_;
    y /= p_;
  }
  for (unsigned i = 0; i < n_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] += a[i] * b[j];
  }
  for (unsigned i = 0; i < 2 * n_ - 1; ++i) prod[i] %= p_;
  for (unsigned k = 0; k + 1 < n_; ++k) {
    unsigned c = prod[n_ + k];
    if (!c) continue;
    for (unsigned i = 0; i < n_; ++i) prod[i] = (prod[i] + c * reduce_[k][i]) % p_;
  }
  Index r = 0;
  for (unsigned i = n_; i-- > 0;) r = r * p_ + prod[i];
  return r;
}

Index Field::poly_pow(Index x, std::uint64_t e) const {
  Index r = 1;
  while (e) {
    if (e & 1) r = poly_mul(r, x);
    x = poly_mul(x, x);
    e >>= 1;
  }
  return r;
}

Index Field::mul(Index x, Index y) const {
  if (x == 0 || y == 0) return 0;
  if (exp_.empty()) return poly_mul(x, y);
  std::uint64_t s = std::uint64_t{log_[x]} + log_[y];
  if (s >= exp_.size()) s -= exp_.size();
  return exp_[s];
}

Index Field::inv(Index x) const {
  if (x == 0) throw Error(Errc::RangeError, "inverse of zero");
  if (exp_.empty()) return poly_pow(x, size_ - 2);
  return log_[x] == 0 ? 1 : exp_[exp_.size() - log_[x]];
}

Index Field::pow(Index x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  if (exp_.empty()) return poly_pow(x, e);
  const std::uint64_t order = exp_.size();
  auto t = static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[x]) * (e % order)) % order);
  return exp_[t];
}

Index Field::frobenius(Index x, unsigned k) const {
  k %= n_;
  return pow(x, ipow(p_, k));
}

std::uint64_t Field::log(Index x) const {
  if (exp_.empty()) throw Error(Errc::CapExceeded, "field is above the table threshold");
  if (x == 0) throw Error(Errc::RangeError, "log of zero");
  return log_[x];
}

Index Field::exp(std::uint64_t e) const {
  if (exp_.empty()) throw Error(Errc::CapExceeded, "field is above the table threshold");
  return exp_[e % exp_.size()];
}

Index Field::trace(Index x, unsigned m) const {
  if (m == 0 || n_ % m != 0)
    throw Error(Errc::DegreeNotDividing,
                std::to_string(m) + " does not divide " + std::to_string(n_));
  Index acc = 0, cur = x;
  for (unsigned i = 0; i < n_ / m; ++i) {
    acc = add(acc, cur);
    cur = frobenius(cur, m);
  }
  return acc;
}

bool Field::is_power(Index x, std::uint64_t d) const {
  if (x == 0) return false;
  const std::uint64_t order = size_ - 1;
  const std::uint64_t g = std::gcd(d, order);
  return pow(x, order / g) == 1;
}

Index Field::subfield_generator(unsigned m) const {
  if (m == 0 || n_ % m != 0)
    throw Error(Errc::DegreeNotDividing,
                std::to_string(m) + " does not divide " + std::to_string(n_));
  return pow(primitive_, (size_ - 1) / (ipow(p_, m) - 1));
}

unsigned split_trace_product(Index x, Index y, const Field& half) {
  const auto q = static_cast<Index>(half.size());
  Index u1 = x % q, u2 = x / q, v1 = y % q, v2 = y / q;
  if (u2 >= q || v2 >= q) throw Error(Errc::ConventionMismatch, "operand outside F_{p^k} x F_{p^k}");
  return half.absolute_trace(half.add(half.mul(u1, v1), half.mul(u2, v2)));
}

unsigned scalar_product(Index x, Index y, ScalarProduct convention, const Field& field) {
  switch (convention) {
    case ScalarProduct::CoordinateDot:
      return field.space().dot(x, y);
    case ScalarProduct::TraceProduct:
      return field.absolute_trace(field.mul(x, y));
    case ScalarProduct::SplitTrace: {
      if (field.degree() % 2 != 0)
        throw Error(Errc::ConventionMismatch, "split-trace product needs an even degree");
      auto half = Field::create(field.p(), field.degree() / 2);
      return split_trace_product(x, y, *half);
    }
  }
  throw Error(Errc::ConventionMismatch, "unknown convention");
}

SubfieldCoordinates::SubfieldCoordinates(FieldPtr field, unsigned m) : field_(std::move(field)), m_(m) {
  const Field& f = *field_;
  if (m == 0 || f.degree() % m != 0)
    throw Error(Errc::DegreeNotDividing,
                std::to_string(m) + " does not divide " + std::to_string(f.degree()));
  const std::uint64_t qm = ipow(f.p(), m);
  decode_.resize(qm);
  encode_.assign(f.size(), -1);
  if (m == f.degree()) {
    for (std::uint64_t i = 0; i < qm; ++i) {
      decode_[i] = static_cast<Index>(i);
      encode_[i] = static_cast<std::int64_t>(i);
    }
    return;
  }
  std::vector<Index> basis(m);
  const Index g = f.subfield_generator(m);
  basis[0] = 1;
  for (unsigned j = 1; j < m; ++j) basis[j] = f.mul(basis[j - 1], g);
  for (std::uint64_t c = 0; c < qm; ++c) {
    Index acc = 0;
    std::uint64_t rest = c;
    for (unsigned j = 0; j < m; ++j) {
      auto digit = static_cast<unsigned>(rest % f.p());
      rest /= f.p();
      Index term = 0;
      for (unsigned t = 0; t < digit; ++t) term = f.add(term, basis[j]);
      acc = f.add(acc, term);
    }
    decode_[c] = acc;
    encode_[acc] = static_cast<std::int64_t>(c);
  }
}

Index SubfieldCoordinates::encode(Index x) const {
  if (x >= encode_.size() || encode_[x] < 0)
    throw Error(Errc::RangeError, "element is not in the degree-" + std::to_string(m_) + " subfield");
  return static_cast<Index>(encode_[x]);
}

}  // namespace pnl
