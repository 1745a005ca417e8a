#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "pnl/arith.hpp"

namespace pnl {

/// Exact element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^{p-2}.
///
/// The relation zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}) makes the basis
/// canonical, so equality is coefficientwise. For p = 2 the single
/// coefficient is the integer value itself (zeta_2 = -1).
///
/// `Scalar` is any ring type with the usual integer operators; int64_t
/// suffices for every field in scope and boost::multiprecision::cpp_int
/// works unchanged when it does not.
template <class Scalar = std::int64_t>
class Cyclotomic {
 public:
  explicit Cyclotomic(unsigned p) : p_(p), c_(p - 1, Scalar(0)) {
    if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  }

  /// From canonical coefficients (length p-1).
  Cyclotomic(unsigned p, std::vector<Scalar> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (c_.size() != p - 1) throw Error(Errc::ShapeMismatch, "expected p-1 coefficients");
  }

  /// sum_r counts[r] * zeta^r for r in [0, p); the group-ring view in which
  /// character sums are accumulated.
  static Cyclotomic from_group_ring(unsigned p, const std::vector<Scalar>& counts) {
    if (counts.size() != p) throw Error(Errc::ShapeMismatch, "expected p group-ring counts");
    Cyclotomic r(p);
    for (unsigned i = 0; i + 1 < p; ++i) r.c_[i] = counts[i] - counts[p - 1];
    return r;
  }

  static Cyclotomic integer(unsigned p, Scalar v) {
    Cyclotomic r(p);
    r.c_[0] = v;
    return r;
  }

  /// zeta^k for any integer k.
  static Cyclotomic zeta(unsigned p, std::int64_t k) {
    std::vector<Scalar> g(p, Scalar(0));
    g[mod_p(k, p)] = Scalar(1);
    return from_group_ring(p, g);
  }

  unsigned p() const { return p_; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.same_prime(b);
    Cyclotomic r(a);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.same_prime(b);
    Cyclotomic r(a);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }

  Cyclotomic operator-() const {
    Cyclotomic r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.same_prime(b);
    const unsigned p = a.p_;
    // cyclic convolution in Z[C_p], then project back to the canonical basis
    std::vector<Scalar> g(p, Scalar(0));
    for (unsigned i = 0; i + 1 < p; ++i) {
      if (a.c_[i] == Scalar(0)) continue;
      for (unsigned j = 0; j + 1 < p; ++j) g[(i + j) % p] += a.c_[i] * b.c_[j];
    }
    return from_group_ring(p, g);
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Scalar& s) {
    Cyclotomic r(a);
    for (auto& v : r.c_) v *= s;
    return r;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  /// Complex conjugation, zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    std::vector<Scalar> g(p_, Scalar(0));
    for (unsigned i = 0; i + 1 < p_; ++i) g[(p_ - i) % p_] = c_[i];
    return from_group_ring(p_, g);
  }

  Cyclotomic abs_squared() const { return *this * conj(); }

  std::optional<Scalar> as_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != Scalar(0)) return std::nullopt;
    return c_[0];
  }

  /// Multiplication by zeta^k is a rotation in the group ring.
  Cyclotomic times_zeta(std::int64_t k) const {
    std::vector<Scalar> g(p_, Scalar(0));
    const unsigned s = mod_p(k, p_);
    for (unsigned i = 0; i + 1 < p_; ++i) g[(i + s) % p_] = c_[i];
    return from_group_ring(p_, g);
  }

  /// Exact division by an integer; nullopt when some coefficient is not divisible.
  std::optional<Cyclotomic> divide_exact(const Scalar& d) const {
    Cyclotomic r(*this);
    for (auto& v : r.c_) {
      if (v % d != Scalar(0)) return std::nullopt;
      v /= d;
    }
    return r;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& v) { return v == Scalar(0); });
  }

  /// Floating-point value; only for sanity cross-checks.
  std::complex<double> evaluate() const {
    std::complex<double> acc = 0.0;
    const double step = 2.0 * std::numbers::pi / p_;
    for (unsigned i = 0; i + 1 < p_; ++i)
      acc += static_cast<double>(c_[i]) * std::polar(1.0, step * i);
    return acc;
  }

 private:
  void same_prime(const Cyclotomic& o) const {
    if (p_ != o.p_) throw Error(Errc::PrimeMismatch, "operands live in different cyclotomic rings");
  }

  unsigned p_;
  std::vector<Scalar> c_;
};

using CyclotomicInt = Cyclotomic<std::int64_t>;

/// sum_{r=1}^{p-1} (r/p) zeta^r.
template <class Scalar = std::int64_t>
Cyclotomic<Scalar> gauss_sum(unsigned p) {
  if (p == 2) throw Error(Errc::EvenPrime, "Gauss sum needs an odd prime");
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  std::vector<Scalar> g(p, Scalar(0));
  for (unsigned r = 1; r < p; ++r) g[r] = Scalar(legendre(r, p));
  return Cyclotomic<Scalar>::from_group_ring(p, g);
}

}  // namespace pnl
