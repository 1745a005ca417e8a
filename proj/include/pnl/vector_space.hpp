#pragma once

#include <cstdint>
#include <vector>

#include "pnl/arith.hpp"

namespace pnl {

/// The additive group F_p^dim with elements encoded as little-endian base-p
/// integers. Coordinate 1 is the least significant digit.
class VectorSpace {
 public:
  VectorSpace(unsigned p, unsigned dim) : p_(p), dim_(dim), size_(ipow(p, dim)) {
    if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (size_ > (std::uint64_t{1} << 32))
      throw Error(Errc::CapExceeded, "space of size p^dim does not fit a 32-bit index");
  }

  unsigned p() const { return p_; }
  unsigned dim() const { return dim_; }
  std::uint64_t size() const { return size_; }

  Index add(Index x, Index y) const {
    if (p_ == 2) return x ^ y;
    Index r = 0, w = 1;
    for (unsigned i = 0; i < dim_; ++i, w *= p_) {
      unsigned d = x % p_ + y % p_;
      x /= p_;
      y /= p_;
      r += (d >= p_ ? d - p_ : d) * w;
    }
    return r;
  }

  Index sub(Index x, Index y) const {
    if (p_ == 2) return x ^ y;
    Index r = 0, w = 1;
    for (unsigned i = 0; i < dim_; ++i, w *= p_) {
      unsigned d = x % p_ + p_ - y % p_;
      x /= p_;
      y /= p_;
      r += (d >= p_ ? d - p_ : d) * w;
    }
    return r;
  }

  Index neg(Index x) const { return sub(0, x); }

  Index scale(unsigned c, Index x) const {
    c %= p_;
    Index r = 0, w = 1;
    for (unsigned i = 0; i < dim_; ++i, w *= p_) {
      r += (c * (x % p_) % p_) * w;
      x /= p_;
    }
    return r;
  }

  /// Coordinate scalar product x_1 y_1 + ... + x_dim y_dim mod p.
  unsigned dot(Index x, Index y) const {
    if (p_ == 2) return static_cast<unsigned>(__builtin_popcount(x & y) & 1);
    unsigned s = 0;
    for (unsigned i = 0; i < dim_; ++i) {
      s += (x % p_) * (y % p_);
      x /= p_;
      y /= p_;
    }
    return s % p_;
  }

  std::vector<unsigned> digits(Index x) const {
    std::vector<unsigned> d(dim_);
    for (unsigned i = 0; i < dim_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  }

  Index from_digits(const std::vector<unsigned>& d) const {
    Index r = 0, w = 1;
    for (unsigned i = 0; i < dim_; ++i, w *= p_) r += (i < d.size() ? d[i] % p_ : 0) * w;
    return r;
  }

 private:
  unsigned p_;
  unsigned dim_;
  std::uint64_t size_;
};

}  // namespace pnl
