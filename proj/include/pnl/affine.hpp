#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "pnl/vector_space.hpp"

namespace pnl {

/// Dense matrices over F_p, stored as reduced residues.
template <class Scalar>
using FpMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using FpVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixFp = FpMatrix<std::int32_t>;
using VectorFp = FpVector<std::int32_t>;

/// Rank over F_p by Gaussian elimination on a copy.
template <class Derived>
Eigen::Index rank_mod_p(const Eigen::MatrixBase<Derived>& m, unsigned p) {
  FpMatrix<std::int64_t> a = m.template cast<std::int64_t>();
  const auto P = static_cast<std::int64_t>(p);
  a = a.unaryExpr([P](std::int64_t v) { return ((v % P) + P) % P; });
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.row(pivot).swap(a.row(rank));
    const auto inv = static_cast<std::int64_t>(powmod(a(rank, col), p - 2, p));
    a.row(rank) = (a.row(rank) * inv).unaryExpr([P](std::int64_t v) { return v % P; });
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == rank || a(r, col) == 0) continue;
      const std::int64_t f = a(r, col);
      a.row(r) = (a.row(r) - f * a.row(rank)).unaryExpr([P](std::int64_t v) { return ((v % P) + P) % P; });
    }
    ++rank;
  }
  return rank;
}

/// y = M x over F_p on canonical indices. M is rows x cols, x lives in
/// F_p^cols, y in F_p^rows.
template <class Derived>
Index apply_linear(const Eigen::MatrixBase<Derived>& m, Index x, unsigned p) {
  const auto rows = static_cast<unsigned>(m.rows());
  const auto cols = static_cast<unsigned>(m.cols());
  std::int64_t digits[32];
  for (unsigned j = 0; j < cols; ++j) {
    digits[j] = x % p;
    x /= p;
  }
  Index y = 0;
  for (unsigned i = rows; i-- > 0;) {
    std::int64_t s = 0;
    for (unsigned j = 0; j < cols; ++j) s += static_cast<std::int64_t>(m(i, j)) * digits[j];
    y = y * p + mod_p(s, p);
  }
  return y;
}

/// Matrix of the linear map given by images of the unit vectors.
inline MatrixFp matrix_from_columns(const std::vector<Index>& images, unsigned p, unsigned rows) {
  MatrixFp m(rows, images.size());
  VectorSpace target(p, rows);
  for (std::size_t j = 0; j < images.size(); ++j) {
    auto d = target.digits(images[j]);
    for (unsigned i = 0; i < rows; ++i) m(i, static_cast<Eigen::Index>(j)) = static_cast<std::int32_t>(d[i]);
  }
  return m;
}

inline MatrixFp random_matrix(unsigned rows, unsigned cols, unsigned p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int32_t> digit(0, static_cast<std::int32_t>(p) - 1);
  return MatrixFp::NullaryExpr(rows, cols, [&]() { return digit(rng); });
}

/// x -> M x + c from F_p^source to F_p^target.
struct AffineMap {
  unsigned p = 2;
  MatrixFp matrix;
  VectorFp constant;

  AffineMap(unsigned p_, MatrixFp m) : p(p_), matrix(std::move(m)), constant(VectorFp::Zero(matrix.rows())) {}
  AffineMap(unsigned p_, MatrixFp m, VectorFp c) : p(p_), matrix(std::move(m)), constant(std::move(c)) {
    if (constant.size() != matrix.rows()) throw Error(Errc::DimensionMismatch, "constant length differs from row count");
  }

  static AffineMap identity(unsigned p, unsigned dim) { return {p, MatrixFp::Identity(dim, dim)}; }

  unsigned source_dim() const { return static_cast<unsigned>(matrix.cols()); }
  unsigned target_dim() const { return static_cast<unsigned>(matrix.rows()); }

  bool is_permutation() const {
    return matrix.rows() == matrix.cols() && rank_mod_p(matrix, p) == matrix.rows();
  }
  bool is_surjective() const { return rank_mod_p(matrix, p) == matrix.rows(); }

  Index operator()(Index x) const {
    Index y = apply_linear(matrix, x, p);
    if (constant.isZero()) return y;
    VectorSpace target(p, target_dim());
    std::vector<unsigned> c(constant.size());
    for (Eigen::Index i = 0; i < constant.size(); ++i) c[i] = mod_p(constant(i), p);
    return target.add(y, target.from_digits(c));
  }
};

}  // namespace pnl
