#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pnl/field.hpp"
#include "pnl/function_table.hpp"

namespace pnl {

/// One preimage of size 1, (p^n - 1)/2 of size 2, the rest empty.
bool is_two_to_one(const FunctionTable& f);

struct PlanarReport {
  bool is_planar = false;
  bool is_two_to_one = false;
  bool even_function = false;        // F(x) = F(-x)
  std::uint64_t image_size = 0;
  std::uint64_t lower_bound = 0;     // (p^n + 1)/2
  std::uint64_t upper_floor = 0;     // floor(p^n - (sqrt(4p^n - 3) - 1)/2)
  bool upper_exact = false;          // 4p^n - 3 is a perfect square
  bool at_lower = false;
  bool at_upper = false;
};

/// Throws WrongShape unless p is odd and m = n. When F is planar the image
/// bounds and their equality cases are asserted (ShapeViolation).
PlanarReport planar_report(const FunctionTable& f);

/// F planar and even; returns is_two_to_one(F). HypothesisFailed otherwise.
bool even_implies_two_to_one_check(const FunctionTable& f);

struct PlateauedPlanarReport {
  bool plateaued = false;
  bool two_to_one = false;
  bool hypotheses_hold = false;
  bool planar = false;
  bool consistent = true;  // hypotheses_hold implies planar
};
PlateauedPlanarReport plateaued_two_to_one_implies_planar(const FunctionTable& f);

/// x^d planar on F_{p^n}; for plateaued x^d decided by gcd(d, p^n - 1) = 2
/// and cross-checked against the derivative test (ConstraintViolation).
bool monomial_planarity(unsigned p, unsigned n, std::uint64_t d);

/// x^2 on F_{p^n} with its outputs relabelled by a seeded permutation, redrawn
/// until some component is no longer plateaued.
FunctionTable artificial_two_to_one(const FieldPtr& field, std::uint64_t seed);

struct SurjectivityRow {
  unsigned p, n, k;
  bool surjective;
  bool guaranteed;  // k <= n/2
  std::uint64_t image_size;
};

struct SurjectivityOptions {
  bool long_run = false;
  std::optional<unsigned> k_min, k_max;  // default: k = floor(n/2) + 1 only
};

constexpr std::uint64_t kDeskScaleFieldCap = 19683;      // 3^9
constexpr std::uint64_t kLongRunFieldCap = 19487171;     // 11^7

/// Coordinate restrictions of x^2 to the first k coordinates.
std::vector<SurjectivityRow> surjectivity_table(unsigned p, const std::vector<unsigned>& ns,
                                                const SurjectivityOptions& opts = {});

/// The (p, n) pairs listed as surjective at k = floor(n/2) + 1.
std::vector<std::pair<unsigned, unsigned>> table1_rows();

/// 4 p^n - 3 is a perfect square.
bool triangular_bound_attainable(unsigned p, unsigned n);

}  // namespace pnl
