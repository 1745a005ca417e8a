#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pnl/function_table.hpp"

namespace pnl {

using Rational = boost::rational<std::int64_t>;

/// |F^{-1}(beta)| for every beta in F_p^m, indexed by beta.
struct PreimageMap {
  unsigned p = 2;
  unsigned m = 1;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  friend bool operator==(const PreimageMap&, const PreimageMap&) = default;
};

/// Multiset of preimage sizes as (size, multiplicity), sizes descending.
struct ValueDistribution {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

  static ValueDistribution from_counts(const std::vector<std::uint64_t>& counts);
  std::uint64_t domain_size() const;   // sum size * multiplicity
  std::uint64_t target_size() const;   // sum multiplicity
  std::string to_string() const;       // e.g. "{15, 7^7}"

  friend bool operator==(const ValueDistribution&, const ValueDistribution&) = default;
  friend auto operator<=>(const ValueDistribution&, const ValueDistribution&) = default;
};

PreimageMap preimage_map(const FunctionTable& f);
ValueDistribution value_distribution(const FunctionTable& f);

/// Sum of squared preimage sizes equals |G| + (|G|/|H|)(|G| - 1).
bool second_moment_check(const FunctionTable& f);

/// |G|/|H| -/+ (sqrt|G| - sqrt|G|/|H|). Exact rationals when |G| is a
/// square; integer rounding inward is always exact.
struct ExtremalBounds {
  std::uint64_t size_g = 0, size_h = 0;
  bool g_square = false;
  std::optional<Rational> lower, upper;  // set iff g_square
  std::int64_t lower_ceil = 0;           // smallest integer >= lower
  std::int64_t upper_floor = 0;          // largest integer <= upper
  bool attainable = false;               // g square and |H| divides sqrt|G|

  bool contains(std::uint64_t count) const { return static_cast<std::int64_t>(count) >= lower_ceil &&
                                                    static_cast<std::int64_t>(count) <= upper_floor; }
  bool equals_lower(std::uint64_t count) const;
  bool equals_upper(std::uint64_t count) const;
};

ExtremalBounds extremal_bounds(std::uint64_t size_g, std::uint64_t size_h);

enum class DistributionType { PlusExtremal, MinusExtremal, Other };
std::string to_string(DistributionType t);

struct DistributionVerdict {
  DistributionType type = DistributionType::Other;
  std::optional<Index> unique_preimage;  // target with the exceptional count
  ExtremalBounds bounds;
  bool within_bounds = true;
};

DistributionVerdict classify_distribution(const ValueDistribution& d, std::uint64_t size_g, std::uint64_t size_h);
/// Same, with the exceptional target located.
DistributionVerdict classify_distribution(const PreimageMap& map, unsigned n);

struct ImageSetBound {
  std::uint64_t image_size = 0;
  Rational lower_bound;  // |G||H| / (|G| + |H| - 1)
  bool satisfied = false;
};
ImageSetBound image_set_bound_check(const FunctionTable& f);

struct SurjectivityResult {
  bool surjective = false;
  bool guaranteed = false;  // |H| <= sqrt|G|
};
SurjectivityResult surjectivity_check(const FunctionTable& f);

struct NybergVerdict {
  bool upper_signs = true;              // even n
  std::optional<unsigned> shift;        // odd n: position c of b_c = p^{n-1}
  std::optional<int> sign;              // odd n: +1 or -1 branch
  std::vector<std::uint64_t> counts;
};
/// Throws ShapeViolation when the distribution does not have the shape.
NybergVerdict nyberg_shape_check(const FunctionTable& f);

PreimageMap direct_sum_distribution(const PreimageMap& m1, const PreimageMap& m2);

// The three checkers below throw HypothesisFailed when their premise does
// not hold and ConstraintViolation when a count contradicts the constraint.

struct RegularConstraintReport {
  bool plus_branch = true;  // epsilon in {1, i}
  std::vector<unsigned> k;  // k_a per target
  std::vector<std::uint64_t> counts;
  unsigned k0 = 0;          // #{b != 0 : W_F(b,0) = eps p^{n/2} zeta}
};
RegularConstraintReport constraint_check_regular(const FunctionTable& f);

struct BooleanConstraintReport {
  std::vector<unsigned> k;
  unsigned parity = 0;
};
BooleanConstraintReport constraint_check_boolean(const FunctionTable& f);

struct OddNWitness {
  std::uint64_t count;
  int sign;      // 0 for the balanced case p^{n-m}
  unsigned k;
  unsigned k0;
};
struct OddNConstraintReport {
  std::vector<OddNWitness> witnesses;  // one per target
};
OddNConstraintReport constraint_check_odd_n(const FunctionTable& f);

enum class Equivalence { Inequivalent, Inconclusive };
struct EquivalenceReport {
  Equivalence verdict = Equivalence::Inconclusive;
  std::string reason;
};
EquivalenceReport equivalence_obstruction(const FunctionTable& f1, const FunctionTable& f2);

}  // namespace pnl
