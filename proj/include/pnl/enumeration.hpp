#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pnl/distributions.hpp"
#include "pnl/function_table.hpp"

namespace pnl {

/// Integers T_1..T_{p^m} with sum p^{m-1} and sum of squares p^{2m-2},
/// kept sorted in decreasing order.
struct TiSolution {
  unsigned p = 2;
  unsigned m = 1;
  std::vector<std::int64_t> t;

  bool same_parity() const;
  /// X_i = p^{n-m} + p^{n/2-m}(p T_i - 1); the minus branch flips the
  /// sign of the second term.
  ValueDistribution sizes(unsigned n, bool minus_branch = false) const;
  std::string to_string() const;  // e.g. "{-4, 0^12, 4^3}"

  friend bool operator==(const TiSolution&, const TiSolution&) = default;
  friend auto operator<=>(const TiSolution&, const TiSolution&) = default;
};

/// Bitmask over F_2^m \ {0}: bit b set iff b is in K.
using SignSet = std::uint32_t;

struct CatalogEntry {
  TiSolution solution;
  bool minus_branch = false;
  bool parity = true;                   // all T_i of one parity (p = 2)
  std::optional<bool> realizable;       // unset when no filter applies
  std::optional<SignSet> witness;
};

struct SolutionCatalog {
  unsigned p = 2, m = 1;
  std::vector<CatalogEntry> entries;
};

struct EnumerationLimits {
  std::uint64_t max_targets = 16;  // p^m
};

/// All raw solutions of the T_i system (plus branch), parity flagged.
SolutionCatalog solve_ti_system(unsigned p, unsigned m, const EnumerationLimits& limits = {});

/// T_i -> 1 - T_i.
TiSolution boolean_symmetry(const TiSolution& s);

struct Realizability {
  bool realizable = false;
  std::optional<SignSet> witness;
};

/// Is there K in F_2^m \ {0} whose k-profile {|K|} u {2|K n H_a| - |K| + 2^{m-1}}
/// matches {2^{m-1} - T_i} as multisets?
Realizability spectral_realizability(const TiSolution& s, unsigned max_m = 4);

/// k_a of a sign set, indexed by a.
std::vector<unsigned> k_profile_of_sign_set(SignSet k, unsigned m);

struct Catalog {
  unsigned p = 2, m = 1, n = 2;
  SolutionCatalog candidates;  // parity-consistent (p = 2) or both branches (odd p)
  std::vector<ValueDistribution> admissible() const;
  std::vector<const CatalogEntry*> excluded() const;
  bool contains(const ValueDistribution& d) const;
};

Catalog catalog_m(unsigned p, unsigned m, unsigned n, const EnumerationLimits& limits = {});

/// |G| = 2^n, |H| = 4: the two possible distributions, by descent to n = 4.
std::vector<ValueDistribution> solve_group_h4(unsigned n);

struct ExperimentResult {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::map<ValueDistribution, std::uint64_t> hits;
};

/// Value distributions of F + A over `samples` uniformly random linear A.
ExperimentResult linear_shift_experiment(const FunctionTable& f, std::uint64_t samples, std::uint64_t seed);

}  // namespace pnl
