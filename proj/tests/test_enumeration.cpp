#include <gtest/gtest.h>

#include <set>

#include "pnl/constructions.hpp"
#include "pnl/enumeration.hpp"
#include "pnl/suites.hpp"
#include "pnl/walsh.hpp"

using namespace pnl;

namespace {

// Every nonincreasing vector of length `len` with entries in [lo, hi]
// whose sum and sum of squares hit the targets.
void brute_force(std::int64_t lo, std::int64_t hi, unsigned len, std::int64_t sum, std::int64_t squares,
                 std::vector<std::int64_t>& cur, std::set<std::vector<std::int64_t>>& out) {
  if (cur.size() == len) {
    if (sum == 0 && squares == 0) out.insert(cur);
    return;
  }
  const std::int64_t top = cur.empty() ? hi : cur.back();
  for (std::int64_t v = top; v >= lo; --v) {
    cur.push_back(v);
    brute_force(lo, hi, len, sum - v, squares - v * v, cur, out);
    cur.pop_back();
  }
}

std::set<std::vector<std::int64_t>> oracle_ti(unsigned p, unsigned m) {
  const auto bound = static_cast<std::int64_t>(ipow(p, m - 1));
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  brute_force(-bound, bound, static_cast<unsigned>(ipow(p, m)), bound, bound * bound, cur, out);
  return out;
}

// Preimage-size vectors for |H| = 4 from the two moment equations alone.
std::set<ValueDistribution> oracle_h4(unsigned n) {
  const std::int64_t g = static_cast<std::int64_t>(ipow(2, n));
  const std::int64_t squares = g + (g / 4) * (g - 1);
  std::set<ValueDistribution> out;
  for (std::int64_t a = 0; a <= g; ++a)
    for (std::int64_t b = 0; b <= a && a + b <= g; ++b)
      for (std::int64_t c = 0; c <= b && a + b + c <= g; ++c) {
        const std::int64_t d = g - a - b - c;
        if (d > c) continue;
        if (a * a + b * b + c * c + d * d == squares)
          out.insert(ValueDistribution::from_counts({std::uint64_t(a), std::uint64_t(b), std::uint64_t(c), std::uint64_t(d)}));
      }
  return out;
}

TiSolution ti(std::initializer_list<std::pair<std::int64_t, unsigned>> parts) {
  TiSolution s{2, 4, {}};
  for (auto [v, k] : parts) s.t.insert(s.t.end(), k, v);
  std::sort(s.t.begin(), s.t.end(), std::greater<>());
  return s;
}

}  // namespace

TEST(TiSystem, AgreesWithBruteForce) {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    const auto cat = solve_ti_system(p, m);
    std::set<std::vector<std::int64_t>> got;
    for (const auto& e : cat.entries) got.insert(e.solution.t);
    EXPECT_EQ(got, oracle_ti(p, m)) << p << "," << m;
  }
}

TEST(TiSystem, RawAndParityCountsForM4) {
  EXPECT_EQ(solve_ti_system(2, 2).entries.size(), 2u);
  EXPECT_EQ(solve_ti_system(2, 3).entries.size(), 8u);
  EXPECT_EQ(solve_ti_system(2, 4).entries.size(), 505u);
  std::size_t parity = 0;
  for (const auto& e : solve_ti_system(2, 4).entries) parity += e.solution.same_parity();
  EXPECT_EQ(parity, 28u);
  EXPECT_THROW(solve_ti_system(3, 3), Error);  // 27 targets exceed the default cap
}

TEST(TiSystem, SolutionsSatisfyTheEquations) {
  for (const auto& e : solve_ti_system(2, 4).entries) {
    std::int64_t s = 0, q = 0;
    for (auto t : e.solution.t) s += t, q += t * t;
    ASSERT_EQ(s, 8);
    ASSERT_EQ(q, 64);
  }
}

TEST(BooleanSymmetry, Involution) {
  for (const auto& e : solve_ti_system(2, 4).entries) {
    const auto once = boolean_symmetry(e.solution);
    EXPECT_EQ(boolean_symmetry(once), e.solution);
  }
  EXPECT_THROW(boolean_symmetry(TiSolution{3, 1, {1, 0, 0}}), Error);
}

TEST(Sizes, MatchTheLinearFormula) {
  const auto s = ti({{-4, 1}, {0, 12}, {4, 3}});
  EXPECT_EQ(s.sizes(8).to_string(), "{23^3, 15^12, 7}");
  EXPECT_EQ(s.to_string(), "{-4, 0^12, 4^3}");
  EXPECT_THROW(s.sizes(7), Error);
}

TEST(SignSets, PredictedProfileEqualsSpectralProfile) {
  int checked = 0;
  for (const auto& e : bent_corpus()) {
    if (e.table.p() != 2) continue;
    const auto prof = ka_profile(e.table);
    SignSet k = 0;
    for (auto b : prof.sign_set) k |= SignSet{1} << b;
    EXPECT_EQ(k_profile_of_sign_set(k, e.table.m()), prof.k) << e.name;
    ++checked;
  }
  std::mt19937_64 rng(50);
  const auto seed = seed_function_8_4();
  for (int i = 0; i < 50 - checked; ++i) {
    const auto a = random_matrix(4, 8, 2, rng);
    const auto f = FunctionTable::tabulate(2, 8, 4, [&](Index x) { return seed(x) ^ apply_linear(a, x, 2); });
    const auto prof = ka_profile(f);
    SignSet k = 0;
    for (auto b : prof.sign_set) k |= SignSet{1} << b;
    EXPECT_EQ(k_profile_of_sign_set(k, 4), prof.k);
  }
}

TEST(Realizability, ExcludedCases) {
  EXPECT_FALSE(spectral_realizability(ti({{-4, 2}, {0, 6}, {2, 8}})).realizable);
  EXPECT_FALSE(spectral_realizability(ti({{-2, 2}, {0, 11}, {2, 1}, {4, 1}, {6, 1}})).realizable);
  const auto ok = spectral_realizability(ti({{0, 15}, {8, 1}}));
  EXPECT_TRUE(ok.realizable);
  ASSERT_TRUE(ok.witness.has_value());
  // The witness reproduces the multiset {8 - T_i}.
  auto k = k_profile_of_sign_set(*ok.witness, 4);
  std::sort(k.begin(), k.end());
  std::vector<unsigned> want(15, 8);
  want.insert(want.begin(), 0);
  EXPECT_EQ(k, want);
}

TEST(Catalog, Sizes) {
  for (unsigned n : {4u, 6u, 8u, 10u}) EXPECT_EQ(catalog_m(2, 2, n).admissible().size(), 2u);
  EXPECT_EQ(catalog_m(2, 3, 6).admissible().size(), 4u);
  const auto c4 = catalog_m(2, 4, 8);
  EXPECT_EQ(c4.admissible().size(), 14u);
  EXPECT_EQ(c4.excluded().size(), 14u);
  EXPECT_EQ(c4.candidates.entries.size(), 28u);
  EXPECT_TRUE(c4.contains(ti({{0, 15}, {8, 1}}).sizes(8)));
  EXPECT_FALSE(c4.contains(ti({{-4, 2}, {0, 6}, {2, 8}}).sizes(8)));
}

TEST(Catalog, ContainsEveryDistributionOfTheCorpus) {
  for (const auto& e : bent_corpus()) {
    const auto& f = e.table;
    if (f.p() != 2 || f.m() < 2 || f.m() > 4 || 2 * f.m() > f.n()) continue;
    EXPECT_TRUE(catalog_m(2, f.m(), f.n()).contains(value_distribution(f))) << e.name;
  }
}

TEST(Catalog, OddPrimeListsBothBranches) {
  const auto c = catalog_m(3, 1, 2);
  bool plus = false, minus = false;
  for (const auto& e : c.candidates.entries) (e.minus_branch ? minus : plus) = true;
  EXPECT_TRUE(plus && minus);
}

TEST(GroupH4, MatchesMomentOracle) {
  for (unsigned n : {4u, 6u, 8u}) {
    const auto sols = solve_group_h4(n);
    EXPECT_EQ(std::set<ValueDistribution>(sols.begin(), sols.end()), oracle_h4(n)) << n;
  }
  const auto n6 = solve_group_h4(6);
  std::set<std::string> rendered;
  for (const auto& d : n6) rendered.insert(d.to_string());
  EXPECT_EQ(rendered, (std::set<std::string>{"{18^3, 10}", "{22, 14^3}"}));
  EXPECT_EQ(solve_group_h4(12).size(), 2u);
  EXPECT_THROW(solve_group_h4(5), Error);
}

TEST(LinearShifts, DeterministicAndInsideCatalog) {
  const auto seed = seed_function_8_4();
  const auto a = linear_shift_experiment(seed, 3000, 99);
  const auto b = linear_shift_experiment(seed, 3000, 99);
  EXPECT_EQ(a.hits, b.hits);
  std::uint64_t total = 0;
  const auto cat = catalog_m(2, 4, 8);
  for (const auto& [d, hits] : a.hits) {
    EXPECT_TRUE(cat.contains(d)) << d.to_string();
    total += hits;
  }
  EXPECT_EQ(total, 3000u);
}

TEST(LinearShifts, IncrementalImageMatchesDirectEvaluation) {
  // Replays the generator and recomputes each shifted table from scratch.
  const auto seed = seed_function_8_4();
  const auto r = linear_shift_experiment(seed, 200, 5);
  std::mt19937_64 rng(5);
  std::map<ValueDistribution, std::uint64_t> direct;
  for (int i = 0; i < 200; ++i) {
    const auto a = random_matrix(4, 8, 2, rng);
    ++direct[value_distribution(
        FunctionTable::tabulate(2, 8, 4, [&](Index x) { return seed(x) ^ apply_linear(a, x, 2); }))];
  }
  EXPECT_EQ(r.hits, direct);
}
