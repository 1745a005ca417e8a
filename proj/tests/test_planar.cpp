#include <gtest/gtest.h>

#include <numeric>

#include "pnl/constructions.hpp"
#include "pnl/planar.hpp"
#include "pnl/trace_poly.hpp"

using namespace pnl;

namespace {

// x -> F(x + a) - F(x) is a bijection for each a != 0.
bool oracle_planar(const FunctionTable& f) {
  const auto space = f.source();
  for (Index a = 1; a < f.domain_size(); ++a) {
    std::vector<bool> seen(f.domain_size(), false);
    for (Index x = 0; x < f.domain_size(); ++x) {
      const Index d = space.sub(f(space.add(x, a)), f(x));
      if (seen[d]) return false;
      seen[d] = true;
    }
  }
  return true;
}

std::uint64_t oracle_image(const FunctionTable& f) {
  std::set<Index> img(f.values().begin(), f.values().end());
  return img.size();
}

}  // namespace

TEST(Planar, SquareMaps) {
  for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}, {5, 3}}) {
    const auto f = planar_monomial(Field::create(p, n), 2);
    const auto r = planar_report(f);
    EXPECT_EQ(r.is_planar, oracle_planar(f));
    EXPECT_TRUE(r.is_planar && r.is_two_to_one && r.even_function);
    EXPECT_EQ(r.image_size, oracle_image(f));
    EXPECT_EQ(r.image_size, (ipow(p, n) + 1) / 2);
    EXPECT_TRUE(r.at_lower);
  }
}

TEST(Planar, CoulterMatthews) {
  const auto f = planar_monomial(Field::create(3, 5), 14);
  EXPECT_TRUE(oracle_planar(f));
  EXPECT_TRUE(is_two_to_one(f));
  EXPECT_EQ(oracle_image(f), 122u);
  EXPECT_TRUE(even_implies_two_to_one_check(f));
}

TEST(Planar, UpperBoundArithmetic) {
  // 4 * 7 - 3 = 25: bound 7 - (5 - 1)/2 = 5.
  const auto r = planar_report(planar_monomial(Field::create(7, 1), 2));
  EXPECT_TRUE(r.upper_exact);
  EXPECT_EQ(r.upper_floor, 5u);
  EXPECT_FALSE(planar_report(planar_monomial(Field::create(3, 2), 2)).upper_exact);
  EXPECT_TRUE(triangular_bound_attainable(7, 1));
  EXPECT_TRUE(triangular_bound_attainable(3, 1));
  EXPECT_FALSE(triangular_bound_attainable(5, 2));
  for (unsigned p : {3u, 5u, 7u, 11u})
    for (unsigned n = 1; n <= 5; ++n) {
      const auto q = ipow(p, n);
      const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(4.0L * q - 3)));
      EXPECT_EQ(triangular_bound_attainable(p, n), root * root == 4 * q - 3);
    }
}

TEST(Planar, NonPlanarInputs) {
  const auto cube = planar_monomial(Field::create(7, 1), 3);
  EXPECT_FALSE(is_two_to_one(cube));
  EXPECT_FALSE(planar_report(cube).is_planar);
  EXPECT_THROW(is_two_to_one(build({})), Error);
  const auto f9 = Field::create(3, 2);
  EXPECT_THROW(even_implies_two_to_one_check(planar_monomial(f9, 3)), Error);
}

TEST(Planar, MonomialPlanarity) {
  EXPECT_TRUE(monomial_planarity(3, 2, 2));
  EXPECT_TRUE(monomial_planarity(3, 5, 14));
  EXPECT_FALSE(monomial_planarity(3, 2, 4));
  EXPECT_TRUE(monomial_planarity(3, 3, 4));  // x^{3+1}, Dembowski-Ostrom with n/gcd(1, n) odd
  for (unsigned d = 1; d < 26; ++d)
    EXPECT_EQ(monomial_planarity(3, 3, d), oracle_planar(planar_monomial(Field::create(3, 3), d))) << d;
  EXPECT_THROW(monomial_planarity(2, 3, 3), Error);
}

TEST(Planar, PlateauedTwoToOneHarness) {
  const auto f = planar_monomial(Field::create(3, 3), 2);
  const auto r = plateaued_two_to_one_implies_planar(f);
  EXPECT_TRUE(r.hypotheses_hold && r.planar && r.consistent);
  const auto art = artificial_two_to_one(Field::create(3, 3), 2024);
  EXPECT_TRUE(is_two_to_one(art));
  const auto ra = plateaued_two_to_one_implies_planar(art);
  EXPECT_FALSE(ra.plateaued);
  EXPECT_FALSE(ra.hypotheses_hold);
  EXPECT_EQ(ra.planar, oracle_planar(art));
  EXPECT_EQ(art, artificial_two_to_one(Field::create(3, 3), 2024));
}

TEST(Surjectivity, DeskRowsAndCaps) {
  const auto rows = surjectivity_table(3, {5, 6, 7}, {});
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.k, r.n / 2 + 1);
    EXPECT_TRUE(r.surjective);
    EXPECT_FALSE(r.guaranteed);
  }
  const auto full = surjectivity_table(5, {5}, {false, 1, 5});
  ASSERT_EQ(full.size(), 5u);
  EXPECT_TRUE(full[1].guaranteed);
  EXPECT_FALSE(full[4].surjective);  // x^2 itself is 2-to-1
  EXPECT_THROW(surjectivity_table(3, {10}, {}), Error);
  EXPECT_THROW(surjectivity_table(2, {5}, {}), Error);
}

TEST(Surjectivity, RestrictionAgreesWithTableConstruction) {
  const auto f = planar_monomial(Field::create(3, 6), 2);
  for (unsigned k = 1; k <= 6; ++k) {
    const auto row = surjectivity_table(3, {6}, {false, k, k}).front();
    EXPECT_EQ(row.image_size, oracle_image(coordinate_restriction(f, k))) << k;
  }
}
