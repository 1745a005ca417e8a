#include <gtest/gtest.h>

#include <map>

#include "pnl/constructions.hpp"
#include "pnl/distributions.hpp"

using namespace pnl;

namespace {

std::map<Index, std::uint64_t> counts_of(const FunctionTable& f) {
  std::map<Index, std::uint64_t> c;
  for (auto v : f.values()) ++c[v];
  return c;
}

// {value: count} with every other target hit `rest` times.
void expect_single_exception(const FunctionTable& f, Index special, std::uint64_t at_special, std::uint64_t rest) {
  const auto c = counts_of(f);
  for (Index b = 0; b < f.codomain_size(); ++b) {
    const auto it = c.find(b);
    const std::uint64_t got = it == c.end() ? 0 : it->second;
    EXPECT_EQ(got, b == special ? at_special : rest) << "target " << b;
  }
}

std::vector<Index> identity_perm(std::uint64_t size) {
  std::vector<Index> v(size);
  for (Index i = 0; i < size; ++i) v[i] = i;
  return v;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::NonPrime;  // sentinel: nothing thrown
}

}  // namespace

TEST(MaioranaMcFarland, IdentityPermutationAndConstantRho) {
  const auto half = Field::create(2, 3);
  const auto f = mm_bent(*half, identity_perm(8), std::vector<Index>(8, 0), MatrixFp::Identity(3, 3));
  expect_single_exception(f, 0, 15, 7);
  EXPECT_TRUE(is_perfect_nonlinear(f));
  const auto g = mm_bent(*half, identity_perm(8), std::vector<Index>(8, 5), MatrixFp::Identity(3, 3));
  expect_single_exception(g, 5, 15, 7);
}

TEST(MaioranaMcFarland, RejectsNonBijection) {
  const auto half = Field::create(2, 3);
  auto pi = identity_perm(8);
  pi[1] = 0;
  EXPECT_EQ(code_of([&] { mm_bent(*half, pi, std::vector<Index>(8, 0), MatrixFp::Identity(3, 3)); }),
            Errc::NotBijective);
}

TEST(PartialSpread, DistributionsOverF8AndF9) {
  const auto f8 = Field::create(2, 3);
  expect_single_exception(psap_bent(*f8, identity_perm(8), 3), 0, 15, 7);
  const auto f9 = Field::create(3, 2);
  const auto g = psap_bent(*f9, identity_perm(9), 2);
  expect_single_exception(g, 0, 17, 8);
  EXPECT_TRUE(is_perfect_nonlinear(g));
  EXPECT_EQ(code_of([&] { psap_bent(*f8, std::vector<Index>(8, 0), 3); }), Errc::NotBalanced);
}

TEST(OPolynomial, FrobeniusSquareIsAnOPolynomial) {
  for (unsigned k : {2u, 3u}) {
    const auto half = Field::create(2, k);
    std::vector<Index> sq(half->size());
    for (Index z = 0; z < half->size(); ++z) sq[z] = half->mul(z, z);
    EXPECT_TRUE(is_o_polynomial(*half, sq));
    EXPECT_FALSE(is_o_polynomial(*half, identity_perm(half->size())));
    const auto f = opoly_bent(*half, sq);
    const std::uint64_t q = ipow(2, 2 * k), side = ipow(2, k);
    expect_single_exception(f, 0, 2 * side - 1, q / side - 1);
    EXPECT_TRUE(is_perfect_nonlinear(f));
  }
  const auto f8 = Field::create(2, 3);
  EXPECT_EQ(code_of([&] { opoly_bent(*f8, identity_perm(8)); }), Errc::NotOPolynomial);
}

TEST(Monomials, GoldAndKasami) {
  const auto f16 = Field::create(2, 4);
  EXPECT_EQ(gold_exponent(4), 5u);
  const auto lambda = find_non_power(*f16, 5);
  expect_single_exception(gold_bent(f16, lambda), 0, 1, 5);
  EXPECT_EQ(code_of([&] { gold_bent(f16, 1); }), Errc::BadLambda);
  const auto f64 = Field::create(2, 6);
  expect_single_exception(kasami_bent(f64, 1, find_non_power(*f64, 3)), 0, 1, 9);
}

TEST(Monomials, PAryLambdaSquareRule) {
  const auto f9 = Field::create(3, 2);
  Index square = 0, nonsquare = 0;
  for (Index x = 1; x < 9; ++x) (f9->is_square(x) ? square : nonsquare) = x;
  expect_single_exception(pary_monomial_bent(f9, 2, square), 0, 5, 2);
  expect_single_exception(pary_monomial_bent(f9, 2, nonsquare), 0, 1, 4);
  EXPECT_TRUE(pary_monomial_predicts_plus(*f9, square));
  EXPECT_FALSE(pary_monomial_predicts_plus(*f9, nonsquare));
  EXPECT_EQ(code_of([&] { pary_monomial_bent(f9, 3, square); }), Errc::BadGcd);
}

TEST(Monomials, PAryTypesAgreeWithTheRuleOnLargerFields) {
  for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{3, 4}, {5, 2}, {7, 2}, {3, 6}}) {
    const auto f = Field::create(p, n);
    for (Index lambda : {Index{1}, f->primitive()}) {
      const auto t = pary_monomial_bent(f, 2, lambda);
      ASSERT_TRUE(is_perfect_nonlinear(t));
      const auto type = classify_distribution(preimage_map(t), n).type;
      EXPECT_EQ(type, pary_monomial_predicts_plus(*f, lambda) ? DistributionType::PlusExtremal
                                                              : DistributionType::MinusExtremal);
    }
  }
}

TEST(DirectSum, AgreesWithPointwiseDefinition) {
  const auto a = build({}), b = gold_bent(Field::create(2, 4), find_non_power(*Field::create(2, 4), 5));
  const auto s = direct_sum(a, b);
  ASSERT_EQ(s.n(), 8u);
  for (Index x = 0; x < 16; ++x)
    for (Index y = 0; y < 16; ++y) ASSERT_EQ(s(x + 16 * y), a(x) ^ b(y));
  EXPECT_TRUE(is_perfect_nonlinear(s));
  EXPECT_THROW(direct_sum(a, build({ConstructionKind::MaioranaMcFarland, 2, 6, 3})), Error);
}

TEST(DirectSum, PlusPlusGivesUniquePreimage76) {
  const auto a = build({});
  expect_single_exception(direct_sum(a, a), 0, 76, 60);
}

TEST(LinearImage, ProjectionsOfExtremalFunctions) {
  const auto mm63 = build({ConstructionKind::MaioranaMcFarland, 2, 6, 3});
  expect_single_exception(compose_surjective_linear(mm63, projection(1, 3)), 0, 36, 28);
  const auto f16 = Field::create(2, 4);
  expect_single_exception(compose_surjective_linear(gold_bent(f16, find_non_power(*f16, 5)), projection(1, 2)), 0, 6,
                          10);
  EXPECT_EQ(compose_surjective_linear(mm63, MatrixFp::Identity(3, 3)), mm63);
  EXPECT_THROW(compose_surjective_linear(mm63, MatrixFp::Zero(1, 3)), Error);
}

TEST(LinearImage, EverySurjectiveMapPreservesTheType) {
  const auto f64 = Field::create(2, 6);
  const std::vector<FunctionTable> sources = {build({ConstructionKind::MaioranaMcFarland, 2, 6, 3}),
                                              kasami_bent(f64, 1, find_non_power(*f64, 3))};
  for (const auto& f : sources) {
    const auto type = classify_distribution(preimage_map(f), 6).type;
    for (unsigned k : {1u, 2u})
      for (std::uint64_t bits = 0; bits < ipow(2, 3 * k); ++bits) {
        MatrixFp l(k, 3);
        for (unsigned i = 0; i < 3 * k; ++i) l(i / 3, i % 3) = (bits >> i) & 1;
        if (rank_mod_p(l, 2) != k) continue;
        const auto g = compose_surjective_linear(f, l);
        const auto got = classify_distribution(preimage_map(g), 6).type;
        // With one output bit the two extremal multisets coincide.
        if (k == 1) EXPECT_NE(got, DistributionType::Other);
        else EXPECT_EQ(got, type);
      }
  }
}

TEST(Restriction, SquareMapSurjectivity) {
  const auto f = planar_monomial(Field::create(3, 5), 2);
  EXPECT_EQ(coordinate_restriction(f, 5), f);
  const auto r = coordinate_restriction(f, 3);
  EXPECT_TRUE(surjectivity_check(r).surjective);
}

TEST(Existence, BothTypesForEveryM) {
  for (unsigned p : {2u, 3u})
    for (unsigned n : {4u, 6u})
      for (unsigned m = 1; 2 * m <= n; ++m)
        for (bool plus : {true, false}) {
          const auto f = almost_balanced_instance(p, n, m, plus);
          ASSERT_EQ(f.m(), m);
          ASSERT_TRUE(is_perfect_nonlinear(f)) << p << " " << n << " " << m;
          const auto c = counts_of(f);
          const std::uint64_t big = ipow(p, n - m) + ipow(p, n / 2) - ipow(p, n / 2 - m);
          const std::uint64_t small = ipow(p, n - m) - ipow(p, n / 2) + ipow(p, n / 2 - m);
          const auto want = plus ? big : small;
          EXPECT_TRUE(std::any_of(c.begin(), c.end(), [&](auto kv) { return kv.second == want; }))
              << p << " " << n << " " << m << (plus ? " +" : " -");
        }
}

TEST(Recipe, KindNamesRoundTrip) {
  for (auto kind : {ConstructionKind::MaioranaMcFarland, ConstructionKind::Gold, ConstructionKind::Seed84,
                    ConstructionKind::CoordinateRestriction})
    EXPECT_EQ(kind_from_name(kind_name(kind)), kind);
  EXPECT_FALSE(kind_from_name("nope").has_value());
  ConstructionRecipe r;
  r.kind = ConstructionKind::Seed84;
  EXPECT_EQ(build(r), seed_function_8_4());
}
