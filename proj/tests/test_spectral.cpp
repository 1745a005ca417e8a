#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <numbers>
#include <random>

#include "pnl/anf.hpp"
#include "pnl/constructions.hpp"
#include "pnl/cyclotomic.hpp"
#include "pnl/trace_poly.hpp"
#include "pnl/walsh.hpp"

using namespace pnl;
using BigCyclotomic = Cyclotomic<boost::multiprecision::cpp_int>;

namespace {

std::complex<double> zeta(unsigned p, std::int64_t k) {
  const double t = 2 * std::numbers::pi * static_cast<double>(k) / p;
  return {std::cos(t), std::sin(t)};
}

// Floating-point Walsh value by the definition, used only as a coarse oracle.
std::complex<double> float_walsh(const std::vector<unsigned>& f, unsigned p, unsigned n, Index a) {
  VectorSpace v(p, n);
  std::complex<double> s = 0;
  for (Index x = 0; x < f.size(); ++x) s += zeta(p, static_cast<std::int64_t>(f[x]) - v.dot(a, x));
  return s;
}

std::vector<unsigned> random_digits(unsigned p, unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> d(0, p - 1);
  std::vector<unsigned> f(ipow(p, n));
  for (auto& v : f) v = d(rng);
  return f;
}

std::vector<unsigned> digits_of(const FunctionTable& t) { return t.component(1); }

}  // namespace

TEST(Cyclotomic, ArithmeticMatchesComplexEvaluation) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-20, 20);
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<std::int64_t> a(p - 1), b(p - 1);
      for (auto& v : a) v = c(rng);
      for (auto& v : b) v = c(rng);
      const CyclotomicInt x(p, a), y(p, b);
      EXPECT_LT(std::abs((x * y).evaluate() - x.evaluate() * y.evaluate()), 1e-6);
      EXPECT_LT(std::abs((x + y).evaluate() - x.evaluate() - y.evaluate()), 1e-9);
      EXPECT_LT(std::abs(x.conj().evaluate() - std::conj(x.evaluate())), 1e-9);
      EXPECT_EQ((x * y) * CyclotomicInt::zeta(p, 3), x * (y.times_zeta(3)));
    }
  }
}

TEST(Cyclotomic, ZetaPowersSumToZero) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    CyclotomicInt s(p);
    for (unsigned k = 0; k < p; ++k) s = s + CyclotomicInt::zeta(p, k);
    EXPECT_TRUE(s.is_zero());
    EXPECT_EQ(CyclotomicInt::zeta(p, p), CyclotomicInt::integer(p, 1));
  }
}

TEST(Cyclotomic, GaussSumSquare) {
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    const auto g = gauss_sum(p);
    const std::int64_t sign = p % 4 == 1 ? 1 : -1;
    EXPECT_EQ(g * g, CyclotomicInt::integer(p, sign * static_cast<std::int64_t>(p)));
    EXPECT_EQ(g.abs_squared().as_integer(), std::optional<std::int64_t>(p));
  }
  EXPECT_THROW(gauss_sum(2), Error);
}

TEST(Cyclotomic, MultiprecisionScalarAgrees) {
  const auto g = gauss_sum<boost::multiprecision::cpp_int>(7);
  BigCyclotomic acc = BigCyclotomic::integer(7, 1);
  for (int i = 0; i < 40; ++i) acc = acc * g;
  // g^40 = (g^2)^20 = (-7)^20.
  boost::multiprecision::cpp_int want = 1;
  for (int i = 0; i < 20; ++i) want *= 7;
  EXPECT_EQ(acc, BigCyclotomic::integer(7, want));
  EXPECT_EQ(CyclotomicInt::integer(5, 12).divide_exact(4), CyclotomicInt::integer(5, 3));
  EXPECT_FALSE(CyclotomicInt::integer(5, 12).divide_exact(5).has_value());
}

TEST(Walsh, ButterflyEqualsNaive) {
  std::mt19937_64 rng(4);
  for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 6}, {2, 9}, {3, 1}, {3, 4}, {5, 3}, {7, 2}}) {
    const auto f = random_digits(p, n, rng);
    ASSERT_EQ(walsh_transform(f, p, n), walsh_naive(f, p, n)) << p << "^" << n;
  }
}

TEST(Walsh, NaiveMatchesFloatingPointDefinition) {
  std::mt19937_64 rng(6);
  for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 3}, {5, 2}}) {
    const auto f = random_digits(p, n, rng);
    const auto w = walsh_naive(f, p, n);
    for (Index a = 0; a < w.size(); ++a) EXPECT_LT(std::abs(w[a].evaluate() - float_walsh(f, p, n, a)), 1e-6);
  }
}

TEST(Walsh, ParsevalAndBentModulus) {
  std::mt19937_64 rng(9);
  for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 6}, {3, 3}, {5, 2}}) {
    const auto w = walsh_transform(random_digits(p, n, rng), p, n);
    CyclotomicInt total(p);
    for (const auto& v : w) total = total + v.abs_squared();
    EXPECT_EQ(total.as_integer(), std::optional<std::int64_t>(static_cast<std::int64_t>(ipow(p, 2 * n))));
  }
  const auto bent = digits_of(table_from_anf(parse_anf("x1*x2 + x3*x4", 2, 4)));
  for (const auto& v : walsh_transform(bent, 2, 4)) EXPECT_EQ(v.abs_squared().as_integer(), std::optional<std::int64_t>(16));
}

TEST(Walsh, KnownBooleanValues) {
  const auto w = walsh_transform(digits_of(table_from_anf(parse_anf("x1*x2", 2, 2))), 2, 2);
  EXPECT_EQ(w[0], CyclotomicInt::integer(2, 2));
  EXPECT_EQ(w[3], CyclotomicInt::integer(2, -2));
}

TEST(Walsh, SpectrumAtZeroCountsPreimages) {
  const auto mm = build({ConstructionKind::MaioranaMcFarland, 2, 6, 3});
  const auto w = spectrum_at_zero(mm);
  EXPECT_EQ(w[0], CyclotomicInt::integer(2, 64));
  for (Index b = 1; b < 8; ++b) EXPECT_EQ(w[b], CyclotomicInt::integer(2, 8));
  EXPECT_THROW(walsh_component(mm, 0), Error);
}

TEST(PlateauProfile, BentPlateauedAndNeither) {
  EXPECT_TRUE(plateau_profile(build({})).is_bent);
  const auto cube = power_map(Field::create(2, 5), 3);  // almost bent: 1-plateaued
  const auto prof = plateau_profile(cube);
  EXPECT_TRUE(prof.is_plateaued);
  EXPECT_FALSE(prof.is_bent);
  for (Index b = 1; b < 32; ++b) EXPECT_EQ(prof.amplitude[b], std::optional<unsigned>(1));
  const auto inverse = power_map(Field::create(2, 4), 14);  // inverse over F_16 is not plateaued
  EXPECT_FALSE(plateau_profile(inverse).is_plateaued);
}

TEST(BentValue, DecomposeRoundTrip) {
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned n : {2u, 3u, 4u})
      for (unsigned t = 0; t < p; ++t)
        for (int sign : {1, -1}) {
          CyclotomicInt w = CyclotomicInt::zeta(p, t) * static_cast<std::int64_t>(sign * ipow(p, n / 2));
          if (n % 2) w = w * gauss_sum(p);
          const auto d = decompose_bent_value(w, n);
          ASSERT_TRUE(d.has_value());
          EXPECT_EQ(d->t, t);
          const bool positive = d->epsilon == Epsilon::PlusOne || d->epsilon == Epsilon::PlusI;
          EXPECT_EQ(positive, sign > 0);
          if (n % 2 && p % 4 == 3) EXPECT_TRUE(d->epsilon == Epsilon::PlusI || d->epsilon == Epsilon::MinusI);
        }
  EXPECT_FALSE(decompose_bent_value(CyclotomicInt::integer(3, 2), 2).has_value());
}

TEST(Regularity, BooleanAndTernaryExamples) {
  const auto boolean = classify_regularity(table_from_anf(parse_anf("x1*x2 + x3*x4", 2, 4)));
  EXPECT_EQ(boolean.verdict, Regularity::Regular);
  ASSERT_TRUE(boolean.dual.has_value());
  // The dual of x1x2 + x3x4 is itself.
  EXPECT_EQ(*boolean.dual, digits_of(table_from_anf(parse_anf("x1*x2 + x3*x4", 2, 4))));
  const auto f9 = Field::create(3, 2);
  const auto quad = classify_regularity(table_from_trace_poly(parse_trace_poly("x^2", f9, 1)));
  EXPECT_NE(quad.verdict, Regularity::NonWeaklyRegular);
  EXPECT_THROW(classify_regularity(build({})), Error);
  EXPECT_THROW(classify_regularity(table_from_anf(parse_anf("x1", 2, 2))), Error);
}

TEST(KaProfile, KasamiHasKZeroSeven) {
  const auto f64 = Field::create(2, 6);
  const auto prof = ka_profile(kasami_bent(f64, 1, find_non_power(*f64, 3)));
  EXPECT_EQ(prof.k0(), 7u);
  EXPECT_EQ(prof.sign_set.size(), 7u);
  const auto mm = ka_profile(build({ConstructionKind::MaioranaMcFarland, 2, 6, 3}));
  EXPECT_EQ(mm.k0(), 0u);
}
