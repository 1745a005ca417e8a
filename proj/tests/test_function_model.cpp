#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "pnl/anf.hpp"
#include "pnl/constructions.hpp"
#include "pnl/distributions.hpp"
#include "pnl/function_table.hpp"
#include "pnl/trace_poly.hpp"

using namespace pnl;

namespace {

// Perfect nonlinearity straight from the definition, no shared helpers.
bool oracle_pn(const FunctionTable& f) {
  const unsigned p = f.p();
  const auto q = f.domain_size(), r = f.codomain_size();
  auto add = [p](Index x, Index y, unsigned dim, bool minus) {
    Index out = 0, w = 1;
    for (unsigned i = 0; i < dim; ++i, w *= p) {
      const unsigned a = x % p, b = y % p;
      out += ((minus ? a + p - b : a + b) % p) * w;
      x /= p, y /= p;
    }
    return out;
  };
  for (Index a = 1; a < q; ++a) {
    std::vector<std::uint64_t> hist(r, 0);
    for (Index x = 0; x < q; ++x) ++hist[add(f(add(x, a, f.n(), false)), f(x), f.m(), true)];
    for (auto h : hist)
      if (h != q / r) return false;
  }
  return true;
}

FunctionTable random_table(unsigned p, unsigned n, unsigned m, std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> v(0, static_cast<Index>(ipow(p, m) - 1));
  return FunctionTable::tabulate(p, n, m, [&](Index) { return v(rng); });
}

}  // namespace

TEST(Anf, ParsesBooleanQuadratic) {
  const auto a = parse_anf("x1*x2 + x3*x4", 2, 4);
  ASSERT_EQ(a.m(), 1u);
  EXPECT_EQ(a.coordinates[0].size(), 2u);
}

TEST(Anf, SeedHasFourCoordinates) {
  const auto a = parse_anf(kSeed84Anf, 2, 8);
  EXPECT_EQ(a.m(), 4u);
  EXPECT_EQ(a.degree(), 2u);
}

TEST(Anf, VariableOutOfRange) {
  try {
    parse_anf("x1 + x9", 2, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VariableOutOfRange);
  }
  EXPECT_THROW(parse_anf("x1 * * x2", 2, 4), Error);
}

TEST(Anf, SmallTables) {
  EXPECT_EQ(table_from_anf(parse_anf("0", 2, 3)).values(), std::vector<Index>(8, 0));
  EXPECT_EQ(table_from_anf(parse_anf("x1*x2", 2, 2)).values(), (std::vector<Index>{0, 0, 0, 1}));
  // Over F_3: x1^2 + 2*x2 at (x1, x2) = index x1 + 3 x2.
  const auto t = table_from_anf(parse_anf("x1^2 + 2*x2", 3, 2));
  for (Index x1 = 0; x1 < 3; ++x1)
    for (Index x2 = 0; x2 < 3; ++x2) EXPECT_EQ(t(x1 + 3 * x2), (x1 * x1 + 2 * x2) % 3);
}

TEST(Anf, RoundTripThroughMoebiusAndInterpolation) {
  std::mt19937_64 rng(5);
  for (auto [p, n, m] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 5, 2}, {2, 6, 3}, {3, 3, 2}, {5, 2, 1}}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto f = random_table(p, n, m, rng);
      ASSERT_EQ(table_from_anf(anf_of(f)), f);
      ASSERT_EQ(table_from_anf(parse_anf(to_string(anf_of(f)), p, n)), f);
    }
  }
}

TEST(Seed84, ValuesAtZeroAndFirstUnitVector) {
  const auto seed = seed_function_8_4();
  EXPECT_EQ(seed(0), 0u);
  EXPECT_EQ(seed(1), 0u);  // every monomial has degree 2
  EXPECT_TRUE(oracle_pn(seed));
}

TEST(TracePoly, TraceOfSquareOnF4) {
  const auto f4 = Field::create(2, 2);
  const auto t = table_from_trace_poly(parse_trace_poly("x^2", f4, 1));
  EXPECT_EQ(t(0), 0u);
  // x -> x^2 permutes F_4 and the trace is onto F_2, so both values occur twice.
  EXPECT_EQ(value_distribution(t).to_string(), "{2^2}");
}

TEST(TracePoly, MatchesDirectEvaluation) {
  const auto f = Field::create(3, 4);
  const auto t = parse_trace_poly("g^3*x^5 + 2*x^2", f, 2);
  const auto table = table_from_trace_poly(t);
  SubfieldCoordinates coords(f, 2);
  const Index c = f->pow(f->primitive(), 3);
  for (Index x = 0; x < f->size(); ++x) {
    const Index inner = f->add(f->mul(c, f->pow(x, 5)), f->mul(2, f->pow(x, 2)));
    ASSERT_EQ(table(x), coords.encode(f->trace(inner, 2)));
  }
  EXPECT_THROW(parse_trace_poly("x^^2", f, 1), Error);
  EXPECT_THROW(parse_trace_poly("x^2", f, 3), Error);
}

TEST(Derivative, Histograms) {
  const auto lin = table_from_anf(parse_anf("x1 + x3", 2, 3));
  for (Index a = 0; a < 8; ++a) {
    const auto h = derivative_histogram(lin, a);
    EXPECT_EQ(std::count(h.begin(), h.end(), 8u), 1);
  }
  const auto and2 = table_from_anf(parse_anf("x1*x2", 2, 2));
  EXPECT_EQ(derivative_histogram(and2, 1), (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(derivative_histogram(and2, 0), (std::vector<std::uint64_t>{4, 0}));
}

TEST(PerfectNonlinear, KnownCases) {
  EXPECT_TRUE(is_perfect_nonlinear(table_from_anf(parse_anf("x1*x2 + x3*x4", 2, 4))));
  EXPECT_FALSE(is_perfect_nonlinear(table_from_anf(parse_anf("x1 + x2 + 1", 2, 4))));
  EXPECT_TRUE(is_perfect_nonlinear(power_map(Field::create(3, 2), 2)));
  EXPECT_FALSE(is_perfect_nonlinear(power_map(Field::create(3, 2), 3)));
}

TEST(PerfectNonlinear, AgreesWithDefinitionOnRandomAndStructuredTables) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 60; ++rep) {
    const unsigned p = rep % 3 == 0 ? 3 : 2;
    const unsigned n = p == 2 ? 2 + rep % 5 : 2 + rep % 2;
    const auto f = random_table(p, n, 1 + rep % 2, rng);
    ASSERT_EQ(is_perfect_nonlinear(f), oracle_pn(f));
  }
  for (const char* text : {"x1*x2", "x1*x2 + x3*x4", "x1*x2 + x3*x4 + x5*x6", "x1*x2*x3 + x4"})
    for (unsigned n : {2u, 4u, 6u}) {
      if (std::string(text).find("x" + std::to_string(n + 1)) != std::string::npos) continue;
      try {
        const auto f = table_from_anf(parse_anf(text, 2, n));
        ASSERT_EQ(is_perfect_nonlinear(f), oracle_pn(f)) << text;
      } catch (const Error&) {
      }
    }
}

TEST(Affine, PermutationsPreserveDistributionOfBentFunctions) {
  std::mt19937_64 rng(3);
  const auto f = seed_function_8_4();
  const auto before = value_distribution(f);
  int tried = 0;
  while (tried < 5) {
    AffineMap outer(2, random_matrix(4, 4, 2, rng)), inner(2, random_matrix(8, 8, 2, rng));
    if (rank_mod_p(outer.matrix, 2) != 4 || rank_mod_p(inner.matrix, 2) != 8) continue;
    ++tried;
    const auto g = apply_affine(f, outer, inner, std::nullopt);
    EXPECT_EQ(value_distribution(g), before);
    EXPECT_TRUE(is_perfect_nonlinear(g));
  }
  EXPECT_EQ(apply_affine(f, std::nullopt, std::nullopt, std::nullopt), f);
}

TEST(Affine, AddingLinearMapsChangesTheSeedDistribution) {
  std::mt19937_64 rng(2024);
  const auto f = seed_function_8_4();
  std::set<ValueDistribution> seen{value_distribution(f)};
  for (int i = 0; i < 50; ++i) {
    AffineMap added(2, random_matrix(4, 8, 2, rng));
    seen.insert(value_distribution(apply_affine(f, std::nullopt, std::nullopt, added)));
  }
  EXPECT_GT(seen.size(), 1u);
}

TEST(TableFile, RoundTripAndMalformedInput) {
  std::mt19937_64 rng(1);
  const auto f = random_table(3, 3, 2, rng);
  std::stringstream ss;
  write_table(ss, f);
  EXPECT_EQ(read_table(ss), f);
  std::stringstream bad("2 2 1\n0\n1\n");
  EXPECT_THROW(read_table(bad), Error);
  std::stringstream out_of_range("2 1 1\n0\n2\n");
  EXPECT_THROW(read_table(out_of_range), Error);
}
