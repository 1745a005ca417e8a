#include "pnl/planar.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pnl/constructions.hpp"
#include "pnl/distributions.hpp"
#include "pnl/walsh.hpp"

namespace pnl {

namespace {

void require_planar_shape(const FunctionTable& f) {
  if (f.p() == 2 || f.m() != f.n())
    throw Error(Errc::WrongShape, "expected an (n, n) function over an odd prime");
}

bool is_even(const FunctionTable& f) {
  const VectorSpace space = f.source();
  for (Index x = 0; x < f.domain_size(); ++x)
    if (f(x) != f(space.neg(x))) return false;
  return true;
}

// Largest c with c <= q - (sqrt(d) - 1)/2, i.e. (2(q - c) + 1)^2 >= d.
std::uint64_t upper_floor(std::uint64_t q, std::uint64_t d) {
  std::uint64_t gap = (isqrt(d) - 1) / 2;
  while ((2 * gap + 1) * (2 * gap + 1) < d) ++gap;
  while (gap > 0 && (2 * gap - 1) * (2 * gap - 1) >= d) --gap;
  return q - gap;
}

}  // namespace

bool is_two_to_one(const FunctionTable& f) {
  require_planar_shape(f);
  const auto counts = preimage_map(f).counts;
  std::uint64_t ones = 0, twos = 0;
  for (auto c : counts) {
    if (c == 1) ++ones;
    else if (c == 2) ++twos;
    else if (c != 0) return false;
  }
  return ones == 1 && twos == (f.domain_size() - 1) / 2;
}

PlanarReport planar_report(const FunctionTable& f) {
  require_planar_shape(f);
  PlanarReport r;
  const auto q = f.domain_size();
  const auto counts = preimage_map(f).counts;
  r.is_planar = is_perfect_nonlinear(f);
  r.is_two_to_one = is_two_to_one(f);
  r.even_function = is_even(f);
  r.image_size = static_cast<std::uint64_t>(std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }));
  r.lower_bound = (q + 1) / 2;
  const auto disc = 4 * q - 3;
  r.upper_exact = is_square(disc);
  r.upper_floor = upper_floor(q, disc);
  r.at_lower = r.image_size == r.lower_bound;
  r.at_upper = r.upper_exact && r.image_size == r.upper_floor;
  if (r.is_planar) {
    if (r.image_size < r.lower_bound || r.image_size > r.upper_floor)
      throw Error(Errc::ShapeViolation, "planar image size outside its bounds");
    if (r.at_lower != r.is_two_to_one)
      throw Error(Errc::ShapeViolation, "lower-bound equality and 2-to-1 disagree");
    const auto repeated = std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 1; });
    if (r.at_upper != (repeated == 1))
      throw Error(Errc::ShapeViolation, "upper-bound equality and the unique-preimage pattern disagree");
  }
  return r;
}

bool even_implies_two_to_one_check(const FunctionTable& f) {
  require_planar_shape(f);
  if (!is_even(f)) throw Error(Errc::HypothesisFailed, "F(x) != F(-x) for some x");
  if (!is_perfect_nonlinear(f)) throw Error(Errc::HypothesisFailed, "F is not planar");
  return is_two_to_one(f);
}

PlateauedPlanarReport plateaued_two_to_one_implies_planar(const FunctionTable& f) {
  require_planar_shape(f);
  PlateauedPlanarReport r;
  r.plateaued = plateau_profile(f).is_plateaued;
  r.two_to_one = is_two_to_one(f);
  r.hypotheses_hold = r.plateaued && r.two_to_one;
  r.planar = is_perfect_nonlinear(f);
  r.consistent = !r.hypotheses_hold || r.planar;
  return r;
}

bool monomial_planarity(unsigned p, unsigned n, std::uint64_t d) {
  if (p == 2) throw Error(Errc::EvenPrime, "planar functions need an odd prime");
  const auto field = Field::create(p, n);
  const auto f = planar_monomial(field, d);
  const bool direct = is_perfect_nonlinear(f);
  if (!plateau_profile(f).is_plateaued) return direct;
  const bool predicted = std::gcd(d, field->size() - 1) == 2;
  if (predicted != direct)
    throw Error(Errc::ConstraintViolation, "plateaued x^" + std::to_string(d) + ": gcd rule and derivative test disagree");
  return predicted;
}

FunctionTable artificial_two_to_one(const FieldPtr& field, std::uint64_t seed) {
  const auto square = planar_monomial(field, 2);
  std::mt19937_64 rng(seed);
  std::vector<Index> relabel(field->size());
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::iota(relabel.begin(), relabel.end(), Index{0});
    std::shuffle(relabel.begin(), relabel.end(), rng);
    auto values = square.values();
    for (auto& v : values) v = relabel[v];
    FunctionTable g(square.p(), square.n(), square.m(), std::move(values));
    if (!plateau_profile(g).is_plateaued) return g;
  }
  throw Error(Errc::BadParameters, "no non-plateaued relabelling found");
}

std::vector<SurjectivityRow> surjectivity_table(unsigned p, const std::vector<unsigned>& ns,
                                                const SurjectivityOptions& opts) {
  if (p == 2) throw Error(Errc::EvenPrime, "the experiment concerns odd p");
  const auto cap = opts.long_run ? kLongRunFieldCap : kDeskScaleFieldCap;
  std::vector<SurjectivityRow> rows;
  for (unsigned n : ns) {
    const auto q = ipow(p, n);
    if (q > cap)
      throw Error(Errc::CapExceeded, std::to_string(p) + "^" + std::to_string(n) + " exceeds the " +
                                         (opts.long_run ? "long-run" : "desk-scale (use --long)") + " cap");
    const auto field = Field::create(p, n);
    std::vector<bool> hit(q, false);
    for (Index x = 0; x < q; ++x) hit[field->mul(x, x)] = true;
    const unsigned lo = opts.k_min.value_or(n / 2 + 1);
    const unsigned hi = std::min(n, opts.k_max.value_or(lo));
    for (unsigned k = lo; k <= hi; ++k) {
      // First k coordinates are the low k digits.
      const auto mod = ipow(p, k);
      std::vector<bool> seen(mod, false);
      for (Index y = 0; y < q; ++y)
        if (hit[y]) seen[y % mod] = true;
      const auto image = static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), true));
      rows.push_back({p, n, k, image == mod, 2 * k <= n, image});
    }
  }
  return rows;
}

std::vector<std::pair<unsigned, unsigned>> table1_rows() {
  std::vector<std::pair<unsigned, unsigned>> rows;
  for (unsigned n = 5; n <= 13; ++n) rows.emplace_back(3, n);
  for (unsigned n = 5; n <= 10; ++n) rows.emplace_back(5, n);
  for (unsigned n = 5; n <= 9; ++n) rows.emplace_back(7, n);
  for (unsigned n = 5; n <= 7; ++n) rows.emplace_back(11, n);
  return rows;
}

bool triangular_bound_attainable(unsigned p, unsigned n) {
  if (p == 2) throw Error(Errc::EvenPrime, "the bound concerns odd p");
  return is_square(4 * ipow(p, n) - 3);
}

}  // namespace pnl
