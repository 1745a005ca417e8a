#include "pnl/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pnl/walsh.hpp"

namespace pnl {

std::uint64_t PreimageMap::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

ValueDistribution ValueDistribution::from_counts(const std::vector<std::uint64_t>& counts) {
  std::map<std::uint64_t, std::uint64_t, std::greater<>> hist;
  for (auto c : counts) ++hist[c];
  ValueDistribution d;
  d.entries.assign(hist.begin(), hist.end());
  return d;
}

std::uint64_t ValueDistribution::domain_size() const {
  std::uint64_t t = 0;
  for (const auto& [size, mult] : entries) t += size * mult;
  return t;
}

std::uint64_t ValueDistribution::target_size() const {
  std::uint64_t t = 0;
  for (const auto& e : entries) t += e.second;
  return t;
}

std::string ValueDistribution::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(entries[i].first);
    if (entries[i].second != 1) s += "^" + std::to_string(entries[i].second);
  }
  return s + "}";
}

PreimageMap preimage_map(const FunctionTable& f) {
  PreimageMap map{f.p(), f.m(), std::vector<std::uint64_t>(f.codomain_size(), 0)};
  for (auto v : f.values()) ++map.counts[v];
  return map;
}

ValueDistribution value_distribution(const FunctionTable& f) {
  return ValueDistribution::from_counts(preimage_map(f).counts);
}

namespace {

void require_pn(const FunctionTable& f) {
  if (!is_perfect_nonlinear(f)) throw Error(Errc::NotPerfectNonlinear, "function is not perfect nonlinear");
}

void require_bent(const FunctionTable& f) {
  if (!is_perfect_nonlinear(f)) throw Error(Errc::NotBent, "function is not bent");
}

using Wide = __int128;


std::int64_t ceil_rational(const Rational& r) {
  auto q = r.numerator() / r.denominator();
  if (q * r.denominator() < r.numerator()) ++q;
  return q;
}

std::int64_t floor_rational(const Rational& r) {
  auto q = r.numerator() / r.denominator();
  if (q * r.denominator() > r.numerator()) --q;
  return q;
}

}  // namespace

bool second_moment_check(const FunctionTable& f) {
  require_pn(f);
  const auto g = f.domain_size(), h = f.codomain_size();
  std::uint64_t sum = 0;
  for (auto c : preimage_map(f).counts) sum += c * c;
  return sum == g + (g / h) * (g - 1);
}

bool ExtremalBounds::equals_lower(std::uint64_t count) const {
  return lower && *lower == Rational(static_cast<std::int64_t>(count));
}

bool ExtremalBounds::equals_upper(std::uint64_t count) const {
  return upper && *upper == Rational(static_cast<std::int64_t>(count));
}

ExtremalBounds extremal_bounds(std::uint64_t size_g, std::uint64_t size_h) {
  if (size_g == 0 || size_h == 0) throw Error(Errc::BadParameters, "group orders must be positive");
  ExtremalBounds b;
  b.size_g = size_g;
  b.size_h = size_h;
  const auto root = isqrt(size_g);
  b.g_square = root * root == size_g;
  const auto G = static_cast<std::int64_t>(size_g), H = static_cast<std::int64_t>(size_h);
  if (b.g_square) {
    const auto s = static_cast<std::int64_t>(root);
    b.lower = Rational(G, H) - s + Rational(s, H);
    b.upper = Rational(G, H) + s - Rational(s, H);
    b.lower_ceil = ceil_rational(*b.lower);
    b.upper_floor = floor_rational(*b.upper);
    b.attainable = s % H == 0;
    return b;
  }
  // c >= (G - sqrt(G)(H-1)) / H  <=>  G - cH <= sqrt(G)(H-1)
  const Wide rhs = static_cast<Wide>(G) * (H - 1) * (H - 1);
  auto ok_lower = [&](std::int64_t c) {
    const Wide d = static_cast<Wide>(G) - static_cast<Wide>(c) * H;
    return d <= 0 || d * d <= rhs;
  };
  auto ok_upper = [&](std::int64_t c) {
    const Wide d = static_cast<Wide>(c) * H - G;
    return d <= 0 || d * d <= rhs;
  };
  const double sq = std::sqrt(static_cast<double>(G));
  std::int64_t lo = static_cast<std::int64_t>(std::floor((G - sq * (H - 1)) / H)) - 2;
  while (!ok_lower(lo)) ++lo;
  while (ok_lower(lo - 1)) --lo;
  std::int64_t hi = static_cast<std::int64_t>(std::ceil((G + sq * (H - 1)) / H)) + 2;
  while (!ok_upper(hi)) --hi;
  while (ok_upper(hi + 1)) ++hi;
  b.lower_ceil = lo;
  b.upper_floor = hi;
  return b;
}

std::string to_string(DistributionType t) {
  switch (t) {
    case DistributionType::PlusExtremal: return "plus";
    case DistributionType::MinusExtremal: return "minus";
    case DistributionType::Other: return "other";
  }
  return "?";
}

namespace {

std::optional<std::uint64_t> as_count(const Rational& r) {
  if (r.denominator() != 1 || r.numerator() < 0) return std::nullopt;
  return static_cast<std::uint64_t>(r.numerator());
}

ValueDistribution pattern(std::uint64_t single, std::uint64_t rest, std::uint64_t h) {
  std::vector<std::uint64_t> counts(h, rest);
  counts.front() = single;
  return ValueDistribution::from_counts(counts);
}

}  // namespace

DistributionVerdict classify_distribution(const ValueDistribution& d, std::uint64_t size_g, std::uint64_t size_h) {
  if (d.domain_size() != size_g || d.target_size() != size_h)
    throw Error(Errc::InconsistentTotals, d.to_string() + " does not describe a map of order " +
                                              std::to_string(size_g) + " onto " + std::to_string(size_h));
  DistributionVerdict v;
  v.bounds = extremal_bounds(size_g, size_h);
  for (const auto& e : d.entries)
    if (!v.bounds.contains(e.first)) v.within_bounds = false;
  if (!v.bounds.g_square || size_h < 2) return v;
  const auto s = static_cast<std::int64_t>(isqrt(size_g));
  const Rational mean(static_cast<std::int64_t>(size_g), static_cast<std::int64_t>(size_h));
  const Rational shift(s, static_cast<std::int64_t>(size_h));
  const auto plus_single = as_count(mean + s - shift), plus_rest = as_count(mean - shift);
  const auto minus_single = as_count(mean - s + shift), minus_rest = as_count(mean + shift);
  if (plus_single && plus_rest && d == pattern(*plus_single, *plus_rest, size_h))
    v.type = DistributionType::PlusExtremal;
  else if (minus_single && minus_rest && d == pattern(*minus_single, *minus_rest, size_h))
    v.type = DistributionType::MinusExtremal;
  return v;
}

DistributionVerdict classify_distribution(const PreimageMap& map, unsigned n) {
  auto v = classify_distribution(ValueDistribution::from_counts(map.counts), ipow(map.p, n), map.counts.size());
  if (v.type == DistributionType::Other) return v;
  for (Index b = 0; b < map.counts.size(); ++b) {
    const auto c = map.counts[b];
    if (std::count(map.counts.begin(), map.counts.end(), c) == 1) {
      v.unique_preimage = b;
      break;
    }
  }
  return v;
}

ImageSetBound image_set_bound_check(const FunctionTable& f) {
  require_pn(f);
  ImageSetBound r;
  for (auto c : preimage_map(f).counts) r.image_size += c != 0;
  const auto g = static_cast<std::int64_t>(f.domain_size()), h = static_cast<std::int64_t>(f.codomain_size());
  r.lower_bound = Rational(g * h, g + h - 1);
  r.satisfied = Rational(static_cast<std::int64_t>(r.image_size)) >= r.lower_bound;
  return r;
}

SurjectivityResult surjectivity_check(const FunctionTable& f) {
  const auto counts = preimage_map(f).counts;
  SurjectivityResult r;
  r.surjective = std::none_of(counts.begin(), counts.end(), [](auto c) { return c == 0; });
  r.guaranteed = f.codomain_size() * f.codomain_size() <= f.domain_size();
  return r;
}

NybergVerdict nyberg_shape_check(const FunctionTable& f) {
  if (f.m() != 1) throw Error(Errc::NotSingleOutput, "Nyberg shapes concern single-output functions");
  require_bent(f);
  const unsigned p = f.p(), n = f.n();
  NybergVerdict v;
  v.counts = preimage_map(f).counts;
  const auto& b = v.counts;
  const auto base = static_cast<std::int64_t>(ipow(p, n - 1));
  if (n % 2 == 0) {
    const auto unit = static_cast<std::int64_t>(ipow(p, n / 2 - 1));
    std::optional<int> found;
    for (int s : {1, -1}) {
      const auto single = base + s * static_cast<std::int64_t>(p - 1) * unit, rest = base - s * unit;
      unsigned singles = 0, rests = 0;
      for (auto c : b) {
        singles += static_cast<std::int64_t>(c) == single;
        rests += static_cast<std::int64_t>(c) == rest;
      }
      if (singles == 1 && rests == p - 1) {
        found = s;
        break;
      }
    }
    if (!found) throw Error(Errc::ShapeViolation, "counts do not follow the even-n pattern");
    v.upper_signs = *found == 1;
    if (p != 2 && !v.upper_signs && classify_regularity(f).verdict == Regularity::Regular)
      throw Error(Errc::ShapeViolation, "regular function with lower signs");
    return v;
  }
  const auto unit = static_cast<std::int64_t>(ipow(p, (n - 1) / 2));
  for (unsigned c = 0; c < p; ++c) {
    if (static_cast<std::int64_t>(b[c]) != base) continue;
    for (int s : {1, -1}) {
      bool ok = true;
      for (unsigned l = 1; l < p && ok; ++l)
        ok = static_cast<std::int64_t>(b[(c + l) % p]) == base + s * legendre(l, p) * unit;
      if (ok) {
        v.shift = c;
        v.sign = s;
        return v;
      }
    }
  }
  throw Error(Errc::ShapeViolation, "counts do not follow the odd-n Legendre pattern");
}

PreimageMap direct_sum_distribution(const PreimageMap& m1, const PreimageMap& m2) {
  if (m1.p != m2.p || m1.m != m2.m || m1.counts.size() != m2.counts.size())
    throw Error(Errc::ShapeMismatch, "preimage maps live over different groups");
  const VectorSpace group(m1.p, m1.m);
  PreimageMap out{m1.p, m1.m, std::vector<std::uint64_t>(m1.counts.size(), 0)};
  for (Index a = 0; a < m1.counts.size(); ++a) {
    if (!m1.counts[a]) continue;
    for (Index b = 0; b < m2.counts.size(); ++b) out.counts[group.add(a, b)] += m1.counts[a] * m2.counts[b];
  }
  return out;
}

RegularConstraintReport constraint_check_regular(const FunctionTable& f) {
  const unsigned p = f.p(), n = f.n(), m = f.m();
  if (n % 2) throw Error(Errc::HypothesisFailed, "the epsilon hypothesis forces n even");
  const auto prof = ka_profile(f);
  RegularConstraintReport r;
  r.plus_branch = prof.epsilon == Epsilon::PlusOne || prof.epsilon == Epsilon::PlusI;
  r.k = prof.k;
  r.counts = preimage_map(f).counts;
  const auto half = static_cast<std::int64_t>(ipow(p, n / 2));
  const auto pm = static_cast<std::int64_t>(ipow(p, m));
  const auto kmax = static_cast<unsigned>((pm - 1) / (p - 1));
  const Rational mean(static_cast<std::int64_t>(ipow(p, n)), pm);
  for (Index a = 0; a < r.counts.size(); ++a) {
    if (r.k[a] > kmax) throw Error(Errc::ConstraintViolation, "k_a exceeds (p^m - 1)/(p - 1)");
    const Rational tail = Rational(half * (static_cast<std::int64_t>(p) * r.k[a] + 1), pm);
    const Rational expected = r.plus_branch ? mean + half - tail : mean - half + tail;
    if (expected != Rational(static_cast<std::int64_t>(r.counts[a])))
      throw Error(Errc::ConstraintViolation, "count of target " + std::to_string(a) + " is " +
                                                 std::to_string(r.counts[a]) + ", formula gives " +
                                                 std::to_string(boost::rational_cast<double>(expected)));
  }
  // Independent recount of k_0 straight from the spectrum.
  const int sign = prof.epsilon == Epsilon::PlusOne ? 1 : -1;
  const auto target = CyclotomicInt::integer(p, sign * half).times_zeta(1);
  const auto at_zero = spectrum_at_zero(f);
  r.k0 = static_cast<unsigned>(std::count(at_zero.begin() + 1, at_zero.end(), target));
  if (r.k0 != prof.k0()) throw Error(Errc::ConstraintViolation, "k_0 differs from the count of eps p^{n/2} zeta values");
  return r;
}

BooleanConstraintReport constraint_check_boolean(const FunctionTable& f) {
  if (f.p() != 2) throw Error(Errc::HypothesisFailed, "the parity constraint concerns p = 2");
  constraint_check_regular(f);
  BooleanConstraintReport r;
  r.k = ka_profile(f).k;
  r.parity = r.k.front() % 2;
  for (auto k : r.k)
    if (k % 2 != r.parity) throw Error(Errc::ConstraintViolation, "k_a values of different parity");
  return r;
}

OddNConstraintReport constraint_check_odd_n(const FunctionTable& f) {
  const unsigned p = f.p(), n = f.n(), m = f.m();
  if (p == 2 || n % 2 == 0) throw Error(Errc::HypothesisFailed, "the odd-n constraint needs p and n odd");
  require_bent(f);
  const auto pm = static_cast<std::int64_t>(ipow(p, m));
  const auto pn = static_cast<std::int64_t>(ipow(p, n));
  const auto unit = static_cast<std::int64_t>(ipow(p, (n + 1) / 2));
  const auto kmax = static_cast<unsigned>((pm - 1) / (p - 1));
  OddNConstraintReport r;
  for (auto c : preimage_map(f).counts) {
    // count = p^{n-m} +/- k p^{(n+1)/2 - m}, scaled by p^m
    const auto diff = static_cast<std::int64_t>(c) * pm - pn;
    std::optional<OddNWitness> w;
    if (diff == 0) w = OddNWitness{c, 0, 0, 0};
    for (unsigned k0 = 0; !w && (p - 1) * k0 + 1 <= kmax; ++k0)
      for (unsigned k = 1; !w && k <= kmax - (p - 1) * k0; ++k)
        for (int s : {1, -1})
          if (!w && diff == s * static_cast<std::int64_t>(k) * unit) w = OddNWitness{c, s, k, k0};
    if (!w) throw Error(Errc::ConstraintViolation, "count " + std::to_string(c) + " has no admissible (k, k_0)");
    r.witnesses.push_back(*w);
  }
  return r;
}

EquivalenceReport equivalence_obstruction(const FunctionTable& f1, const FunctionTable& f2) {
  if (f1.p() != f2.p() || f1.n() != f2.n() || f1.m() != f2.m())
    throw Error(Errc::ShapeMismatch, "functions have different shapes");
  if (f1.p() == 2) return {Equivalence::Inconclusive, "p = 2: both extremal types occur within one equivalence class"};
  if (f1.n() % 2) return {Equivalence::Inconclusive, "n odd: no extremal types to compare"};
  require_bent(f1);
  require_bent(f2);
  const auto t1 = classify_distribution(preimage_map(f1), f1.n()).type;
  const auto t2 = classify_distribution(preimage_map(f2), f2.n()).type;
  const bool opposite = (t1 == DistributionType::PlusExtremal && t2 == DistributionType::MinusExtremal) ||
                        (t1 == DistributionType::MinusExtremal && t2 == DistributionType::PlusExtremal);
  if (opposite) return {Equivalence::Inequivalent, "one function is of type (+), the other of type (-)"};
  return {Equivalence::Inconclusive, "value distributions do not separate the functions"};
}

}  // namespace pnl
