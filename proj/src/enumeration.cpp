#include "pnl/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace pnl {

bool TiSolution::same_parity() const {
  return std::all_of(t.begin(), t.end(), [&](auto v) { return (v - t.front()) % 2 == 0; });
}

ValueDistribution TiSolution::sizes(unsigned n, bool minus_branch) const {
  if (n % 2 || 2 * m > n) throw Error(Errc::BadParameters, "sizes need n even and m <= n/2");
  const auto base = static_cast<std::int64_t>(ipow(p, n - m));
  const auto unit = static_cast<std::int64_t>(ipow(p, n / 2 - m));
  std::vector<std::uint64_t> counts;
  counts.reserve(t.size());
  for (auto v : t) {
    const auto offset = unit * (static_cast<std::int64_t>(p) * v - 1);
    counts.push_back(static_cast<std::uint64_t>(minus_branch ? base - offset : base + offset));
  }
  return ValueDistribution::from_counts(counts);
}

std::string TiSolution::to_string() const {
  std::string s = "{";
  for (std::size_t i = t.size(); i > 0;) {
    const auto v = t[i - 1];
    std::size_t j = i;
    while (j > 0 && t[j - 1] == v) --j;
    if (s.size() > 1) s += ", ";
    s += std::to_string(v);
    if (i - j > 1) s += "^" + std::to_string(i - j);
    i = j;
  }
  return s + "}";
}

namespace {

struct TiSearch {
  std::int64_t top;
  std::vector<std::int64_t> current;
  std::vector<TiSolution>* out;
  unsigned p, m;

  // Assign values <= v to `left` remaining slots with the given sums.
  void run(std::int64_t v, std::uint64_t left, std::int64_t sum, std::int64_t squares) {
    if (left == 0) {
      if (sum == 0 && squares == 0) out->push_back({p, m, current});
      return;
    }
    if (v < -top || squares < 0) return;
    // Cauchy-Schwarz and the ordering constraint prune most branches.
    if (static_cast<__int128>(sum) * sum > static_cast<__int128>(left) * squares) return;
    if (sum > static_cast<std::int64_t>(left) * v) return;
    if (sum < -static_cast<std::int64_t>(left) * top) return;
    for (std::uint64_t c = 0; c <= left; ++c) {
      const auto ci = static_cast<std::int64_t>(c);
      if (squares - ci * v * v < 0) break;
      current.insert(current.end(), c, v);
      run(v - 1, left - c, sum - ci * v, squares - ci * v * v);
      current.resize(current.size() - c);
    }
  }
};

}  // namespace

SolutionCatalog solve_ti_system(unsigned p, unsigned m, const EnumerationLimits& limits) {
  const auto targets = ipow(p, m);
  if (m == 0) throw Error(Errc::BadParameters, "m must be positive");
  if (targets > limits.max_targets)
    throw Error(Errc::CapExceeded, "p^m = " + std::to_string(targets) + " exceeds the enumeration cap " +
                                       std::to_string(limits.max_targets));
  const auto top = static_cast<std::int64_t>(ipow(p, m - 1));
  std::vector<TiSolution> found;
  TiSearch search{top, {}, &found, p, m};
  search.run(top, targets, top, top * top);
  SolutionCatalog cat{p, m, {}};
  for (auto& s : found) {
    std::int64_t sum = 0, sq = 0;
    for (auto v : s.t) {
      sum += v;
      sq += v * v;
    }
    if (sum != top || sq != top * top) throw Error(Errc::ConstraintViolation, "enumerator produced a non-solution");
    CatalogEntry e;
    e.parity = p != 2 || s.same_parity();
    e.solution = std::move(s);
    cat.entries.push_back(std::move(e));
  }
  return cat;
}

TiSolution boolean_symmetry(const TiSolution& s) {
  if (s.p != 2) throw Error(Errc::OddPrime, "the 1 - T symmetry is specific to p = 2");
  TiSolution r = s;
  for (auto& v : r.t) v = 1 - v;
  std::sort(r.t.begin(), r.t.end(), std::greater<>());
  return r;
}

std::vector<unsigned> k_profile_of_sign_set(SignSet k, unsigned m) {
  const Index size = Index{1} << m;
  const auto weight = static_cast<unsigned>(std::popcount(k));
  std::vector<unsigned> out(size);
  out[0] = weight;
  for (Index a = 1; a < size; ++a) {
    unsigned in_hyperplane = 0;
    for (Index b = 1; b < size; ++b)
      if ((k >> b & 1) && std::popcount(a & b) % 2 == 0) ++in_hyperplane;
    out[a] = 2 * in_hyperplane - weight + (size >> 1);
  }
  return out;
}

Realizability spectral_realizability(const TiSolution& s, unsigned max_m) {
  if (s.p != 2) throw Error(Errc::OddPrime, "sign-set realizability is defined for p = 2");
  if (s.m > max_m) throw Error(Errc::CapExceeded, "sign-set search over 2^(2^m - 1) sets beyond m = " + std::to_string(max_m));
  const unsigned m = s.m;
  const Index size = Index{1} << m;
  std::vector<unsigned> target;
  for (auto v : s.t) {
    const auto k = static_cast<std::int64_t>(size / 2) - v;
    if (k < 0) return {};
    target.push_back(static_cast<unsigned>(k));
  }
  std::sort(target.begin(), target.end());
  const SignSet limit = SignSet{1} << size;
  for (SignSet mask = 0; mask < limit; mask += 2) {  // bit 0 (b = 0) never set
    auto profile = k_profile_of_sign_set(mask, m);
    std::sort(profile.begin(), profile.end());
    if (profile == target) return {true, mask};
  }
  return {};
}

std::vector<ValueDistribution> Catalog::admissible() const {
  std::set<ValueDistribution> seen;
  std::vector<ValueDistribution> out;
  for (const auto& e : candidates.entries) {
    if (e.realizable && !*e.realizable) continue;
    auto d = e.solution.sizes(n, e.minus_branch);
    if (seen.insert(d).second) out.push_back(std::move(d));
  }
  return out;
}

std::vector<const CatalogEntry*> Catalog::excluded() const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : candidates.entries)
    if (e.realizable && !*e.realizable) out.push_back(&e);
  return out;
}

bool Catalog::contains(const ValueDistribution& d) const {
  const auto all = admissible();
  return std::find(all.begin(), all.end(), d) != all.end();
}

Catalog catalog_m(unsigned p, unsigned m, unsigned n, const EnumerationLimits& limits) {
  if (n % 2 || 2 * m > n) throw Error(Errc::BadParameters, "catalogs need n even and m <= n/2");
  auto raw = solve_ti_system(p, m, limits);
  Catalog cat{p, m, n, {p, m, {}}};
  if (p != 2) {
    for (const auto& e : raw.entries) {
      cat.candidates.entries.push_back(e);
      auto flipped = e;
      flipped.minus_branch = true;
      cat.candidates.entries.push_back(std::move(flipped));
    }
    return cat;
  }
  std::set<TiSolution> present;
  for (const auto& e : raw.entries)
    if (e.parity) present.insert(e.solution);
  for (const auto& e : raw.entries) {
    if (!e.parity) continue;
    if (!present.count(boolean_symmetry(e.solution)))
      throw Error(Errc::ConstraintViolation, "catalog not closed under T -> 1 - T");
    auto entry = e;
    const auto r = spectral_realizability(e.solution);
    entry.realizable = r.realizable;
    entry.witness = r.witness;
    cat.candidates.entries.push_back(std::move(entry));
  }
  return cat;
}

namespace {

std::vector<std::vector<std::int64_t>> base_h4() {
  // sum H = 0, sum H^2 = 12, as sorted 4-tuples
  std::set<std::vector<std::int64_t>> found;
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -4; b <= 4; ++b)
      for (std::int64_t c = -4; c <= 4; ++c) {
        const auto d = -a - b - c;
        if (a * a + b * b + c * c + d * d != 12) continue;
        std::vector<std::int64_t> h{a, b, c, d};
        std::sort(h.begin(), h.end());
        found.insert(h);
      }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<ValueDistribution> solve_group_h4(unsigned n) {
  if (n % 2) throw Error(Errc::OddN, "the descent argument only reaches n = 4 through even n");
  if (n < 4) throw Error(Errc::BadParameters, "n must be at least 4");
  auto sols = base_h4();
  // Above n = 4 every H_i is even (squares mod 8), so solutions at n are
  // twice the solutions at n - 2.
  for (unsigned level = 6; level <= n; level += 2)
    for (auto& h : sols)
      for (auto& v : h) v *= 2;
  const auto base = static_cast<std::int64_t>(ipow(2, n - 2));
  std::vector<ValueDistribution> out;
  for (const auto& h : sols) {
    std::vector<std::uint64_t> counts;
    for (auto v : h) counts.push_back(static_cast<std::uint64_t>(base + v));
    out.push_back(ValueDistribution::from_counts(counts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExperimentResult linear_shift_experiment(const FunctionTable& f, std::uint64_t samples, std::uint64_t seed) {
  const unsigned p = f.p(), n = f.n(), m = f.m();
  ExperimentResult r;
  r.samples = samples;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  const VectorSpace target = f.target();
  const auto size = f.domain_size();
  std::vector<Index> image(size), columns(n);
  std::vector<std::uint64_t> counts(f.codomain_size());
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto a = random_matrix(m, n, p, rng);
    for (unsigned j = 0; j < n; ++j) columns[j] = apply_linear(a, static_cast<Index>(ipow(p, j)), p);
    image[0] = 0;
    // x and x - p^j (j the lowest nonzero digit) differ by the unit vector e_j.
    for (Index x = 1; x < size; ++x) {
      unsigned j = 0;
      Index step = 1;
      while ((x / step) % p == 0) {
        step *= p;
        ++j;
      }
      image[x] = target.add(image[x - step], columns[j]);
    }
    std::fill(counts.begin(), counts.end(), 0);
    for (Index x = 0; x < size; ++x) ++counts[target.add(f(x), image[x])];
    ++r.hits[ValueDistribution::from_counts(counts)];
  }
  return r;
}

}  // namespace pnl
