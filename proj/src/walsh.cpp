#include "pnl/walsh.hpp"

namespace pnl {

std::vector<CyclotomicInt> walsh_transform(const std::vector<unsigned>& f, unsigned p, unsigned n) {
  const auto size = ipow(p, n);
  if (f.size() != size) throw Error(Errc::DimensionMismatch, "function length differs from p^n");
  std::vector<CyclotomicInt> out;
  out.reserve(size);
  if (p == 2) {
    std::vector<std::int64_t> w(size);
    for (std::size_t x = 0; x < size; ++x) w[x] = f[x] ? -1 : 1;
    for (std::size_t len = 1; len < size; len <<= 1)
      for (std::size_t i = 0; i < size; i += len << 1)
        for (std::size_t j = i; j < i + len; ++j) {
          const auto u = w[j], v = w[j + len];
          w[j] = u + v;
          w[j + len] = u - v;
        }
    for (auto v : w) out.push_back(CyclotomicInt::integer(2, v));
    return out;
  }
  // Each point carries a group-ring vector of p exponent counts.
  std::vector<std::int64_t> cur(size * p, 0), next(size * p, 0);
  for (std::size_t x = 0; x < size; ++x) ++cur[x * p + f[x] % p];
  std::uint64_t stride = 1;
  for (unsigned axis = 0; axis < n; ++axis, stride *= p) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint64_t base = 0; base < size; ++base) {
      if ((base / stride) % p) continue;
      for (unsigned a = 0; a < p; ++a) {
        std::int64_t* dst = &next[(base + a * stride) * p];
        for (unsigned v = 0; v < p; ++v) {
          const std::int64_t* src = &cur[(base + v * stride) * p];
          const unsigned shift = (a * v) % p;  // multiply by zeta^{-a v}
          for (unsigned r = 0; r < p; ++r) dst[(r + p - shift) % p] += src[r];
        }
      }
    }
    cur.swap(next);
  }
  std::vector<std::int64_t> g(p);
  for (std::size_t a = 0; a < size; ++a) {
    std::copy(cur.begin() + static_cast<std::ptrdiff_t>(a * p), cur.begin() + static_cast<std::ptrdiff_t>((a + 1) * p), g.begin());
    out.push_back(CyclotomicInt::from_group_ring(p, g));
  }
  return out;
}

std::vector<CyclotomicInt> walsh_naive(const std::vector<unsigned>& f, unsigned p, unsigned n) {
  const VectorSpace space(p, n);
  std::vector<CyclotomicInt> out;
  out.reserve(space.size());
  std::vector<std::int64_t> g(p);
  for (Index a = 0; a < space.size(); ++a) {
    std::fill(g.begin(), g.end(), 0);
    for (Index x = 0; x < space.size(); ++x) ++g[mod_p(static_cast<std::int64_t>(f[x]) - space.dot(a, x), p)];
    out.push_back(CyclotomicInt::from_group_ring(p, g));
  }
  return out;
}

std::vector<CyclotomicInt> walsh_component(const FunctionTable& f, Index b) {
  if (b == 0) throw Error(Errc::ZeroComponent, "component b = 0 is the trivial character");
  return walsh_transform(f.component(b), f.p(), f.n());
}

std::vector<CyclotomicInt> spectrum_at_zero(const FunctionTable& f) {
  const unsigned p = f.p();
  std::vector<std::uint64_t> counts(f.codomain_size(), 0);
  for (auto v : f.values()) ++counts[v];
  const VectorSpace target = f.target();
  std::vector<CyclotomicInt> out;
  out.reserve(counts.size());
  std::vector<std::int64_t> g(p);
  for (Index b = 0; b < counts.size(); ++b) {
    std::fill(g.begin(), g.end(), 0);
    for (Index beta = 0; beta < counts.size(); ++beta)
      g[target.dot(b, beta)] += static_cast<std::int64_t>(counts[beta]);
    out.push_back(CyclotomicInt::from_group_ring(p, g));
  }
  return out;
}

PlateauProfile plateau_profile(const FunctionTable& f) {
  const unsigned p = f.p(), n = f.n();
  PlateauProfile prof;
  prof.amplitude.assign(f.codomain_size(), std::nullopt);
  const auto total = static_cast<std::int64_t>(ipow(p, 2 * n));
  for (Index b = 1; b < f.codomain_size(); ++b) {
    const auto spectrum = walsh_component(f, b);
    std::optional<std::int64_t> level;
    bool plateaued = true;
    std::int64_t parseval = 0;
    for (const auto& w : spectrum) {
      auto sq = w.abs_squared().as_integer();
      if (!sq) {
        plateaued = false;
        prof.parseval_holds = false;
        break;
      }
      parseval += *sq;
      if (*sq == 0) continue;
      if (!level) level = *sq;
      else if (*level != *sq) plateaued = false;
    }
    if (parseval != total) prof.parseval_holds = false;
    if (plateaued && level) {
      // level must be p^{n+s}
      std::int64_t v = *level;
      unsigned e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      if (v != 1 || e < n) plateaued = false;
      else prof.amplitude[b] = e - n;
    } else {
      plateaued = false;
    }
    if (!plateaued) prof.is_plateaued = false;
    if (!prof.amplitude[b] || *prof.amplitude[b] != 0) prof.is_bent = false;
  }
  if (!prof.is_plateaued) prof.is_bent = false;
  return prof;
}

std::string to_string(Epsilon e) {
  switch (e) {
    case Epsilon::PlusOne: return "+1";
    case Epsilon::MinusOne: return "-1";
    case Epsilon::PlusI: return "+i";
    case Epsilon::MinusI: return "-i";
  }
  return "?";
}

std::string to_string(Regularity r) {
  switch (r) {
    case Regularity::Regular: return "regular";
    case Regularity::WeaklyRegular: return "weakly-regular";
    case Regularity::NonWeaklyRegular: return "non-weakly-regular";
  }
  return "?";
}

std::optional<BentValue> decompose_bent_value(const CyclotomicInt& w, unsigned n) {
  const unsigned p = w.p();
  if (p == 2) {
    if (n % 2) return std::nullopt;
    const auto q = static_cast<std::int64_t>(ipow(2, n / 2));
    auto v = w.as_integer();
    if (v && *v == q) return BentValue{Epsilon::PlusOne, 0};
    if (v && *v == -q) return BentValue{Epsilon::PlusOne, 1};
    return std::nullopt;
  }
  const auto scale = static_cast<std::int64_t>(ipow(p, n / 2));
  auto u = w.divide_exact(scale);
  if (!u) return std::nullopt;
  const bool odd = n % 2;
  const auto unit = odd ? gauss_sum(p) : CyclotomicInt::integer(p, 1);
  for (unsigned t = 0; t < p; ++t) {
    const auto c = unit.times_zeta(t);
    for (int s : {1, -1}) {
      if (!(*u == (s == 1 ? c : -c))) continue;
      Epsilon e;
      if (!odd || p % 4 == 1) e = s == 1 ? Epsilon::PlusOne : Epsilon::MinusOne;
      else e = s == 1 ? Epsilon::PlusI : Epsilon::MinusI;
      return BentValue{e, t};
    }
  }
  return std::nullopt;
}

RegularityClass classify_regularity(const FunctionTable& f) {
  if (f.m() != 1) throw Error(Errc::NotSingleOutput, "regularity is defined for single-output functions");
  const auto spectrum = walsh_component(f, 1);
  RegularityClass out;
  std::vector<unsigned> dual(spectrum.size());
  std::optional<Epsilon> common;
  bool constant = true;
  for (std::size_t a = 0; a < spectrum.size(); ++a) {
    auto d = decompose_bent_value(spectrum[a], f.n());
    if (!d) throw Error(Errc::NotBent, "Walsh value at a = " + std::to_string(a) + " is not of bent shape");
    if (!common) common = d->epsilon;
    else if (*common != d->epsilon) constant = false;
    dual[a] = d->t;
  }
  if (!constant) {
    out.verdict = Regularity::NonWeaklyRegular;
    return out;
  }
  out.epsilon = common;
  out.verdict = *common == Epsilon::PlusOne ? Regularity::Regular : Regularity::WeaklyRegular;
  out.dual = std::move(dual);
  return out;
}

KaProfile ka_profile(const FunctionTable& f) {
  const unsigned p = f.p();
  const auto at_zero = spectrum_at_zero(f);
  KaProfile prof;
  prof.r.assign(at_zero.size(), 0);
  std::optional<Epsilon> common;
  for (Index b = 1; b < at_zero.size(); ++b) {
    auto d = decompose_bent_value(at_zero[b], f.n());
    if (!d) throw Error(Errc::HypothesisFailed, "W_F(" + std::to_string(b) + ",0) is not eps p^{n/2} zeta^r");
    if (common && *common != d->epsilon)
      throw Error(Errc::HypothesisFailed, "W_F(b,0) does not share a common epsilon");
    common = d->epsilon;
    prof.r[b] = d->t;
    if (p == 2 && d->t == 1) prof.sign_set.push_back(b);
  }
  prof.epsilon = common.value_or(Epsilon::PlusOne);
  const VectorSpace target = f.target();
  prof.k.assign(at_zero.size(), 0);
  for (Index a = 0; a < at_zero.size(); ++a)
    for (Index b = 1; b < at_zero.size(); ++b)
      if (mod_p(static_cast<std::int64_t>(prof.r[b]) - target.dot(b, a), p) == 1) ++prof.k[a];
  return prof;
}

}  // namespace pnl
