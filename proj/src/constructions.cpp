#include "pnl/constructions.hpp"

#include <numeric>

#include "pnl/anf.hpp"

namespace pnl {

namespace {

void require_permutation(const std::vector<Index>& table, std::uint64_t size, const char* what) {
  if (table.size() != size) throw Error(Errc::DimensionMismatch, std::string(what) + " has the wrong length");
  std::vector<bool> seen(size, false);
  for (auto v : table) {
    if (v >= size || seen[v]) throw Error(Errc::NotBijective, std::string(what) + " is not a permutation");
    seen[v] = true;
  }
}

FunctionTable trace_monomial(const FieldPtr& field, std::uint64_t d, Index lambda) {
  const Field& f = *field;
  const unsigned half = f.degree() / 2;
  SubfieldCoordinates coords(field, half);
  return FunctionTable::tabulate(f.p(), f.degree(), half, [&](Index x) {
    return coords.encode(f.trace(f.mul(lambda, f.pow(x, d)), half));
  });
}

}  // namespace

FunctionTable mm_bent(const Field& half, const std::vector<Index>& pi, const std::vector<Index>& rho,
                      const MatrixFp& L) {
  const unsigned p = half.p(), k = half.degree();
  const auto q = half.size();
  const auto m = static_cast<unsigned>(L.rows());
  require_permutation(pi, q, "pi");
  if (static_cast<unsigned>(L.cols()) != k)
    throw Error(Errc::DimensionMismatch, "L must have n/2 columns");
  if (rank_mod_p(L, p) != L.rows()) throw Error(Errc::NotSurjective, "L is not surjective");
  if (rho.size() != q) throw Error(Errc::DimensionMismatch, "rho has the wrong length");
  const auto cod = ipow(p, m);
  for (auto v : rho)
    if (v >= cod) throw Error(Errc::IndexOutOfRange, "rho value outside F_p^m");
  const VectorSpace target(p, m);
  return FunctionTable::tabulate(p, 2 * k, m, [&](Index idx) {
    const Index x = static_cast<Index>(idx % q), y = static_cast<Index>(idx / q);
    return target.add(apply_linear(L, half.mul(x, pi[y]), p), rho[y]);
  });
}

FunctionTable psap_bent(const Field& half, const std::vector<Index>& psi, unsigned m) {
  const unsigned p = half.p(), k = half.degree();
  const auto q = half.size();
  if (psi.size() != q) throw Error(Errc::DimensionMismatch, "Psi has the wrong length");
  if (m > k) throw Error(Errc::NotBalanced, "Psi cannot be balanced onto a larger space");
  std::vector<std::uint64_t> hits(ipow(p, m), 0);
  for (auto v : psi) {
    if (v >= hits.size()) throw Error(Errc::IndexOutOfRange, "Psi value outside F_p^m");
    ++hits[v];
  }
  const auto expected = ipow(p, k - m);
  for (auto h : hits)
    if (h != expected) throw Error(Errc::NotBalanced, "Psi is not balanced");
  return FunctionTable::tabulate(p, 2 * k, m, [&](Index idx) {
    const Index x = static_cast<Index>(idx % q), y = static_cast<Index>(idx / q);
    return psi[half.mul(x, half.pow(y, q - 2))];
  });
}

bool is_o_polynomial(const Field& half, const std::vector<Index>& psi) {
  if (half.p() != 2) throw Error(Errc::BadParameters, "o-polynomials live in characteristic 2");
  const auto q = half.size();
  if (psi.size() != q) return false;
  std::vector<bool> seen(q);
  auto is_perm = [&](auto&& map) {
    std::fill(seen.begin(), seen.end(), false);
    for (Index z = 0; z < q; ++z) {
      Index v = map(z);
      if (v >= q || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  };
  if (!is_perm([&](Index z) { return psi[z]; })) return false;
  for (Index a = 1; a < q; ++a) {
    const bool ok = is_perm([&](Index z) -> Index {
      if (z == 0) return 0;
      return half.div(half.add(psi[half.add(z, a)], psi[a]), z);
    });
    if (!ok) return false;
  }
  return true;
}

FunctionTable opoly_bent(const Field& half, const std::vector<Index>& psi) {
  if (!is_o_polynomial(half, psi)) throw Error(Errc::NotOPolynomial, "Psi is not an o-polynomial");
  const unsigned k = half.degree();
  const auto q = half.size();
  const std::uint64_t root = ipow(2, k - 1);  // x -> x^{2^{k-1}} is the square root
  return FunctionTable::tabulate(2, 2 * k, k, [&](Index idx) {
    const Index x = static_cast<Index>(idx % q), y = static_cast<Index>(idx / q);
    return half.mul(x, psi[half.mul(y, half.pow(x, root))]);
  });
}

std::uint64_t gold_exponent(unsigned n) {
  if (n == 0 || n % 2) throw Error(Errc::BadParameters, "Gold construction needs even n");
  unsigned r = 0;
  while ((n >> (r + 1)) % 2 == 0) ++r;
  return ipow(2, 1u << r) + 1;
}

FunctionTable gold_bent(const FieldPtr& field, Index lambda) {
  const Field& f = *field;
  if (f.p() != 2) throw Error(Errc::BadParameters, "Gold construction is binary");
  const auto d = gold_exponent(f.degree());
  if (lambda == 0 || f.is_power(lambda, d))
    throw Error(Errc::BadLambda, "lambda is a " + std::to_string(d) + "-th power");
  return trace_monomial(field, d, lambda);
}

FunctionTable kasami_bent(const FieldPtr& field, unsigned i, Index lambda) {
  const Field& f = *field;
  const unsigned n = f.degree();
  if (f.p() != 2 || n % 2 || (n / 2) % 2 == 0)
    throw Error(Errc::BadParameters, "Kasami construction needs p = 2 and n/2 odd");
  if (i == 0 || std::gcd(i, n) != 1) throw Error(Errc::BadParameters, "Kasami parameter must be coprime to n");
  if (lambda == 0 || f.is_power(lambda, 3)) throw Error(Errc::BadLambda, "lambda is a cube");
  const std::uint64_t d = ipow(4, i) - ipow(2, i) + 1;
  return trace_monomial(field, d, lambda);
}

bool pary_monomial_predicts_plus(const Field& field, Index lambda) {
  const auto q = ipow(field.p(), field.degree() / 2);
  const bool square = field.is_square(lambda);
  return (q % 4 == 3 && square) || (q % 4 == 1 && !square);
}

FunctionTable pary_monomial_bent(const FieldPtr& field, std::uint64_t d, Index lambda) {
  const Field& f = *field;
  if (f.p() == 2 || f.degree() % 2)
    throw Error(Errc::BadParameters, "p-ary monomial construction needs odd p and even n");
  if (lambda == 0) throw Error(Errc::BadLambda, "lambda must be nonzero");
  const auto q = ipow(f.p(), f.degree() / 2);
  if (std::gcd(d, q - 1) != 2)
    throw Error(Errc::BadGcd, "gcd(" + std::to_string(d) + ", p^{n/2}-1) is not 2");
  auto table = trace_monomial(field, d, lambda);
  if (!is_perfect_nonlinear(table)) throw Error(Errc::NotBent, "x^" + std::to_string(d) + " does not give a bent function");
  return table;
}

Index find_non_power(const Field& field, std::uint64_t d) {
  Index x = field.primitive();
  for (std::uint64_t e = 1; e < field.size(); ++e, x = field.mul(x, field.primitive()))
    if (!field.is_power(x, d)) return x;
  throw Error(Errc::BadParameters, "every nonzero element is a " + std::to_string(d) + "-th power");
}

FunctionTable planar_monomial(const FieldPtr& field, std::uint64_t d) {
  const Field& f = *field;
  return FunctionTable::tabulate(f.p(), f.degree(), f.degree(), [&](Index x) { return f.pow(x, d); });
}

FunctionTable direct_sum(const FunctionTable& f1, const FunctionTable& f2) {
  if (f1.p() != f2.p() || f1.m() != f2.m())
    throw Error(Errc::ShapeMismatch, "direct sum needs equal p and m");
  const auto low = f1.domain_size();
  const VectorSpace target = f1.target();
  return FunctionTable::tabulate(f1.p(), f1.n() + f2.n(), f1.m(), [&](Index idx) {
    return target.add(f1(static_cast<Index>(idx % low)), f2(static_cast<Index>(idx / low)));
  });
}

FunctionTable compose_surjective_linear(const FunctionTable& f, const MatrixFp& L) {
  if (static_cast<unsigned>(L.cols()) != f.m())
    throw Error(Errc::DimensionMismatch, "L must have m columns");
  if (rank_mod_p(L, f.p()) != L.rows()) throw Error(Errc::NotSurjective, "L is not surjective");
  const auto k = static_cast<unsigned>(L.rows());
  std::vector<Index> image(f.codomain_size());
  for (Index y = 0; y < image.size(); ++y) image[y] = apply_linear(L, y, f.p());
  return FunctionTable::tabulate(f.p(), f.n(), k, [&](Index x) { return image[f(x)]; });
}

FunctionTable coordinate_restriction(const FunctionTable& f, unsigned k) {
  if (k < 1 || k > f.m())
    throw Error(Errc::RangeError, "k must lie in 1.." + std::to_string(f.m()));
  const auto mod = ipow(f.p(), k);
  return FunctionTable::tabulate(f.p(), f.n(), k, [&](Index x) { return static_cast<Index>(f(x) % mod); });
}

const char* const kSeed84Anf =
    "x1*x5 + x2*x6 + x3*x7 + x4*x8;"
    "x1*x3 + x1*x4 + x3*x4 + x2*x5 + x4*x5 + x3*x6 + x4*x6 + x1*x7 + x3*x7 + x4*x7 + x2*x8;"
    "x1*x5 + x3*x5 + x4*x5 + x2*x6 + x3*x6 + x2*x7 + x1*x8 + x2*x8;"
    "x1*x3 + x1*x4 + x3*x5 + x2*x7 + x5*x7 + x1*x8 + x6*x8";

FunctionTable seed_function_8_4() { return table_from_anf(parse_anf(kSeed84Anf, 2, 8)); }

MatrixFp projection(unsigned k, unsigned m) {
  if (k > m) throw Error(Errc::DimensionMismatch, "projection target larger than source");
  return MatrixFp::Identity(k, m);
}

FunctionTable almost_balanced_instance(unsigned p, unsigned n, unsigned m, bool plus) {
  if (n % 2 || m == 0 || 2 * m > n) throw Error(Errc::BadParameters, "need n even and 1 <= m <= n/2");
  if (plus) {
    auto half = Field::create(p, n / 2);
    std::vector<Index> pi(half->size()), rho(half->size(), 0);
    std::iota(pi.begin(), pi.end(), Index{0});
    return mm_bent(*half, pi, rho, projection(m, n / 2));
  }
  auto field = Field::create(p, n);
  FunctionTable full = [&] {
    if (p == 2) {
      const auto d = gold_exponent(n);
      return gold_bent(field, find_non_power(*field, d));
    }
    Index lambda = field->primitive();
    while (pary_monomial_predicts_plus(*field, lambda)) lambda = field->mul(lambda, field->primitive());
    return pary_monomial_bent(field, 2, lambda);
  }();
  return compose_surjective_linear(full, projection(m, n / 2));
}

namespace {

constexpr std::pair<ConstructionKind, const char*> kKindNames[] = {
    {ConstructionKind::MaioranaMcFarland, "mm"},
    {ConstructionKind::PartialSpread, "psap"},
    {ConstructionKind::OPolynomial, "opoly"},
    {ConstructionKind::Gold, "gold"},
    {ConstructionKind::Kasami, "kasami"},
    {ConstructionKind::PAryMonomial, "pary-monomial"},
    {ConstructionKind::PlanarMonomial, "planar-monomial"},
    {ConstructionKind::DirectSum, "direct-sum"},
    {ConstructionKind::LinearImage, "linear-image"},
    {ConstructionKind::CoordinateRestriction, "restriction"},
    {ConstructionKind::Seed84, "seed84"},
};

Index pick_lambda(const Field& f, const ConstructionRecipe& r, auto&& admissible) {
  if (r.lambda_log) return f.pow(f.primitive(), *r.lambda_log);
  Index x = 1;
  for (std::uint64_t e = 0; e + 1 < f.size(); ++e, x = f.mul(x, f.primitive()))
    if (admissible(x)) return x;
  throw Error(Errc::BadLambda, "no admissible lambda in the field");
}

const ConstructionRecipe& single_part(const ConstructionRecipe& r) {
  if (r.parts.size() != 1) throw Error(Errc::BadParameters, kind_name(r.kind) + " needs exactly one part");
  return r.parts.front();
}

}  // namespace

std::string kind_name(ConstructionKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<ConstructionKind> kind_from_name(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  return std::nullopt;
}

FunctionTable build(const ConstructionRecipe& r) {
  switch (r.kind) {
    case ConstructionKind::MaioranaMcFarland: {
      auto half = Field::create(r.p, r.n / 2);
      std::vector<Index> pi(half->size()), rho(half->size(), r.rho_constant);
      std::iota(pi.begin(), pi.end(), Index{0});
      return mm_bent(*half, pi, rho, projection(r.m, r.n / 2));
    }
    case ConstructionKind::PartialSpread: {
      auto half = Field::create(r.p, r.n / 2);
      const auto mod = ipow(r.p, r.m);
      std::vector<Index> psi(half->size());
      for (Index z = 0; z < psi.size(); ++z) psi[z] = static_cast<Index>(z % mod);
      return psap_bent(*half, psi, r.m);
    }
    case ConstructionKind::OPolynomial: {
      auto half = Field::create(2, r.n / 2);
      const unsigned power = r.d ? static_cast<unsigned>(r.d) : 1;
      std::vector<Index> psi(half->size());
      for (Index z = 0; z < psi.size(); ++z) psi[z] = half->frobenius(z, power);
      return opoly_bent(*half, psi);
    }
    case ConstructionKind::Gold: {
      auto f = Field::create(2, r.n);
      const auto d = gold_exponent(r.n);
      return gold_bent(f, pick_lambda(*f, r, [&](Index x) { return !f->is_power(x, d); }));
    }
    case ConstructionKind::Kasami: {
      auto f = Field::create(2, r.n);
      return kasami_bent(f, r.i, pick_lambda(*f, r, [&](Index x) { return !f->is_power(x, 3); }));
    }
    case ConstructionKind::PAryMonomial: {
      auto f = Field::create(r.p, r.n);
      const std::uint64_t d = r.d ? r.d : 2;
      return pary_monomial_bent(f, d, pick_lambda(*f, r, [&](Index x) { return f->is_square(x) == r.lambda_square; }));
    }
    case ConstructionKind::PlanarMonomial:
      return planar_monomial(Field::create(r.p, r.n), r.d ? r.d : 2);
    case ConstructionKind::DirectSum:
      if (r.parts.size() != 2) throw Error(Errc::BadParameters, "direct-sum needs two parts");
      return direct_sum(build(r.parts[0]), build(r.parts[1]));
    case ConstructionKind::LinearImage: {
      auto inner = build(single_part(r));
      return compose_surjective_linear(inner, projection(r.k, inner.m()));
    }
    case ConstructionKind::CoordinateRestriction:
      return coordinate_restriction(build(single_part(r)), r.k);
    case ConstructionKind::Seed84:
      return seed_function_8_4();
  }
  throw Error(Errc::BadParameters, "unknown construction kind");
}

}  // namespace pnl
