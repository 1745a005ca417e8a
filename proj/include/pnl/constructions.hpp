#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pnl/affine.hpp"
#include "pnl/field.hpp"
#include "pnl/function_table.hpp"

namespace pnl {

// Pairs (x, y) in F_{p^k} x F_{p^k} are indexed x + y * p^k.

/// F(x, y) = L(x * pi(y)) + rho(y). `half` is F_{p^{n/2}}, `pi` a
/// permutation table on it, `rho` maps into [0, p^m), `L` is m x (n/2)
/// acting on power-basis coordinates.
FunctionTable mm_bent(const Field& half, const std::vector<Index>& pi, const std::vector<Index>& rho,
                      const MatrixFp& L);

/// F(x, y) = Psi(x * y^{p^{n/2} - 2}) for a balanced Psi: F_{p^{n/2}} -> F_p^m.
FunctionTable psap_bent(const Field& half, const std::vector<Index>& psi, unsigned m);

/// Brute-force o-polynomial test over F_{2^k}.
bool is_o_polynomial(const Field& half, const std::vector<Index>& psi);

/// F(x, y) = x * Psi(y * x^{2^{k-1}}) into F_{2^k}.
FunctionTable opoly_bent(const Field& half, const std::vector<Index>& psi);

/// Exponent 2^{2^r} + 1 where n = 2^{r+1} s with s odd.
std::uint64_t gold_exponent(unsigned n);

/// Tr^n_{n/2}(lambda x^{2^{2^r}+1}) on F_{2^n}.
FunctionTable gold_bent(const FieldPtr& field, Index lambda);

/// Tr^n_{n/2}(lambda x^{4^i - 2^i + 1}) on F_{2^n}, n/2 odd.
FunctionTable kasami_bent(const FieldPtr& field, unsigned i, Index lambda);

/// Tr^n_{n/2}(lambda x^d) on F_{p^n}, p odd, gcd(d, p^{n/2} - 1) = 2.
FunctionTable pary_monomial_bent(const FieldPtr& field, std::uint64_t d, Index lambda);

/// Which type the p-ary monomial rule predicts: true for (+).
bool pary_monomial_predicts_plus(const Field& field, Index lambda);

/// Smallest power of the primitive element that is not a d-th power.
Index find_non_power(const Field& field, std::uint64_t d);

/// x -> x^d on F_{p^n} as an (n, n) table.
FunctionTable planar_monomial(const FieldPtr& field, std::uint64_t d);

/// F(x, y) = F1(x) + F2(y), x in the low digits.
FunctionTable direct_sum(const FunctionTable& f1, const FunctionTable& f2);

/// L o F for a surjective linear L: F_p^m -> F_p^k (k x m matrix).
FunctionTable compose_surjective_linear(const FunctionTable& f, const MatrixFp& L);

/// First k output coordinates (low digits).
FunctionTable coordinate_restriction(const FunctionTable& f, unsigned k);

/// The 4-coordinate vectorial bent function on F_2^8 used for the
/// linear-shift experiment.
FunctionTable seed_function_8_4();
extern const char* const kSeed84Anf;

/// Projection F_p^m -> F_p^k onto the first k coordinates.
MatrixFp projection(unsigned k, unsigned m);

/// An almost balanced (n, m) bent function of the requested type, m <= n/2:
/// Maiorana-McFarland for (+); a Gold (p = 2) or quadratic p-ary monomial
/// of type (-) composed with a projection otherwise.
FunctionTable almost_balanced_instance(unsigned p, unsigned n, unsigned m, bool plus);

enum class ConstructionKind {
  MaioranaMcFarland,
  PartialSpread,
  OPolynomial,
  Gold,
  Kasami,
  PAryMonomial,
  PlanarMonomial,
  DirectSum,
  LinearImage,
  CoordinateRestriction,
  Seed84,
};

std::string kind_name(ConstructionKind kind);
std::optional<ConstructionKind> kind_from_name(const std::string& name);

/// Declarative description of a construction. Unused fields are ignored by
/// kinds that do not need them. Defaults give canonical instances:
/// identity permutation, constant rho, projection L, identity Psi,
/// lambda = first admissible power of the primitive element.
struct ConstructionRecipe {
  ConstructionKind kind = ConstructionKind::MaioranaMcFarland;
  unsigned p = 2;
  unsigned n = 4;
  unsigned m = 2;
  std::uint64_t d = 0;            // exponent (p-ary/planar monomials, o-polynomial Frobenius power)
  unsigned i = 1;                 // Kasami parameter
  std::optional<std::uint64_t> lambda_log;  // lambda = g^lambda_log
  bool lambda_square = true;      // p-ary monomial: pick a square or non-square lambda
  Index rho_constant = 0;         // Maiorana-McFarland constant rho
  unsigned k = 1;                 // restriction / linear image target dimension
  std::vector<ConstructionRecipe> parts;  // DirectSum: two parts; LinearImage/Restriction: one
};

FunctionTable build(const ConstructionRecipe& recipe);

}  // namespace pnl
