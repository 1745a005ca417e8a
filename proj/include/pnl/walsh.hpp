#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pnl/cyclotomic.hpp"
#include "pnl/function_table.hpp"

namespace pnl {

/// W_f(a) = sum_x zeta^{f(x) - <a, x>} for a single-output f given as digits.
/// Radix-p butterfly over F_p^n in O(n p^{n+3}) integer operations; for
/// p = 2 a plain integer Walsh-Hadamard butterfly.
std::vector<CyclotomicInt> walsh_transform(const std::vector<unsigned>& f, unsigned p, unsigned n);

/// Same quantity by the O(p^{2n}) definition; used as an oracle.
std::vector<CyclotomicInt> walsh_naive(const std::vector<unsigned>& f, unsigned p, unsigned n);

/// W_{F_b}(a) for all a, b != 0.
std::vector<CyclotomicInt> walsh_component(const FunctionTable& f, Index b);

/// W_F(b, 0) for every b, including b = 0 (which is p^n).
std::vector<CyclotomicInt> spectrum_at_zero(const FunctionTable& f);

struct PlateauProfile {
  /// amplitude[b] = s_b, nullopt if component b is not plateaued;
  /// amplitude[0] is unused.
  std::vector<std::optional<unsigned>> amplitude;
  bool is_plateaued = true;
  bool is_bent = true;
  bool parseval_holds = true;
};

PlateauProfile plateau_profile(const FunctionTable& f);

/// epsilon in {+1, -1, +i, -i}.
enum class Epsilon { PlusOne, MinusOne, PlusI, MinusI };
std::string to_string(Epsilon e);

/// W = epsilon * zeta^t * p^{n/2}, recovered exactly (Gauss-sum
/// factorization for odd n). For p = 2 the sign is absorbed into t.
struct BentValue {
  Epsilon epsilon;
  unsigned t;
};
std::optional<BentValue> decompose_bent_value(const CyclotomicInt& w, unsigned n);

enum class Regularity { Regular, WeaklyRegular, NonWeaklyRegular };
std::string to_string(Regularity r);

struct RegularityClass {
  Regularity verdict = Regularity::Regular;
  std::optional<Epsilon> epsilon;
  std::optional<std::vector<unsigned>> dual;  // f*(a), when weakly regular
};

RegularityClass classify_regularity(const FunctionTable& f);

struct KaProfile {
  Epsilon epsilon = Epsilon::PlusOne;
  std::vector<unsigned> r;       // W_F(b,0) = eps p^{n/2} zeta^{r_b}; r[0] unused
  std::vector<unsigned> k;       // k_a for every a in F_p^m
  std::vector<Index> sign_set;   // p = 2: {b != 0 : W_F(b,0) = -2^{n/2}}
  unsigned k0() const { return k.front(); }
};

/// Requires a common epsilon across all W_F(b, 0), b != 0.
KaProfile ka_profile(const FunctionTable& f);

}  // namespace pnl
