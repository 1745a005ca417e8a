#pragma once

#include <string_view>
#include <vector>

#include "pnl/field.hpp"
#include "pnl/function_table.hpp"

namespace pnl {

/// x -> Tr^n_m(sum_i a_i x^{e_i}) on F_{p^n}, output read in the
/// coordinates of the degree-m subfield.
struct TracePolynomial {
  struct Term {
    Index coefficient;
    std::uint64_t exponent;
  };

  FieldPtr field;
  unsigned m;
  std::vector<Term> terms;

  TracePolynomial(FieldPtr f, unsigned target_degree, std::vector<Term> t);

  /// The inner polynomial sum_i a_i x^{e_i}, before tracing.
  Index evaluate_inner(Index x) const;
};

/// Terms separated by '+'; each term is [coef '*'] ('x' ['^' e] | 1) where
/// coef is an integer (a prime-field scalar) or 'g^k' (the k-th power of
/// the primitive element). Example: "g^3*x^5 + 2*x^2".
TracePolynomial parse_trace_poly(std::string_view text, FieldPtr field, unsigned m);

FunctionTable table_from_trace_poly(const TracePolynomial& t);

/// x -> x^d as an (n, n) table.
FunctionTable power_map(const FieldPtr& field, std::uint64_t d);

}  // namespace pnl
