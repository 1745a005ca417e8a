#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pnl/function_table.hpp"

namespace pnl {

/// coefficient * prod_i x_i^{exponents[i]} with every exponent below p.
struct Monomial {
  unsigned coefficient = 1;
  std::vector<unsigned> exponents;

  unsigned degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Multivariate normal form of F: F_p^n -> F_p^m, one polynomial per
/// output coordinate. Canonical: like monomials merged, zero terms dropped,
/// monomials ordered by exponent vector.
struct AnfPolynomial {
  unsigned p = 2;
  unsigned n = 0;
  std::vector<std::vector<Monomial>> coordinates;

  unsigned m() const { return static_cast<unsigned>(coordinates.size()); }
  unsigned degree() const;
  void canonicalize();
  friend bool operator==(const AnfPolynomial&, const AnfPolynomial&) = default;
};

/// Grammar (whitespace ignored):
///   anf    := poly (';' poly)*
///   poly   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := integer | 'x' integer ['^' integer]
/// Exponents of at least p are reduced with x^p = x.
AnfPolynomial parse_anf(std::string_view text, unsigned p, unsigned n);

std::string to_string(const AnfPolynomial& a);

FunctionTable table_from_anf(const AnfPolynomial& a);

/// Recovers the normal form from a table: Moebius transform for p = 2,
/// per-axis interpolation over F_p otherwise.
AnfPolynomial anf_of(const FunctionTable& f);

}  // namespace pnl
