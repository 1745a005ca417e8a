#include "pnl/trace_poly.hpp"

#include <cctype>

namespace pnl {

TracePolynomial::TracePolynomial(FieldPtr f, unsigned target_degree, std::vector<Term> t)
    : field(std::move(f)), m(target_degree), terms(std::move(t)) {
  if (m == 0 || field->degree() % m != 0)
    throw Error(Errc::DegreeNotDividing,
                std::to_string(m) + " does not divide " + std::to_string(field->degree()));
  for (const auto& term : terms)
    if (term.coefficient >= field->size()) throw Error(Errc::IndexOutOfRange, "coefficient outside the field");
}

Index TracePolynomial::evaluate_inner(Index x) const {
  Index acc = 0;
  for (const auto& term : terms) acc = field->add(acc, field->mul(term.coefficient, field->pow(x, term.exponent)));
  return acc;
}

namespace {

class TraceParser {
 public:
  TraceParser(std::string_view text, const Field& f) : text_(text), f_(f) {}

  std::vector<TracePolynomial::Term> run() {
    std::vector<TracePolynomial::Term> terms;
    terms.push_back(term());
    while (peek() == '+') {
      ++pos_;
      terms.push_back(term());
    }
    if (peek() != '\0') fail("unexpected character");
    return terms;
  }

 private:
  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(Errc::SyntaxError, pos_, what); }

  std::uint64_t integer() {
    peek();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 50)) fail("integer literal too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  std::uint64_t exponent_suffix() {
    if (peek() != '^') return 1;
    ++pos_;
    return integer();
  }

  TracePolynomial::Term term() {
    Index coef = 1;
    std::uint64_t exp = 0;
    for (;;) {
      char c = peek();
      if (c == 'x') {
        ++pos_;
        exp += exponent_suffix();
      } else if (c == 'g') {
        ++pos_;
        coef = f_.mul(coef, f_.pow(f_.primitive(), exponent_suffix()));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        const auto v = static_cast<Index>(integer() % f_.p());
        coef = f_.mul(coef, v);
      } else {
        fail("expected 'x', 'g' or an integer");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    return {coef, exp};
  }

  std::string_view text_;
  const Field& f_;
  std::size_t pos_ = 0;
};

}  // namespace

TracePolynomial parse_trace_poly(std::string_view text, FieldPtr field, unsigned m) {
  auto terms = TraceParser(text, *field).run();
  return {std::move(field), m, std::move(terms)};
}

FunctionTable table_from_trace_poly(const TracePolynomial& t) {
  const Field& f = *t.field;
  SubfieldCoordinates coords(t.field, t.m);
  return FunctionTable::tabulate(f.p(), f.degree(), t.m,
                                 [&](Index x) { return coords.encode(f.trace(t.evaluate_inner(x), t.m)); });
}

FunctionTable power_map(const FieldPtr& field, std::uint64_t d) {
  const Field& f = *field;
  return FunctionTable::tabulate(f.p(), f.degree(), f.degree(), [&](Index x) { return f.pow(x, d); });
}

}  // namespace pnl
