#include "pnl/anf.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace pnl {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exponents) d += e;
  return d;
}

unsigned AnfPolynomial::degree() const {
  unsigned d = 0;
  for (const auto& poly : coordinates)
    for (const auto& mono : poly) d = std::max(d, mono.degree());
  return d;
}

void AnfPolynomial::canonicalize() {
  for (auto& poly : coordinates) {
    std::map<std::vector<unsigned>, unsigned> merged;
    for (const auto& mono : poly) {
      auto& c = merged[mono.exponents];
      c = (c + mono.coefficient) % p;
    }
    poly.clear();
    for (const auto& [exps, c] : merged)
      if (c != 0) poly.push_back({c, exps});
  }
}

namespace {

class AnfParser {
 public:
  AnfParser(std::string_view text, unsigned p, unsigned n) : text_(text), p_(p), n_(n) {}

  AnfPolynomial run() {
    AnfPolynomial out;
    out.p = p_;
    out.n = n_;
    out.coordinates.push_back(poly());
    while (peek() == ';') {
      ++pos_;
      out.coordinates.push_back(poly());
    }
    if (peek() != '\0') fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    out.canonicalize();
    return out;
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
      if (v > (std::uint64_t{1} << 40)) fail("integer literal too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  std::vector<Monomial> poly() {
    std::vector<Monomial> terms;
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    }
    for (;;) {
      Monomial t = term();
      if (negative) t.coefficient = (p_ - t.coefficient) % p_;
      terms.push_back(std::move(t));
      char c = peek();
      if (c != '+' && c != '-') break;
      negative = c == '-';
      ++pos_;
    }
    return terms;
  }

  Monomial term() {
    Monomial t;
    t.exponents.assign(n_, 0);
    factor(t);
    while (peek() == '*') {
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Monomial& t) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coefficient = static_cast<unsigned>(t.coefficient * (integer() % p_) % p_);
      return;
    }
    if (c != 'x') fail("expected a variable or coefficient");
    const std::size_t at = pos_;
    ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(pos_ < text_.size() ? text_[pos_] : '\0')))
      fail("expected a variable number after 'x'");
    const auto var = integer();
    if (var < 1 || var > n_)
      throw ParseError(Errc::VariableOutOfRange, at,
                       "variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n_));
    std::uint64_t e = 1;
    if (peek() == '^') {
      ++pos_;
      e = integer();
    }
    if (e == 0) return;
    // x^p = x on F_p, so exponents live in 1..p-1 once nonzero
    auto& slot = t.exponents[var - 1];
    const std::uint64_t total = slot + e;
    slot = static_cast<unsigned>((total - 1) % (p_ - 1) + 1);
  }

  std::string_view text_;
  unsigned p_, n_;
  std::size_t pos_ = 0;
};

}  // namespace

AnfPolynomial parse_anf(std::string_view text, unsigned p, unsigned n) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  return AnfParser(text, p, n).run();
}

std::string to_string(const AnfPolynomial& a) {
  std::string out;
  for (std::size_t c = 0; c < a.coordinates.size(); ++c) {
    if (c) out += "; ";
    const auto& poly = a.coordinates[c];
    if (poly.empty()) out += "0";
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (k) out += " + ";
      std::string factors;
      for (std::size_t i = 0; i < poly[k].exponents.size(); ++i) {
        const unsigned e = poly[k].exponents[i];
        if (!e) continue;
        if (!factors.empty()) factors += "*";
        factors += "x" + std::to_string(i + 1);
        if (e > 1) factors += "^" + std::to_string(e);
      }
      if (factors.empty())
        out += std::to_string(poly[k].coefficient);
      else
        out += (poly[k].coefficient == 1 ? "" : std::to_string(poly[k].coefficient) + "*") + factors;
    }
  }
  return out;
}

FunctionTable table_from_anf(const AnfPolynomial& a) {
  const unsigned p = a.p, n = a.n, m = a.m();
  const VectorSpace src(p, n);
  // powers[v][e] = v^e mod p
  std::vector<std::vector<unsigned>> powers(p, std::vector<unsigned>(p, 0));
  for (unsigned v = 0; v < p; ++v) {
    powers[v][0] = 1;
    for (unsigned e = 1; e < p; ++e) powers[v][e] = powers[v][e - 1] * v % p;
  }
  return FunctionTable::tabulate(p, n, m, [&](Index x) {
    const auto d = src.digits(x);
    Index out = 0;
    for (unsigned c = m; c-- > 0;) {
      unsigned acc = 0;
      for (const auto& mono : a.coordinates[c]) {
        unsigned t = mono.coefficient;
        for (unsigned i = 0; i < n && t; ++i)
          if (mono.exponents[i]) t = t * powers[d[i]][mono.exponents[i]] % p;
        acc = (acc + t) % p;
      }
      out = out * p + acc;
    }
    return out;
  });
}

namespace {

// Inverse of the Vandermonde matrix V[v][e] = v^e over F_p, so that
// coefficients = Vinv * values along one axis.
std::vector<std::vector<unsigned>> inverse_vandermonde(unsigned p) {
  std::vector<std::vector<std::int64_t>> a(p, std::vector<std::int64_t>(2 * p, 0));
  for (unsigned v = 0; v < p; ++v) {
    std::int64_t pw = 1;
    for (unsigned e = 0; e < p; ++e) {
      a[v][e] = pw;
      pw = pw * v % p;
    }
    a[v][p + v] = 1;
  }
  for (unsigned col = 0; col < p; ++col) {
    unsigned piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    const auto inv = static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(a[col][col]), p - 2, p));
    for (auto& v : a[col]) v = v * inv % p;
    for (unsigned r = 0; r < p; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const std::int64_t f = a[r][col];
      for (unsigned k = 0; k < 2 * p; ++k) a[r][k] = mod_p(a[r][k] - f * a[col][k], p);
    }
  }
  // solved system is V * X = I with rows indexed by points; X = V^{-1}
  std::vector<std::vector<unsigned>> out(p, std::vector<unsigned>(p));
  for (unsigned e = 0; e < p; ++e)
    for (unsigned v = 0; v < p; ++v) out[e][v] = static_cast<unsigned>(a[e][p + v]);
  return out;
}

}  // namespace

AnfPolynomial anf_of(const FunctionTable& f) {
  const unsigned p = f.p(), n = f.n(), m = f.m();
  const VectorSpace src(p, n), dst(p, m);
  AnfPolynomial out;
  out.p = p;
  out.n = n;
  out.coordinates.resize(m);
  const auto size = f.domain_size();
  const auto vinv = inverse_vandermonde(p);
  for (unsigned c = 0; c < m; ++c) {
    std::vector<unsigned> coef(size);
    for (std::uint64_t x = 0; x < size; ++x) coef[x] = dst.digits(f(static_cast<Index>(x)))[c];
    std::uint64_t stride = 1;
    std::vector<unsigned> buf(p);
    for (unsigned axis = 0; axis < n; ++axis, stride *= p) {
      for (std::uint64_t base = 0; base < size; ++base) {
        if ((base / stride) % p != 0) continue;
        if (p == 2) {
          coef[base + stride] ^= coef[base];
          continue;
        }
        for (unsigned e = 0; e < p; ++e) {
          std::uint64_t acc = 0;
          for (unsigned v = 0; v < p; ++v) acc += std::uint64_t{vinv[e][v]} * coef[base + v * stride];
          buf[e] = static_cast<unsigned>(acc % p);
        }
        for (unsigned e = 0; e < p; ++e) coef[base + e * stride] = buf[e];
      }
    }
    for (std::uint64_t idx = 0; idx < size; ++idx)
      if (coef[idx]) {
        Monomial mono;
        mono.coefficient = coef[idx];
        mono.exponents = src.digits(static_cast<Index>(idx));
        out.coordinates[c].push_back(std::move(mono));
      }
  }
  out.canonicalize();
  return out;
}

}  // namespace pnl
