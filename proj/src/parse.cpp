#include "jacsyz/parse.hpp"

#include <cctype>
#include <map>
#include <set>

namespace jacsyz {

namespace {

/// Sparse, not necessarily homogeneous, polynomial used while parsing.
using Sparse = std::map<Monomial, mpq_class>;

Sparse constant(const mpq_class& c) {
  Sparse s;
  if (sgn(c) != 0) s[{0, 0, 0}] = c;
  return s;
}

Sparse add(Sparse a, const Sparse& b, bool subtract) {
  for (const auto& [m, c] : b) {
    auto& slot = a[m];
    slot += subtract ? mpq_class(-c) : c;
    if (sgn(slot) == 0) a.erase(m);
  }
  return a;
}

Sparse multiply(const Sparse& a, const Sparse& b) {
  Sparse r;
  for (const auto& [m, c] : a)
    for (const auto& [n, d] : b) {
      auto& slot = r[m * n];
      slot += c * d;
    }
  std::erase_if(r, [](const auto& kv) { return sgn(kv.second) == 0; });
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Sparse parse() {
    Sparse e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Sparse expr() {
    Sparse acc = term();
    for (;;) {
      if (accept('+')) acc = add(std::move(acc), term(), false);
      else if (accept('-')) acc = add(std::move(acc), term(), true);
      else return acc;
    }
  }

  Sparse term() {
    Sparse acc = unary();
    while (accept('*')) acc = multiply(acc, unary());
    // Juxtaposition such as "2x" or "x(y+z)" is rejected.
    skip_space();
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') fail("expected an operator (implicit multiplication)");
    }
    return acc;
  }

  Sparse unary() {
    if (accept('-')) return multiply(constant(-1), unary());
    if (accept('+')) return unary();
    return power();
  }

  Sparse power() {
    Sparse base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (e <= 0) {
      pos_ = start;
      fail("exponent must be positive");
    }
    Sparse r = constant(1);
    for (int i = 0; i < e; ++i) r = multiply(r, base);
    return r;
  }

  mpz_class integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Sparse atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      Sparse s;
      s[{c == 'x', c == 'y', c == 'z'}] = 1;
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer_literal();
      mpz_class den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected a denominator");
        std::size_t at = pos_;
        den = integer_literal();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      mpq_class q(num, den);
      q.canonicalize();
      return constant(q);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogPoly<RationalField> parse_poly(std::string_view text) {
  Sparse s = Parser(text).parse();
  std::set<int> degrees;
  for (const auto& [m, c] : s) degrees.insert(m.degree());
  if (degrees.size() > 1) {
    std::string list;
    for (int d : degrees) list += (list.empty() ? "" : ", ") + std::to_string(d);
    throw NotHomogeneous("polynomial is not homogeneous: monomial degrees {" + list + "}");
  }
  int d = degrees.empty() ? 0 : *degrees.begin();
  HomogPoly<RationalField> p(RationalField{}, d);
  for (const auto& [m, c] : s) p.set_coeff(m, c);
  return p;
}

}  // namespace jacsyz
