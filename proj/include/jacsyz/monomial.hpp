#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace jacsyz {

enum class Variable { X, Y, Z };

/// x^a y^b z^c.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;

  int degree() const { return a + b + c; }
  int exponent(Variable v) const { return v == Variable::X ? a : v == Variable::Y ? b : c; }

  friend Monomial operator*(const Monomial& m, const Monomial& n) { return {m.a + n.a, m.b + n.b, m.c + n.c}; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// dim S_k = C(k+2, 2); zero for negative k.
constexpr std::size_t dim_forms(int k) {
  return k < 0 ? 0 : static_cast<std::size_t>(k + 2) * static_cast<std::size_t>(k + 1) / 2;
}

/// C(n, 2) with the convention that it vanishes for n < 2.
constexpr long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Degree-k monomials, lexicographically descending on (a, b, c):
/// x^k, x^{k-1}y, x^{k-1}z, x^{k-2}y^2, ... This order fixes the coordinates of
/// every polynomial and matrix in the library.
std::vector<Monomial> monomial_basis(int k);

/// Position of m in monomial_basis(m.degree()).
inline std::size_t monomial_index(const Monomial& m) {
  auto s = static_cast<std::size_t>(m.b + m.c);
  return s * (s + 1) / 2 + static_cast<std::size_t>(m.c);
}

std::string to_string(const Monomial& m);

}  // namespace jacsyz
