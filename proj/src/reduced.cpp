#include "jacsyz/reduced.hpp"

#include <random>

namespace jacsyz {

namespace {

/// Dense univariate polynomial, coefficient of t^i at index i, trimmed.
using Uni = std::vector<mpq_class>;

void trim(Uni& u) {
  while (!u.empty() && sgn(u.back()) == 0) u.pop_back();
}

Uni derivative(const Uni& u) {
  Uni d;
  for (std::size_t i = 1; i < u.size(); ++i) d.push_back(u[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

Uni remainder(Uni a, const Uni& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(Uni a, Uni b) {
  while (!b.empty()) {
    Uni r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace

bool is_reduced_probabilistic(const HomogPoly<RationalField>& f, int trials, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  const int d = f.degree();
  if (d <= 1) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-97, 97);
  auto basis = monomial_basis(d);
  int informative = 0;
  for (int attempt = 0; attempt < 8 * trials && informative < trials; ++attempt) {
    const long a = coef(rng), b = coef(rng);
    // g(x, y) = f(x, y, a x + b y), stored as coefficients of x^i y^{d-i}.
    std::vector<mpq_class> g(d + 1, 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const mpq_class& c = f.coeffs()[i];
      if (sgn(c) == 0) continue;
      const Monomial& m = basis[i];
      // (a x + b y)^m.c expanded binomially.
      mpz_class binom = 1;
      for (int j = 0; j <= m.c; ++j) {
        mpz_class pa, pb;
        mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(std::labs(a)), static_cast<unsigned long>(j));
        mpz_ui_pow_ui(pb.get_mpz_t(), static_cast<unsigned long>(std::labs(b)), static_cast<unsigned long>(m.c - j));
        if (a < 0 && j % 2) pa = -pa;
        if (b < 0 && (m.c - j) % 2) pb = -pb;
        g[m.a + j] += c * mpq_class(binom * pa * pb);
        binom = binom * (m.c - j) / (j + 1);
      }
    }
    Uni u(g.begin(), g.end());  // dehomogenize at y = 1, t = x
    trim(u);
    if (u.empty()) continue;  // the line lies on the curve
    ++informative;
    // y^2 | g means a repeated point at infinity of the chart.
    if (static_cast<int>(u.size()) - 1 < d - 1) continue;
    if (gcd_degree(u, derivative(u)) == 0) return true;
  }
  return false;
}

}  // namespace jacsyz
