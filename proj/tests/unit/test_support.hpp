#pragma once

// Random generators and small independent oracles shared by the unit tests.
// The oracles avoid the library's own matrices and kernels on purpose.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "jacsyz/field.hpp"
#include "jacsyz/matrix.hpp"
#include "jacsyz/poly.hpp"

namespace jacsyz::testing {

inline DenseMatrix<RationalField> random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                    long bound, double zero_prob = 0.3) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::bernoulli_distribution zero(zero_prob);
  DenseMatrix<RationalField> m(RationalField{}, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? 0 : coef(rng);
  return m;
}

/// Matrix of prescribed rank at most r: a product of random rows x r and r x cols.
inline DenseMatrix<RationalField> random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                  std::size_t r, long bound) {
  auto a = random_int_matrix(rng, rows, r, bound, 0.0);
  auto b = random_int_matrix(rng, r, cols, bound, 0.0);
  DenseMatrix<RationalField> m(RationalField{}, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t t = 0; t < r; ++t) m(i, j) += a(i, t) * b(t, j);
  return m;
}

template <Field F>
HomogPoly<F> random_poly(std::mt19937_64& rng, const F& field, int degree, long bound) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  HomogPoly<F> p(field, degree);
  for (const auto& m : monomial_basis(degree)) p.set_coeff(m, field.from_int(coef(rng)));
  return p;
}

/// Rank by plain fraction Gaussian elimination on a copy.
inline std::size_t naive_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Sparse polynomial keyed by exponent triple, used as an oracle.
using Sparse = std::map<std::array<int, 3>, mpq_class>;

inline Sparse sparse_of(const HomogPoly<RationalField>& p) {
  Sparse s;
  auto basis = monomial_basis(p.degree());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (p.coeffs()[i] != 0) s[{basis[i].a, basis[i].b, basis[i].c}] = p.coeffs()[i];
  return s;
}

inline Sparse sparse_mul(const Sparse& p, const Sparse& q) {
  Sparse r;
  for (const auto& [e, c] : p)
    for (const auto& [g, d] : q) r[{e[0] + g[0], e[1] + g[1], e[2] + g[2]}] += c * d;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

inline Sparse sparse_diff(const Sparse& p, int var) {
  Sparse r;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    auto g = e;
    g[var] -= 1;
    r[g] += c * e[var];
  }
  return r;
}

/// dim of the degree-k Jacobian syzygies, by writing the image of every
/// (monomial, slot) pair and eliminating with fractions.
inline std::size_t brute_force_ar_dim(const HomogPoly<RationalField>& f, int k) {
  auto s = sparse_of(f);
  std::array<Sparse, 3> grad{sparse_diff(s, 0), sparse_diff(s, 1), sparse_diff(s, 2)};
  std::vector<std::array<int, 3>> targets;
  for (int a = k + f.degree() - 1; a >= 0; --a)
    for (int b = k + f.degree() - 1 - a; b >= 0; --b) targets.push_back({a, b, k + f.degree() - 1 - a - b});
  std::vector<std::vector<mpq_class>> rows;  // one row per column of the map, rank is the same
  for (int slot = 0; slot < 3; ++slot)
    for (int a = k; a >= 0; --a)
      for (int b = k - a; b >= 0; --b) {
        Sparse mono{{{a, b, k - a - b}, mpq_class(1)}};
        auto img = sparse_mul(mono, grad[slot]);
        std::vector<mpq_class> row(targets.size(), 0);
        for (std::size_t t = 0; t < targets.size(); ++t)
          if (auto it = img.find(targets[t]); it != img.end()) row[t] = it->second;
        rows.push_back(std::move(row));
      }
  return rows.size() - naive_rank(rows);
}

/// Evaluates a sparse polynomial at an integer point modulo p.
inline std::uint64_t eval_mod(const Sparse& s, const std::array<std::uint64_t, 3>& pt, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : s) {
    std::uint64_t t = modarith::reduce(c, p);
    for (int v = 0; v < 3; ++v)
      for (int i = 0; i < e[v]; ++i) t = modarith::mul(t, pt[v], p);
    acc = modarith::add(acc, t, p);
  }
  return acc;
}

/// Points of P^2(F_p) where f and all partials vanish, each normalized so its
/// last nonzero coordinate is 1.
inline std::vector<std::array<std::uint64_t, 3>> singular_points_mod(const HomogPoly<RationalField>& f,
                                                                    std::uint64_t p) {
  auto s = sparse_of(f);
  std::array<Sparse, 4> eqs{s, sparse_diff(s, 0), sparse_diff(s, 1), sparse_diff(s, 2)};
  std::vector<std::array<std::uint64_t, 3>> pts;
  auto test = [&](std::array<std::uint64_t, 3> pt) {
    for (const auto& e : eqs)
      if (eval_mod(e, pt, p) != 0) return;
    pts.push_back(pt);
  };
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) test({x, y, 1});
  for (std::uint64_t x = 0; x < p; ++x) test({x, 1, 0});
  test({1, 0, 0});
  return pts;
}

}  // namespace jacsyz::testing
