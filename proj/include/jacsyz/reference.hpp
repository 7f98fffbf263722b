#pragma once

// Textbook Gauss-Jordan elimination over an arbitrary field. Slow on large
// rational matrices (no growth control); kept as the independent reference
// the production routines in exactlin are tested against.

#include <cstddef>
#include <vector>

#include "jacsyz/matrix.hpp"

namespace jacsyz {

/// Scales v so that its first nonzero coordinate is 1 (no-op on the zero vector).
template <Field F>
void normalize_leading_one(const F& field, std::vector<typename F::Elem>& v) {
  for (const auto& e : v) {
    if (field.is_zero(e)) continue;
    auto s = field.inv(e);
    for (auto& x : v) x = field.mul(x, s);
    return;
  }
}

namespace reference {

template <Field F>
struct Rref {
  DenseMatrix<F> reduced;
  std::vector<std::size_t> pivots;
};

template <Field F>
Rref<F> rref(DenseMatrix<F> m) {
  const F& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && k.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    auto inv = k.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = k.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || k.is_zero(m(i, c))) continue;
      auto f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F>
std::size_t rank(const DenseMatrix<F>& m) {
  return rref(m).pivots.size();
}

template <Field F>
std::vector<std::vector<typename F::Elem>> nullspace_basis(const DenseMatrix<F>& m) {
  const F& k = m.field();
  auto [red, pivots] = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<typename F::Elem> v(m.cols(), k.zero());
    v[j] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(red(i, j));
    normalize_leading_one(k, v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace reference
}  // namespace jacsyz
