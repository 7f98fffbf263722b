#pragma once

#include <array>
#include <optional>
#include <vector>

#include "jacsyz/exactlin.hpp"
#include "jacsyz/poly.hpp"

namespace jacsyz {

/// f together with its three partial derivatives.
template <Field F>
struct JacobianData {
  HomogPoly<F> f;
  HomogPoly<F> fx;
  HomogPoly<F> fy;
  HomogPoly<F> fz;

  explicit JacobianData(HomogPoly<F> poly)
      : f(std::move(poly)), fx(derive(f, Variable::X)), fy(derive(f, Variable::Y)), fz(derive(f, Variable::Z)) {
    if (fx.is_zero() && fy.is_zero() && fz.is_zero()) throw DomainError("all partial derivatives vanish");
  }

  int degree() const { return f.degree(); }
  const F& field() const { return f.field(); }
  const HomogPoly<F>& gradient(int i) const { return i == 0 ? fx : i == 1 ? fy : fz; }

 private:
  static HomogPoly<F> derive(const HomogPoly<F>& p, Variable v) {
    if (p.degree() < 1) throw DomainError("curve degree must be at least 1");
    return partial(p, v);
  }
};

/// (a, b, c) of equal degree; a Jacobian syzygy when a fx + b fy + c fz = 0.
template <Field F>
struct SyzygyTriple {
  HomogPoly<F> a;
  HomogPoly<F> b;
  HomogPoly<F> c;

  int degree() const { return a.degree(); }
  const HomogPoly<F>& component(int i) const { return i == 0 ? a : i == 1 ? b : c; }

  /// Coordinates a | b | c over the degree-k basis.
  Vector<F> coords() const {
    Vector<F> v(a.coeffs().begin(), a.coeffs().end());
    v.insert(v.end(), b.coeffs().begin(), b.coeffs().end());
    v.insert(v.end(), c.coeffs().begin(), c.coeffs().end());
    return v;
  }

  static SyzygyTriple from_coords(const F& field, int k, std::span<const typename F::Elem> v) {
    const std::size_t n = dim_forms(k);
    if (v.size() != 3 * n) throw DimensionMismatch("triple coordinates have the wrong length");
    auto part = [&](std::size_t i) {
      return HomogPoly<F>(field, k, Vector<F>(v.begin() + i * n, v.begin() + (i + 1) * n));
    };
    return {part(0), part(1), part(2)};
  }
};

/// Exact re-evaluation of a fx + b fy + c fz.
template <Field F>
bool is_syzygy(const JacobianData<F>& jd, const SyzygyTriple<F>& s) {
  return (mul(s.a, jd.fx) + mul(s.b, jd.fy) + mul(s.c, jd.fz)).is_zero();
}

/// (fy, -fx, 0), (fz, 0, -fx), (0, fz, -fy).
template <Field F>
std::array<SyzygyTriple<F>, 3> koszul_triples(const JacobianData<F>& jd) {
  HomogPoly<F> zero(jd.field(), jd.degree() - 1);
  return {SyzygyTriple<F>{jd.fy, -jd.fx, zero}, SyzygyTriple<F>{jd.fz, zero, -jd.fx},
          SyzygyTriple<F>{zero, jd.fz, -jd.fy}};
}

/// Columns of a triple of degree k multiplied by every degree-t monomial,
/// written into rows of a 3 * dim S_{k+t} coordinate space.
template <Field F>
void append_monomial_multiples(const SyzygyTriple<F>& s, int t, std::vector<Vector<F>>& cols) {
  const F& field = s.a.field();
  const int k = s.degree();
  const std::size_t n = dim_forms(k + t);
  auto src = monomial_basis(k);
  for (const auto& h : monomial_basis(t)) {
    Vector<F> col(3 * n, field.zero());
    for (int part = 0; part < 3; ++part) {
      const auto& p = s.component(part);
      for (std::size_t i = 0; i < src.size(); ++i)
        if (!field.is_zero(p.coeffs()[i])) col[part * n + monomial_index(src[i] * h)] = p.coeffs()[i];
    }
    cols.push_back(std::move(col));
  }
}

/// Matrix of (a, b, c) -> a fx + b fy + c fz from S_k^3 to S_{k+d-1}. Rows are
/// degree-(k+d-1) monomials, columns the degree-k bases of a, then b, then c.
template <Field F>
DenseMatrix<F> jacobian_matrix(const JacobianData<F>& jd, int k) {
  const int d = jd.degree();
  const std::size_t n = dim_forms(k);
  DenseMatrix<F> m(jd.field(), dim_forms(k + d - 1), 3 * n);
  auto src = monomial_basis(k);
  auto gb = monomial_basis(d - 1);
  for (int part = 0; part < 3; ++part) {
    const auto& g = jd.gradient(part);
    for (std::size_t j = 0; j < src.size(); ++j)
      for (std::size_t i = 0; i < gb.size(); ++i)
        if (!jd.field().is_zero(g.coeffs()[i])) m(monomial_index(src[j] * gb[i]), part * n + j) = g.coeffs()[i];
  }
  return m;
}

template <Field F>
std::size_t ar_dim(const JacobianData<F>& jd, int k) {
  auto m = jacobian_matrix(jd, k);
  return m.cols() - rank(m);
}

/// Canonical basis of AR(f)_k: the nullspace basis of jacobian_matrix.
template <Field F>
std::vector<SyzygyTriple<F>> ar_basis(const JacobianData<F>& jd, int k) {
  std::vector<SyzygyTriple<F>> out;
  for (const auto& v : nullspace_basis(jacobian_matrix(jd, k)))
    out.push_back(SyzygyTriple<F>::from_coords(jd.field(), k, v));
  return out;
}

/// Least k with AR(f)_k != 0; at most d - 1 because of the Koszul triples.
template <Field F>
int mdr(const JacobianData<F>& jd) {
  for (int k = 0; k < jd.degree() - 1; ++k)
    if (ar_dim(jd, k) > 0) return k;
  return jd.degree() - 1;
}

/// Matrix whose columns are h * kappa_i for degree-(k-d+1) monomials h.
template <Field F>
DenseMatrix<F> koszul_matrix(const JacobianData<F>& jd, int k) {
  const int t = k - jd.degree() + 1;
  std::vector<Vector<F>> cols;
  if (t >= 0)
    for (const auto& kappa : koszul_triples(jd)) append_monomial_multiples(kappa, t, cols);
  return DenseMatrix<F>::from_columns(jd.field(), 3 * dim_forms(k), cols);
}

template <Field F>
std::size_t koszul_dim(const JacobianData<F>& jd, int k) {
  if (k < jd.degree() - 1) return 0;
  return rank(koszul_matrix(jd, k));
}

/// Least k <= kmax with AR(f)_k strictly larger than KR(f)_k, if any.
template <Field F>
std::optional<int> mdr_prime(const JacobianData<F>& jd, int kmax) {
  for (int k = 0; k <= kmax; ++k)
    if (ar_dim(jd, k) > koszul_dim(jd, k)) return k;
  return std::nullopt;
}

/// Coefficient of t^k in ((1 - t^{d-1}) / (1 - t))^3.
constexpr long smooth_milnor_dim(int d, int k) {
  auto s = [](int j) { return static_cast<long>(dim_forms(j)); };
  return s(k) - 3 * s(k - d + 1) + 3 * s(k - 2 * d + 2) - s(k - 3 * d + 3);
}

/// dim M(f)_k = dim S_k - rank(S_{k-d+1}^3 -> S_k).
template <Field F>
std::size_t milnor_dim(const JacobianData<F>& jd, int k) {
  const int t = k - jd.degree() + 1;
  if (t < 0) return dim_forms(k);
  return dim_forms(k) - rank(jacobian_matrix(jd, t));
}

}  // namespace jacsyz
