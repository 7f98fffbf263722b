#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "jacsyz/errors.hpp"
#include "jacsyz/exactlin.hpp"
#include "jacsyz/field.hpp"
#include "jacsyz/monomial.hpp"

namespace jacsyz {

/// Homogeneous polynomial in x, y, z: a dense coefficient vector over the
/// canonical degree-k monomial basis.
template <Field F>
class HomogPoly {
 public:
  using Elem = typename F::Elem;

  HomogPoly(F field, int degree) : field_(std::move(field)), degree_(degree) {
    if (degree < 0) throw DomainError("negative degree");
    coeffs_.assign(dim_forms(degree), field_.zero());
  }

  HomogPoly(F field, int degree, std::vector<Elem> coeffs)
      : field_(std::move(field)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw DomainError("negative degree");
    if (coeffs_.size() != dim_forms(degree)) throw DimensionMismatch("coefficient count differs from dim S_k");
  }

  static HomogPoly monomial(F field, const Monomial& m, Elem c) {
    HomogPoly p(std::move(field), m.degree());
    p.coeffs_[monomial_index(m)] = std::move(c);
    return p;
  }

  static HomogPoly variable(F field, Variable v) {
    Elem one = field.one();
    return monomial(std::move(field), {v == Variable::X, v == Variable::Y, v == Variable::Z}, one);
  }

  const F& field() const { return field_; }
  int degree() const { return degree_; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  const Elem& coeff(const Monomial& m) const { return coeffs_.at(monomial_index(m)); }
  void set_coeff(const Monomial& m, Elem c) { coeffs_.at(monomial_index(m)) = std::move(c); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!field_.is_zero(c)) return false;
    return true;
  }

  Elem evaluate(const std::array<Elem, 3>& pt) const {
    Elem acc = field_.zero();
    auto basis = monomial_basis(degree_);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (field_.is_zero(coeffs_[i])) continue;
      Elem t = coeffs_[i];
      for (int e = 0; e < basis[i].a; ++e) t = field_.mul(t, pt[0]);
      for (int e = 0; e < basis[i].b; ++e) t = field_.mul(t, pt[1]);
      for (int e = 0; e < basis[i].c; ++e) t = field_.mul(t, pt[2]);
      acc = field_.add(acc, t);
    }
    return acc;
  }

  HomogPoly scaled(const Elem& s) const {
    HomogPoly r = *this;
    for (auto& c : r.coeffs_) c = field_.mul(c, s);
    return r;
  }

  friend HomogPoly operator+(const HomogPoly& p, const HomogPoly& q) { return p.combine(q, false); }
  friend HomogPoly operator-(const HomogPoly& p, const HomogPoly& q) { return p.combine(q, true); }
  friend HomogPoly operator-(const HomogPoly& p) { return p.scaled(p.field_.neg(p.field_.one())); }

  friend bool operator==(const HomogPoly& p, const HomogPoly& q) {
    if (!(p.field_ == q.field_) || p.degree_ != q.degree_) return false;
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      if (!p.field_.equal(p.coeffs_[i], q.coeffs_[i])) return false;
    return true;
  }

 private:
  HomogPoly combine(const HomogPoly& q, bool subtract) const {
    if (!(field_ == q.field_)) throw FieldMismatch("polynomials over different fields");
    if (degree_ != q.degree_) throw DimensionMismatch("adding polynomials of different degrees");
    HomogPoly r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      r.coeffs_[i] = subtract ? field_.sub(coeffs_[i], q.coeffs_[i]) : field_.add(coeffs_[i], q.coeffs_[i]);
    return r;
  }

  F field_;
  int degree_;
  std::vector<Elem> coeffs_;
};

template <Field F>
HomogPoly<F> mul(const HomogPoly<F>& p, const HomogPoly<F>& q) {
  if (!(p.field() == q.field())) throw FieldMismatch("polynomials over different fields");
  const F& k = p.field();
  HomogPoly<F> r(k, p.degree() + q.degree());
  std::vector<typename F::Elem> out(dim_forms(r.degree()), k.zero());
  auto pb = monomial_basis(p.degree());
  auto qb = monomial_basis(q.degree());
  for (std::size_t i = 0; i < pb.size(); ++i) {
    const auto& a = p.coeffs()[i];
    if (k.is_zero(a)) continue;
    for (std::size_t j = 0; j < qb.size(); ++j) {
      const auto& b = q.coeffs()[j];
      if (k.is_zero(b)) continue;
      auto& slot = out[monomial_index(pb[i] * qb[j])];
      slot = k.add(slot, k.mul(a, b));
    }
  }
  return HomogPoly<F>(k, r.degree(), std::move(out));
}

template <Field F>
HomogPoly<F> operator*(const HomogPoly<F>& p, const HomogPoly<F>& q) {
  return mul(p, q);
}

template <Field F>
HomogPoly<F> power(const HomogPoly<F>& p, int e) {
  HomogPoly<F> r = HomogPoly<F>::monomial(p.field(), {0, 0, 0}, p.field().one());
  for (int i = 0; i < e; ++i) r = mul(r, p);
  return r;
}

/// Formal partial derivative. Throws DomainError on constants.
template <Field F>
HomogPoly<F> partial(const HomogPoly<F>& p, Variable v) {
  if (p.degree() == 0) throw DomainError("partial derivative of a degree-0 polynomial");
  const F& k = p.field();
  HomogPoly<F> r(k, p.degree() - 1);
  auto basis = monomial_basis(p.degree());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& c = p.coeffs()[i];
    int e = basis[i].exponent(v);
    if (e == 0 || k.is_zero(c)) continue;
    Monomial m = basis[i];
    (v == Variable::X ? m.a : v == Variable::Y ? m.b : m.c) -= 1;
    r.set_coeff(m, k.mul(c, k.from_int(e)));
  }
  return r;
}

/// Matrix of h -> q*h from S_k to S_{k + deg q}.
template <Field F>
DenseMatrix<F> multiplication_matrix(const HomogPoly<F>& q, int k) {
  const F& fld = q.field();
  DenseMatrix<F> m(fld, dim_forms(k + q.degree()), dim_forms(k));
  auto hb = monomial_basis(k);
  auto qb = monomial_basis(q.degree());
  for (std::size_t j = 0; j < hb.size(); ++j)
    for (std::size_t i = 0; i < qb.size(); ++i)
      if (!fld.is_zero(q.coeffs()[i])) m(monomial_index(hb[j] * qb[i]), j) = q.coeffs()[i];
  return m;
}

/// r with p = q*r, found by solving the linear system of multiplication by q.
/// Throws NotDivisible if no such r exists.
template <Field F>
HomogPoly<F> exact_divide(const HomogPoly<F>& p, const HomogPoly<F>& q) {
  if (!(p.field() == q.field())) throw FieldMismatch("polynomials over different fields");
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.degree() < q.degree()) throw NotDivisible("dividend degree below divisor degree");
  auto x = solve(multiplication_matrix(q, p.degree() - q.degree()), p.coeffs());
  if (!x) throw NotDivisible("polynomial is not divisible");
  return HomogPoly<F>(p.field(), p.degree() - q.degree(), std::move(*x));
}

/// Coefficientwise image of a rational polynomial in another field; throws
/// BadPrime if a denominator is not invertible there.
template <Field G>
HomogPoly<G> map_to(const G& field, const HomogPoly<RationalField>& p) {
  std::vector<typename G::Elem> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(field.from_rational(q));
  return HomogPoly<G>(field, p.degree(), std::move(c));
}

/// Canonical text: terms in basis order, coefficients as reduced fractions
/// (as residues in [0,p) over a prime field), explicit '*' and '^'.
std::string format(const HomogPoly<RationalField>& p);
std::string format(const HomogPoly<PrimeField>& p);

}  // namespace jacsyz
