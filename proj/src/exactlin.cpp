#include "jacsyz/exactlin.hpp"

#include "jacsyz/kernels.hpp"
#include "jacsyz/modular.hpp"
#include "jacsyz/reference.hpp"

namespace jacsyz {

namespace {

struct PrimeEchelon {
  std::vector<std::uint64_t> buf;
  std::vector<std::size_t> pivots;
};

PrimeEchelon eliminate(const DenseMatrix<PrimeField>& m, kernels::Reduction mode) {
  PrimeEchelon e{std::vector<std::uint64_t>(m.entries().begin(), m.entries().end()), {}};
  e.pivots = kernels::echelon_parallel(e.buf, m.rows(), m.cols(), m.field().modulus(), mode);
  return e;
}

template <Field F>
DenseMatrix<F> with_column(const DenseMatrix<F>& m, std::span<const typename F::Elem> v) {
  if (v.size() != m.rows()) throw DimensionMismatch("vector length differs from row count");
  DenseMatrix<F> a(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    a(i, m.cols()) = v[i];
  }
  return a;
}

}  // namespace

template <>
std::size_t rank(const DenseMatrix<PrimeField>& m) {
  return eliminate(m, kernels::Reduction::Forward).pivots.size();
}

template <>
std::size_t rank(const DenseMatrix<RationalField>& m) {
  return modular::certified_echelon(modular::to_integer_rows(m)).pivots.size();
}

template <>
std::vector<std::size_t> pivot_columns(const DenseMatrix<PrimeField>& m) {
  return eliminate(m, kernels::Reduction::Forward).pivots;
}

template <>
std::vector<std::size_t> pivot_columns(const DenseMatrix<RationalField>& m) {
  return modular::certified_echelon(modular::to_integer_rows(m)).pivots;
}

template <>
std::vector<Vector<PrimeField>> nullspace_basis(const DenseMatrix<PrimeField>& m) {
  auto e = eliminate(m, kernels::Reduction::Full);
  auto basis = kernels::kernel_from_rref(e.buf, m.cols(), e.pivots, m.field().modulus());
  for (auto& v : basis) normalize_leading_one(m.field(), v);
  return basis;
}

template <>
std::vector<Vector<RationalField>> nullspace_basis(const DenseMatrix<RationalField>& m) {
  auto e = modular::certified_echelon(modular::to_integer_rows(m));
  for (auto& v : e.kernel) normalize_leading_one(m.field(), v);
  return std::move(e.kernel);
}

template <>
bool in_span(std::span<const PrimeField::Elem> v, const DenseMatrix<PrimeField>& m) {
  auto piv = pivot_columns(with_column(m, v));
  return piv.empty() || piv.back() != m.cols();
}

template <>
bool in_span(std::span<const RationalField::Elem> v, const DenseMatrix<RationalField>& m) {
  auto piv = pivot_columns(with_column(m, v));
  return piv.empty() || piv.back() != m.cols();
}

template <>
std::optional<Vector<PrimeField>> solve(const DenseMatrix<PrimeField>& m, std::span<const PrimeField::Elem> b) {
  auto a = with_column(m, b);
  auto e = eliminate(a, kernels::Reduction::Full);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector<PrimeField> x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.buf[i * a.cols() + m.cols()];
  return x;
}

template <>
std::optional<Vector<RationalField>> solve(const DenseMatrix<RationalField>& m,
                                           std::span<const RationalField::Elem> b) {
  auto a = modular::to_integer_rows(with_column(m, b));
  // Column m.cols() is free iff b is in the span; lift only that kernel vector.
  std::size_t last = m.cols();
  modular::RationalEchelon e;
  try {
    e = modular::certified_echelon(a, std::span<const std::size_t>(&last, 1));
  } catch (const BadPrime&) {
    // A modular image says b is independent; certify on the full structure.
    e = modular::certified_echelon(a);
  }
  for (std::size_t t = 0; t < e.free_cols.size(); ++t) {
    if (e.free_cols[t] != last) continue;
    Vector<RationalField> x(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) x[j] = -e.kernel[t][j];
    return x;
  }
  return std::nullopt;
}

}  // namespace jacsyz
