#pragma once

// Exact rank, nullspace and span membership. Over Z/p the work is done by
// the elimination kernels directly. Over Q the matrix is reduced modulo a
// sequence of word-size primes, the reduced row echelon form is lifted by
// Chinese remaindering and rational reconstruction, and every lifted kernel
// vector is verified against the integer matrix before it is returned, so
// the results are exact (never probabilistic).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jacsyz/matrix.hpp"

namespace jacsyz {

template <Field F>
using Vector = std::vector<typename F::Elem>;

template <Field F>
std::size_t rank(const DenseMatrix<F>& m);

/// Lexicographically first maximal set of independent columns.
template <Field F>
std::vector<std::size_t> pivot_columns(const DenseMatrix<F>& m);

/// cols - rank vectors spanning the right kernel: one per non-pivot column,
/// read off the reduced row echelon form and scaled to a leading 1.
template <Field F>
std::vector<Vector<F>> nullspace_basis(const DenseMatrix<F>& m);

/// Whether v lies in the column span of m. Throws DimensionMismatch.
template <Field F>
bool in_span(std::span<const typename F::Elem> v, const DenseMatrix<F>& m);

/// Some x with m x = b, or nullopt. When m has full column rank the solution
/// is unique; otherwise the one supported on pivot columns is returned.
template <Field F>
std::optional<Vector<F>> solve(const DenseMatrix<F>& m, std::span<const typename F::Elem> b);

template <> std::size_t rank(const DenseMatrix<PrimeField>&);
template <> std::size_t rank(const DenseMatrix<RationalField>&);
template <> std::vector<std::size_t> pivot_columns(const DenseMatrix<PrimeField>&);
template <> std::vector<std::size_t> pivot_columns(const DenseMatrix<RationalField>&);
template <> std::vector<Vector<PrimeField>> nullspace_basis(const DenseMatrix<PrimeField>&);
template <> std::vector<Vector<RationalField>> nullspace_basis(const DenseMatrix<RationalField>&);
template <> bool in_span(std::span<const PrimeField::Elem>, const DenseMatrix<PrimeField>&);
template <> bool in_span(std::span<const RationalField::Elem>, const DenseMatrix<RationalField>&);
template <> std::optional<Vector<PrimeField>> solve(const DenseMatrix<PrimeField>&,
                                                        std::span<const PrimeField::Elem>);
template <> std::optional<Vector<RationalField>> solve(const DenseMatrix<RationalField>&,
                                                           std::span<const RationalField::Elem>);

}  // namespace jacsyz
