#pragma once

// Multi-modular machinery for exact linear algebra over Q.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "jacsyz/matrix.hpp"

namespace jacsyz::modular {

/// Integer matrix obtained from a rational one by scaling each row by the
/// lcm of its denominators (same kernel, same column dependencies).
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> entries;

  const mpz_class& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

IntMatrix to_integer_rows(const DenseMatrix<RationalField>& m);

/// Row-major residues mod p.
std::vector<std::uint64_t> reduce(const IntMatrix& m, std::uint64_t p);

/// Certified reduced-row-echelon data over Q.
struct RationalEchelon {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_cols;            // columns whose kernel vectors were lifted
  std::vector<std::vector<mpq_class>> kernel;    // one per entry of free_cols, 1 at the free column
};

/// Lifts the reduced row echelon structure of m over Q.
///
/// With `wanted` empty every kernel vector is lifted and verified, which
/// certifies the rank and the pivot columns. Otherwise only the kernel vectors
/// of the listed non-pivot columns are lifted; throws BadPrime if one of them
/// turns out to be a pivot column over Q.
RationalEchelon certified_echelon(const IntMatrix& m, std::span<const std::size_t> wanted = {});

/// Wang rational reconstruction of a mod m with |num|, den <= sqrt(m/2).
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m);

/// m * w == 0 exactly, with w scaled to integers.
bool annihilates(const IntMatrix& m, std::span<const mpq_class> w);

}  // namespace jacsyz::modular
