#pragma once

// Gaussian elimination over Z/p on raw row-major residue buffers. This is the
// hot loop of every rank computation in the library; the OpenMP version
// parallelizes the row updates of each pivot step, the serial version is the
// reference it is tested and benchmarked against.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace jacsyz::kernels {

enum class Reduction {
  Forward,  // row echelon form, enough for rank and pivot columns
  Full,     // reduced row echelon form with unit pivots, needed for kernels
};

/// Eliminates `a` (rows x cols, entries in [0,p)) in place and returns the
/// pivot columns in increasing order. The pivot of each column is the first
/// remaining row with a nonzero entry, so the pivot set is the
/// lexicographically first maximal independent set of columns.
std::vector<std::size_t> echelon_serial(std::span<std::uint64_t> a, std::size_t rows, std::size_t cols,
                                        std::uint64_t p, Reduction mode);

std::vector<std::size_t> echelon_parallel(std::span<std::uint64_t> a, std::size_t rows, std::size_t cols,
                                          std::uint64_t p, Reduction mode);

/// Kernel basis read off a fully reduced buffer: one vector per non-pivot
/// column j, with 1 at j and minus the reduced entries at the pivot columns.
std::vector<std::vector<std::uint64_t>> kernel_from_rref(std::span<const std::uint64_t> rref, std::size_t cols,
                                                         std::span<const std::size_t> pivots, std::uint64_t p);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace jacsyz::kernels
