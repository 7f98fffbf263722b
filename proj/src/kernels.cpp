#include "jacsyz/kernels.hpp"

#include <algorithm>

#include "jacsyz/field.hpp"

#ifdef JACSYZ_USE_OPENMP
#include <omp.h>
#endif

namespace jacsyz::kernels {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Shoup multiplication: b * f mod p with f_shoup = floor(f * 2^64 / p).
inline u64 mul_shoup(u64 b, u64 f, u64 f_shoup, u64 p) {
  u64 q = static_cast<u64>((static_cast<u128>(b) * f_shoup) >> 64);
  u64 r = b * f - q * p;
  return r >= p ? r - p : r;
}

inline u64 shoup_precompute(u64 f, u64 p) { return static_cast<u64>((static_cast<u128>(f) << 64) / p); }

/// row -= f * pivot_row on columns [from, cols).
inline void axpy_row(u64* row, const u64* pivot_row, std::size_t from, std::size_t cols, u64 f, u64 p) {
  u64 fs = shoup_precompute(f, p);
  for (std::size_t j = from; j < cols; ++j) {
    u64 t = mul_shoup(pivot_row[j], f, fs, p);
    u64 v = row[j];
    row[j] = v >= t ? v - t : v + p - t;
  }
}

/// Finds the next pivot in column c among rows [r, rows); swaps it into row r
/// and, for full reduction, scales it to 1. Returns false if the column is zero.
bool place_pivot(u64* a, std::size_t r, std::size_t c, std::size_t rows, std::size_t cols, u64 p, Reduction mode) {
  std::size_t piv = r;
  while (piv < rows && a[piv * cols + c] == 0) ++piv;
  if (piv == rows) return false;
  if (piv != r) std::swap_ranges(a + piv * cols + c, a + piv * cols + cols, a + r * cols + c);
  if (mode == Reduction::Full) {
    u64 inv = modarith::inv(a[r * cols + c], p);
    u64 fs = shoup_precompute(inv, p);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = mul_shoup(a[r * cols + j], inv, fs, p);
  }
  return true;
}

/// Multiplier that clears a[i][c] using pivot row r.
inline u64 clearing_factor(const u64* a, std::size_t i, std::size_t r, std::size_t c, std::size_t cols, u64 p,
                           u64 pivot_inv) {
  u64 v = a[i * cols + c];
  return pivot_inv == 1 ? v : modarith::mul(v, pivot_inv, p);
}

}  // namespace

std::vector<std::size_t> echelon_serial(std::span<u64> buf, std::size_t rows, std::size_t cols, u64 p,
                                        Reduction mode) {
  u64* a = buf.data();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    if (!place_pivot(a, r, c, rows, cols, p, mode)) continue;
    u64 pivot_inv = mode == Reduction::Full ? 1 : modarith::inv(a[r * cols + c], p);
    std::size_t first = mode == Reduction::Full ? 0 : r + 1;
    for (std::size_t i = first; i < rows; ++i) {
      if (i == r || a[i * cols + c] == 0) continue;
      axpy_row(a + i * cols, a + r * cols, c, cols, clearing_factor(a, i, r, c, cols, p, pivot_inv), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> echelon_parallel(std::span<u64> buf, std::size_t rows, std::size_t cols, u64 p,
                                          Reduction mode) {
#ifndef JACSYZ_USE_OPENMP
  return echelon_serial(buf, rows, cols, p, mode);
#else
  u64* a = buf.data();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    if (!place_pivot(a, r, c, rows, cols, p, mode)) continue;
    u64 pivot_inv = mode == Reduction::Full ? 1 : modarith::inv(a[r * cols + c], p);
    const std::int64_t first = mode == Reduction::Full ? 0 : static_cast<std::int64_t>(r + 1);
    const std::int64_t n = static_cast<std::int64_t>(rows);
    const bool worth = (rows - static_cast<std::size_t>(first)) * (cols - c) > 32768;
#pragma omp parallel for schedule(static) if (worth)
    for (std::int64_t ii = first; ii < n; ++ii) {
      auto i = static_cast<std::size_t>(ii);
      if (i == r || a[i * cols + c] == 0) continue;
      axpy_row(a + i * cols, a + r * cols, c, cols, clearing_factor(a, i, r, c, cols, p, pivot_inv), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
#endif
}

std::vector<std::vector<u64>> kernel_from_rref(std::span<const u64> rref, std::size_t cols,
                                               std::span<const std::size_t> pivots, u64 p) {
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<u64>> basis;
  for (std::size_t j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<u64> v(cols, 0);
    v[j] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      u64 e = rref[i * cols + j];
      v[pivots[i]] = e == 0 ? 0 : p - e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int max_threads() {
#ifdef JACSYZ_USE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace jacsyz::kernels
