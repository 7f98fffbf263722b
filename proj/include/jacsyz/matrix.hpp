#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jacsyz/errors.hpp"
#include "jacsyz/field.hpp"

namespace jacsyz {

/// Row-major dense matrix over a field.
template <Field F>
class DenseMatrix {
 public:
  using Elem = typename F::Elem;

  DenseMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

  static DenseMatrix from_rows(F field, const std::vector<std::vector<Elem>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    DenseMatrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors, each of length `rows`.
  static DenseMatrix from_columns(F field, std::size_t rows, const std::vector<std::vector<Elem>>& cols) {
    DenseMatrix m(std::move(field), rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("column length differs from row count");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Elem> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Elem> entries() const { return entries_; }

  std::vector<Elem> column(std::size_t j) const {
    std::vector<Elem> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  /// m * v, exact.
  std::vector<Elem> apply(std::span<const Elem> v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector length differs from column count");
    std::vector<Elem> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const Elem& a = (*this)(i, j);
        if (!field_.is_zero(a) && !field_.is_zero(v[j])) out[i] = field_.add(out[i], field_.mul(a, v[j]));
      }
    }
    return out;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

}  // namespace jacsyz
