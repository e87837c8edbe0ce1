#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "constamax/field.hpp"

namespace constamax {

/// Dense row-major matrix over one field context.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(FieldPtr field, size_t rows, size_t cols);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  uint32_t& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  uint32_t operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  std::span<uint32_t> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const uint32_t> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<uint32_t>& data() const { return data_; }

  void append_row(std::span<const uint32_t> values);
  MatrixQ select_rows(std::span<const size_t> idx) const;
  MatrixQ select_columns(std::span<const size_t> idx) const;
  MatrixQ transpose() const;
  MatrixQ operator*(const MatrixQ& rhs) const;
  bool is_zero() const;

  bool operator==(const MatrixQ& o) const;

 private:
  FieldPtr field_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<uint32_t> data_;
};

MatrixQ vstack(const MatrixQ& top, const MatrixQ& bottom);

/// Reduced row echelon form; pivot columns are written to *pivots if given.
MatrixQ rref(const MatrixQ& m, std::vector<size_t>* pivots = nullptr);
size_t rank(const MatrixQ& m);

/// Rows spanning {x : m x^T = 0}, one per free column of rref(m), in column order.
MatrixQ null_space(const MatrixQ& m);

/// Keeps each row that is independent of the rows kept before it, in the
/// original order and unmodified. Indices of the kept rows go to *kept.
MatrixQ independent_rows(const MatrixQ& m, std::vector<size_t>* kept = nullptr);

/// True when every row of `small` lies in the row space of `big`.
bool row_space_contains(const MatrixQ& big, const MatrixQ& small);

/// v * m^T, i.e. the syndrome of v against a parity-check matrix.
std::vector<uint32_t> syndrome(const MatrixQ& m, std::span<const uint32_t> v);

size_t hamming_weight(std::span<const uint32_t> v);

}  // namespace constamax
