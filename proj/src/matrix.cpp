#include "constamax/matrix.hpp"

#include <algorithm>

namespace constamax {

namespace {

void same_field(const MatrixQ& a, const MatrixQ& b) {
  if (a.field().id() != b.field().id()) throw FieldMismatchError("matrices over different fields");
}

}  // namespace

MatrixQ::MatrixQ(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require(field_ != nullptr, "matrix needs a field");
}

void MatrixQ::append_row(std::span<const uint32_t> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  require(values.size() == cols_, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

MatrixQ MatrixQ::select_rows(std::span<const size_t> idx) const {
  MatrixQ out(field_, 0, cols_);
  for (size_t r : idx) out.append_row(row(r));
  return out;
}

MatrixQ MatrixQ::select_columns(std::span<const size_t> idx) const {
  MatrixQ out(field_, rows_, idx.size());
  for (size_t r = 0; r < rows_; ++r)
    for (size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
  return out;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ out(field_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

MatrixQ MatrixQ::operator*(const MatrixQ& rhs) const {
  same_field(*this, rhs);
  require(cols_ == rhs.rows_, "matrix product dimension mismatch");
  const Field& f = *field_;
  MatrixQ out(field_, rows_, rhs.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      const uint32_t a = (*this)(r, k);
      if (a == 0) continue;
      for (size_t c = 0; c < rhs.cols_; ++c) out(r, c) = f.add(out(r, c), f.mul(a, rhs(k, c)));
    }
  return out;
}

bool MatrixQ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](uint32_t v) { return v == 0; });
}

bool MatrixQ::operator==(const MatrixQ& o) const {
  return field_ && o.field_ && field_->id() == o.field_->id() && rows_ == o.rows_ && cols_ == o.cols_ &&
         data_ == o.data_;
}

MatrixQ vstack(const MatrixQ& top, const MatrixQ& bottom) {
  same_field(top, bottom);
  require(top.cols() == bottom.cols() || top.rows() == 0 || bottom.rows() == 0, "vstack column mismatch");
  MatrixQ out(top.field_ptr(), 0, std::max(top.cols(), bottom.cols()));
  for (size_t r = 0; r < top.rows(); ++r) out.append_row(top.row(r));
  for (size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

MatrixQ rref(const MatrixQ& m, std::vector<size_t>* pivots) {
  MatrixQ a = m;
  const Field& f = m.field();
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t sel = r;
    while (sel < a.rows() && a(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(r, j));
    const uint32_t inv = f.inv(a(r, c));
    for (size_t j = 0; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), inv);
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const uint32_t factor = f.neg(a(i, c));
      for (size_t j = 0; j < a.cols(); ++j) a(i, j) = f.add(a(i, j), f.mul(factor, a(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  return a;
}

size_t rank(const MatrixQ& m) {
  std::vector<size_t> piv;
  rref(m, &piv);
  return piv.size();
}

MatrixQ null_space(const MatrixQ& m) {
  std::vector<size_t> piv;
  const MatrixQ a = rref(m, &piv);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : piv) is_pivot[c] = true;
  MatrixQ out(m.field_ptr(), 0, m.cols());
  std::vector<uint32_t> v(m.cols());
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(a(i, free));
    out.append_row(v);
  }
  return out;
}

MatrixQ independent_rows(const MatrixQ& m, std::vector<size_t>* kept) {
  const Field& f = m.field();
  std::vector<std::vector<uint32_t>> basis;  // reduced copies, basis[i][pivot[i]] = 1
  std::vector<size_t> pivot;
  std::vector<size_t> keep;
  for (size_t r = 0; r < m.rows(); ++r) {
    std::vector<uint32_t> v(m.row(r).begin(), m.row(r).end());
    for (size_t b = 0; b < basis.size(); ++b) {
      const uint32_t c = v[pivot[b]];
      if (c == 0) continue;
      const uint32_t factor = f.neg(c);
      for (size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(factor, basis[b][j]));
    }
    auto it = std::find_if(v.begin(), v.end(), [](uint32_t x) { return x != 0; });
    if (it == v.end()) continue;
    const size_t p = static_cast<size_t>(it - v.begin());
    const uint32_t inv = f.inv(v[p]);
    for (auto& x : v) x = f.mul(x, inv);
    basis.push_back(std::move(v));
    pivot.push_back(p);
    keep.push_back(r);
  }
  if (kept) *kept = keep;
  return m.select_rows(keep);
}

bool row_space_contains(const MatrixQ& big, const MatrixQ& small) {
  if (small.rows() == 0) return true;
  same_field(big, small);
  require(big.cols() == small.cols() || big.rows() == 0, "row space column mismatch");
  return rank(vstack(big, small)) == rank(big);
}

std::vector<uint32_t> syndrome(const MatrixQ& m, std::span<const uint32_t> v) {
  require(v.size() == m.cols(), "syndrome length mismatch");
  const Field& f = m.field();
  std::vector<uint32_t> s(m.rows(), 0);
  for (size_t r = 0; r < m.rows(); ++r) {
    uint32_t acc = 0;
    for (size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), v[c]));
    s[r] = acc;
  }
  return s;
}

size_t hamming_weight(std::span<const uint32_t> v) {
  return static_cast<size_t>(std::count_if(v.begin(), v.end(), [](uint32_t x) { return x != 0; }));
}

}  // namespace constamax
