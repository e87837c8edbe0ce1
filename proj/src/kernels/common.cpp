#include "common.hpp"

#include <algorithm>
#include <limits>

namespace constamax::kernels::detail {

ColumnEliminator::ColumnEliminator(const MatrixQ& H)
    : f_(H.field()), rho_(H.rows()), cols_(H.cols(), std::vector<uint32_t>(H.rows())), scratch_(H.rows()) {
  for (size_t r = 0; r < H.rows(); ++r)
    for (size_t c = 0; c < H.cols(); ++c) cols_[c][r] = H(r, c);
  basis_.resize(rho_ * std::max<size_t>(rho_, 1));
  pivot_.resize(rho_);
}

bool ColumnEliminator::push(size_t c) {
  auto& v = scratch_;
  std::copy(cols_[c].begin(), cols_[c].end(), v.begin());
  for (size_t j = 0; j < depth_; ++j) {
    const uint32_t coef = v[pivot_[j]];
    if (coef == 0) continue;
    const uint32_t neg = f_.neg(coef);
    const uint32_t* b = &basis_[j * rho_];
    for (size_t r = 0; r < rho_; ++r)
      if (b[r] != 0) v[r] = f_.add(v[r], f_.mul(neg, b[r]));
  }
  size_t p = 0;
  while (p < rho_ && v[p] == 0) ++p;
  if (p == rho_) return false;
  // a full-rank set of rho columns cannot grow further
  if (depth_ == rho_) return false;
  const uint32_t inv = f_.inv(v[p]);
  uint32_t* dst = &basis_[depth_ * rho_];
  for (size_t r = 0; r < rho_; ++r) dst[r] = f_.mul(v[r], inv);
  pivot_[depth_] = p;
  ++depth_;
  return true;
}

MessageWalker::MessageWalker(const MatrixQ& basis)
    : f_(basis.field()), p_(basis.field().characteristic()), word_(basis.cols(), 0) {
  const uint32_t e = f_.degree();
  for (size_t i = 0; i < basis.rows(); ++i) {
    uint32_t scale = 1;  // the element x^t of GF(q) has code p^t
    for (uint32_t t = 0; t < e; ++t) {
      std::vector<uint32_t> g(basis.cols());
      for (size_t c = 0; c < basis.cols(); ++c) g[c] = f_.mul(basis(i, c), scale);
      gens_.push_back(std::move(g));
      scale *= p_;
    }
  }
  digit_.assign(gens_.size(), 0);
}

uint64_t MessageWalker::power(size_t count) const {
  uint64_t v = 1;
  for (size_t i = 0; i < count; ++i) {
    if (v > std::numeric_limits<uint64_t>::max() / p_) return std::numeric_limits<uint64_t>::max();
    v *= p_;
  }
  return v;
}

void MessageWalker::seek(uint64_t index) {
  std::fill(word_.begin(), word_.end(), 0);
  for (size_t d = 0; d < gens_.size(); ++d) {
    digit_[d] = static_cast<uint32_t>(index % p_);
    index /= p_;
    if (digit_[d] == 0) continue;
    const uint32_t k = f_.from_integer(digit_[d]);
    const auto& g = gens_[d];
    for (size_t c = 0; c < word_.size(); ++c) word_[c] = f_.add(word_[c], f_.mul(k, g[c]));
  }
}

void MessageWalker::step() {
  size_t d = 0;
  while (d < digit_.size()) {
    const auto& g = gens_[d];
    for (size_t c = 0; c < word_.size(); ++c) word_[c] = f_.add(word_[c], g[c]);
    if (++digit_[d] < p_) return;
    digit_[d] = 0;  // p * g = 0, so the p additions cancel
    ++d;
  }
}

size_t MessageWalker::weight() const {
  return static_cast<size_t>(std::count_if(word_.begin(), word_.end(), [](uint32_t x) { return x != 0; }));
}

}  // namespace constamax::kernels::detail
