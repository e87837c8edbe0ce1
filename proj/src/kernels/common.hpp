#pragma once

#include <cstdint>
#include <vector>

#include "constamax/kernels.hpp"

namespace constamax::kernels::detail {

// Incremental Gaussian elimination over a growing set of columns of H.
// push() reduces the new column against the ones already held; a column
// that reduces to zero is dependent on them and is not kept.
class ColumnEliminator {
 public:
  explicit ColumnEliminator(const MatrixQ& H);

  bool push(size_t c);
  void pop() { --depth_; }
  size_t depth() const { return depth_; }
  size_t columns() const { return cols_.size(); }

 private:
  const Field& f_;
  size_t rho_;
  std::vector<std::vector<uint32_t>> cols_;
  std::vector<uint32_t> basis_;  // depth x rho, row j normalized at pivot_[j]
  std::vector<size_t> pivot_;
  std::vector<uint32_t> scratch_;
  size_t depth_ = 0;
};

// Odometer over GF(p)-digit messages. Digit d = i*e + t scales row i of the
// basis by the t-th power-of-x element of GF(q), so digit 0 varies fastest
// and the first rows of the basis are the low digits.
class MessageWalker {
 public:
  explicit MessageWalker(const MatrixQ& basis);

  uint32_t radix() const { return p_; }
  size_t digits() const { return gens_.size(); }
  // Saturating p^count.
  uint64_t power(size_t count) const;

  void seek(uint64_t index);
  void step();
  const std::vector<uint32_t>& word() const { return word_; }
  size_t weight() const;

 private:
  const Field& f_;
  uint32_t p_;
  std::vector<std::vector<uint32_t>> gens_;
  std::vector<uint32_t> digit_;
  std::vector<uint32_t> word_;
};

struct SubsetTask {
  std::vector<size_t> prefix;
};

}  // namespace constamax::kernels::detail
