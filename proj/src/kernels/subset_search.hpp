#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "common.hpp"

namespace constamax::kernels::detail {

// Depth-first walk over column subsets in lexicographic order, shared by
// the serial and parallel drivers. `bound` returns the largest dependent-set
// size still worth finding.
class SubsetWalk {
 public:
  SubsetWalk(const MatrixQ& H, size_t size, SubsetMode mode, std::atomic<uint64_t>& work, uint64_t budget,
             std::function<size_t()> bound, std::function<bool()> cancelled);

  // Runs the subtree under `prefix` (empty prefix = whole tree).
  void run(const std::vector<size_t>& prefix);

  bool found() const { return found_; }
  const std::vector<size_t>& witness() const { return witness_; }
  bool aborted() const { return aborted_; }
  uint64_t local_work() const { return local_work_; }

 private:
  bool visit(size_t start);
  bool charge();
  void record();
  size_t limit() const;

  ColumnEliminator elim_;
  size_t n_, size_;
  SubsetMode mode_;
  std::atomic<uint64_t>& work_;
  uint64_t budget_;
  std::function<size_t()> bound_;
  std::function<bool()> cancelled_;
  std::vector<size_t> chosen_;
  bool found_ = false, aborted_ = false;
  std::vector<size_t> witness_;
  uint64_t local_work_ = 0;
};

}  // namespace constamax::kernels::detail
