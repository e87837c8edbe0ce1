#include "subset_search.hpp"

#include <algorithm>

namespace constamax::kernels::detail {

SubsetWalk::SubsetWalk(const MatrixQ& H, size_t size, SubsetMode mode, std::atomic<uint64_t>& work, uint64_t budget,
                       std::function<size_t()> bound, std::function<bool()> cancelled)
    : elim_(H), n_(H.cols()), size_(size), mode_(mode), work_(work), budget_(budget), bound_(std::move(bound)),
      cancelled_(std::move(cancelled)) {}

size_t SubsetWalk::limit() const {
  size_t b = std::min(size_, bound_());
  if (mode_ == SubsetMode::MinDependent && found_) b = std::min(b, witness_.size() - 1);
  return b;
}

bool SubsetWalk::charge() {
  ++local_work_;
  if (work_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
    aborted_ = true;
    return false;
  }
  return true;
}

void SubsetWalk::record() {
  found_ = true;
  witness_ = chosen_;
}

void SubsetWalk::run(const std::vector<size_t>& prefix) {
  for (size_t c : prefix) {
    if (!charge()) return;
    chosen_.push_back(c);
    if (!elim_.push(c)) {
      if (chosen_.size() <= limit()) record();
      return;
    }
  }
  const size_t start = prefix.empty() ? 0 : prefix.back() + 1;
  if (chosen_.size() < limit()) visit(start);
}

// Returns false to unwind the whole walk.
bool SubsetWalk::visit(size_t start) {
  const size_t depth = chosen_.size();
  for (size_t c = start; c < n_; ++c) {
    if (mode_ == SubsetMode::AnyOfSize && n_ - c < size_ - depth) break;
    if (cancelled_()) return false;
    if (!charge()) return false;
    chosen_.push_back(c);
    if (!elim_.push(c)) {
      const bool take = depth + 1 <= limit();
      if (take) record();
      chosen_.pop_back();
      if (mode_ == SubsetMode::AnyOfSize) return !take;
      // siblings at this depth give sets of the same size, never smaller
      if (take) return true;
      continue;
    }
    if (depth + 2 <= limit() && !visit(c + 1)) {
      elim_.pop();
      chosen_.pop_back();
      return false;
    }
    elim_.pop();
    chosen_.pop_back();
  }
  return true;
}

}  // namespace constamax::kernels::detail
