#include <omp.h>

#include <algorithm>
#include <limits>

#include "subset_search.hpp"

namespace constamax::kernels {

namespace {

struct TaskOutcome {
  bool found = false;
  std::vector<size_t> witness;
};

}  // namespace

SubsetResult subset_search_omp(const MatrixQ& H, size_t size, SubsetMode mode, uint64_t budget) {
  const size_t n = H.cols();
  if (size < 2 || n < 4) return subset_search_serial(H, size, mode, budget);
  if (mode == SubsetMode::MinDependent) {
    // a zero column is the smallest possible witness; tasks below only see
    // columns after their first prefix element as singletons
    for (size_t c = 0; c < n; ++c) {
      bool zero = true;
      for (size_t r = 0; r < H.rows() && zero; ++r) zero = H(r, c) == 0;
      if (zero) return {true, {c}, c + 1, false};
    }
  }

  // one task per feasible (c0, c1) prefix, in lexicographic order
  std::vector<std::vector<size_t>> tasks;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      if (mode == SubsetMode::AnyOfSize && n - b < size - 1) break;
      tasks.push_back({a, b});
    }
  if (tasks.empty()) return subset_search_serial(H, size, mode, budget);

  std::atomic<uint64_t> work{0};
  std::atomic<size_t> best_size{std::numeric_limits<size_t>::max()};
  std::atomic<size_t> first_hit{std::numeric_limits<size_t>::max()};
  std::atomic<bool> aborted{false};
  std::vector<TaskOutcome> outcome(tasks.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (size_t t = 0; t < tasks.size(); ++t) {
    if (aborted.load(std::memory_order_relaxed)) continue;
    if (mode == SubsetMode::AnyOfSize && first_hit.load() < t) continue;
    // ties with the shared best are kept so every task reports its own
    // lexicographically first set; the reduction below picks the winner
    detail::SubsetWalk walk(
        H, size, mode, work, budget, [&] { return best_size.load(std::memory_order_relaxed); },
        [&] { return mode == SubsetMode::AnyOfSize && first_hit.load(std::memory_order_relaxed) < t; });
    walk.run(tasks[t]);
    if (walk.aborted()) {
      aborted = true;
      continue;
    }
    if (!walk.found()) continue;
    outcome[t] = {true, walk.witness()};
    if (mode == SubsetMode::AnyOfSize) {
      size_t cur = first_hit.load();
      while (t < cur && !first_hit.compare_exchange_weak(cur, t)) {
      }
    } else {
      const size_t s = walk.witness().size();
      size_t cur = best_size.load();
      while (s < cur && !best_size.compare_exchange_weak(cur, s)) {
      }
    }
  }

  SubsetResult out;
  out.work = work.load();
  if (aborted) {
    out.budget_exceeded = true;
    return out;
  }
  const TaskOutcome* win = nullptr;
  for (const auto& o : outcome) {
    if (!o.found) continue;
    if (!win || o.witness.size() < win->witness.size()) win = &o;
    if (mode == SubsetMode::AnyOfSize) break;
  }
  if (win) {
    out.found = true;
    out.witness = win->witness;
  }
  return out;
}

}  // namespace constamax::kernels
