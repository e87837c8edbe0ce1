#include <limits>

#include "subset_search.hpp"

namespace constamax::kernels {

SubsetResult subset_search_serial(const MatrixQ& H, size_t size, SubsetMode mode, uint64_t budget) {
  std::atomic<uint64_t> work{0};
  detail::SubsetWalk walk(
      H, size, mode, work, budget, [] { return std::numeric_limits<size_t>::max(); }, [] { return false; });
  walk.run({});
  SubsetResult out;
  out.work = work.load();
  out.budget_exceeded = walk.aborted();
  if (!out.budget_exceeded && walk.found()) {
    out.found = true;
    out.witness = walk.witness();
  }
  return out;
}

}  // namespace constamax::kernels
