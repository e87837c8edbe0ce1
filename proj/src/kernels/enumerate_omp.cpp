#include <omp.h>

#include <algorithm>
#include <limits>

#include "common.hpp"

namespace constamax::kernels {

EnumResult min_weight_omp(const MatrixQ& basis, size_t skip_rows, uint64_t budget) {
  const uint64_t count = enumeration_size(basis, skip_rows);
  if (count > budget) {
    EnumResult out;
    out.budget_exceeded = true;
    return out;
  }
  if (count < 4096) return min_weight_serial(basis, skip_rows, budget);

  detail::MessageWalker probe(basis);
  const uint64_t start = probe.power(skip_rows * basis.field().degree());
  const uint64_t chunks = std::min<uint64_t>(count, 64 * static_cast<uint64_t>(omp_get_max_threads()));

  struct Best {
    size_t weight = std::numeric_limits<size_t>::max();
    uint64_t index = 0;
    std::vector<uint32_t> word;
  };
  std::vector<Best> best(chunks);

#pragma omp parallel for schedule(dynamic, 1)
  for (uint64_t c = 0; c < chunks; ++c) {
    const uint64_t lo = start + count / chunks * c + std::min(c, count % chunks);
    const uint64_t len = count / chunks + (c < count % chunks ? 1 : 0);
    detail::MessageWalker w(basis);
    w.seek(lo);
    Best& b = best[c];
    for (uint64_t k = 0; k < len; ++k) {
      if (k) w.step();
      const size_t wt = w.weight();
      if (wt < b.weight) {
        b.weight = wt;
        b.index = lo + k;
        b.word = w.word();
      }
    }
  }

  // chunks are in index order, so the first strict minimum is the serial one
  const Best* win = &best[0];
  for (const auto& b : best)
    if (b.weight < win->weight) win = &b;
  EnumResult out;
  out.found = true;
  out.min_weight = win->weight;
  out.witness = win->word;
  out.visited = count;
  return out;
}

}  // namespace constamax::kernels
