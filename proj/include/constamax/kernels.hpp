#pragma once

// Search kernels behind the distance module. Each comes as a serial
// reference and an OpenMP version that returns the same answer (work
// counters may differ).

#include <cstdint>
#include <vector>

#include "constamax/matrix.hpp"

namespace constamax::kernels {

enum class SubsetMode {
  // Look at `size`-subsets only and stop at the first dependent prefix.
  // No hit means every size-subset is independent.
  AnyOfSize,
  // Smallest dependent column set of size <= `size`; the witness is the
  // lexicographically least one of that size.
  MinDependent,
};

struct SubsetResult {
  bool found = false;
  std::vector<size_t> witness;  // sorted column indices
  uint64_t work = 0;            // column reductions performed
  bool budget_exceeded = false;
};

SubsetResult subset_search_serial(const MatrixQ& H, size_t size, SubsetMode mode, uint64_t budget);
SubsetResult subset_search_omp(const MatrixQ& H, size_t size, SubsetMode mode, uint64_t budget);

struct EnumResult {
  bool found = false;            // false when nothing was enumerated
  size_t min_weight = 0;
  std::vector<uint32_t> witness;
  uint64_t visited = 0;          // codewords generated
  bool budget_exceeded = false;  // nothing was enumerated in that case
};

/// Minimum weight over the span of the rows of `basis` (linearly
/// independent), excluding the span of its first `skip_rows` rows.
EnumResult min_weight_serial(const MatrixQ& basis, size_t skip_rows, uint64_t budget);
EnumResult min_weight_omp(const MatrixQ& basis, size_t skip_rows, uint64_t budget);

/// Number of codewords the enumeration would visit, saturating at UINT64_MAX.
uint64_t enumeration_size(const MatrixQ& basis, size_t skip_rows);

}  // namespace constamax::kernels
