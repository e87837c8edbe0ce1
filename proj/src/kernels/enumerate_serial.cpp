#include "common.hpp"

#include "constamax/error.hpp"

namespace constamax::kernels {

uint64_t enumeration_size(const MatrixQ& basis, size_t skip_rows) {
  require(skip_rows <= basis.rows(), "skip_rows exceeds the basis");
  detail::MessageWalker w(basis);
  const uint64_t total = w.power(w.digits());
  const uint64_t start = w.power(skip_rows * basis.field().degree());
  return total - start;
}

EnumResult min_weight_serial(const MatrixQ& basis, size_t skip_rows, uint64_t budget) {
  EnumResult out;
  const uint64_t count = enumeration_size(basis, skip_rows);
  if (count > budget) {
    out.budget_exceeded = true;
    return out;
  }
  if (count == 0) return out;
  detail::MessageWalker w(basis);
  const uint64_t start = w.power(skip_rows * basis.field().degree());
  w.seek(start);
  for (uint64_t k = 0; k < count; ++k) {
    if (k) w.step();
    const size_t wt = w.weight();
    if (!out.found || wt < out.min_weight) {
      out.found = true;
      out.min_weight = wt;
      out.witness = w.word();
    }
  }
  out.visited = count;
  return out;
}

}  // namespace constamax::kernels
