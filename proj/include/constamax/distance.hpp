#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constamax/blockcodes.hpp"
#include "constamax/matrix.hpp"

namespace constamax {

enum class DistanceMethod { RankExhaustion, CodewordEnumeration, RelativeEnumeration };
std::string to_string(DistanceMethod m);

/// Result of a distance computation. `lower`/`upper` always bracket the true
/// value; they coincide when the value is exact. An undecided certificate
/// (budget exhausted) carries only the trivial or caller-supplied bounds.
struct DistanceCertificate {
  DistanceMethod method = DistanceMethod::RankExhaustion;
  bool decided = false;
  uint64_t lower = 0, upper = 0;
  bool mds = false;                    // set by certify_mds when every subset passed
  std::vector<size_t> witness_columns; // dependent columns (rank methods)
  std::vector<uint32_t> witness_word;  // minimum-weight word (enumeration)
  uint64_t work = 0;
  std::string note;

  bool exact() const { return decided && lower == upper; }
  uint64_t value() const { return lower; }
};

struct DistanceOptions {
  uint64_t budget = 1'000'000'000;  // elementary field operations / codewords
  bool parallel = true;             // OpenMP kernels (same answers as serial)
};

/// MDS test by rank exhaustion on whichever of H and its dual generator has
/// fewer rows. H must have full row rank. Pre-checks binomial(n, side) * side^3
/// against the budget.
DistanceCertificate certify_mds(const MatrixQ& H, const DistanceOptions& opts = {});

/// Exact minimum distance of the code with parity-check matrix H: certify_mds
/// first, then the smallest dependent column set of H, or codeword
/// enumeration of the null space when that is cheaper.
DistanceCertificate min_distance_exact(const MatrixQ& H, const DistanceOptions& opts = {});
DistanceCertificate min_distance_exact(const ConstacyclicCode& code, const DistanceOptions& opts = {});

/// Minimum weight of the row space of G by enumerating every codeword.
DistanceCertificate min_distance_enumerate(const MatrixQ& G, const DistanceOptions& opts = {});

/// Minimum weight over row space(big) \ row space(small). With the budget
/// exceeded the result is undecided and `lower` is `big_distance` when given.
DistanceCertificate relative_min_weight(const MatrixQ& big, const MatrixQ& small, const DistanceOptions& opts = {},
                                        std::optional<uint64_t> big_distance = std::nullopt);

/// Saturating binomial coefficient.
uint64_t binomial(uint64_t n, uint64_t k);

}  // namespace constamax
