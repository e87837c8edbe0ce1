#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constamax/blockcodes.hpp"
#include "constamax/distance.hpp"
#include "constamax/matrix.hpp"

namespace constamax {

/// Polynomial matrix in the delay D: G(D) = sum_j coeff[j] D^j.
struct PolyMatrixD {
  FieldPtr field;
  size_t rows = 0, cols = 0;
  std::vector<MatrixQ> coeff;

  /// Largest j with coeff[j] != 0 (0 for the zero matrix).
  size_t memory() const;
  /// Degree of each row, -1 for a zero row.
  std::vector<int64_t> row_degrees() const;
  /// Sum of the nonnegative row degrees.
  uint64_t degree() const;
  /// entries[row][col][j] = coefficient of D^j, trimmed of trailing zeros.
  std::vector<std::vector<std::vector<uint32_t>>> entries() const;
};

struct SplitParity {
  std::vector<MatrixQ> blocks;  // H_0 .. H_m
  std::vector<MatrixQ> padded;  // each block with zero rows appended up to kappa
  size_t kappa = 0;
};

/// Consecutive row blocks of H. row_counts[0] must be the largest count and
/// H_0 must have full row rank.
SplitParity split_parity(const MatrixQ& H, const std::vector<size_t>& row_counts);
PolyMatrixD assemble(const SplitParity& split);

/// (n - k)(floor(gamma / k) + 1) + gamma + 1
uint64_t generalized_singleton(uint64_t n, uint64_t k, uint64_t gamma);

struct Squeeze {
  uint64_t lower = 0, upper = 0;
};
/// min(d_top + d_bottom, d_full) <= d_f <= min(d_full, singleton_bound)
Squeeze free_distance_squeeze(uint64_t d_top, uint64_t d_bottom, uint64_t d_full, uint64_t singleton_bound);

/// kappa (L + m + 1) x n (L + 1) matrix whose null space is the set of
/// v(D) with deg v <= L and G(D) v(D)^T = 0.
MatrixQ sliding_kernel_matrix(const PolyMatrixD& G, size_t L);
/// kappa (L + 1) x n (L + m + 1) matrix whose row space holds the
/// coefficient strings of u(D) G(D) with deg u <= L.
MatrixQ sliding_generator(const PolyMatrixD& G, size_t L);

/// Row degrees of a minimal basis of the right kernel of G(D), read off the
/// growth of the sliding kernel dimensions: dim K_L = sum_i max(0, L - nu_i + 1).
struct KernelIndices {
  std::vector<uint64_t> nu;          // sorted
  std::vector<uint64_t> kernel_dims; // dim K_L for L = 0, 1, ...
  uint64_t degree = 0, memory = 0;
  bool complete = false;
};
KernelIndices kernel_minimal_indices(const PolyMatrixD& G, size_t max_L);

/// min weight of u(D) G(D) over nonzero u with deg u <= max_input_degree,
/// by enumeration. An upper bound on the free distance of the code of G.
DistanceCertificate free_distance_search(const PolyMatrixD& G, size_t max_input_degree,
                                         const DistanceOptions& opts = {});
/// min weight over nonzero v(D) in the right kernel of G(D) with
/// deg v <= max_degree, searching dependent sets of at most max_weight
/// columns of the sliding kernel matrix. An upper bound on the free distance
/// of the dual code; `decided` with found == false means none that light.
DistanceCertificate dual_free_distance_search(const PolyMatrixD& G, size_t max_degree, size_t max_weight,
                                              const DistanceOptions& opts = {});

enum class ConvFamily { MainI, MainII, MainIII, MainIIIA, MainIIIB, MainIV, MainV, MainVIa, MainVIb };
std::string to_string(ConvFamily f);
std::optional<ConvFamily> parse_conv_family(const std::string& name);
/// The block construction a convolutional family splits (none for mainIV).
std::optional<BlockFamily> underlying_block_family(ConvFamily f);

/// The (n, k, gamma; m, d_f) a construction promises for the dual code.
struct ConvClaim {
  uint64_t n = 0, k = 0, gamma = 0, memory = 0, df = 0;
  bool df_is_lower_bound = false;
  uint64_t max_defect = 0;  // 0 = MDS claim
};

struct ConvTuple {
  uint64_t n = 0, k = 0, gamma = 0, memory = 0, df_lower = 0, df_upper = 0;
};

/// Unit-memory lift G(D) = H~_top + H~_bottom D, with everything the
/// certificate needs about the dual code V-perp.
struct ConvCode {
  ConvFamily family = ConvFamily::MainI;
  int64_t index = -1;
  uint64_t c1 = 0, c2 = 0;

  ConstacyclicCode full, top, bottom;  // C_2, C_1, C_0
  MatrixQ H;                           // [H_top; H_bottom], a parity-check matrix of `full`
  std::vector<size_t> row_counts;
  PolyMatrixD G;                       // generator of V
  uint64_t kappa = 0;                  // dim V
  uint64_t v_degree = 0;               // sum of row degrees of G
  bool rank_conditions = false;        // kappa = rk H_top >= rk H_bottom
  bool reduced_basic = false;          // kernel degree equals v_degree

  KernelIndices dual_indices;
  DistanceCertificate d_full, d_top, d_bottom;
  uint64_t singleton = 0;
  ConvTuple dual;                      // certified V-perp tuple
  bool mds = false;
  int64_t defect = -1;                 // singleton - df when df is exact
  ConvClaim claim;
};

struct ConvOptions {
  DistanceOptions distance;
};

/// Lifts the split H = [H_{C1}; H_{C0}] of C2. C1 and C0 must partition the
/// defining set of C2 and every matrix comes from parity_check_matrix.
ConvCode lift_unit_memory(const ConstacyclicCode& C2, const ConstacyclicCode& C1, const ConstacyclicCode& C0,
                          const ConvOptions& opts = {});

/// Builds and certifies one member. For mainIV pass (c1, c2) with
/// c1 + c2 = i + 1; the others ignore them. mainIV needs rn = q - 1, and the
/// cyclic families need r = 1.
ConvCode build_conv_family(ConvFamily f, TowerPtr tower, int64_t i, uint64_t c1 = 0, uint64_t c2 = 0,
                           const ConvOptions& opts = {});
std::pair<int64_t, int64_t> conv_index_range(ConvFamily f, const CosetProfile& profile);
ConvClaim conv_claim(ConvFamily f, const CosetProfile& profile, int64_t i, uint64_t c1 = 0, uint64_t c2 = 0);
/// Tower for the family at (q, r); cyclic families force r = 1 and mainIV
/// uses n = (q - 1) / r.
TowerPtr conv_family_tower(ConvFamily f, uint64_t q, uint64_t r, const FieldOptions& opts = {});

}  // namespace constamax
