#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "constamax/cosets.hpp"
#include "constamax/matrix.hpp"
#include "constamax/poly.hpp"
#include "constamax/tower.hpp"

namespace constamax {

/// Named block-code constructions. The string forms ("mainclasI", ...) are
/// the CLI family names.
enum class BlockFamily { ClassI, ClassII, ClassIII, ClassIIIA, ClassIIIB, ClassIV, ClassIVAa, ClassIVAb, ClassV, Custom };

std::string to_string(BlockFamily f);
std::optional<BlockFamily> parse_block_family(const std::string& name);
std::vector<BlockFamily> all_block_families();

/// The [n, k, d] a construction promises. `d_is_lower_bound` marks the
/// almost-MDS style "d >= ..." claims.
struct BlockClaim {
  uint64_t n = 0, k = 0, d = 0;
  bool d_is_lower_bound = false;
  bool mds() const { return !d_is_lower_bound && d == n - k + 1; }
};

/// alpha-constacyclic code of length n over GF(q) given by its defining set.
struct ConstacyclicCode {
  TowerPtr tower;
  std::vector<uint64_t> defining_set;      // sorted, coset-closed, inside O_rn
  std::vector<uint64_t> parity_exponents;  // exponents whose rows build H, in row order
  Poly generator;
  uint64_t dim = 0;
  Run run;
  uint64_t designed_distance = 1;
  BlockFamily family = BlockFamily::Custom;
  int64_t index = -1;

  const CosetProfile& profile() const { return tower->profile(); }
  uint64_t n() const { return tower->profile().n; }
  const FieldPtr& base() const { return tower->base(); }
};

/// prod over the orbit of j of (x - beta^e), with coefficients pulled back to GF(q).
Poly minimal_poly(uint64_t j, const ExtensionTower& tower);

/// Throws PreconditionError unless Z is a union of whole cosets inside O_rn.
ConstacyclicCode code_from_defining_set(std::vector<uint64_t> Z, TowerPtr tower);
/// Code whose defining set is the coset closure of `exponents`; the
/// exponents, in the given order, also drive parity_check_matrix.
ConstacyclicCode code_from_exponents(const std::vector<uint64_t>& exponents, TowerPtr tower);

/// Length the family uses for (q, r); throws if the family does not apply.
uint64_t family_length(BlockFamily f, uint64_t q, uint64_t r);
/// Whether the family's hypotheses hold for the profile.
bool family_applies(BlockFamily f, const CosetProfile& profile);
/// Inclusive index range; single-member families report {0, 0}.
std::pair<int64_t, int64_t> family_index_range(BlockFamily f, const CosetProfile& profile);
/// Coset representatives in construction order (the last one is the newest coset).
std::vector<uint64_t> family_exponents(BlockFamily f, const CosetProfile& profile, int64_t i);
BlockClaim family_claim(BlockFamily f, const CosetProfile& profile, int64_t i);

TowerPtr family_tower(BlockFamily f, uint64_t q, uint64_t r, const FieldOptions& opts = {});
ConstacyclicCode build_family(BlockFamily f, TowerPtr tower, int64_t i);

/// Rows (beta^(e c))_{c < n} for each exponent, expanded over GF(q) and
/// reduced top-down to independent rows.
MatrixQ parity_check_from_exponents(const std::vector<uint64_t>& exponents, const ExtensionTower& tower);
/// Uses the code's parity exponents, or its longest run followed by the rest
/// of the defining set. Always has n - dim rows.
MatrixQ parity_check_matrix(const ConstacyclicCode& code);

/// k x n, row i = coefficients of x^i g(x).
MatrixQ generator_matrix(const ConstacyclicCode& code);
bool is_codeword(std::span<const uint32_t> c, const ConstacyclicCode& code);
/// (alpha c_{n-1}, c_0, ..., c_{n-2})
std::vector<uint32_t> constacyclic_shift(std::span<const uint32_t> c, const ConstacyclicCode& code);
/// Generator matrix of the Euclidean dual (null space of the generator matrix).
MatrixQ dual_code_matrixlevel(const ConstacyclicCode& code);
/// (x^n - alpha) / g(x); throws if g does not divide.
Poly check_polynomial(const ConstacyclicCode& code);

}  // namespace constamax
