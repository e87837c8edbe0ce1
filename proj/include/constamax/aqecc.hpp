#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "constamax/blockcodes.hpp"
#include "constamax/distance.hpp"

namespace constamax {

/// CSS families built from nested members of one block family.
enum class AsymFamily { AsyI, AsyII, AsyIII, AsyIV };
std::string to_string(AsymFamily f);  // "mainasyI", ...
std::optional<AsymFamily> parse_asym_family(const std::string& name);
BlockFamily underlying_block_family(AsymFamily f);

/// Upper end of the j range (i ranges over 0..j-1).
int64_t asym_max_index(AsymFamily f, const CosetProfile& profile);
TowerPtr asym_family_tower(AsymFamily f, uint64_t q, uint64_t r, const FieldOptions& opts = {});

/// [[n, k, dx/dz]] as a construction promises it.
struct AqeccClaim {
  uint64_t n = 0, k = 0, dx = 0, dz = 0;
  std::string display() const;  // "[[n, k, dx/dz]]"
};
AqeccClaim asym_claim(AsymFamily f, const CosetProfile& profile, int64_t i, int64_t j);

enum class Purity { Enumerated, Consistent, Unknown };
std::string to_string(Purity p);

struct AqsbResult {
  bool mds = false;
  int64_t defect = 0;  // n - dx - dz + 2 - k
};
/// Throws PreconditionError when k exceeds n - dx - dz + 2.
AqsbResult aqsb_check(uint64_t n, uint64_t k, uint64_t dx, uint64_t dz);

struct AqeccRecord {
  AsymFamily family = AsymFamily::AsyI;
  int64_t i = 0, j = 0;
  ConstacyclicCode C1, C2perp;
  uint64_t n = 0, k1 = 0, k2 = 0, k = 0;
  bool containment = false;  // every generator row of C2perp is a codeword of C1

  // classical distances
  DistanceCertificate d_C1, d_C2, d_C2perp, d_C1perp;
  // dz = wt(C1 \ C2perp), dx = wt(C2 \ C1perp)
  DistanceCertificate dz, dx;
  bool gap_certified = false;  // d(C1) < d(C2perp) and d(C2) < d(C1perp)
  Purity purity = Purity::Unknown;
  bool pure = false;
  bool mds = false;
  int64_t defect = -1;
  AqeccClaim claim;
  bool derived = false;

  std::string display() const;  // certified values, "[[n, k, dx/dz]]"
};

/// Builds C1 = family member i and C2perp = member j and verifies containment.
AqeccRecord css_pair(AsymFamily f, TowerPtr tower, int64_t i, int64_t j);

/// Fills the distances. Relative weights are enumerated when the codeword
/// count fits `enumeration_budget`; otherwise the classical distances decide
/// them when gap_certified holds (purity = consistent).
void derive_params(AqeccRecord& rec, const DistanceOptions& opts = {},
                   uint64_t enumeration_budget = 10'000'000);

}  // namespace constamax
