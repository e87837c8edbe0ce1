#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "constamax/cosets.hpp"
#include "constamax/field.hpp"

namespace constamax {

/// GF(q) inside GF(q^m), m = ord_rn(q), with the roots of unity the
/// constacyclic machinery needs:
///   beta  - primitive rn-th root of unity in GF(q^m), generator^((q^m-1)/rn)
///   xi    - beta^r, a primitive n-th root of unity
///   alpha - the element of GF(q) embedding to beta^n; it has order r
///
/// The expansion basis of GF(q^m) over GF(q) is the power basis
/// {1, w, ..., w^(m-1)} of the extension generator w.
class ExtensionTower {
 public:
  const CosetProfile& profile() const { return profile_; }
  const FieldPtr& base() const { return base_; }
  const FieldPtr& ext() const { return ext_; }
  uint64_t m() const { return m_; }
  uint32_t beta() const { return beta_; }
  uint32_t xi() const { return xi_; }
  uint32_t alpha() const { return alpha_; }

  /// beta^k in the extension field.
  uint32_t beta_pow(int64_t k) const { return ext_->exp(static_cast<int64_t>(beta_log_) * (k % static_cast<int64_t>(profile_.rn))); }

  uint32_t embed(uint32_t a) const { return embed_[a]; }
  /// Inverse of embed on its image.
  std::optional<uint32_t> restrict_to_base(uint32_t x) const;

  /// Coordinates of x in the power basis, each in GF(q).
  std::vector<uint32_t> coordinates(uint32_t x) const;
  uint32_t from_coordinates(std::span<const uint32_t> coords) const;

  friend ExtensionTower build_tower(const CosetProfile& profile, const FieldOptions& opts);

 private:
  CosetProfile profile_;
  FieldPtr base_, ext_;
  uint64_t m_ = 1;
  uint32_t beta_ = 1, xi_ = 1, alpha_ = 1;
  uint64_t beta_log_ = 0;
  std::vector<uint32_t> embed_;
  std::vector<int64_t> restrict_;
  // GF(p)-linear change of basis: ext coefficient digits -> (j, t) digits
  // where x = sum_j (sum_t c_{j,t} h^t) w^j and h = embed(x_base).
  std::vector<uint32_t> basis_inverse_;
  std::vector<uint32_t> basis_images_;  // h^t w^j for j < m, t < e
};

using TowerPtr = std::shared_ptr<const ExtensionTower>;

ExtensionTower build_tower(const CosetProfile& profile, const FieldOptions& opts = {});
TowerPtr make_tower(uint64_t q, uint64_t r, uint64_t n, const FieldOptions& opts = {});

/// Splits v over GF(q^m) into m vectors over GF(q): v_i = sum_j u^(j)_i w^j.
std::vector<std::vector<uint32_t>> expand_over_base(std::span<const uint32_t> v, const ExtensionTower& tower);

}  // namespace constamax
