#include "constamax/tower.hpp"

#include "constamax/error.hpp"

namespace constamax {

namespace {

// Inverse of a square matrix over Z_p (row-major), throws if singular.
std::vector<uint32_t> invert_mod_p(std::vector<uint32_t> a, size_t dim, uint32_t p) {
  std::vector<uint64_t> m(dim * 2 * dim, 0);
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) m[i * 2 * dim + j] = a[i * dim + j];
    m[i * 2 * dim + dim + i] = 1;
  }
  auto inv = [p](uint64_t x) {
    uint64_t r = 1, b = x % p, k = p - 2;
    while (k) {
      if (k & 1) r = r * b % p;
      b = b * b % p;
      k >>= 1;
    }
    return r;
  };
  const size_t w = 2 * dim;
  for (size_t c = 0; c < dim; ++c) {
    size_t sel = c;
    while (sel < dim && m[sel * w + c] == 0) ++sel;
    ensure(sel < dim, "power basis is singular");
    if (sel != c)
      for (size_t j = 0; j < w; ++j) std::swap(m[sel * w + j], m[c * w + j]);
    const uint64_t iv = inv(m[c * w + c]);
    for (size_t j = 0; j < w; ++j) m[c * w + j] = m[c * w + j] * iv % p;
    for (size_t i = 0; i < dim; ++i) {
      if (i == c || m[i * w + c] == 0) continue;
      const uint64_t f = m[i * w + c];
      for (size_t j = 0; j < w; ++j) m[i * w + j] = (m[i * w + j] + (p - f) * m[c * w + j]) % p;
    }
  }
  std::vector<uint32_t> out(dim * dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) out[i * dim + j] = static_cast<uint32_t>(m[i * w + dim + j]);
  return out;
}

}  // namespace

ExtensionTower build_tower(const CosetProfile& profile, const FieldOptions& opts) {
  ExtensionTower t;
  t.profile_ = profile;
  const auto [p, e] = prime_power(profile.q);
  t.base_ = make_field(p, e, opts);
  t.m_ = multiplicative_order(profile.q, profile.rn);
  const Field& B = *t.base_;

  uint32_t h;
  if (t.m_ == 1) {
    t.ext_ = t.base_;
    h = e > 1 ? p : B.generator();
  } else {
    t.ext_ = make_field(p, static_cast<uint32_t>(e * t.m_), opts);
    const Field& E = *t.ext_;
    const uint64_t c = (E.size() - 1) / (B.size() - 1);
    std::optional<uint32_t> root;
    for (uint64_t j = 0; j + 1 < B.size() && !root; ++j) {
      const uint32_t cand = E.exp(static_cast<int64_t>(c * j));
      uint32_t acc = 0, pw = 1;
      for (uint32_t coeff : B.modulus()) {
        acc = E.add(acc, E.mul(E.from_integer(coeff), pw));
        pw = E.mul(pw, cand);
      }
      if (acc == 0) root = cand;
    }
    ensure(root.has_value(), "base modulus has no root in the extension");
    h = *root;
  }
  const Field& E = *t.ext_;

  t.embed_.resize(B.size());
  t.restrict_.assign(E.size(), -1);
  for (uint32_t a = 0; a < B.size(); ++a) {
    uint32_t acc = 0, pw = 1;
    for (uint32_t coeff : B.coefficients(a)) {
      acc = E.add(acc, E.mul(E.from_integer(coeff), pw));
      pw = E.mul(pw, h);
    }
    t.embed_[a] = acc;
    ensure(t.restrict_[acc] == -1, "embedding is not injective");
    t.restrict_[acc] = a;
  }

  const uint64_t Q1 = E.size() - 1;
  ensure(Q1 % profile.rn == 0, "rn does not divide q^m - 1");
  t.beta_log_ = Q1 / profile.rn;
  t.beta_ = E.exp(static_cast<int64_t>(t.beta_log_));
  t.xi_ = E.pow(t.beta_, static_cast<int64_t>(profile.r));
  const auto alpha = t.restrict_to_base(E.pow(t.beta_, static_cast<int64_t>(profile.n)));
  ensure(alpha.has_value(), "beta^n is not in the base field");
  t.alpha_ = *alpha;
  ensure(B.order_of(t.alpha_) == profile.r, "alpha does not have order r");
  ensure(E.order_of(t.beta_) == profile.rn, "beta is not a primitive rn-th root of unity");

  // power basis w^j over GF(q), flattened over GF(p) as h^t w^j
  const size_t dim = static_cast<size_t>(e * t.m_);
  const uint32_t w = t.m_ == 1 ? 1 : E.generator();
  std::vector<uint32_t> M(dim * dim, 0);
  t.basis_images_.resize(dim);
  uint32_t wj = 1;
  for (size_t j = 0; j < t.m_; ++j) {
    uint32_t ht = 1;
    for (size_t k = 0; k < e; ++k) {
      const uint32_t b = E.mul(ht, wj);
      t.basis_images_[j * e + k] = b;
      const auto digits = E.coefficients(b);
      for (size_t row = 0; row < dim; ++row) M[row * dim + (j * e + k)] = digits[row];
      ht = E.mul(ht, h);
    }
    wj = E.mul(wj, w);
  }
  t.basis_inverse_ = invert_mod_p(std::move(M), dim, p);
  return t;
}

TowerPtr make_tower(uint64_t q, uint64_t r, uint64_t n, const FieldOptions& opts) {
  return std::make_shared<const ExtensionTower>(build_tower(CosetProfile::make(q, r, n), opts));
}

std::optional<uint32_t> ExtensionTower::restrict_to_base(uint32_t x) const {
  const int64_t v = restrict_.at(x);
  if (v < 0) return std::nullopt;
  return static_cast<uint32_t>(v);
}

std::vector<uint32_t> ExtensionTower::coordinates(uint32_t x) const {
  const Field& E = *ext_;
  const uint32_t p = E.characteristic();
  const uint32_t e = base_->degree();
  const size_t dim = basis_images_.size();
  const auto digits = E.coefficients(x);
  std::vector<uint32_t> out(m_, 0);
  for (size_t j = 0; j < m_; ++j) {
    uint32_t code = 0, scale = 1;
    for (size_t k = 0; k < e; ++k) {
      const size_t row = j * e + k;
      uint64_t acc = 0;
      for (size_t c = 0; c < dim; ++c) acc += uint64_t{basis_inverse_[row * dim + c]} * digits[c];
      code += static_cast<uint32_t>(acc % p) * scale;
      scale *= p;
    }
    out[j] = code;
  }
  return out;
}

uint32_t ExtensionTower::from_coordinates(std::span<const uint32_t> coords) const {
  require(coords.size() == m_, "coordinate count must equal m");
  const Field& E = *ext_;
  const uint32_t w = m_ == 1 ? 1 : E.generator();
  uint32_t acc = 0, wj = 1;
  for (uint32_t u : coords) {
    acc = E.add(acc, E.mul(embed(u), wj));
    wj = E.mul(wj, w);
  }
  return acc;
}

std::vector<std::vector<uint32_t>> expand_over_base(std::span<const uint32_t> v, const ExtensionTower& tower) {
  std::vector<std::vector<uint32_t>> out(tower.m(), std::vector<uint32_t>(v.size(), 0));
  for (size_t i = 0; i < v.size(); ++i) {
    require(v[i] < tower.ext()->size(), "expand_over_base: element not in the tower's extension field");
    const auto c = tower.coordinates(v[i]);
    for (size_t j = 0; j < tower.m(); ++j) out[j][i] = c[j];
  }
  return out;
}

}  // namespace constamax
