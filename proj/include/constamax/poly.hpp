#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "constamax/field.hpp"

namespace constamax {

/// Polynomial over one field context, constant term first, no trailing zeros.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr field, std::vector<uint32_t> coeffs);

  static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
  static Poly one(FieldPtr field) { return Poly(std::move(field), {1}); }
  /// x^n - c
  static Poly binomial(FieldPtr field, size_t n, uint32_t c);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }

  uint32_t eval(uint32_t x) const;
  /// Coefficient vector padded with zeros to length n.
  std::vector<uint32_t> padded(size_t n) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(uint32_t a) const;
  bool operator==(const Poly& o) const;

  std::string to_string() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<uint32_t> c_;
};

struct PolyDivision {
  Poly quotient, remainder;
};
PolyDivision divmod(const Poly& a, const Poly& b);

}  // namespace constamax
