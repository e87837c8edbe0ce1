#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "constamax/error.hpp"

namespace constamax {

/// Irreducible moduli, one per (p, e). Text format, one entry per line:
///
///     p e c0 c1 ... ce
///
/// with the coefficients of the monic modulus listed constant term first.
/// Lines starting with '#' are comments; a `# version: <tag>` comment names
/// the table revision.
class ModulusTable {
 public:
  static const ModulusTable& builtin();
  static ModulusTable parse(std::string_view text);
  static ModulusTable load(const std::string& path);

  const std::vector<uint32_t>* find(uint32_t p, uint32_t e) const;
  void insert(uint32_t p, uint32_t e, std::vector<uint32_t> coeffs);
  size_t size() const { return entries_.size(); }
  const std::string& version() const { return version_; }

 private:
  std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> entries_;
  std::string version_;
};

struct FieldOptions {
  const ModulusTable* table = nullptr;  // nullptr = builtin table
  bool allow_search = true;             // fall back to a modulus search
  uint64_t size_ceiling = uint64_t{1} << 20;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^e) with a fixed modulus and a verified primitive element.
///
/// Elements are encoded as integers: the coefficient vector (c0, ..., c_{e-1})
/// of the residue polynomial maps to c0 + c1 p + ... + c_{e-1} p^{e-1}. So 0
/// and 1 encode themselves, and prime-field elements are plain residues.
/// Arithmetic works on these raw codes; the Element wrapper below adds the
/// context check for public use.
class Field {
 public:
  Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return e_; }
  uint32_t size() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  uint32_t generator() const { return gen_; }
  uint64_t id() const { return id_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (e_ == 1) {
      uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[size_t{a} * q_ + b];
    return add_digits(a, b);
  }
  uint32_t neg(uint32_t a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    return neg_table_[a];
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[size_t{a} * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, int64_t k) const;

  /// Discrete log base generator(); a must be nonzero.
  uint32_t log(uint32_t a) const;
  /// generator()^k for any integer k.
  uint32_t exp(int64_t k) const;

  /// Multiplicative order of a nonzero element.
  uint64_t order_of(uint32_t a) const;

  std::vector<uint32_t> coefficients(uint32_t a) const;
  uint32_t from_coefficients(std::span<const uint32_t> c) const;
  /// Image of an integer in the prime subfield.
  uint32_t from_integer(int64_t v) const;

  std::string to_string(uint32_t a) const;

 private:
  uint32_t add_digits(uint32_t a, uint32_t b) const;

  uint32_t p_, e_, q_;
  std::vector<uint32_t> modulus_;
  uint32_t gen_ = 0;
  uint64_t id_;
  std::vector<uint32_t> exp_;  // length 2(q-1), so exp_[i + j] needs no reduction
  std::vector<uint32_t> log_;
  std::vector<uint32_t> add_table_;
  std::vector<uint32_t> mul_table_;
  std::vector<uint32_t> neg_table_;
};

/// Builds GF(p^e). The modulus comes from the table; without an entry a
/// deterministic search picks the least primitive polynomial in the
/// alternating-sign coefficient order (the order Conway polynomials use).
FieldPtr make_field(uint32_t p, uint32_t e, const FieldOptions& opts = {});

/// The modulus the fallback search would pick for (p, e).
std::vector<uint32_t> search_modulus(uint32_t p, uint32_t e);

bool is_prime(uint64_t v);
/// Returns (p, e) with q = p^e, or throws if q is not a prime power.
std::pair<uint32_t, uint32_t> prime_power(uint64_t q);
std::vector<uint64_t> prime_factors(uint64_t v);

/// Irreducibility over Z_p via gcd(f, x^{p^i} - x) = 1 for i <= deg/2.
bool is_irreducible(uint32_t p, std::span<const uint32_t> monic);

/// An element bound to its field. Mixing contexts throws FieldMismatchError.
class Element {
 public:
  Element(FieldPtr field, uint32_t value);

  const FieldPtr& field() const { return field_; }
  uint32_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element operator-() const;
  Element inverse() const;
  Element pow(int64_t k) const;

  bool operator==(const Element& o) const;

 private:
  void check(const Element& o) const;

  FieldPtr field_;
  uint32_t value_;
};

uint64_t element_order(const Element& a);

}  // namespace constamax
