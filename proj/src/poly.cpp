#include "constamax/poly.hpp"

#include <algorithm>

namespace constamax {

namespace {

void same_field(const Poly& a, const Poly& b) {
  if (a.field().id() != b.field().id()) throw FieldMismatchError("polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<uint32_t> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  require(field_ != nullptr, "polynomial needs a field");
  for (uint32_t v : c_) require(v < field_->size(), "coefficient outside the field");
  trim();
}

Poly Poly::binomial(FieldPtr field, size_t n, uint32_t c) {
  std::vector<uint32_t> v(n + 1, 0);
  v[0] = field->neg(c);
  v[n] = 1;
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint32_t Poly::eval(uint32_t x) const {
  const Field& f = *field_;
  uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

std::vector<uint32_t> Poly::padded(size_t n) const {
  require(c_.size() <= n, "polynomial longer than the requested length");
  std::vector<uint32_t> v(c_);
  v.resize(n, 0);
  return v;
}

Poly Poly::operator+(const Poly& o) const {
  same_field(*this, o);
  std::vector<uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = field_->add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  same_field(*this, o);
  std::vector<uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < v.size(); ++i) v[i] = field_->sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  same_field(*this, o);
  if (is_zero() || o.is_zero()) return zero(field_);
  const Field& f = *field_;
  std::vector<uint32_t> v(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(c_[i], o.c_[j]));
  }
  return Poly(field_, std::move(v));
}

Poly Poly::scaled(uint32_t a) const {
  std::vector<uint32_t> v(c_);
  for (auto& x : v) x = field_->mul(x, a);
  return Poly(field_, std::move(v));
}

bool Poly::operator==(const Poly& o) const {
  return field_ && o.field_ && field_->id() == o.field_->id() && c_ == o.c_;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string coef = field_->to_string(c_[i]);
    if (i == 0) {
      out += coef;
      continue;
    }
    if (c_[i] != 1) out += coef + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  same_field(a, b);
  require(!b.is_zero(), "division by the zero polynomial");
  const Field& f = a.field();
  std::vector<uint32_t> rem(a.coeffs());
  const auto& d = b.coeffs();
  if (rem.size() < d.size()) return {Poly::zero(a.field_ptr()), a};
  std::vector<uint32_t> quo(rem.size() - d.size() + 1, 0);
  const uint32_t lead_inv = f.inv(d.back());
  for (size_t k = quo.size(); k-- > 0;) {
    const uint32_t c = f.mul(rem[k + d.size() - 1], lead_inv);
    quo[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < d.size(); ++j) rem[k + j] = f.sub(rem[k + j], f.mul(c, d[j]));
  }
  return {Poly(a.field_ptr(), std::move(quo)), Poly(a.field_ptr(), std::move(rem))};
}

}  // namespace constamax
