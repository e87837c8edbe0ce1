#include "constamax/field.hpp"

#include <atomic>
#include <fstream>
#include <numeric>
#include <sstream>

namespace constamax {

namespace detail {
extern const std::string_view kBuiltinModuli;
}

namespace {

std::atomic<uint64_t> next_field_id{1};

// Dense polynomials over Z_p, constant term first. Only used while building a
// field, before the log tables exist.
using ZpPoly = std::vector<uint64_t>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
  // p is prime, so a^(p-2)
  uint64_t r = 1, b = a % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

ZpPoly poly_mod(ZpPoly a, const ZpPoly& f, uint64_t p) {
  trim(a);
  const size_t df = f.size() - 1;
  const uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const uint64_t c = a.back() * lead_inv % p;
    const size_t shift = a.size() - 1 - df;
    for (size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    trim(a);
  }
  return a;
}

ZpPoly poly_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

ZpPoly poly_powmod(ZpPoly base, uint64_t k, const ZpPoly& f, uint64_t p) {
  ZpPoly r{1};
  base = poly_mod(std::move(base), f, p);
  while (k) {
    if (k & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    k >>= 1;
  }
  return r;
}

ZpPoly poly_gcd(ZpPoly a, ZpPoly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ZpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_one(const ZpPoly& a) { return a.size() == 1 && a[0] == 1; }

ZpPoly to_zp(std::span<const uint32_t> c) { return ZpPoly(c.begin(), c.end()); }

ZpPoly decode(uint32_t v, uint32_t p, uint32_t e) {
  ZpPoly c(e, 0);
  for (uint32_t i = 0; i < e; ++i) {
    c[i] = v % p;
    v /= p;
  }
  trim(c);
  return c;
}

uint32_t encode(const ZpPoly& c, uint32_t p) {
  uint32_t v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * p + static_cast<uint32_t>(c[i]);
  return v;
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// x^((q-1)/l) != 1 mod f for every prime l | q-1, f assumed irreducible.
bool x_is_primitive(const ZpPoly& f, uint64_t p, uint64_t q) {
  for (uint64_t l : prime_factors(q - 1)) {
    if (is_one(poly_powmod(ZpPoly{0, 1}, (q - 1) / l, f, p))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::pair<uint32_t, uint32_t> prime_power(uint64_t q) {
  require(q >= 2, "field size must be at least 2");
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      uint32_t e = 0;
      uint64_t t = q;
      while (t % d == 0) {
        t /= d;
        ++e;
      }
      require(t == 1, std::to_string(q) + " is not a prime power");
      return {static_cast<uint32_t>(d), e};
    }
  }
  return {static_cast<uint32_t>(q), 1};
}

bool is_irreducible(uint32_t p, std::span<const uint32_t> monic) {
  ZpPoly f = to_zp(monic);
  trim(f);
  if (f.size() < 2) return false;
  const size_t e = f.size() - 1;
  if (e == 1) return true;
  if (f[0] == 0) return false;
  ZpPoly h{0, 1};
  for (size_t i = 1; i <= e / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    ZpPoly t = h;
    t.resize(std::max<size_t>(t.size(), 2), 0);
    t[1] = (t[1] + p - 1) % p;  // x^{p^i} - x
    trim(t);
    if (poly_gcd(f, t, p).size() != 1) return false;
  }
  return true;
}

std::vector<uint32_t> search_modulus(uint32_t p, uint32_t e) {
  const uint64_t q = ipow(p, e);
  // key digits k_1..k_e (k_1 most significant); c_{e-j} = (-1)^j k_j mod p.
  for (uint64_t key = 0; key < q; ++key) {
    ZpPoly f(e + 1, 0);
    f[e] = 1;
    uint64_t rest = key;
    for (uint32_t j = e; j >= 1; --j) {
      const uint64_t kj = rest % p;
      rest /= p;
      f[e - j] = (j % 2 == 0) ? kj : (p - kj) % p;
    }
    if (f[0] == 0) continue;
    std::vector<uint32_t> c(f.begin(), f.end());
    if (!is_irreducible(p, c)) continue;
    if (!x_is_primitive(f, p, q)) continue;
    return c;
  }
  throw InvariantError("no primitive polynomial found for p=" + std::to_string(p));
}

// ---------------------------------------------------------------------------

const ModulusTable& ModulusTable::builtin() {
  static const ModulusTable table = parse(detail::kBuiltinModuli);
  return table;
}

ModulusTable ModulusTable::parse(std::string_view text) {
  ModulusTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# version:";
      if (line.rfind(tag, 0) == 0) {
        t.version_ = line.substr(tag.size());
        t.version_.erase(0, t.version_.find_first_not_of(' '));
      }
      continue;
    }
    std::istringstream ls(line);
    uint32_t p = 0, e = 0;
    if (!(ls >> p >> e)) throw PreconditionError("modulus table line " + std::to_string(lineno) + ": bad header");
    std::vector<uint32_t> c;
    uint32_t v;
    while (ls >> v) c.push_back(v);
    if (c.size() != e + 1 || c.back() != 1)
      throw PreconditionError("modulus table line " + std::to_string(lineno) + ": expected " +
                              std::to_string(e + 1) + " coefficients of a monic polynomial");
    t.insert(p, e, std::move(c));
  }
  return t;
}

ModulusTable ModulusTable::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot open modulus table " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

const std::vector<uint32_t>* ModulusTable::find(uint32_t p, uint32_t e) const {
  auto it = entries_.find({p, e});
  return it == entries_.end() ? nullptr : &it->second;
}

void ModulusTable::insert(uint32_t p, uint32_t e, std::vector<uint32_t> coeffs) {
  entries_[{p, e}] = std::move(coeffs);
}

// ---------------------------------------------------------------------------

Field::Field(uint32_t p, uint32_t e, std::vector<uint32_t> modulus)
    : p_(p), e_(e), q_(static_cast<uint32_t>(ipow(p, e))), modulus_(std::move(modulus)), id_(next_field_id++) {
  require(is_prime(p), std::to_string(p) + " is not prime");
  require(modulus_.size() == e + 1 && modulus_.back() == 1, "modulus must be monic of degree e");
  for (uint32_t c : modulus_) require(c < p, "modulus coefficient out of range");
  require(is_irreducible(p, modulus_), "modulus is reducible over Z_p");

  const ZpPoly f = to_zp(modulus_);
  const uint64_t order = q_ - 1;
  auto mul_slow = [&](uint32_t a, uint32_t b) {
    return encode(poly_mulmod(decode(a, p_, e_), decode(b, p_, e_), f, p_), p_);
  };

  // Generator: x when the modulus is primitive, else the least full-order code.
  uint32_t x_code = e_ == 1 ? (p_ - modulus_[0]) % p_ : p_;
  auto full_order = [&](uint32_t g) {
    if (g == 0) return false;
    for (uint64_t l : prime_factors(order)) {
      if (is_one(poly_powmod(decode(g, p_, e_), order / l, f, p_))) return false;
    }
    return true;
  };
  if (q_ == 2) {
    gen_ = 1;
  } else if (full_order(x_code)) {
    gen_ = x_code;
  } else {
    for (uint32_t g = 2; g < q_; ++g) {
      if (full_order(g)) {
        gen_ = g;
        break;
      }
    }
    ensure(gen_ != 0, "no primitive element");
  }

  // multiply by x: shift and reduce by the monic modulus
  auto times_x = [&](uint32_t a) {
    ZpPoly c = decode(a, p_, e_);
    c.resize(e_, 0);
    c.insert(c.begin(), 0);
    const uint64_t top = c[e_];
    for (uint32_t i = 0; i < e_; ++i) c[i] = (c[i] + (p_ - top) * modulus_[i]) % p_;
    c.resize(e_);
    trim(c);
    return encode(c, p_);
  };
  const bool gen_is_x = e_ > 1 && gen_ == x_code;

  exp_.assign(2 * order, 0);
  log_.assign(q_, 0);
  uint32_t cur = 1;
  for (uint64_t k = 0; k < order; ++k) {
    exp_[k] = cur;
    exp_[k + order] = cur;
    log_[cur] = static_cast<uint32_t>(k);
    cur = gen_is_x ? times_x(cur) : mul_slow(cur, gen_);
  }
  ensure(cur == 1, "generator order mismatch");

  if (e_ > 1 && p_ != 2) {
    neg_table_.resize(q_);
    for (uint32_t a = 0; a < q_; ++a) {
      ZpPoly c = decode(a, p_, e_);
      for (auto& v : c) v = (p_ - v) % p_;
      trim(c);
      neg_table_[a] = encode(c, p_);
    }
    if (q_ <= 1024) {
      add_table_.resize(size_t{q_} * q_);
      for (uint32_t a = 0; a < q_; ++a)
        for (uint32_t b = 0; b < q_; ++b) add_table_[size_t{a} * q_ + b] = add_digits(a, b);
    }
  }
  if (q_ <= 256) {
    mul_table_.resize(size_t{q_} * q_);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = 0; b < q_; ++b)
        mul_table_[size_t{a} * q_ + b] = (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
  }
}

uint32_t Field::add_digits(uint32_t a, uint32_t b) const {
  uint32_t r = 0, scale = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

uint32_t Field::inv(uint32_t a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  const uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

uint32_t Field::log(uint32_t a) const {
  if (a == 0) throw PreconditionError("log of zero");
  return log_[a];
}

uint32_t Field::exp(int64_t k) const {
  const int64_t order = q_ - 1;
  int64_t r = k % order;
  if (r < 0) r += order;
  return exp_[r];
}

uint32_t Field::pow(uint32_t a, int64_t k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw PreconditionError("negative power of zero");
    return 0;
  }
  const int64_t order = q_ - 1;
  int64_t kr = k % order;
  if (kr < 0) kr += order;
  return exp_[(static_cast<uint64_t>(log_[a]) * static_cast<uint64_t>(kr)) % order];
}

uint64_t Field::order_of(uint32_t a) const {
  if (a == 0) throw PreconditionError("order of zero");
  const uint64_t order = q_ - 1;
  return order / std::gcd<uint64_t>(log_[a], order);
}

std::vector<uint32_t> Field::coefficients(uint32_t a) const {
  std::vector<uint32_t> c(e_);
  for (uint32_t i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

uint32_t Field::from_coefficients(std::span<const uint32_t> c) const {
  require(c.size() <= e_, "too many coefficients");
  uint32_t v = 0;
  for (size_t i = c.size(); i-- > 0;) {
    require(c[i] < p_, "coefficient out of range");
    v = v * p_ + c[i];
  }
  return v;
}

uint32_t Field::from_integer(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

std::string Field::to_string(uint32_t a) const {
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  return "g^" + std::to_string(log_[a]);
}

FieldPtr make_field(uint32_t p, uint32_t e, const FieldOptions& opts) {
  require(is_prime(p), std::to_string(p) + " is not prime");
  require(e >= 1, "field degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q *= p;
    require(q <= opts.size_ceiling, "field size exceeds the configured ceiling");
  }
  const ModulusTable& table = opts.table ? *opts.table : ModulusTable::builtin();
  std::vector<uint32_t> modulus;
  if (const auto* entry = table.find(p, e)) {
    modulus = *entry;
  } else {
    require(opts.allow_search,
            "no modulus table entry for p=" + std::to_string(p) + " e=" + std::to_string(e));
    modulus = search_modulus(p, e);
  }
  return std::make_shared<const Field>(p, e, std::move(modulus));
}

// ---------------------------------------------------------------------------

Element::Element(FieldPtr field, uint32_t value) : field_(std::move(field)), value_(value) {
  require(field_ != nullptr, "element needs a field");
  require(value_ < field_->size(), "element code out of range");
}

void Element::check(const Element& o) const {
  if (field_->id() != o.field_->id()) throw FieldMismatchError("elements belong to different fields");
}

Element Element::operator+(const Element& o) const {
  check(o);
  return {field_, field_->add(value_, o.value_)};
}
Element Element::operator-(const Element& o) const {
  check(o);
  return {field_, field_->sub(value_, o.value_)};
}
Element Element::operator*(const Element& o) const {
  check(o);
  return {field_, field_->mul(value_, o.value_)};
}
Element Element::operator/(const Element& o) const {
  check(o);
  return {field_, field_->div(value_, o.value_)};
}
Element Element::operator-() const { return {field_, field_->neg(value_)}; }
Element Element::inverse() const { return {field_, field_->inv(value_)}; }
Element Element::pow(int64_t k) const { return {field_, field_->pow(value_, k)}; }

bool Element::operator==(const Element& o) const {
  check(o);
  return value_ == o.value_;
}

uint64_t element_order(const Element& a) { return a.field()->order_of(a.value()); }

}  // namespace constamax
