#include "constamax/blockcodes.hpp"

#include <algorithm>
#include <set>

#include "constamax/error.hpp"

namespace constamax {

namespace {

struct FamilyName {
  BlockFamily family;
  const char* name;
};

constexpr FamilyName kFamilyNames[] = {
    {BlockFamily::ClassI, "mainclasI"},       {BlockFamily::ClassII, "mainclasII"},
    {BlockFamily::ClassIII, "mainclasIII"},   {BlockFamily::ClassIIIA, "mainclasIIIA"},
    {BlockFamily::ClassIIIB, "mainclasIIIB"}, {BlockFamily::ClassIV, "mainclasIV"},
    {BlockFamily::ClassIVAa, "mainclasIVA-a"}, {BlockFamily::ClassIVAb, "mainclasIVA-b"},
    {BlockFamily::ClassV, "mainclasV"},       {BlockFamily::Custom, "custom"},
};

bool is_odd_prime_power(uint64_t q) { return q % 2 == 1; }

// Cyclic families live at r = 1 with lengths 2q + 2 or 2q - 2.
bool cyclic_family(BlockFamily f) {
  return f == BlockFamily::ClassIV || f == BlockFamily::ClassIVAa || f == BlockFamily::ClassIVAb ||
         f == BlockFamily::ClassV;
}

// s and t of the characteristic-two coset structure
std::pair<int64_t, int64_t> even_anchors(const CosetProfile& p) {
  const int64_t r = static_cast<int64_t>(p.r);
  const int64_t s = 1 + r * ((static_cast<int64_t>(p.cofactor) - 1) / 2);
  const int64_t t = static_cast<int64_t>(p.mod(s + r * (1 + static_cast<int64_t>(p.q) / 2)));
  return {s, t};
}

}  // namespace

std::string to_string(BlockFamily f) {
  for (const auto& e : kFamilyNames)
    if (e.family == f) return e.name;
  return "custom";
}

std::optional<BlockFamily> parse_block_family(const std::string& name) {
  for (const auto& e : kFamilyNames)
    if (name == e.name) return e.family;
  if (name == "mainclasIVA") return BlockFamily::ClassIVAa;
  return std::nullopt;
}

std::vector<BlockFamily> all_block_families() {
  return {BlockFamily::ClassI,    BlockFamily::ClassII, BlockFamily::ClassIII,  BlockFamily::ClassIIIA,
          BlockFamily::ClassIIIB, BlockFamily::ClassIV, BlockFamily::ClassIVAa, BlockFamily::ClassIVAb,
          BlockFamily::ClassV};
}

Poly minimal_poly(uint64_t j, const ExtensionTower& tower) {
  const auto& prof = tower.profile();
  require(j < prof.rn, "minimal_poly: residue out of range");
  const FieldPtr& E = tower.ext();
  Poly m = Poly::one(E);
  for (uint64_t e : orbit(j, prof).elements)
    m = m * Poly(E, {E->neg(tower.beta_pow(static_cast<int64_t>(e))), 1});
  std::vector<uint32_t> base;
  base.reserve(m.coeffs().size());
  for (uint32_t c : m.coeffs()) {
    const auto b = tower.restrict_to_base(c);
    ensure(b.has_value(), "minimal polynomial has a coefficient outside GF(q)");
    base.push_back(*b);
  }
  return Poly(tower.base(), std::move(base));
}

ConstacyclicCode code_from_defining_set(std::vector<uint64_t> Z, TowerPtr tower) {
  require(tower != nullptr, "code needs a tower");
  const auto& prof = tower->profile();
  std::sort(Z.begin(), Z.end());
  Z.erase(std::unique(Z.begin(), Z.end()), Z.end());
  for (uint64_t e : Z) require(prof.in_orn(e), "defining set element " + std::to_string(e) + " is not in O_rn");
  require(coset_closure(Z, prof) == Z, "defining set is not a union of cyclotomic cosets");

  ConstacyclicCode code;
  code.tower = tower;
  code.defining_set = Z;
  Poly g = Poly::one(tower->base());
  std::set<uint64_t> done;
  for (uint64_t e : Z) {
    if (done.count(e)) continue;
    const auto c = orbit(e, prof);
    done.insert(c.elements.begin(), c.elements.end());
    g = g * minimal_poly(e, *tower);
  }
  ensure(static_cast<uint64_t>(g.degree()) == Z.size(), "generator degree differs from |Z|");
  code.generator = std::move(g);
  code.dim = prof.n - Z.size();
  code.run = longest_run(Z, prof);
  code.designed_distance = code.run.length + 1;
  check_polynomial(code);  // asserts g | x^n - alpha
  return code;
}

ConstacyclicCode code_from_exponents(const std::vector<uint64_t>& exponents, TowerPtr tower) {
  require(tower != nullptr, "code needs a tower");
  std::vector<uint64_t> reps;
  for (uint64_t e : exponents) reps.push_back(tower->profile().mod(static_cast<int64_t>(e)));
  auto code = code_from_defining_set(coset_closure(reps, tower->profile()), tower);
  code.parity_exponents = std::move(reps);
  return code;
}

uint64_t family_length(BlockFamily f, uint64_t q, uint64_t r) {
  require(q >= 2, "q must be a prime power");
  switch (f) {
    case BlockFamily::ClassI:
    case BlockFamily::ClassII:
    case BlockFamily::ClassIIIA:
    case BlockFamily::ClassIIIB: return q + 1;
    case BlockFamily::ClassIII: return (q + 1) / 2;
    case BlockFamily::ClassIV:
    case BlockFamily::ClassV: return 2 * q + 2;
    case BlockFamily::ClassIVAa:
    case BlockFamily::ClassIVAb: return 2 * q - 2;
    case BlockFamily::Custom: break;
  }
  (void)r;
  throw PreconditionError("custom codes have no fixed length");
}

bool family_applies(BlockFamily f, const CosetProfile& p) {
  const uint64_t q = p.q;
  switch (f) {
    case BlockFamily::ClassI: return p.satisfies(LemmaTag::L1);
    case BlockFamily::ClassII: return p.satisfies(LemmaTag::L2);
    case BlockFamily::ClassIII: return p.satisfies(LemmaTag::L3);
    case BlockFamily::ClassIIIA:
    case BlockFamily::ClassIIIB: return p.satisfies(LemmaTag::L5);
    case BlockFamily::ClassIV: return is_odd_prime_power(q) && q % 4 == 3 && p.r == 1 && p.n == 2 * q + 2;
    case BlockFamily::ClassV: return is_odd_prime_power(q) && q % 4 == 1 && p.r == 1 && p.n == 2 * q + 2;
    case BlockFamily::ClassIVAa: return is_odd_prime_power(q) && q >= 5 && p.r == 1 && p.n == 2 * q - 2;
    case BlockFamily::ClassIVAb: return is_odd_prime_power(q) && q >= 7 && p.r == 1 && p.n == 2 * q - 2;
    case BlockFamily::Custom: return true;
  }
  return false;
}

std::pair<int64_t, int64_t> family_index_range(BlockFamily f, const CosetProfile& p) {
  const int64_t n = static_cast<int64_t>(p.n);
  switch (f) {
    case BlockFamily::ClassI: return {0, n / 2 - 1};
    case BlockFamily::ClassII: return {0, n / 2 - 2};
    case BlockFamily::ClassIII: return {0, (n - 1) / 2 - 1};
    case BlockFamily::ClassIIIA: return {0, (n - 1) / 2 - 2};
    case BlockFamily::ClassIIIB: return {0, (n - 1) / 2 - 1};
    default: return {0, 0};
  }
}

std::vector<uint64_t> family_exponents(BlockFamily f, const CosetProfile& p, int64_t i) {
  require(family_applies(f, p), to_string(f) + " does not apply to q=" + std::to_string(p.q) +
                                    ", r=" + std::to_string(p.r) + ", n=" + std::to_string(p.n));
  const auto [lo, hi] = family_index_range(f, p);
  require(i >= lo && i <= hi, to_string(f) + " index " + std::to_string(i) + " outside [" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + "]");
  const int64_t r = static_cast<int64_t>(p.r);
  const int64_t n = static_cast<int64_t>(p.n);
  const int64_t q = static_cast<int64_t>(p.q);
  std::vector<int64_t> e;
  switch (f) {
    case BlockFamily::ClassI:
      for (int64_t l = 0; l <= i; ++l) e.push_back(n / 2 + r * l);
      break;
    case BlockFamily::ClassII:
      for (int64_t l = 0; l <= i; ++l) e.push_back((n + r) / 2 + r * l);
      break;
    case BlockFamily::ClassIII:
      for (int64_t l = 0; l <= i; ++l) e.push_back(n + r * l);
      break;
    case BlockFamily::ClassIIIA: {
      const auto [s, t] = even_anchors(p);
      for (int64_t l = 0; l <= i; ++l) e.push_back(s - r * l);
      break;
    }
    case BlockFamily::ClassIIIB: {
      const auto [s, t] = even_anchors(p);
      for (int64_t l = 0; l <= i; ++l) e.push_back(t - r * l);
      break;
    }
    case BlockFamily::ClassIV: e = {(q - 1) / 2, (q - 1) / 2 + 1}; break;
    case BlockFamily::ClassV: e = {(q + 1) / 2, (q + 1) / 2 + 1}; break;
    case BlockFamily::ClassIVAa: e = {2, 3, 4}; break;
    case BlockFamily::ClassIVAb: e = {0, 1, 2, 3, 4}; break;
    case BlockFamily::Custom: throw PreconditionError("custom codes have no exponent recipe");
  }
  std::vector<uint64_t> out;
  for (int64_t v : e) out.push_back(p.mod(v));
  return out;
}

BlockClaim family_claim(BlockFamily f, const CosetProfile& p, int64_t i) {
  const uint64_t n = p.n;
  const uint64_t u = static_cast<uint64_t>(i);
  switch (f) {
    case BlockFamily::ClassI:
    case BlockFamily::ClassIII:
    case BlockFamily::ClassIIIB: return {n, n - 2 * u - 1, 2 * u + 2, false};
    case BlockFamily::ClassII:
    case BlockFamily::ClassIIIA: return {n, n - 2 * u - 2, 2 * u + 3, false};
    case BlockFamily::ClassIV:
    case BlockFamily::ClassIVAa: return {n, n - 4, 4, true};
    case BlockFamily::ClassIVAb: return {n, n - 7, 6, true};
    case BlockFamily::ClassV: return {n, n - 3, 3, true};
    case BlockFamily::Custom: break;
  }
  throw PreconditionError("custom codes carry no claim");
}

TowerPtr family_tower(BlockFamily f, uint64_t q, uint64_t r, const FieldOptions& opts) {
  if (cyclic_family(f)) require(r == 1, to_string(f) + " is cyclic (r = 1)");
  return make_tower(q, r, family_length(f, q, r), opts);
}

ConstacyclicCode build_family(BlockFamily f, TowerPtr tower, int64_t i) {
  require(tower != nullptr, "build_family needs a tower");
  auto code = code_from_exponents(family_exponents(f, tower->profile(), i), tower);
  code.family = f;
  code.index = i;
  const auto claim = family_claim(f, tower->profile(), i);
  ensure(code.dim == claim.k, to_string(f) + ": dimension " + std::to_string(code.dim) + " differs from the claimed " +
                                  std::to_string(claim.k));
  return code;
}

MatrixQ parity_check_from_exponents(const std::vector<uint64_t>& exponents, const ExtensionTower& tower) {
  const uint64_t n = tower.profile().n;
  MatrixQ raw(tower.base(), 0, n);
  std::vector<uint32_t> row(n);
  for (uint64_t e : exponents) {
    for (uint64_t c = 0; c < n; ++c)
      row[c] = tower.beta_pow(static_cast<int64_t>((e % tower.profile().rn) * c % tower.profile().rn));
    for (const auto& piece : expand_over_base(row, tower)) raw.append_row(piece);
  }
  if (raw.rows() == 0) return MatrixQ(tower.base(), 0, n);
  return independent_rows(raw);
}

MatrixQ parity_check_matrix(const ConstacyclicCode& code) {
  std::vector<uint64_t> exps = code.parity_exponents;
  if (exps.empty()) {
    for (uint64_t l = 0; l < code.run.length; ++l) exps.push_back(code.profile().mod(static_cast<int64_t>(code.run.start + code.profile().r * l)));
  }
  // rows from any remaining cosets come last; when the list already covers Z
  // they reduce to nothing
  for (uint64_t e : code.defining_set) exps.push_back(e);
  MatrixQ H = parity_check_from_exponents(exps, *code.tower);
  ensure(H.rows() == code.n() - code.dim, "parity-check rank differs from n - k");
  return H;
}

MatrixQ generator_matrix(const ConstacyclicCode& code) {
  const uint64_t n = code.n();
  MatrixQ G(code.base(), 0, n);
  std::vector<uint32_t> row(n);
  const auto& g = code.generator.coeffs();
  for (uint64_t i = 0; i < code.dim; ++i) {
    std::fill(row.begin(), row.end(), 0);
    for (size_t j = 0; j < g.size(); ++j) row[i + j] = g[j];
    G.append_row(row);
  }
  return G;
}

bool is_codeword(std::span<const uint32_t> c, const ConstacyclicCode& code) {
  require(c.size() == code.n(), "is_codeword: length mismatch");
  const auto& T = *code.tower;
  const Field& E = *T.ext();
  const uint64_t rn = code.profile().rn;
  for (uint64_t e : code.defining_set) {
    uint32_t acc = 0;
    for (uint64_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) acc = E.add(acc, E.mul(T.embed(c[i]), T.beta_pow(static_cast<int64_t>(e * i % rn))));
    if (acc != 0) return false;
  }
  return true;
}

std::vector<uint32_t> constacyclic_shift(std::span<const uint32_t> c, const ConstacyclicCode& code) {
  require(c.size() == code.n() && !c.empty(), "constacyclic_shift: length mismatch");
  std::vector<uint32_t> out(c.size());
  out[0] = code.base()->mul(code.tower->alpha(), c.back());
  for (size_t i = 1; i < c.size(); ++i) out[i] = c[i - 1];
  return out;
}

MatrixQ dual_code_matrixlevel(const ConstacyclicCode& code) {
  if (code.dim == 0) {
    MatrixQ I(code.base(), code.n(), code.n());
    for (uint64_t i = 0; i < code.n(); ++i) I(i, i) = 1;
    return I;
  }
  return null_space(generator_matrix(code));
}

Poly check_polynomial(const ConstacyclicCode& code) {
  const auto xn = Poly::binomial(code.base(), code.n(), code.tower->alpha());
  auto [h, rem] = divmod(xn, code.generator);
  ensure(rem.is_zero(), "generator does not divide x^n - alpha");
  return h;
}

}  // namespace constamax
