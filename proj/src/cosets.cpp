#include "constamax/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "constamax/error.hpp"
#include "constamax/field.hpp"

namespace constamax {

std::string to_string(LemmaTag t) {
  switch (t) {
    case LemmaTag::L1: return "L1";
    case LemmaTag::L2: return "L2";
    case LemmaTag::L3: return "L3";
    case LemmaTag::L4: return "L4";
    case LemmaTag::L5: return "L5";
    case LemmaTag::RS: return "RS";
    case LemmaTag::Other: return "other";
  }
  return "other";
}

CosetProfile CosetProfile::make(uint64_t q, uint64_t r, uint64_t n) {
  prime_power(q);
  require(r >= 1 && n >= 1, "r and n must be positive");
  require((q - 1) % r == 0, "r must divide q - 1");
  require(std::gcd(n, q) == 1, "gcd(n, q) must be 1");
  CosetProfile p;
  p.q = q;
  p.r = r;
  p.n = n;
  p.cofactor = (q - 1) / r;
  p.rn = r * n;
  p.tag = LemmaTag::Other;
  for (LemmaTag t : {LemmaTag::L1, LemmaTag::L2, LemmaTag::L3, LemmaTag::L4, LemmaTag::L5, LemmaTag::RS}) {
    if (p.satisfies(t)) {
      p.tag = t;
      break;
    }
  }
  return p;
}

bool CosetProfile::satisfies(LemmaTag t) const {
  // L1-L4 assume alpha != 1, so r >= 2
  const bool odd = q % 2 == 1 && r >= 2;
  const bool even_cof = cofactor % 2 == 0;
  switch (t) {
    case LemmaTag::L1: return odd && n == q + 1 && even_cof;
    case LemmaTag::L2: return odd && n == q + 1 && !even_cof;
    case LemmaTag::L3: return r >= 2 && q % 4 == 1 && 2 * n == q + 1 && even_cof;
    case LemmaTag::L4: return r >= 2 && q % 4 == 3 && 2 * n == q + 1 && even_cof;
    case LemmaTag::L5: return q >= 4 && (q & (q - 1)) == 0 && n == q + 1;
    case LemmaTag::RS: return rn == q - 1;
    case LemmaTag::Other: return false;
  }
  return false;
}

std::vector<uint64_t> CosetProfile::orn() const {
  std::vector<uint64_t> out;
  out.reserve(n);
  for (uint64_t i = 0; i < n; ++i) out.push_back((1 + r * i) % rn);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t CosetProfile::mod(int64_t v) const {
  const int64_t m = static_cast<int64_t>(rn);
  int64_t x = v % m;
  return static_cast<uint64_t>(x < 0 ? x + m : x);
}

size_t CosetPartition::total_size() const {
  size_t s = 0;
  for (const auto& c : cosets) s += c.size();
  return s;
}

const CyclotomicCoset* CosetPartition::find(uint64_t s) const {
  for (const auto& c : cosets)
    if (std::binary_search(c.elements.begin(), c.elements.end(), s)) return &c;
  return nullptr;
}

CyclotomicCoset orbit(uint64_t s, const CosetProfile& profile) {
  require(s < profile.rn, "residue out of range");
  CyclotomicCoset c;
  uint64_t x = s;
  do {
    c.elements.push_back(x);
    x = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * profile.q) % profile.rn);
  } while (x != s);
  std::sort(c.elements.begin(), c.elements.end());
  c.representative = c.elements.front();
  return c;
}

CosetPartition partition_orn(const CosetProfile& profile) {
  CosetPartition part{profile, {}};
  std::vector<bool> seen(profile.rn, false);
  for (uint64_t s : profile.orn()) {
    if (seen[s]) continue;
    CyclotomicCoset c = orbit(s, profile);
    for (uint64_t x : c.elements) seen[x] = true;
    part.cosets.push_back(std::move(c));
  }
  std::sort(part.cosets.begin(), part.cosets.end(),
            [](const auto& a, const auto& b) { return a.representative < b.representative; });
  return part;
}

namespace {

CyclotomicCoset make_coset(std::initializer_list<uint64_t> xs) {
  std::set<uint64_t> s(xs);
  CyclotomicCoset c;
  c.elements.assign(s.begin(), s.end());
  c.representative = c.elements.front();
  return c;
}

}  // namespace

CosetPartition predict_partition(const CosetProfile& profile, std::optional<LemmaTag> tag) {
  const LemmaTag t = tag.value_or(profile.tag);
  require(t != LemmaTag::Other, "no closed-form coset structure for this profile");
  require(profile.satisfies(t), "profile does not meet the hypotheses of " + to_string(t));
  const auto& P = profile;
  const int64_t r = static_cast<int64_t>(P.r);
  const int64_t n = static_cast<int64_t>(P.n);
  const int64_t q = static_cast<int64_t>(P.q);
  auto m = [&](int64_t v) { return P.mod(v); };

  CosetPartition part{profile, {}};
  auto& out = part.cosets;
  switch (t) {
    case LemmaTag::L1: {
      const int64_t s = n / 2;
      out.push_back(make_coset({m(s)}));
      out.push_back(make_coset({m((r + 1) * s)}));
      for (int64_t i = 1; i <= s - 1; ++i) out.push_back(make_coset({m(s - r * i), m(s + r * i)}));
      break;
    }
    case LemmaTag::L2: {
      const int64_t tt = (n + r) / 2;
      for (int64_t i = 0; i <= n / 2 - 1; ++i) out.push_back(make_coset({m(tt + r * i), m(tt - r * i - r)}));
      break;
    }
    case LemmaTag::L3: {
      out.push_back(make_coset({m(n)}));
      for (int64_t i = 1; i <= (n - 1) / 2; ++i) out.push_back(make_coset({m(n - r * i), m(n + r * i)}));
      break;
    }
    case LemmaTag::L4: {
      out.push_back(make_coset({m(n)}));
      out.push_back(make_coset({m((r + 2) * n / 2)}));
      for (int64_t i = 1; i <= n / 2 - 1; ++i) out.push_back(make_coset({m(n - r * i), m(n + r * i)}));
      break;
    }
    case LemmaTag::L5: {
      const int64_t i0 = (static_cast<int64_t>(P.cofactor) - 1) / 2;
      const int64_t s = 1 + r * i0;
      const int64_t tt = s + r * (1 + q / 2);
      out.push_back(make_coset({m(tt)}));
      out.push_back(make_coset({m(s), m(s + r)}));
      for (int64_t i = 1; i <= q / 2 - 1; ++i) out.push_back(make_coset({m(s - r * i), m(s + r + r * i)}));
      break;
    }
    case LemmaTag::RS: {
      for (int64_t i = 0; i < n; ++i) out.push_back(make_coset({m(1 + r * i)}));
      break;
    }
    case LemmaTag::Other: break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.representative < b.representative; });
  return part;
}

bool same_partition(const CosetPartition& a, const CosetPartition& b) { return a.cosets == b.cosets; }

Run longest_run(const std::vector<uint64_t>& Z, const CosetProfile& profile) {
  const uint64_t n = profile.n;
  std::vector<bool> present(n, false);
  for (uint64_t e : Z) {
    require(profile.in_orn(e), "longest_run: residue not in O_rn");
    present[((e + profile.rn - 1) % profile.rn) / profile.r] = true;
  }
  Run best;
  const auto count = std::count(present.begin(), present.end(), true);
  if (count == 0) return best;
  if (static_cast<uint64_t>(count) == n) return {profile.mod(1), n};
  for (uint64_t i = 0; i < n; ++i) {
    if (!present[i] || present[(i + n - 1) % n]) continue;
    uint64_t len = 0;
    while (present[(i + len) % n]) ++len;
    if (len > best.length) best = {profile.mod(static_cast<int64_t>(1 + profile.r * i)), len};
  }
  return best;
}

uint64_t multiplicative_order(uint64_t q, uint64_t modulus) {
  require(modulus >= 1 && std::gcd(q, modulus) == 1, "q must be invertible modulo rn");
  if (modulus == 1) return 1;
  uint64_t x = q % modulus, k = 1;
  while (x != 1) {
    x = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * q) % modulus);
    ++k;
  }
  return k;
}

std::vector<uint64_t> coset_closure(const std::vector<uint64_t>& residues, const CosetProfile& profile) {
  std::set<uint64_t> out;
  for (uint64_t s : residues) {
    const auto c = orbit(profile.mod(static_cast<int64_t>(s)), profile);
    out.insert(c.elements.begin(), c.elements.end());
  }
  return {out.begin(), out.end()};
}

}  // namespace constamax
