#include "constamax/aqecc.hpp"

#include "constamax/error.hpp"
#include "constamax/kernels.hpp"

namespace constamax {

namespace {

struct AsymName {
  AsymFamily family;
  const char* name;
  BlockFamily block;
};

constexpr AsymName kAsymNames[] = {
    {AsymFamily::AsyI, "mainasyI", BlockFamily::ClassI},
    {AsymFamily::AsyII, "mainasyII", BlockFamily::ClassII},
    {AsymFamily::AsyIII, "mainasyIII", BlockFamily::ClassIII},
    {AsymFamily::AsyIV, "mainasyIV", BlockFamily::ClassIIIA},
};

std::string bracket(uint64_t n, uint64_t k, uint64_t dx, uint64_t dz) {
  return "[[" + std::to_string(n) + ", " + std::to_string(k) + ", " + std::to_string(dx) + "/" + std::to_string(dz) +
         "]]";
}

// Exact value of wt(big \ small) from the classical distances alone: a
// minimum-weight word of `big` lighter than every nonzero word of `small`
// cannot lie in `small`.
DistanceCertificate from_gap(const DistanceCertificate& d_big) {
  DistanceCertificate c = d_big;
  c.method = DistanceMethod::RelativeEnumeration;
  c.note = "equals the classical distance: d(code) < d(subcode)";
  c.witness_columns.clear();
  c.work = 0;
  return c;
}

}  // namespace

std::string to_string(AsymFamily f) {
  for (const auto& e : kAsymNames)
    if (e.family == f) return e.name;
  return "mainasyI";
}

std::optional<AsymFamily> parse_asym_family(const std::string& name) {
  for (const auto& e : kAsymNames)
    if (name == e.name) return e.family;
  return std::nullopt;
}

BlockFamily underlying_block_family(AsymFamily f) {
  for (const auto& e : kAsymNames)
    if (e.family == f) return e.block;
  return BlockFamily::ClassI;
}

int64_t asym_max_index(AsymFamily f, const CosetProfile& p) {
  const int64_t n = static_cast<int64_t>(p.n);
  switch (f) {
    case AsymFamily::AsyI:
    case AsymFamily::AsyII: return n / 2 - 2;
    case AsymFamily::AsyIII: return (n - 1) / 2 - 1;
    case AsymFamily::AsyIV: return (n - 1) / 2 - 2;
  }
  return -1;
}

TowerPtr asym_family_tower(AsymFamily f, uint64_t q, uint64_t r, const FieldOptions& opts) {
  return family_tower(underlying_block_family(f), q, r, opts);
}

std::string AqeccClaim::display() const { return bracket(n, k, dx, dz); }

AqeccClaim asym_claim(AsymFamily f, const CosetProfile& p, int64_t i, int64_t j) {
  const uint64_t n = p.n;
  const uint64_t k = static_cast<uint64_t>(2 * (j - i));
  const uint64_t ui = static_cast<uint64_t>(i), uj = static_cast<uint64_t>(j);
  switch (f) {
    case AsymFamily::AsyI:
    case AsymFamily::AsyIII: return {n, k, n - 2 * uj, 2 * ui + 2};
    case AsymFamily::AsyII:
    case AsymFamily::AsyIV: return {n, k, n - 2 * uj - 1, 2 * ui + 3};
  }
  return {};
}

std::string to_string(Purity p) {
  switch (p) {
    case Purity::Enumerated: return "enumerated";
    case Purity::Consistent: return "consistent";
    case Purity::Unknown: return "unknown";
  }
  return "unknown";
}

AqsbResult aqsb_check(uint64_t n, uint64_t k, uint64_t dx, uint64_t dz) {
  const int64_t bound = static_cast<int64_t>(n) - static_cast<int64_t>(dx) - static_cast<int64_t>(dz) + 2;
  require(static_cast<int64_t>(k) <= bound, "k = " + std::to_string(k) + " exceeds n - dx - dz + 2 = " +
                                                std::to_string(bound));
  return {static_cast<int64_t>(k) == bound, bound - static_cast<int64_t>(k)};
}

std::string AqeccRecord::display() const {
  if (!dx.exact() || !dz.exact()) return claim.display() + " (uncertified)";
  return bracket(n, k, dx.value(), dz.value());
}

AqeccRecord css_pair(AsymFamily f, TowerPtr tower, int64_t i, int64_t j) {
  require(tower != nullptr, "css_pair needs a tower");
  const auto& p = tower->profile();
  const BlockFamily bf = underlying_block_family(f);
  require(family_applies(bf, p), to_string(f) + " does not apply to q=" + std::to_string(p.q) +
                                     ", r=" + std::to_string(p.r) + ", n=" + std::to_string(p.n));
  if (f == AsymFamily::AsyIV) require(p.q >= 8, "mainasyIV needs q >= 8");
  const int64_t hi = asym_max_index(f, p);
  require(i >= 0 && j <= hi, to_string(f) + " needs 0 <= i <= j <= " + std::to_string(hi));
  require(i <= j, to_string(f) + " needs i <= j");
  require(i != j, "i = j gives k = 0: no code");

  AqeccRecord rec;
  rec.family = f;
  rec.i = i;
  rec.j = j;
  rec.C1 = build_family(bf, tower, i);
  rec.C2perp = build_family(bf, tower, j);
  rec.n = p.n;
  rec.k1 = rec.C1.dim;
  rec.k2 = rec.n - rec.C2perp.dim;
  ensure(rec.k1 + rec.k2 >= rec.n, "dimension count went negative");
  rec.k = rec.k1 + rec.k2 - rec.n;
  rec.claim = asym_claim(f, p, i, j);

  const MatrixQ G2perp = generator_matrix(rec.C2perp);
  bool inside = true;
  for (size_t row = 0; row < G2perp.rows() && inside; ++row) inside = is_codeword(G2perp.row(row), rec.C1);
  ensure(inside, "C2perp is not contained in C1");
  rec.containment = true;
  ensure(rec.k == rec.claim.k, "k = " + std::to_string(rec.k) + " differs from 2(j - i)");
  return rec;
}

void derive_params(AqeccRecord& rec, const DistanceOptions& opts, uint64_t enumeration_budget) {
  require(rec.containment, "derive_params needs a verified pair");
  const MatrixQ G1 = generator_matrix(rec.C1);
  const MatrixQ H1 = parity_check_matrix(rec.C1);          // generates C1perp
  const MatrixQ G2perp = generator_matrix(rec.C2perp);
  const MatrixQ H2perp = parity_check_matrix(rec.C2perp);  // generates C2

  rec.d_C1 = min_distance_exact(H1, opts);
  rec.d_C2perp = min_distance_exact(H2perp, opts);
  rec.d_C2 = min_distance_exact(G2perp, opts);
  rec.d_C1perp = min_distance_exact(G1, opts);

  rec.gap_certified = rec.d_C1.exact() && rec.d_C2perp.decided && rec.d_C1.value() < rec.d_C2perp.lower &&
                      rec.d_C2.exact() && rec.d_C1perp.decided && rec.d_C2.value() < rec.d_C1perp.lower;

  DistanceOptions enum_opts = opts;
  enum_opts.budget = enumeration_budget;
  const uint64_t count_z = kernels::enumeration_size(G1, 0);
  const uint64_t count_x = kernels::enumeration_size(H2perp, 0);
  if (count_z <= enumeration_budget && count_x <= enumeration_budget) {
    rec.dz = relative_min_weight(G1, G2perp, enum_opts, rec.d_C1.lower);
    rec.dx = relative_min_weight(H2perp, H1, enum_opts, rec.d_C2.lower);
  }
  if (rec.dz.exact() && rec.dx.exact()) {
    rec.purity = Purity::Enumerated;
    rec.pure = rec.d_C1.exact() && rec.d_C2.exact() && rec.dz.value() == rec.d_C1.value() &&
               rec.dx.value() == rec.d_C2.value();
  } else if (rec.gap_certified) {
    rec.dz = from_gap(rec.d_C1);
    rec.dx = from_gap(rec.d_C2);
    rec.purity = Purity::Consistent;
    rec.pure = true;
  } else {
    rec.purity = Purity::Unknown;
    rec.pure = false;
    rec.dz = DistanceCertificate{};
    rec.dz.method = DistanceMethod::RelativeEnumeration;
    rec.dz.lower = rec.d_C1.lower;
    rec.dz.upper = rec.n;
    rec.dz.note = "undecided: only wt(C1) bounds it";
    rec.dx = rec.dz;
    rec.dx.lower = rec.d_C2.lower;
    rec.dx.note = "undecided: only wt(C2) bounds it";
  }
  if (rec.dz.exact() && rec.dx.exact()) {
    const auto a = aqsb_check(rec.n, rec.k, rec.dx.value(), rec.dz.value());
    rec.mds = a.mds;
    rec.defect = a.defect;
  }
  rec.derived = true;
}

}  // namespace constamax
