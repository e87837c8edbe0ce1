#include "constamax/convolutional.hpp"

#include <algorithm>
#include <numeric>

#include "constamax/error.hpp"
#include "constamax/kernels.hpp"

namespace constamax {

namespace {

struct ConvName {
  ConvFamily family;
  const char* name;
};

constexpr ConvName kConvNames[] = {
    {ConvFamily::MainI, "mainI"},       {ConvFamily::MainII, "mainII"},   {ConvFamily::MainIII, "mainIII"},
    {ConvFamily::MainIIIA, "mainIIIA"}, {ConvFamily::MainIIIB, "mainIIIB"}, {ConvFamily::MainIV, "mainIV"},
    {ConvFamily::MainV, "mainV"},       {ConvFamily::MainVIa, "mainVI-a"}, {ConvFamily::MainVIb, "mainVI-b"},
};

bool disjoint_partition(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                        const std::vector<uint64_t>& whole) {
  std::vector<uint64_t> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u == whole && u.size() == a.size() + b.size();
}

}  // namespace

size_t PolyMatrixD::memory() const {
  for (size_t j = coeff.size(); j-- > 0;)
    if (!coeff[j].is_zero()) return j;
  return 0;
}

std::vector<int64_t> PolyMatrixD::row_degrees() const {
  std::vector<int64_t> deg(rows, -1);
  for (size_t j = 0; j < coeff.size(); ++j)
    for (size_t r = 0; r < rows; ++r) {
      const auto row = coeff[j].row(r);
      if (std::any_of(row.begin(), row.end(), [](uint32_t x) { return x != 0; })) deg[r] = static_cast<int64_t>(j);
    }
  return deg;
}

uint64_t PolyMatrixD::degree() const {
  uint64_t s = 0;
  for (int64_t d : row_degrees())
    if (d > 0) s += static_cast<uint64_t>(d);
  return s;
}

std::vector<std::vector<std::vector<uint32_t>>> PolyMatrixD::entries() const {
  std::vector<std::vector<std::vector<uint32_t>>> out(rows, std::vector<std::vector<uint32_t>>(cols));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) {
      auto& e = out[r][c];
      for (const auto& m : coeff) e.push_back(m(r, c));
      while (!e.empty() && e.back() == 0) e.pop_back();
    }
  return out;
}

SplitParity split_parity(const MatrixQ& H, const std::vector<size_t>& row_counts) {
  require(!row_counts.empty(), "split_parity: no blocks");
  require(std::accumulate(row_counts.begin(), row_counts.end(), size_t{0}) == H.rows(),
          "split_parity: row counts do not add up to rows(H)");
  require(*std::max_element(row_counts.begin(), row_counts.end()) == row_counts[0],
          "split_parity: the first block must be the largest");
  SplitParity s;
  s.kappa = row_counts[0];
  size_t at = 0;
  for (size_t cnt : row_counts) {
    std::vector<size_t> idx(cnt);
    std::iota(idx.begin(), idx.end(), at);
    at += cnt;
    MatrixQ block = H.select_rows(idx);
    MatrixQ pad = block;
    const std::vector<uint32_t> zero(H.cols(), 0);
    while (pad.rows() < s.kappa) pad.append_row(zero);
    if (pad.rows() == 0) pad = MatrixQ(H.field_ptr(), s.kappa, H.cols());
    s.blocks.push_back(std::move(block));
    s.padded.push_back(std::move(pad));
  }
  require(rank(s.blocks[0]) == s.kappa, "split_parity: H_0 does not have full row rank");
  for (const auto& b : s.blocks) require(rank(b) <= s.kappa, "split_parity: a block has rank above kappa");
  return s;
}

PolyMatrixD assemble(const SplitParity& split) {
  PolyMatrixD G;
  G.field = split.padded.front().field_ptr();
  G.rows = split.kappa;
  G.cols = split.padded.front().cols();
  G.coeff = split.padded;
  return G;
}

uint64_t generalized_singleton(uint64_t n, uint64_t k, uint64_t gamma) {
  require(k >= 1 && k <= n, "generalized_singleton: need 1 <= k <= n");
  return (n - k) * (gamma / k + 1) + gamma + 1;
}

Squeeze free_distance_squeeze(uint64_t d_top, uint64_t d_bottom, uint64_t d_full, uint64_t singleton_bound) {
  return {std::min(d_top + d_bottom, d_full), std::min(d_full, singleton_bound)};
}

MatrixQ sliding_kernel_matrix(const PolyMatrixD& G, size_t L) {
  const size_t m = G.coeff.size() - 1;
  const size_t k = G.rows, n = G.cols;
  MatrixQ S(G.field, k * (L + m + 1), n * (L + 1));
  for (size_t l = 0; l <= L; ++l)
    for (size_t j = 0; j <= m; ++j)
      for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < n; ++c) S((l + j) * k + r, l * n + c) = G.coeff[j](r, c);
  return S;
}

MatrixQ sliding_generator(const PolyMatrixD& G, size_t L) {
  const size_t m = G.coeff.size() - 1;
  const size_t k = G.rows, n = G.cols;
  MatrixQ S(G.field, k * (L + 1), n * (L + m + 1));
  for (size_t l = 0; l <= L; ++l)
    for (size_t j = 0; j <= m; ++j)
      for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < n; ++c) S(l * k + r, (l + j) * n + c) = G.coeff[j](r, c);
  return S;
}

KernelIndices kernel_minimal_indices(const PolyMatrixD& G, size_t max_L) {
  KernelIndices out;
  const uint64_t target = G.cols - rank(G.coeff.front());
  uint64_t prev_dim = 0, prev_count = 0;
  for (size_t L = 0; L <= max_L; ++L) {
    const MatrixQ S = sliding_kernel_matrix(G, L);
    const uint64_t dim = S.cols() - rank(S);
    out.kernel_dims.push_back(dim);
    const uint64_t count = dim - prev_dim;  // indices nu_i <= L
    for (uint64_t t = prev_count; t < count; ++t) out.nu.push_back(L);
    prev_dim = dim;
    prev_count = count;
    if (count >= target) {
      out.complete = count == target;
      break;
    }
  }
  out.degree = std::accumulate(out.nu.begin(), out.nu.end(), uint64_t{0});
  out.memory = out.nu.empty() ? 0 : out.nu.back();
  return out;
}

DistanceCertificate free_distance_search(const PolyMatrixD& G, size_t max_input_degree, const DistanceOptions& opts) {
  auto cert = min_distance_enumerate(sliding_generator(G, max_input_degree), opts);
  cert.note = "u(D) of degree <= " + std::to_string(max_input_degree);
  return cert;
}

DistanceCertificate dual_free_distance_search(const PolyMatrixD& G, size_t max_degree, size_t max_weight,
                                              const DistanceOptions& opts) {
  const MatrixQ S = independent_rows(sliding_kernel_matrix(G, max_degree));
  const size_t rho = std::max<size_t>(S.rows(), 1);
  const uint64_t reductions = std::max<uint64_t>(1, opts.budget / (uint64_t{rho} * rho));
  const auto res = opts.parallel
                       ? kernels::subset_search_omp(S, max_weight, kernels::SubsetMode::MinDependent, reductions)
                       : kernels::subset_search_serial(S, max_weight, kernels::SubsetMode::MinDependent, reductions);
  DistanceCertificate cert;
  cert.method = DistanceMethod::RankExhaustion;
  cert.work = res.work;
  cert.note = "kernel vectors of degree <= " + std::to_string(max_degree);
  if (res.budget_exceeded) {
    cert.decided = false;
    cert.lower = 1;
    cert.upper = S.cols();
    return cert;
  }
  cert.decided = true;
  if (res.found) {
    cert.lower = cert.upper = res.witness.size();
    cert.witness_columns = res.witness;
  } else {
    // every kernel vector of this degree is heavier than max_weight
    cert.lower = max_weight + 1;
    cert.upper = S.cols();
  }
  return cert;
}

std::string to_string(ConvFamily f) {
  for (const auto& e : kConvNames)
    if (e.family == f) return e.name;
  return "mainI";
}

std::optional<ConvFamily> parse_conv_family(const std::string& name) {
  for (const auto& e : kConvNames)
    if (name == e.name) return e.family;
  if (name == "mainVI") return ConvFamily::MainVIa;
  return std::nullopt;
}

std::optional<BlockFamily> underlying_block_family(ConvFamily f) {
  switch (f) {
    case ConvFamily::MainI: return BlockFamily::ClassI;
    case ConvFamily::MainII: return BlockFamily::ClassII;
    case ConvFamily::MainIII: return BlockFamily::ClassIII;
    case ConvFamily::MainIIIA: return BlockFamily::ClassIIIA;
    case ConvFamily::MainIIIB: return BlockFamily::ClassIIIB;
    case ConvFamily::MainV: return BlockFamily::ClassIV;
    case ConvFamily::MainVIa: return BlockFamily::ClassIVAa;
    case ConvFamily::MainVIb: return BlockFamily::ClassIVAb;
    case ConvFamily::MainIV: return std::nullopt;
  }
  return std::nullopt;
}

std::pair<int64_t, int64_t> conv_index_range(ConvFamily f, const CosetProfile& p) {
  const int64_t n = static_cast<int64_t>(p.n);
  switch (f) {
    case ConvFamily::MainI:
    case ConvFamily::MainII: return {2, n / 2 - 2};
    case ConvFamily::MainIII: return {2, (n - 1) / 2 - 1};
    case ConvFamily::MainIIIA:
    case ConvFamily::MainIIIB: return {2, (n - 1) / 2 - 2};
    case ConvFamily::MainIV: return {1, n - 2};
    default: return {0, 0};
  }
}

ConvClaim conv_claim(ConvFamily f, const CosetProfile& p, int64_t i, uint64_t c1, uint64_t c2) {
  const uint64_t n = p.n;
  const uint64_t u = static_cast<uint64_t>(std::max<int64_t>(i, 0));
  switch (f) {
    case ConvFamily::MainI:
    case ConvFamily::MainIII:
    case ConvFamily::MainIIIB: return {n, n - 2 * u + 1, 2, 1, 2 * u + 2, false, 0};
    case ConvFamily::MainII:
    case ConvFamily::MainIIIA: return {n, n - 2 * u, 2, 1, 2 * u + 3, false, 0};
    case ConvFamily::MainIV: return {n, n - c1, c2, 1, u + 2, false, 0};
    case ConvFamily::MainV: return {n, n - 2, 2, 1, 4, false, 1};
    case ConvFamily::MainVIa: return {n, n - 3, 1, 1, 4, false, 1};
    case ConvFamily::MainVIb: return {n, n - 4, 3, 1, 6, true, 2};
  }
  return {};
}

TowerPtr conv_family_tower(ConvFamily f, uint64_t q, uint64_t r, const FieldOptions& opts) {
  if (f == ConvFamily::MainIV) {
    require(r >= 1 && (q - 1) % r == 0, "mainIV needs r | q - 1");
    return make_tower(q, r, (q - 1) / r, opts);
  }
  return family_tower(*underlying_block_family(f), q, r, opts);
}

ConvCode lift_unit_memory(const ConstacyclicCode& C2, const ConstacyclicCode& C1, const ConstacyclicCode& C0,
                          const ConvOptions& opts) {
  require(C1.tower == C2.tower && C0.tower == C2.tower, "lift_unit_memory: codes from different towers");
  require(disjoint_partition(C1.defining_set, C0.defining_set, C2.defining_set),
          "lift_unit_memory: the defining sets of C1 and C0 must partition that of C2");
  ConvCode cc;
  cc.full = C2;
  cc.top = C1;
  cc.bottom = C0;
  const MatrixQ Ht = parity_check_matrix(C1);
  const MatrixQ Hb = parity_check_matrix(C0);
  cc.H = vstack(Ht, Hb);
  ensure(rank(cc.H) == cc.H.rows() && cc.H.rows() == C2.n() - C2.dim, "stacked parity rows are not a basis");
  cc.row_counts = {Ht.rows(), Hb.rows()};
  const auto split = split_parity(cc.H, cc.row_counts);
  cc.rank_conditions = true;
  cc.G = assemble(split);
  cc.kappa = split.kappa;
  cc.v_degree = cc.G.degree();

  cc.dual_indices = kernel_minimal_indices(cc.G, cc.v_degree + 1);
  cc.reduced_basic = cc.dual_indices.complete && cc.dual_indices.degree == cc.v_degree;

  cc.d_full = min_distance_exact(cc.H, opts.distance);
  cc.d_top = min_distance_exact(Ht, opts.distance);
  cc.d_bottom = min_distance_exact(Hb, opts.distance);

  const uint64_t n = C2.n();
  cc.dual.n = n;
  cc.dual.k = n - cc.kappa;
  cc.dual.gamma = cc.dual_indices.complete ? cc.dual_indices.degree : cc.v_degree;
  cc.dual.memory = cc.dual_indices.complete ? cc.dual_indices.memory : cc.G.memory();
  cc.singleton = generalized_singleton(n, cc.dual.k, cc.dual.gamma);
  const uint64_t lower = std::min(cc.d_top.lower + cc.d_bottom.lower, cc.d_full.lower);
  const uint64_t upper = std::min(cc.d_full.upper, cc.singleton);
  cc.dual.df_lower = lower;
  cc.dual.df_upper = upper;
  cc.mds = lower == upper && upper == cc.singleton;
  cc.defect = lower == upper ? static_cast<int64_t>(cc.singleton) - static_cast<int64_t>(lower) : -1;
  return cc;
}

ConvCode build_conv_family(ConvFamily f, TowerPtr tower, int64_t i, uint64_t c1, uint64_t c2,
                           const ConvOptions& opts) {
  require(tower != nullptr, "build_conv_family needs a tower");
  const auto& p = tower->profile();
  const auto [lo, hi] = conv_index_range(f, p);
  if (f != ConvFamily::MainV && f != ConvFamily::MainVIa && f != ConvFamily::MainVIb)
    require(i >= lo && i <= hi, to_string(f) + " index " + std::to_string(i) + " outside [" + std::to_string(lo) +
                                    ", " + std::to_string(hi) + "]");

  std::vector<uint64_t> exps;
  size_t top_count = 0;
  ConstacyclicCode C2;
  if (f == ConvFamily::MainIV) {
    require(p.rn == p.q - 1, "mainIV needs rn = q - 1");
    require(c1 >= 1 && c2 >= 1 && c1 >= c2 && c1 + c2 == static_cast<uint64_t>(i) + 1,
            "mainIV needs c1 >= c2 >= 1 and c1 + c2 = i + 1");
    for (int64_t l = 0; l <= i; ++l) exps.push_back(p.mod(1 + static_cast<int64_t>(p.r) * l));
    C2 = code_from_exponents(exps, tower);
    top_count = c1;
  } else {
    const BlockFamily bf = *underlying_block_family(f);
    if (f == ConvFamily::MainIIIA || f == ConvFamily::MainIIIB) require(p.q >= 8, to_string(f) + " needs q >= 8");
    const int64_t bi = (f == ConvFamily::MainV || f == ConvFamily::MainVIa || f == ConvFamily::MainVIb) ? 0 : i;
    C2 = build_family(bf, tower, bi);
    exps = C2.parity_exponents;
    switch (f) {
      case ConvFamily::MainV: top_count = 1; break;
      case ConvFamily::MainVIa: top_count = 2; break;
      case ConvFamily::MainVIb: top_count = 3; break;
      default: top_count = static_cast<size_t>(i); break;
    }
  }
  const std::vector<uint64_t> top(exps.begin(), exps.begin() + static_cast<int64_t>(top_count));
  const std::vector<uint64_t> bottom(exps.begin() + static_cast<int64_t>(top_count), exps.end());
  auto cc = lift_unit_memory(C2, code_from_exponents(top, tower), code_from_exponents(bottom, tower), opts);
  cc.family = f;
  cc.index = i;
  cc.c1 = f == ConvFamily::MainIV ? c1 : cc.kappa;
  cc.c2 = f == ConvFamily::MainIV ? c2 : cc.v_degree;
  cc.claim = conv_claim(f, p, i, c1, c2);
  return cc;
}

}  // namespace constamax
