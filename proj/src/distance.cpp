#include "constamax/distance.hpp"

#include <algorithm>
#include <limits>

#include "constamax/error.hpp"
#include "constamax/kernels.hpp"

namespace constamax {

namespace {

constexpr uint64_t kSat = std::numeric_limits<uint64_t>::max();

uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSat / b ? kSat : a * b;
}

uint64_t sat_add(uint64_t a, uint64_t b) { return a > kSat - b ? kSat : a + b; }

kernels::SubsetResult run_subsets(const MatrixQ& M, size_t size, kernels::SubsetMode mode, uint64_t budget,
                                  bool parallel) {
  return parallel ? kernels::subset_search_omp(M, size, mode, budget)
                  : kernels::subset_search_serial(M, size, mode, budget);
}

kernels::EnumResult run_enum(const MatrixQ& B, size_t skip, uint64_t budget, bool parallel) {
  return parallel ? kernels::min_weight_omp(B, skip, budget) : kernels::min_weight_serial(B, skip, budget);
}

// column reductions the budget allows when each costs about rho^2 field ops
uint64_t reduction_budget(uint64_t budget, size_t rho) {
  return std::max<uint64_t>(1, budget / std::max<uint64_t>(1, uint64_t{rho} * rho));
}

DistanceCertificate undecided(DistanceMethod m, uint64_t n, std::string note) {
  DistanceCertificate c;
  c.method = m;
  c.decided = false;
  c.lower = 1;
  c.upper = n;
  c.note = std::move(note);
  return c;
}

}  // namespace

std::string to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::RankExhaustion: return "rank_exhaustion";
    case DistanceMethod::CodewordEnumeration: return "codeword_enumeration";
    case DistanceMethod::RelativeEnumeration: return "relative_enumeration";
  }
  return "rank_exhaustion";
}

uint64_t binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 v = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    v = v * (n - k + i) / i;
    if (v > kSat) return kSat;
  }
  return static_cast<uint64_t>(v);
}

DistanceCertificate certify_mds(const MatrixQ& H, const DistanceOptions& opts) {
  const size_t n = H.cols();
  const size_t rho = H.rows();
  require(rank(H) == rho, "certify_mds: H must have full row rank");
  DistanceCertificate cert;
  cert.method = DistanceMethod::RankExhaustion;
  if (rho == 0) {
    // the whole space: d = 1 = n - n + 1
    cert.decided = cert.mds = true;
    cert.lower = cert.upper = 1;
    return cert;
  }
  const size_t k = n - rho;
  if (k == 0) {
    cert.decided = cert.mds = true;
    cert.lower = cert.upper = n + 1;
    cert.note = "zero code";
    return cert;
  }
  const bool dual_side = k < rho;
  const size_t side = dual_side ? k : rho;
  const uint64_t cost = sat_mul(binomial(n, side), sat_mul(side, sat_mul(side, side)));
  if (cost > opts.budget) {
    auto c = undecided(DistanceMethod::RankExhaustion, rho + 1,
                       "binomial(" + std::to_string(n) + "," + std::to_string(side) + ")*" + std::to_string(side) +
                           "^3 exceeds the budget");
    return c;
  }
  const MatrixQ M = dual_side ? null_space(H) : H;
  const auto res = run_subsets(M, side, kernels::SubsetMode::AnyOfSize, reduction_budget(opts.budget, side),
                               opts.parallel);
  cert.work = res.work;
  if (res.budget_exceeded) return undecided(DistanceMethod::RankExhaustion, rho + 1, "subset budget exhausted");
  cert.decided = true;
  if (!res.found) {
    cert.mds = true;
    cert.lower = cert.upper = rho + 1;
    if (dual_side) cert.note = "checked on the dual generator";
    return cert;
  }
  cert.mds = false;
  cert.lower = 1;
  if (dual_side) {
    // dependent columns of the dual generator: the dual is not MDS, hence neither is the code
    cert.upper = rho;
    cert.note = "dual generator has a dependent column set";
  } else {
    // shrink to a smallest dependent subset of the columns found
    const auto sub = kernels::subset_search_serial(H.select_columns(res.witness), res.witness.size(),
                                                   kernels::SubsetMode::MinDependent, UINT64_MAX);
    for (size_t c : sub.witness) cert.witness_columns.push_back(res.witness[c]);
    cert.upper = cert.witness_columns.size();
  }
  return cert;
}

DistanceCertificate min_distance_enumerate(const MatrixQ& G, const DistanceOptions& opts) {
  const MatrixQ B = independent_rows(G);
  DistanceCertificate cert;
  cert.method = DistanceMethod::CodewordEnumeration;
  if (B.rows() == 0) {
    cert.note = "zero code";
    cert.decided = true;
    cert.lower = cert.upper = G.cols() + 1;
    return cert;
  }
  const auto res = run_enum(B, 0, opts.budget, opts.parallel);
  if (res.budget_exceeded) return undecided(DistanceMethod::CodewordEnumeration, G.cols(), "codeword budget exceeded");
  cert.decided = true;
  cert.lower = cert.upper = res.min_weight;
  cert.witness_word = res.witness;
  cert.work = res.visited;
  return cert;
}

DistanceCertificate min_distance_exact(const MatrixQ& H, const DistanceOptions& opts) {
  const size_t n = H.cols();
  const size_t rho = H.rows();
  require(rank(H) == rho, "min_distance_exact: H must have full row rank");
  if (rho == 0 || rho == n) return certify_mds(H, opts);
  const size_t k = n - rho;
  const MatrixQ G = null_space(H);

  const uint64_t words = kernels::enumeration_size(G, 0);
  const uint64_t enum_cost = sat_mul(words, n);
  const size_t side = std::min(rho, k);
  const uint64_t mds_cost = sat_mul(binomial(n, side), sat_mul(side, sat_mul(side, side)));
  if (words <= opts.budget && enum_cost <= mds_cost) return min_distance_enumerate(G, opts);

  auto mds = certify_mds(H, opts);
  if (mds.decided && mds.mds) return mds;

  // smallest dependent column set of H, all sizes up to rho
  uint64_t rank_cost = 0;
  for (size_t w = 1; w <= rho; ++w) rank_cost = sat_add(rank_cost, binomial(n, w));
  rank_cost = sat_mul(rank_cost, uint64_t{rho} * rho);
  if (words <= opts.budget && enum_cost <= rank_cost) return min_distance_enumerate(G, opts);
  if (rank_cost > opts.budget) {
    auto c = undecided(DistanceMethod::RankExhaustion, rho + 1, "dependent-set search exceeds the budget");
    if (mds.decided) c.upper = mds.upper;
    return c;
  }
  const auto res = run_subsets(H, rho, kernels::SubsetMode::MinDependent, reduction_budget(opts.budget, rho),
                               opts.parallel);
  DistanceCertificate cert;
  cert.method = DistanceMethod::RankExhaustion;
  cert.work = res.work + mds.work;
  if (res.budget_exceeded) return undecided(DistanceMethod::RankExhaustion, rho + 1, "subset budget exhausted");
  cert.decided = true;
  if (!res.found) {
    cert.mds = true;
    cert.lower = cert.upper = rho + 1;
  } else {
    cert.lower = cert.upper = res.witness.size();
    cert.witness_columns = res.witness;
  }
  return cert;
}

DistanceCertificate min_distance_exact(const ConstacyclicCode& code, const DistanceOptions& opts) {
  return min_distance_exact(parity_check_matrix(code), opts);
}

DistanceCertificate relative_min_weight(const MatrixQ& big, const MatrixQ& small, const DistanceOptions& opts,
                                        std::optional<uint64_t> big_distance) {
  require(big.cols() == small.cols() || small.rows() == 0, "relative_min_weight: length mismatch");
  require(row_space_contains(big, small), "relative_min_weight: the subcode is not contained in the code");
  const MatrixQ sub = small.rows() ? independent_rows(small) : MatrixQ(big.field_ptr(), 0, big.cols());
  const MatrixQ B = independent_rows(sub.rows() ? vstack(sub, big) : big);
  require(B.rows() > sub.rows(), "relative_min_weight: the code equals the subcode, the difference is empty");

  DistanceCertificate cert;
  cert.method = DistanceMethod::RelativeEnumeration;
  const auto res = run_enum(B, sub.rows(), opts.budget, opts.parallel);
  if (res.budget_exceeded) {
    cert.decided = false;
    cert.lower = big_distance.value_or(1);
    cert.upper = big.cols();
    cert.note = "codeword budget exceeded";
    return cert;
  }
  cert.decided = true;
  cert.lower = cert.upper = res.min_weight;
  cert.witness_word = res.witness;
  cert.work = res.visited;
  return cert;
}

}  // namespace constamax
