#include <doctest.h>

#include <cmath>

#include "constamax/convolutional.hpp"
#include "oracles.hpp"

using namespace constamax;

namespace {

// Lightest nonzero kernel vector of degree <= L, by enumerating the null
// space of the sliding matrix outright. An upper bound on the dual free
// distance, independent of the column-subset search.
size_t dual_df_by_enumeration(const PolyMatrixD& G, size_t L) {
  const auto K = null_space(sliding_kernel_matrix(G, L));
  if (std::pow(double(G.field->size()), double(K.rows())) <= 2e4) return oracle::min_weight(K);
  return min_distance_enumerate(K).value();
}

void check_tuple(const ConvCode& cc, uint64_t n, uint64_t k, uint64_t gamma, uint64_t m, uint64_t df) {
  CHECK(cc.dual.n == n);
  CHECK(cc.dual.k == k);
  CHECK(cc.dual.gamma == gamma);
  CHECK(cc.dual.memory == m);
  CHECK(cc.dual.df_lower == df);
  CHECK(cc.dual.df_upper == df);
  CHECK(cc.dual.df_upper <= cc.singleton);
  CHECK(cc.rank_conditions);
  CHECK(cc.reduced_basic);
}

}  // namespace

TEST_CASE("generalized Singleton bound") {
  CHECK(generalized_singleton(10, 7, 2) == 6);
  CHECK(generalized_singleton(12, 8, 2) == 7);
  CHECK(generalized_singleton(9, 4, 0) == 6);
  CHECK_THROWS_AS(generalized_singleton(5, 0, 1), PreconditionError);
}

TEST_CASE("squeeze") {
  auto s = free_distance_squeeze(2, 4, 6, 6);
  CHECK(s.lower == 6);
  CHECK(s.upper == 6);
  s = free_distance_squeeze(2, 2, 4, 5);
  CHECK(s.lower == 4);
  CHECK(s.upper == 4);
  s = free_distance_squeeze(1, 1, 5, 4);
  CHECK(s.lower == 2);
  CHECK(s.upper == 4);
}

TEST_CASE("split_parity") {
  auto t = family_tower(BlockFamily::ClassI, 9, 4);
  auto H = parity_check_matrix(build_family(BlockFamily::ClassI, t, 2));
  REQUIRE(H.rows() == 5);
  auto sp = split_parity(H, {3, 2});
  CHECK(sp.kappa == 3);
  CHECK(vstack(sp.blocks[0], sp.blocks[1]) == H);
  CHECK(sp.padded[1].rows() == 3);
  CHECK_THROWS_AS(split_parity(H, {2, 3}), PreconditionError);
  CHECK_THROWS_AS(split_parity(H, {3, 1}), PreconditionError);
  auto one = split_parity(H, {5});
  auto G = assemble(one);
  CHECK(G.memory() == 0);
  CHECK(G.degree() == 0);
}

TEST_CASE("memory-0 generator: search gives the block distance") {
  auto neg = code_from_defining_set({1, 3}, make_tower(3, 2, 4));
  auto G = assemble(split_parity(generator_matrix(neg), {2}));
  auto d = free_distance_search(G, 0);
  CHECK(d.value() == 3);
  CHECK(free_distance_search(G, 2).value() == 3);
}

TEST_CASE("mainI q=9 r=4 i=2 gives (10, 7, 2; 1, 6) MDS") {
  auto t = conv_family_tower(ConvFamily::MainI, 9, 4);
  auto cc = build_conv_family(ConvFamily::MainI, t, 2);
  check_tuple(cc, 10, 7, 2, 1, 6);
  CHECK(cc.mds);
  CHECK(cc.kappa == 3);
  CHECK(cc.v_degree == 2);
  CHECK(cc.G.memory() == 1);
  CHECK(cc.claim.df == 6);
}

TEST_CASE("mainII q=11 r=2 i=2 gives (12, 8, 2; 1, 7)") {
  auto t = conv_family_tower(ConvFamily::MainII, 11, 2);
  auto cc = build_conv_family(ConvFamily::MainII, t, 2);
  check_tuple(cc, 12, 8, 2, 1, 7);
  CHECK(cc.mds);
}

TEST_CASE("mainV at q=3 and q=7 is almost MDS") {
  auto cc = build_conv_family(ConvFamily::MainV, conv_family_tower(ConvFamily::MainV, 3, 1), 0);
  check_tuple(cc, 8, 6, 2, 1, 4);
  CHECK(cc.defect == 1);
  auto cc7 = build_conv_family(ConvFamily::MainV, conv_family_tower(ConvFamily::MainV, 7, 1), 0);
  check_tuple(cc7, 16, 14, 2, 1, 4);
  CHECK(cc7.defect == 1);
}

TEST_CASE("mainVI(a) q=5: squeeze, bounded search and brute force agree") {
  auto cc = build_conv_family(ConvFamily::MainVIa, conv_family_tower(ConvFamily::MainVIa, 5, 1), 0);
  check_tuple(cc, 8, 5, 1, 1, 4);
  CHECK(cc.defect == 1);
  const size_t depth = cc.dual.memory + 3;
  auto s = dual_free_distance_search(cc.G, depth, cc.dual.df_upper);
  REQUIRE(s.exact());
  CHECK(s.value() == 4);
  CHECK(dual_df_by_enumeration(cc.G, 1) == 4);
}

TEST_CASE("mainIV Reed-Solomon splits") {
  auto t8 = conv_family_tower(ConvFamily::MainIV, 8, 1);
  auto cc = build_conv_family(ConvFamily::MainIV, t8, 3, 2, 2);
  check_tuple(cc, 7, 5, 2, 1, 5);
  CHECK(cc.mds);

  auto t4 = conv_family_tower(ConvFamily::MainIV, 4, 1);
  auto c4 = build_conv_family(ConvFamily::MainIV, t4, 1, 1, 1);
  CHECK(c4.dual.n == 3);
  CHECK(c4.mds);
  CHECK(dual_df_by_enumeration(c4.G, 3) == c4.dual.df_lower);

  auto t5 = conv_family_tower(ConvFamily::MainIV, 5, 1);
  for (auto [i, c1, c2] : {std::tuple{1ll, 1ull, 1ull}, {2, 2, 1}}) {
    auto c5 = build_conv_family(ConvFamily::MainIV, t5, i, c1, c2);
    CHECK(c5.mds);
    const size_t depth = c5.dual.memory + 3;
    auto s = dual_free_distance_search(c5.G, depth, c5.dual.df_upper);
    REQUIRE(s.exact());
    CHECK(s.value() == c5.dual.df_lower);
    CHECK(dual_df_by_enumeration(c5.G, 2) == c5.dual.df_lower);
  }
  CHECK_THROWS_AS(build_conv_family(ConvFamily::MainIV, t5, 2, 1, 2), PreconditionError);
  CHECK_THROWS_AS(build_conv_family(ConvFamily::MainIV, t5, 2, 1, 1), PreconditionError);
}

TEST_CASE("index ranges are enforced") {
  auto t = conv_family_tower(ConvFamily::MainI, 9, 4);
  CHECK_THROWS_AS(build_conv_family(ConvFamily::MainI, t, 1), PreconditionError);
  CHECK_THROWS_AS(build_conv_family(ConvFamily::MainI, t, 4), PreconditionError);
  auto t3 = conv_family_tower(ConvFamily::MainIIIA, 8, 7);
  const auto [lo, hi] = conv_index_range(ConvFamily::MainIIIA, t3->profile());
  CHECK(lo == 2);
  CHECK(hi == 2);
}

TEST_CASE("kernel degree equals the degree of G for every family member at small q") {
  struct Case {
    ConvFamily f;
    uint64_t q, r;
  };
  for (const auto& cs : std::vector<Case>{{ConvFamily::MainI, 9, 4},
                                          {ConvFamily::MainII, 11, 2},
                                          {ConvFamily::MainIII, 13, 6},
                                          {ConvFamily::MainIIIA, 8, 7},
                                          {ConvFamily::MainIIIB, 8, 7}}) {
    auto t = conv_family_tower(cs.f, cs.q, cs.r);
    const auto [lo, hi] = conv_index_range(cs.f, t->profile());
    for (int64_t i = lo; i <= hi; ++i) {
      INFO(to_string(cs.f) << " q=" << cs.q << " i=" << i);
      auto cc = build_conv_family(cs.f, t, i);
      CHECK(cc.reduced_basic);
      CHECK(cc.dual.gamma == 2);
      CHECK(cc.dual.memory == 1);
      CHECK(cc.dual.k == cc.claim.k);
      CHECK(cc.dual.df_lower == cc.claim.df);
      CHECK(cc.mds);
    }
  }
}

TEST_CASE("sliding matrices have the documented shapes") {
  auto cc = build_conv_family(ConvFamily::MainI, conv_family_tower(ConvFamily::MainI, 9, 4), 2);
  auto S = sliding_kernel_matrix(cc.G, 2);
  CHECK(S.rows() == cc.kappa * 4);
  CHECK(S.cols() == 10 * 3);
  auto Gs = sliding_generator(cc.G, 2);
  CHECK(Gs.rows() == cc.kappa * 3);
  CHECK(Gs.cols() == 10 * 4);
  CHECK(rank(Gs) == Gs.rows());
}

TEST_CASE("family names") {
  for (auto f : {ConvFamily::MainI, ConvFamily::MainII, ConvFamily::MainIII, ConvFamily::MainIIIA,
                 ConvFamily::MainIIIB, ConvFamily::MainIV, ConvFamily::MainV, ConvFamily::MainVIa,
                 ConvFamily::MainVIb})
    CHECK(parse_conv_family(to_string(f)) == f);
}
