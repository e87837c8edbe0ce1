#include <doctest.h>

#include "constamax/aqecc.hpp"
#include "oracles.hpp"

using namespace constamax;

TEST_CASE("aqsb_check") {
  CHECK(aqsb_check(10, 6, 4, 2).mds);
  CHECK(aqsb_check(15, 4, 9, 4).mds);
  CHECK(aqsb_check(12, 8, 3, 3).mds);
  auto a = aqsb_check(12, 6, 3, 3);
  CHECK_FALSE(a.mds);
  CHECK(a.defect == 2);
  CHECK_THROWS_AS(aqsb_check(10, 8, 4, 2), PreconditionError);
}

TEST_CASE("claims from the tables") {
  auto t9 = asym_family_tower(AsymFamily::AsyI, 9, 4);
  CHECK(asym_claim(AsymFamily::AsyI, t9->profile(), 0, 3).display() == "[[10, 6, 4/2]]");
  auto t11 = asym_family_tower(AsymFamily::AsyII, 11, 2);
  CHECK(asym_claim(AsymFamily::AsyII, t11->profile(), 0, 4).display() == "[[12, 8, 3/3]]");
  CHECK(asym_claim(AsymFamily::AsyII, t11->profile(), 0, 1).display() == "[[12, 2, 9/3]]");
  auto t17 = asym_family_tower(AsymFamily::AsyIII, 17, 2);
  CHECK(asym_claim(AsymFamily::AsyIII, t17->profile(), 0, 3).display() == "[[9, 6, 3/2]]");
}

TEST_CASE("css_pair builds nested codes") {
  auto t = asym_family_tower(AsymFamily::AsyI, 9, 4);
  auto rec = css_pair(AsymFamily::AsyI, t, 0, 3);
  CHECK(rec.containment);
  CHECK(rec.k1 == 9);
  CHECK(rec.k2 == 7);
  CHECK(rec.k == 6);
  derive_params(rec);
  CHECK(rec.gap_certified);
  CHECK(rec.purity == Purity::Consistent);
  CHECK(rec.d_C1.value() == 2);
  CHECK(rec.d_C2.value() == 4);
  CHECK(rec.dz.value() == 2);
  CHECK(rec.dx.value() == 4);
  CHECK(rec.mds);
  CHECK(rec.display() == "[[10, 6, 4/2]]");
}

TEST_CASE("degenerate and out-of-range pairs are rejected") {
  auto t = asym_family_tower(AsymFamily::AsyI, 9, 4);
  CHECK_THROWS_AS(css_pair(AsymFamily::AsyI, t, 2, 2), PreconditionError);
  CHECK_THROWS_AS(css_pair(AsymFamily::AsyI, t, 3, 2), PreconditionError);
  CHECK_THROWS_AS(css_pair(AsymFamily::AsyI, t, 0, 4), PreconditionError);
  CHECK_THROWS_AS(css_pair(AsymFamily::AsyII, t, 0, 1), PreconditionError);
}

TEST_CASE("small pairs: enumerated relative weights match brute force") {
  struct Case {
    AsymFamily f;
    uint64_t q, r;
  };
  for (const auto& cs : std::vector<Case>{{AsymFamily::AsyI, 5, 2}, {AsymFamily::AsyII, 5, 4},
                                          {AsymFamily::AsyII, 3, 2}, {AsymFamily::AsyIII, 5, 2}}) {
    auto t = asym_family_tower(cs.f, cs.q, cs.r);
    const int64_t hi = asym_max_index(cs.f, t->profile());
    for (int64_t j = 1; j <= hi; ++j)
      for (int64_t i = 0; i < j; ++i) {
        INFO(to_string(cs.f) << " q=" << cs.q << " i=" << i << " j=" << j);
        auto rec = css_pair(cs.f, t, i, j);
        derive_params(rec);
        REQUIRE(rec.purity == Purity::Enumerated);
        const auto G1 = generator_matrix(rec.C1);
        const auto G2perp = generator_matrix(rec.C2perp);
        const auto G2 = parity_check_matrix(rec.C2perp);
        const auto G1perp = parity_check_matrix(rec.C1);
        CHECK(rec.dz.value() == oracle::relative_min_weight(G1, G2perp));
        CHECK(rec.dx.value() == oracle::relative_min_weight(G2, G1perp));
        CHECK(rec.pure);
        CHECK(rec.dz.value() == rec.claim.dz);
        CHECK(rec.dx.value() == rec.claim.dx);
        CHECK(rec.mds);
        CHECK(rec.k == static_cast<uint64_t>(2 * (j - i)));
      }
  }
}

TEST_CASE("dimension identity across the index grid") {
  for (auto [f, q, r] : {std::tuple{AsymFamily::AsyI, 13ull, 2ull}, {AsymFamily::AsyII, 19, 2},
                         {AsymFamily::AsyIII, 29, 7}, {AsymFamily::AsyIV, 16, 5}}) {
    auto t = asym_family_tower(f, q, r);
    const int64_t hi = asym_max_index(f, t->profile());
    for (int64_t j = 1; j <= hi; ++j)
      for (int64_t i = 0; i < j; ++i) {
        auto rec = css_pair(f, t, i, j);
        CHECK(rec.k == static_cast<uint64_t>(2 * (j - i)));
      }
  }
}

TEST_CASE("mirrored rows") {
  auto t = asym_family_tower(AsymFamily::AsyI, 17, 8);
  auto a = css_pair(AsymFamily::AsyI, t, 1, 2);
  auto b = css_pair(AsymFamily::AsyI, t, 6, 7);
  derive_params(a);
  derive_params(b);
  CHECK(a.display() == "[[18, 2, 14/4]]");
  CHECK(b.display() == "[[18, 2, 4/14]]");
  CHECK(a.mds);
  CHECK(b.mds);
}

TEST_CASE("names") {
  for (auto f : {AsymFamily::AsyI, AsymFamily::AsyII, AsymFamily::AsyIII, AsymFamily::AsyIV})
    CHECK(parse_asym_family(to_string(f)) == f);
  CHECK(to_string(Purity::Consistent) == "consistent");
}
