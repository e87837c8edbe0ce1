#include <doctest.h>

#include <cmath>

#include "constamax/kernels.hpp"
#include "oracles.hpp"

using namespace constamax;
using namespace constamax::kernels;

TEST_CASE("subset search: serial and OpenMP agree with brute force") {
  std::mt19937_64 rng(21);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {5u, 1u}, {2u, 2u}}) {
    auto F = make_field(p, e);
    for (int t = 0; t < 60; ++t) {
      const size_t rows = 2 + rng() % 3, cols = rows + 1 + rng() % 5;
      auto H = oracle::random_matrix(F, rows, cols, rng);
      if (t % 5 == 0) H(rng() % rows, 0) = 0, H(0, 0) = 0;  // sparser columns now and then
      const size_t expect = oracle::min_dependent_columns(H);
      for (bool omp : {false, true}) {
        auto res = omp ? subset_search_omp(H, rows, SubsetMode::MinDependent, 1'000'000)
                       : subset_search_serial(H, rows, SubsetMode::MinDependent, 1'000'000);
        REQUIRE_FALSE(res.budget_exceeded);
        if (expect > rows) {
          CHECK_FALSE(res.found);
        } else {
          REQUIRE(res.found);
          CHECK(res.witness.size() == expect);
          CHECK(rank(H.select_columns(res.witness)) < res.witness.size());
        }
      }
      const auto a = subset_search_serial(H, rows, SubsetMode::MinDependent, 1'000'000);
      const auto b = subset_search_omp(H, rows, SubsetMode::MinDependent, 1'000'000);
      CHECK(a.witness == b.witness);  // both report the lex-least minimal set

      const auto c = subset_search_serial(H, rows, SubsetMode::AnyOfSize, 1'000'000);
      const auto d = subset_search_omp(H, rows, SubsetMode::AnyOfSize, 1'000'000);
      CHECK(c.found == (expect <= rows));
      CHECK(d.found == c.found);
    }
  }
}

TEST_CASE("subset search: zero column and budget") {
  auto F = make_field(3, 1);
  MatrixQ H(F, 2, 4);
  H(0, 0) = 1;
  H(1, 1) = 1;
  H(0, 2) = 1;
  H(1, 2) = 1;  // column 3 stays zero
  for (bool omp : {false, true}) {
    auto r = omp ? subset_search_omp(H, 2, SubsetMode::MinDependent, 1000)
                 : subset_search_serial(H, 2, SubsetMode::MinDependent, 1000);
    REQUIRE(r.found);
    CHECK(r.witness == std::vector<size_t>{3});
    auto s = omp ? subset_search_omp(H, 2, SubsetMode::MinDependent, 1)
                 : subset_search_serial(H, 2, SubsetMode::MinDependent, 1);
    CHECK((s.budget_exceeded || s.found));
  }
  MatrixQ big(F, 4, 30);
  std::mt19937_64 rng(3);
  big = oracle::random_matrix(F, 4, 30, rng);
  auto r = subset_search_serial(big, 4, SubsetMode::AnyOfSize, 3);
  CHECK((r.budget_exceeded || r.found));
}

TEST_CASE("enumeration: serial and OpenMP agree with brute force") {
  std::mt19937_64 rng(8);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    auto F = make_field(p, e);
    for (int t = 0; t < 30; ++t) {
      const size_t k = 1 + rng() % 4, n = k + 1 + rng() % 5;
      auto G = independent_rows(oracle::random_matrix(F, k, n, rng));
      if (G.rows() == 0) continue;
      const size_t expect = oracle::min_weight(G);
      const auto a = min_weight_serial(G, 0, 1'000'000);
      const auto b = min_weight_omp(G, 0, 1'000'000);
      CHECK(a.min_weight == expect);
      CHECK(b.min_weight == expect);
      CHECK(a.witness == b.witness);
      CHECK(hamming_weight(a.witness) == expect);
      if (G.rows() >= 2) {
        MatrixQ sub = G.select_rows(std::vector<size_t>{0});
        const size_t rel = oracle::relative_min_weight(G, sub);
        CHECK(min_weight_serial(G, 1, 1'000'000).min_weight == rel);
        CHECK(min_weight_omp(G, 1, 1'000'000).min_weight == rel);
      }
    }
  }
}

TEST_CASE("enumeration: large enough to split across threads") {
  auto F = make_field(3, 1);
  std::mt19937_64 rng(12);
  auto G = independent_rows(oracle::random_matrix(F, 9, 14, rng));
  const auto a = min_weight_serial(G, 0, 100'000'000);
  const auto b = min_weight_omp(G, 0, 100'000'000);
  CHECK(a.min_weight == b.min_weight);
  CHECK(a.witness == b.witness);
  CHECK(enumeration_size(G, 0) + 1 == static_cast<uint64_t>(std::pow(3, G.rows())));
  const auto c = min_weight_serial(G, 0, 10);
  CHECK(c.budget_exceeded);
}
