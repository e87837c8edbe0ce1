#include <doctest.h>

#include <numeric>

#include "constamax/cosets.hpp"
#include "oracles.hpp"

using namespace constamax;

namespace {

std::set<std::set<uint64_t>> as_sets(const CosetPartition& p) {
  std::set<std::set<uint64_t>> out;
  for (const auto& c : p.cosets) out.insert(std::set<uint64_t>(c.elements.begin(), c.elements.end()));
  return out;
}

bool is_prime_power(uint64_t q) {
  try {
    prime_power(q);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

}  // namespace

TEST_CASE("orbit examples") {
  auto p = CosetProfile::make(9, 4, 10);
  CHECK(orbit(5, p).elements == std::vector<uint64_t>{5});
  CHECK(orbit(13, p).elements == std::vector<uint64_t>{13, 37});
  CHECK(orbit(13, p).representative == 13);
  CHECK(orbit(0, p).elements == std::vector<uint64_t>{0});
}

TEST_CASE("partition examples") {
  auto p = CosetProfile::make(9, 4, 10);
  CHECK(p.tag == LemmaTag::L1);
  CHECK(as_sets(partition_orn(p)) ==
        std::set<std::set<uint64_t>>{{5}, {25}, {1, 9}, {13, 37}, {17, 33}, {21, 29}});
  CHECK(same_partition(predict_partition(p), partition_orn(p)));

  auto neg = CosetProfile::make(3, 2, 4);
  CHECK(neg.tag == LemmaTag::L2);
  CHECK(as_sets(partition_orn(neg)) == std::set<std::set<uint64_t>>{{1, 3}, {5, 7}});
  CHECK(as_sets(predict_partition(neg)) == std::set<std::set<uint64_t>>{{1, 3}, {5, 7}});

  auto rs = CosetProfile::make(8, 1, 7);
  CHECK(rs.tag == LemmaTag::RS);
  CHECK(partition_orn(rs).cosets.size() == 7);
}

TEST_CASE("L5 example q=16 r=3 n=17") {
  auto p = CosetProfile::make(16, 3, 17);
  CHECK(p.satisfies(LemmaTag::L5));
  const auto part = predict_partition(p, LemmaTag::L5);
  const auto sets = as_sets(part);
  CHECK(sets.count({7, 10}));
  CHECK(sets.count({34}));
  CHECK(same_partition(part, partition_orn(p)));
}

TEST_CASE("invalid profiles") {
  CHECK_THROWS_AS(CosetProfile::make(4, 3, 4), PreconditionError);  // gcd(n, q) = 4
  CHECK_THROWS_AS(CosetProfile::make(9, 3, 10), PreconditionError);  // 3 does not divide 8
  auto other = CosetProfile::make(7, 1, 4);
  CHECK(other.tag == LemmaTag::Other);
  CHECK_THROWS_AS(predict_partition(other), PreconditionError);
}

TEST_CASE("every lemma profile with q <= 49 matches brute force") {
  size_t checked = 0;
  for (uint64_t q = 3; q <= 49; ++q) {
    if (!is_prime_power(q)) continue;
    for (uint64_t r = 1; r < q; ++r) {
      if ((q - 1) % r) continue;
      std::set<uint64_t> lengths{q + 1, (q - 1) / r};
      if ((q + 1) % 2 == 0) lengths.insert((q + 1) / 2);
      for (uint64_t n : lengths) {
        if (n == 0 || std::gcd(n, q) != 1) continue;
        auto p = CosetProfile::make(q, r, n);
        const auto brute = oracle::cosets(q, r, n);
        CHECK(as_sets(partition_orn(p)) == brute);
        for (LemmaTag t : {LemmaTag::L1, LemmaTag::L2, LemmaTag::L3, LemmaTag::L4, LemmaTag::L5, LemmaTag::RS}) {
          if (!p.satisfies(t)) continue;
          INFO("q=" << q << " r=" << r << " n=" << n << " tag " << to_string(t));
          CHECK(as_sets(predict_partition(p, t)) == brute);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("L1 coset sizes") {
  for (auto [q, r] : {std::pair{9ull, 4ull}, {11, 5}, {25, 6}, {17, 8}, {13, 2}}) {
    auto p = CosetProfile::make(q, r, q + 1);
    REQUIRE(p.tag == LemmaTag::L1);
    const auto part = partition_orn(p);
    size_t singles = 0, total = 0;
    for (const auto& c : part.cosets) {
      CHECK(c.size() <= 2);
      singles += c.size() == 1;
      total += c.size();
    }
    CHECK(singles == 2);
    CHECK(total == p.n);
  }
}

TEST_CASE("orbits are closed under multiplication by q") {
  auto p = CosetProfile::make(25, 6, 26);
  for (uint64_t s : p.orn()) {
    const auto o = orbit(s, p);
    std::set<uint64_t> moved;
    for (uint64_t x : o.elements) moved.insert(x * p.q % p.rn);
    CHECK(moved == std::set<uint64_t>(o.elements.begin(), o.elements.end()));
  }
}

TEST_CASE("longest_run") {
  auto p = CosetProfile::make(9, 4, 10);
  auto run = longest_run({1, 5, 9}, p);
  CHECK(run.start == 1);
  CHECK(run.length == 3);
  run = longest_run({5}, p);
  CHECK(run.start == 5);
  CHECK(run.length == 1);
  CHECK(longest_run({}, p).length == 0);

  auto p2 = CosetProfile::make(19, 2, 9);  // rn = 18
  run = longest_run({3, 15, 5, 13, 9, 7, 11}, p2);
  CHECK(run.start == 3);
  CHECK(run.length == 7);
}

TEST_CASE("longest_run length is rotation invariant") {
  auto p = CosetProfile::make(9, 4, 10);
  const std::vector<uint64_t> Z{1, 5, 9, 21, 29};
  const auto base = longest_run(Z, p).length;
  for (uint64_t shift = 0; shift < p.n; ++shift) {
    std::vector<uint64_t> rot;
    for (uint64_t z : Z) rot.push_back((z + p.r * shift) % p.rn);
    std::sort(rot.begin(), rot.end());
    CHECK(longest_run(rot, p).length == base);
  }
}

TEST_CASE("multiplicative order and closure") {
  CHECK(multiplicative_order(9, 40) == 2);
  CHECK(multiplicative_order(3, 8) == 2);
  auto p = CosetProfile::make(9, 4, 10);
  CHECK(coset_closure({13, 5}, p) == std::vector<uint64_t>{5, 13, 37});
}
