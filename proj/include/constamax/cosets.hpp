#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace constamax {

/// Which closed-form coset structure applies to a profile.
enum class LemmaTag { L1, L2, L3, L4, L5, RS, Other };

std::string to_string(LemmaTag t);

/// The arithmetic setting of an alpha-constacyclic code: alpha has order r in
/// GF(q)^*, q - 1 = r * cofactor, and the roots of x^n - alpha are beta^j for
/// j in O_rn = {1 + r i : 0 <= i < n}, beta a primitive rn-th root of unity.
struct CosetProfile {
  uint64_t q = 0;
  uint64_t r = 0;
  uint64_t n = 0;
  uint64_t cofactor = 0;
  uint64_t rn = 0;
  LemmaTag tag = LemmaTag::Other;

  /// Validates gcd(n, q) = 1 and r | q - 1; throws PreconditionError otherwise.
  static CosetProfile make(uint64_t q, uint64_t r, uint64_t n);

  /// True when the profile meets the hypotheses behind `t`. Several tags can
  /// hold at once for tiny profiles; `tag` keeps the first in L1..L5, RS order.
  bool satisfies(LemmaTag t) const;

  /// Residues of O_rn in increasing order.
  std::vector<uint64_t> orn() const;
  bool in_orn(uint64_t s) const { return s < rn && s % r == 1 % r; }
  /// Reduces any integer into [0, rn).
  uint64_t mod(int64_t v) const;
};

struct CyclotomicCoset {
  uint64_t representative = 0;
  std::vector<uint64_t> elements;  // sorted

  size_t size() const { return elements.size(); }
  bool operator==(const CyclotomicCoset&) const = default;
};

struct CosetPartition {
  CosetProfile profile;
  std::vector<CyclotomicCoset> cosets;  // sorted by representative

  size_t total_size() const;
  /// The coset holding s, if any.
  const CyclotomicCoset* find(uint64_t s) const;
};

/// Multiplicative q-orbit of s modulo rn.
CyclotomicCoset orbit(uint64_t s, const CosetProfile& profile);

/// Orbits of every element of O_rn, each once.
CosetPartition partition_orn(const CosetProfile& profile);

/// Closed-form partition for profiles satisfying one of the lemma tags (or
/// rn = q - 1). `tag` defaults to profile.tag. Throws for LemmaTag::Other.
CosetPartition predict_partition(const CosetProfile& profile, std::optional<LemmaTag> tag = std::nullopt);

bool same_partition(const CosetPartition& a, const CosetPartition& b);

/// Longest arithmetic run b, b + r, ..., b + r(L - 1) inside Z, scanned
/// cyclically over O_rn. Ties go to the run whose start has the least index i
/// in b = 1 + r i. An empty Z gives length 0.
struct Run {
  uint64_t start = 0;
  uint64_t length = 0;
};
Run longest_run(const std::vector<uint64_t>& Z, const CosetProfile& profile);

/// Multiplicative order of q modulo rn (the extension degree m).
uint64_t multiplicative_order(uint64_t q, uint64_t modulus);

/// Sorted union of the orbits of the given residues.
std::vector<uint64_t> coset_closure(const std::vector<uint64_t>& residues, const CosetProfile& profile);

}  // namespace constamax
