#pragma once

// Isomorphism classification of the variants. For sandwich elements of
// equal nonzero rank, the variants are isomorphic exactly when their
// kernel/cokernel singleton counts agree, and a witness pair of
// permutations conjugating one sandwich to the other can be constructed
// directly. Rank-0 verdicts from invariants alone stay conjectural; the
// Cayley-table oracle settles them at small n.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbm/enumeration.hpp"
#include "pbm/partition.hpp"

namespace pbm {

struct InvariantTuple {
  int n = 0;  // ground size
  int r = 0;  // rank of the sandwich element
  int k = 0;  // singleton kernel classes
  int p = 0;  // singleton cokernel classes

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

InvariantTuple invariants(const Partition& alpha);

enum class IsoStatus {
  Isomorphic,
  NotIsomorphic,
  ConjecturalEqualInvariants,     // rank 0, invariants match
  ConjecturalDistinctInvariants,  // rank 0, invariants differ
};

struct IsoVerdict {
  IsoStatus status = IsoStatus::NotIsomorphic;
  InvariantTuple alpha_invariants, beta_invariants;
  // permutations (0-based images) with pi1 . alpha . pi2 = beta, attached
  // to every Isomorphic verdict decided by invariants
  std::optional<std::pair<std::vector<int>, std::vector<int>>> conjugators;
  bool oracle_used = false;
  std::optional<std::vector<int>> oracle_map;  // element bijection if found
};

/// Classify the pair. With use_oracle, rank-0 ties are settled by an
/// exhaustive table search (subject to the enumeration bounds) and the
/// oracle outcome is attached for any rank.
IsoVerdict decide_isomorphism(const Partition& alpha, const Partition& beta,
                              bool use_oracle = false,
                              const EnumerationBounds& bounds = {});

/// Permutations (pi1, pi2), 0-based images, with pi1 . alpha . pi2 = beta.
/// Requires equal invariant tuples (rank 0 allowed); the result is
/// verified by multiplying out before it is returned.
std::pair<std::vector<int>, std::vector<int>> construct_conjugators(
    const Partition& alpha, const Partition& beta);

// One entry per class of the variant R- (or L-) preorder: class size,
// number of classes below-or-equal, number above-or-equal. Sorted, so two
// isomorphic variants produce identical fingerprints.
using PreorderFingerprint = std::vector<std::array<int, 3>>;

struct RankZeroReport {
  InvariantTuple alpha_invariants, beta_invariants;
  std::vector<int> alpha_preimage_sizes, beta_preimage_sizes;
  PreorderFingerprint alpha_r_fingerprint, beta_r_fingerprint;
  PreorderFingerprint alpha_l_fingerprint, beta_l_fingerprint;
  bool invariants_equal = false;
  bool preimage_multisets_equal = false;
  bool fingerprints_equal = false;
  std::optional<bool> oracle_isomorphic;  // set when the tables fit the bounds
  std::string note;
};

/// Diagnostic comparison of two rank-0 variants: invariant tuples,
/// retraction preimage multisets, R/L preorder fingerprints, and (within
/// bounds) the definitive table verdict.
RankZeroReport rank_zero_report(const Partition& alpha, const Partition& beta,
                                const EnumerationBounds& bounds = {});

}  // namespace pbm
