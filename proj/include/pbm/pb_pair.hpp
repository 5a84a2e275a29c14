#pragma once

// PB-pairs: a 1-2-equivalence on {1,..,n} together with a set of
// singleton-class "domain" elements. A PB-pair is half a diagram (a
// kernel-domain or cokernel-codomain pair), and the join of two PB-pairs
// models the middle row of a product diagram: its rank counts the
// alternating paths connecting the two domains.

#include <string>
#include <utility>
#include <vector>

#include "pbm/error.hpp"
#include "pbm/partition.hpp"

namespace pbm {

class PBPair {
 public:
  PBPair() = default;  // the empty pair on n = 0

  /// doubles are the 2-element classes, domain the domain set, all 1-based.
  /// Throws ValidationError if classes overlap or a domain element is not
  /// in a singleton class.
  PBPair(int n, const std::vector<std::pair<int, int>>& doubles,
         const std::vector<int>& domain);

  int n() const { return n_; }
  /// Partner of x under the equivalence (1-based), or 0 if {x} is a
  /// singleton class.
  int eq_partner(int x) const { return partner_[static_cast<size_t>(x)]; }
  bool in_domain(int x) const { return in_dom_[static_cast<size_t>(x)]; }
  const std::vector<int>& domain() const { return domain_; }
  int rank() const { return static_cast<int>(domain_.size()); }
  std::vector<std::pair<int, int>> doubles() const;

  bool operator==(const PBPair& o) const = default;
  bool operator<(const PBPair& o) const;

 private:
  int n_ = 0;
  std::vector<int> partner_;  // size n+1, index 0 unused, 0 = singleton
  std::vector<bool> in_dom_;  // size n+1
  std::vector<int> domain_;   // ascending
};

struct JoinResult {
  std::vector<std::vector<int>> classes;  // joined equivalence; classes of any size
  std::vector<std::pair<int, int>> domain_pairs;  // Z, sorted by first member
  int rank = 0;                                   // |Z|
  std::vector<std::vector<int>> paths;  // domain path per Z entry, aligned
};

/// Join of two PB-pairs on the same ground set. Classes come from the
/// union of the two partner graphs; Z pairs up domain elements lying in a
/// common class. Throws DimensionError on mismatched n.
JoinResult join(const PBPair& p1, const PBPair& p2);

/// Alternating domain paths, one per element of Z, sorted by their
/// endpoint in p1's domain. A trivial path is a single shared domain
/// element; otherwise edges alternate p2/p1 starting and ending on
/// straight lines of the respective pair.
std::vector<std::vector<int>> domain_paths(const PBPair& p1, const PBPair& p2);

/// The fixed pair (eps_{m,k}, [t]): singleton classes {1},..,{k}, doubles
/// {k+1,k+2},..,{m-1,m}, domain {1,..,t}. Throws ValidationError when
/// k > m, k and m have different parity, or t > k.
PBPair epsilon_pair(int m, int k, int t);

bool epsilon_pair_defined(int m, int k, int t);

/// (kernel-domain, cokernel-codomain) halves of a diagram.
std::pair<PBPair, PBPair> halves(const Partition& p);

/// Rebuild a diagram from its halves plus the transversal pairing
/// (1-based dom -> codom entries). Inverse of halves + transversal_pairs.
Partition assemble(const PBPair& upper, const PBPair& lower,
                   const std::vector<std::pair<int, int>>& pairing);

/// Some diagram whose kernel-domain half is the given pair (domain
/// elements are wired straight down to fresh transversals).
Partition witness_partition(const PBPair& p);

// Text format: `n; eq=[[3,8]]; X=[1,2,9]` (doubles listed, singletons
// implicit).
std::string to_string(const PBPair& p);
PBPair parse_pb_pair(const std::string& text);

}  // namespace pbm
