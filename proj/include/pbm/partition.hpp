#pragma once

// Partial Brauer partitions: partitions of {1,..,n} u {1',..,n'} into blocks
// of size at most 2, with the usual diagram product (stack, trace paths
// through the middle row, discard middle components).
//
// Internal vertex encoding: upper vertex i -> i-1, lower vertex i' -> n+i-1.
// The text notation is signed and 1-based: i for upper, -i for lower, e.g.
//   7;[[1,5],[2],[3,-2],[4],[6,-5],[7,-7],[-1,-6],[-3,-4]]

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pbm/error.hpp"

namespace pbm {

class Partition {
 public:
  static constexpr int npos = -1;  // "no partner": singleton block

  Partition() = default;  // the unique element of PB_0

  /// Identity diagram: transversals {i, i'} for all i.
  static Partition identity(int n);

  /// Build from signed block notation. Throws ValidationError on overlap,
  /// missing vertices, blocks of size > 2, or out-of-range entries.
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  /// Rank-n diagram with transversals {i, images[i]'}; images is 0-based
  /// and must be a bijection on {0,..,n-1}.
  static Partition from_permutation(const std::vector<int>& images);

  int n() const { return n_; }

  /// Partner of internal vertex v (0-based, 0..2n-1), or npos.
  int partner(int v) const { return partner_[static_cast<size_t>(v)]; }

  /// Canonical signed block list: blocks ordered by least vertex (upper
  /// before lower), members ascending in the same order.
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const Partition& o) const = default;
  bool operator<(const Partition& o) const;

 private:
  Partition(int n, std::vector<int> partner)
      : n_(n), partner_(std::move(partner)) {}

  friend Partition product(const Partition&, const Partition&);
  friend Partition reflect(const Partition&);

  int n_ = 0;
  std::vector<int> partner_;  // size 2n
};

/// Diagram product. Throws DimensionError if ground sizes differ.
Partition product(const Partition& a, const Partition& b);

/// Swap the rows (x <-> x'). An involution; exchanges ker/coker and
/// dom/codom.
Partition reflect(const Partition& p);

/// Number of transversal blocks.
int rank_of(const Partition& p);

// Per-element combinatorics of a diagram. All ground-set members are
// 1-based labels; classes and blocks are sorted ascending and listed by
// least member.
struct PartitionStats {
  int rank = 0;
  std::vector<int> dom;    // upper transversal endpoints
  std::vector<int> codom;  // lower transversal endpoints (unprimed labels)
  std::vector<std::vector<int>> ker_classes;
  std::vector<std::vector<int>> coker_classes;
  std::vector<std::vector<int>> upper_nontransversals;  // N^u: hooks and singletons
  std::vector<std::vector<int>> lower_nontransversals;  // N^l, unprimed labels
  int ker_singletons = 0;    // k
  int coker_singletons = 0;  // p
};

PartitionStats stats(const Partition& p);

/// Transversal pairing dom -> codom as 1-based (i, j) with i -> j'.
std::vector<std::pair<int, int>> transversal_pairs(const Partition& p);

/// Natural R-preorder of PB_n: s <=_R t iff every upper non-transversal
/// block of t is a block of s.
bool leq_r_natural(const Partition& s, const Partition& t);

/// Dual preorder via reflection: s <=_L t iff reflect(s) <=_R reflect(t).
bool leq_l_natural(const Partition& s, const Partition& t);

std::string to_string(const Partition& p);
Partition parse_partition(const std::string& text);

}  // namespace pbm
