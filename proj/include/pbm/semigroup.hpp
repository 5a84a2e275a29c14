#pragma once

// Definition-faithful finite-semigroup machinery: explicit Cayley tables,
// Green's preorders by principal-ideal containment, regularity by direct
// search, and isomorphism testing by invariant-refined backtracking. This
// is the oracle side of the project; it deliberately shares no code with
// the combinatorial descriptions it is used to cross-check.

#include <optional>
#include <string>
#include <vector>

#include "pbm/enumeration.hpp"
#include "pbm/variant.hpp"

namespace pbm {

class FiniteSemigroup {
 public:
  /// Takes the full multiplication table (table[i][j] = index of i*j).
  /// Associativity is checked exhaustively for sizes up to 100 and on a
  /// deterministic sample of triples above that.
  explicit FiniteSemigroup(std::vector<std::vector<int>> table,
                           std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(table_.size()); }
  int apply(int i, int j) const {
    return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
};

struct GreenStructure {
  // class id per element, ids dense from 0 in order of least member
  std::vector<int> r_class, l_class, h_class, d_class, j_class;
  // preorder matrices: leq_r[x][y] != 0 iff x <=_R y
  std::vector<std::vector<char>> leq_r, leq_l, leq_j;
  std::vector<char> idempotent, regular;

  int num_classes(GreenKind kind) const;
  const std::vector<int>& classes(GreenKind kind) const;
};

GreenStructure green_structure(const FiniteSemigroup& s);

/// Cayley table of the variant over the all_partitions(n) element order,
/// labelled by canonical partition text.
FiniteSemigroup build_table(const Variant& v, const EnumerationBounds& bounds = {});

/// An isomorphism s -> t as an element bijection, or nullopt after an
/// exhaustive (pruned) search. Sizes are capped at 200.
std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& s,
                                                 const FiniteSemigroup& t);

/// Full homomorphism-and-bijection re-check of a candidate map.
bool is_isomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                    const std::vector<int>& map);

/// For rank-0 sandwiches: checks that x -> x*x retracts PB_n onto the
/// regular part and that products factor through it. Throws unless
/// rank(alpha) = 0.
bool verify_inflation(const Variant& v, const EnumerationBounds& bounds = {});

/// Sizes of the preimages of the retraction x -> x*x over the regular
/// part, ascending. Throws unless rank(alpha) = 0.
std::vector<int> preimage_multiset(const Variant& v,
                                   const EnumerationBounds& bounds = {});

}  // namespace pbm
