#pragma once

// Sandwich variants of PB_n: the semigroup (PB_n, *) with s * t = s.alpha.t.
// P-sets are computed through their rank characterisation
//   P_1 = { x : rank(x a) = rank x },   P_2 = { x : rank(a x) = rank x },
//   P_3 = { x : rank(a x a) = rank x },  P = P_1 n P_2  (= P_3 = Reg here),
// and the variant Green's classes follow the case split on membership in
// these sets, with the natural classes given by their kernel/cokernel
// descriptions.

#include <optional>
#include <utility>
#include <vector>

#include "pbm/enumeration.hpp"
#include "pbm/partition.hpp"

namespace pbm {

class Variant {
 public:
  explicit Variant(Partition alpha);

  int n() const { return alpha_.n(); }
  const Partition& alpha() const { return alpha_; }
  int rank() const { return rank_; }
  int ker_singletons() const { return ker_singletons_; }
  int coker_singletons() const { return coker_singletons_; }

  Partition sandwich(const Partition& s, const Partition& t) const;

 private:
  Partition alpha_;
  int rank_ = 0;
  int ker_singletons_ = 0;
  int coker_singletons_ = 0;
};

bool in_p1(const Variant& v, const Partition& x);
bool in_p2(const Variant& v, const Partition& x);
bool in_p3(const Variant& v, const Partition& x);
bool in_p(const Variant& v, const Partition& x);

// Element indices are positions in the all_partitions(n) order.
struct PSets {
  std::vector<int> p1, p2, p3, p;
};

/// The four P-sets of the variant. Verifies P = P_3 as computed.
PSets p_sets(const Variant& v, const EnumerationBounds& bounds = {});

struct RegularDChain {
  struct Level {
    int q = 0;
    std::vector<int> elements;  // indices into all_partitions(n)
    int l_class_count = 0;      // distinct (cokernel, codomain) pairs
    int r_class_count = 0;      // distinct (kernel, domain) pairs
  };
  std::vector<Level> levels;  // q = 0 .. rank(alpha)
};

/// The chain of regular D-classes of the variant: level q holds the
/// rank-q elements of P, together with its L- and R-class counts.
RegularDChain regular_d_chain(const Variant& v, const EnumerationBounds& bounds = {});

/// (l_class_count, r_class_count) of level q. Throws on q out of range.
std::pair<int, int> class_counts(const Variant& v, int q,
                                 const EnumerationBounds& bounds = {});

enum class GreenKind { R, L, H, D, J };

/// The Green's class of x in the variant, derived from the case-split
/// formulas (natural class intersected with the appropriate P-set, or a
/// singleton). Elements are returned in enumeration order.
std::vector<Partition> variant_green_class(const Variant& v, const Partition& x,
                                           GreenKind kind,
                                           const EnumerationBounds& bounds = {});

/// The variant R-preorder via the natural one: s <=_{R^a} t iff
/// s <=_R (t a). Only valid for s in P_1; otherwise throws ScopeError
/// (use the Cayley-table oracle for such elements).
bool leq_variant_r(const Variant& v, const Partition& s, const Partition& t);

}  // namespace pbm
