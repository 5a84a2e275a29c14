#include "pbm/variant.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pbm {

namespace {

// (kernel, domain) of the upper row packed into a comparable key:
// partner-or-marker per upper vertex.
std::vector<int> ker_dom_key(const Partition& p) {
  const int n = p.n();
  std::vector<int> key(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    int w = p.partner(v);
    key[static_cast<size_t>(v)] = (w >= n) ? -2 : w;  // -2 marks "in dom"
  }
  return key;
}

std::vector<int> coker_codom_key(const Partition& p) {
  return ker_dom_key(reflect(p));
}

}  // namespace

Variant::Variant(Partition alpha) : alpha_(std::move(alpha)) {
  PartitionStats s = stats(alpha_);
  rank_ = s.rank;
  ker_singletons_ = s.ker_singletons;
  coker_singletons_ = s.coker_singletons;
}

Partition Variant::sandwich(const Partition& s, const Partition& t) const {
  return product(product(s, alpha_), t);
}

bool in_p1(const Variant& v, const Partition& x) {
  return rank_of(product(x, v.alpha())) == rank_of(x);
}

bool in_p2(const Variant& v, const Partition& x) {
  return rank_of(product(v.alpha(), x)) == rank_of(x);
}

bool in_p3(const Variant& v, const Partition& x) {
  return rank_of(product(product(v.alpha(), x), v.alpha())) == rank_of(x);
}

bool in_p(const Variant& v, const Partition& x) { return in_p1(v, x) && in_p2(v, x); }

PSets p_sets(const Variant& v, const EnumerationBounds& bounds) {
  PSets out;
  int index = 0;
  for_each_partition(
      v.n(),
      [&](const Partition& x) {
        bool one = in_p1(v, x);
        bool two = in_p2(v, x);
        if (one) out.p1.push_back(index);
        if (two) out.p2.push_back(index);
        if (one && two) out.p.push_back(index);
        if (in_p3(v, x)) out.p3.push_back(index);
        ++index;
      },
      bounds);
  if (out.p != out.p3)
    throw Error("internal: P != P_3 for this variant, which cannot happen in PB_n");
  return out;
}

RegularDChain regular_d_chain(const Variant& v, const EnumerationBounds& bounds) {
  RegularDChain chain;
  chain.levels.resize(static_cast<size_t>(v.rank()) + 1);
  for (int q = 0; q <= v.rank(); ++q) chain.levels[static_cast<size_t>(q)].q = q;
  std::vector<std::set<std::vector<int>>> l_keys(static_cast<size_t>(v.rank()) + 1);
  std::vector<std::set<std::vector<int>>> r_keys(static_cast<size_t>(v.rank()) + 1);
  int index = 0;
  for_each_partition(
      v.n(),
      [&](const Partition& x) {
        int q = rank_of(x);
        if (q <= v.rank() && in_p(v, x)) {
          auto& level = chain.levels[static_cast<size_t>(q)];
          level.elements.push_back(index);
          l_keys[static_cast<size_t>(q)].insert(coker_codom_key(x));
          r_keys[static_cast<size_t>(q)].insert(ker_dom_key(x));
        }
        ++index;
      },
      bounds);
  for (int q = 0; q <= v.rank(); ++q) {
    chain.levels[static_cast<size_t>(q)].l_class_count =
        static_cast<int>(l_keys[static_cast<size_t>(q)].size());
    chain.levels[static_cast<size_t>(q)].r_class_count =
        static_cast<int>(r_keys[static_cast<size_t>(q)].size());
  }
  return chain;
}

std::pair<int, int> class_counts(const Variant& v, int q,
                                 const EnumerationBounds& bounds) {
  if (q < 0 || q > v.rank())
    throw ValidationError("class level " + std::to_string(q) + " out of range 0.." +
                          std::to_string(v.rank()));
  RegularDChain chain = regular_d_chain(v, bounds);
  const auto& level = chain.levels[static_cast<size_t>(q)];
  return {level.l_class_count, level.r_class_count};
}

std::vector<Partition> variant_green_class(const Variant& v, const Partition& x,
                                           GreenKind kind,
                                           const EnumerationBounds& bounds) {
  if (x.n() != v.n()) throw DimensionError("element and sandwich have different n");

  auto collect = [&](const std::function<bool(const Partition&)>& keep) {
    std::vector<Partition> out;
    for_each_partition(
        v.n(), [&](const Partition& y) { if (keep(y)) out.push_back(y); }, bounds);
    return out;
  };

  const bool x1 = in_p1(v, x);
  const bool x2 = in_p2(v, x);
  const auto xr = ker_dom_key(x);
  const auto xl = coker_codom_key(x);
  const int xq = rank_of(x);

  switch (kind) {
    case GreenKind::R:
      if (!x1) return {x};
      return collect([&](const Partition& y) {
        return ker_dom_key(y) == xr && in_p1(v, y);
      });
    case GreenKind::L:
      if (!x2) return {x};
      return collect([&](const Partition& y) {
        return coker_codom_key(y) == xl && in_p2(v, y);
      });
    case GreenKind::H:
      if (!(x1 && x2)) return {x};
      return collect([&](const Partition& y) {
        return ker_dom_key(y) == xr && coker_codom_key(y) == xl;
      });
    case GreenKind::D:
      if (x1 && x2)
        return collect([&](const Partition& y) {
          return rank_of(y) == xq && in_p(v, y);
        });
      if (x2) return variant_green_class(v, x, GreenKind::L, bounds);
      if (x1) return variant_green_class(v, x, GreenKind::R, bounds);
      return {x};
    case GreenKind::J:
      if (in_p3(v, x))
        return collect([&](const Partition& y) {
          return rank_of(y) == xq && in_p3(v, y);
        });
      return variant_green_class(v, x, GreenKind::D, bounds);
  }
  throw Error("unreachable");
}

bool leq_variant_r(const Variant& v, const Partition& s, const Partition& t) {
  if (s.n() != v.n() || t.n() != v.n())
    throw DimensionError("elements and sandwich have different n");
  if (!in_p1(v, s))
    throw ScopeError("variant R-preorder formula needs the left element in P_1");
  return leq_r_natural(s, product(t, v.alpha()));
}

}  // namespace pbm
