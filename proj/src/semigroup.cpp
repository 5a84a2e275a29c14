#include "pbm/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>

namespace pbm {

FiniteSemigroup::FiniteSemigroup(std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const int n = static_cast<int>(table_.size());
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw ValidationError("table entry out of range");
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw ValidationError("label count does not match table size");

  auto check = [&](int a, int b, int c) {
    if (apply(apply(a, b), c) != apply(a, apply(b, c)))
      throw ValidationError("multiplication table is not associative");
  };
  if (n <= 100) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

namespace {

std::vector<int> classes_from_preorder(const std::vector<std::vector<char>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<int> cls(static_cast<size_t>(n), -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[static_cast<size_t>(x)] != -1) continue;
    cls[static_cast<size_t>(x)] = next;
    for (int y = x + 1; y < n; ++y)
      if (leq[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
          leq[static_cast<size_t>(y)][static_cast<size_t>(x)])
        cls[static_cast<size_t>(y)] = next;
    ++next;
  }
  return cls;
}

std::vector<int> renumber(std::vector<int> cls) {
  std::map<int, int> seen;
  for (int& c : cls) {
    auto [it, fresh] = seen.emplace(c, static_cast<int>(seen.size()));
    c = it->second;
  }
  return cls;
}

}  // namespace

int GreenStructure::num_classes(GreenKind kind) const {
  const auto& c = classes(kind);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

const std::vector<int>& GreenStructure::classes(GreenKind kind) const {
  switch (kind) {
    case GreenKind::R: return r_class;
    case GreenKind::L: return l_class;
    case GreenKind::H: return h_class;
    case GreenKind::D: return d_class;
    case GreenKind::J: return j_class;
  }
  throw Error("unreachable");
}

GreenStructure green_structure(const FiniteSemigroup& s) {
  const int n = s.size();
  GreenStructure g;
  auto matrix = [n] {
    return std::vector<std::vector<char>>(static_cast<size_t>(n),
                                          std::vector<char>(static_cast<size_t>(n), 0));
  };
  g.leq_r = matrix();
  g.leq_l = matrix();
  g.leq_j = matrix();

  // x <=_R y iff x lies in the right ideal {y} u yS; dually for L. The
  // two-sided ideal closes the row of y under left multiplication.
  for (int y = 0; y < n; ++y) {
    std::vector<char> right(static_cast<size_t>(n), 0), both(static_cast<size_t>(n), 0);
    right[static_cast<size_t>(y)] = 1;
    for (int j = 0; j < n; ++j) right[static_cast<size_t>(s.apply(y, j))] = 1;
    for (int z = 0; z < n; ++z) {
      if (!right[static_cast<size_t>(z)]) continue;
      both[static_cast<size_t>(z)] = 1;
      for (int i = 0; i < n; ++i) both[static_cast<size_t>(s.apply(i, z))] = 1;
    }
    for (int x = 0; x < n; ++x) {
      g.leq_r[static_cast<size_t>(x)][static_cast<size_t>(y)] = right[static_cast<size_t>(x)];
      g.leq_j[static_cast<size_t>(x)][static_cast<size_t>(y)] = both[static_cast<size_t>(x)];
    }
  }
  for (int y = 0; y < n; ++y) {
    std::vector<char> left(static_cast<size_t>(n), 0);
    left[static_cast<size_t>(y)] = 1;
    for (int i = 0; i < n; ++i) left[static_cast<size_t>(s.apply(i, y))] = 1;
    for (int x = 0; x < n; ++x)
      g.leq_l[static_cast<size_t>(x)][static_cast<size_t>(y)] = left[static_cast<size_t>(x)];
  }

  g.r_class = classes_from_preorder(g.leq_r);
  g.l_class = classes_from_preorder(g.leq_l);
  g.j_class = classes_from_preorder(g.leq_j);

  // H = R n L; D = R o L (x D y iff some z has x R z and z L y)
  std::vector<int> h(static_cast<size_t>(n)), d(static_cast<size_t>(n), -1);
  {
    std::map<std::pair<int, int>, int> ids;
    for (int x = 0; x < n; ++x) {
      auto key = std::make_pair(g.r_class[static_cast<size_t>(x)],
                                g.l_class[static_cast<size_t>(x)]);
      auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
      h[static_cast<size_t>(x)] = it->second;
    }
  }
  {
    int next = 0;
    for (int x = 0; x < n; ++x) {
      if (d[static_cast<size_t>(x)] != -1) continue;
      // D-class of x: everything L-related to something R-related to x
      for (int z = 0; z < n; ++z) {
        if (g.r_class[static_cast<size_t>(z)] != g.r_class[static_cast<size_t>(x)])
          continue;
        for (int y = 0; y < n; ++y)
          if (g.l_class[static_cast<size_t>(y)] == g.l_class[static_cast<size_t>(z)])
            d[static_cast<size_t>(y)] = next;
      }
      ++next;
    }
  }
  g.h_class = renumber(std::move(h));
  g.d_class = renumber(std::move(d));

  g.idempotent.assign(static_cast<size_t>(n), 0);
  g.regular.assign(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    if (s.apply(x, x) == x) g.idempotent[static_cast<size_t>(x)] = 1;
    for (int y = 0; y < n; ++y) {
      if (s.apply(s.apply(x, y), x) == x) {
        g.regular[static_cast<size_t>(x)] = 1;
        break;
      }
    }
  }
  return g;
}

FiniteSemigroup build_table(const Variant& v, const EnumerationBounds& bounds) {
  const int n = v.n();
  if (n > bounds.max_n_cayley)
    throw BoundError("Cayley table for n=" + std::to_string(n) + " exceeds the bound " +
                     std::to_string(bounds.max_n_cayley));
  std::vector<Partition> elems = all_partitions(n, bounds);
  const int size = static_cast<int>(elems.size());
  if (size > bounds.max_table_size)
    throw BoundError("Cayley table of size " + std::to_string(size) +
                     " exceeds the bound " + std::to_string(bounds.max_table_size));
  std::map<Partition, int> index;
  for (int i = 0; i < size; ++i) index.emplace(elems[static_cast<size_t>(i)], i);

  std::vector<Partition> lhs(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i)
    lhs[static_cast<size_t>(i)] = product(elems[static_cast<size_t>(i)], v.alpha());

  std::vector<std::vector<int>> table(static_cast<size_t>(size),
                                      std::vector<int>(static_cast<size_t>(size)));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          index.at(product(lhs[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]));

  std::vector<std::string> labels(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i)
    labels[static_cast<size_t>(i)] = to_string(elems[static_cast<size_t>(i)]);
  return FiniteSemigroup(std::move(table), std::move(labels));
}

namespace {

// Joint colour refinement over both tables. Two elements can correspond
// under an isomorphism only if they carry the same colour, so a colour
// histogram mismatch proves non-isomorphism, and a discrete colouring
// forces the only candidate bijection. Symmetric structures are handled
// by individualisation: tentatively give one element of an ambiguous
// class a fresh colour (on both sides, one target at a time), re-refine,
// and recurse.
struct Colouring {
  std::vector<int> colour_s, colour_t;
  bool compatible = true;
  int num_colours = 0;
};

// One canonical id per distinct signature across both tables.
int assign_colours(const std::vector<std::vector<int>>& sig_s,
                   const std::vector<std::vector<int>>& sig_t,
                   std::vector<int>& colour_s, std::vector<int>& colour_t) {
  std::map<std::vector<int>, int> dict;
  for (const auto& sig : sig_s) dict.emplace(sig, 0);
  for (const auto& sig : sig_t) dict.emplace(sig, 0);
  int next = 0;
  for (auto& [sig, id] : dict) id = next++;
  for (size_t x = 0; x < sig_s.size(); ++x) {
    colour_s[x] = dict.at(sig_s[x]);
    colour_t[x] = dict.at(sig_t[x]);
  }
  return next;
}

// Refine to a stable joint colouring, starting from the given colours.
void refine(const FiniteSemigroup& s, const FiniteSemigroup& t, Colouring& col) {
  const int n = s.size();
  auto step = [n](const FiniteSemigroup& table, const std::vector<int>& colour) {
    std::vector<std::vector<int>> sigs(static_cast<size_t>(n));
    std::vector<std::array<int, 3>> prods(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        prods[static_cast<size_t>(y)] = {colour[static_cast<size_t>(y)],
                                         colour[static_cast<size_t>(table.apply(x, y))],
                                         colour[static_cast<size_t>(table.apply(y, x))]};
      std::sort(prods.begin(), prods.end());
      std::vector<int> sig;
      sig.reserve(static_cast<size_t>(3 * n + 1));
      sig.push_back(colour[static_cast<size_t>(x)]);
      for (const auto& p : prods) {
        sig.push_back(p[0]);
        sig.push_back(p[1]);
        sig.push_back(p[2]);
      }
      sigs[static_cast<size_t>(x)] = std::move(sig);
    }
    return sigs;
  };
  while (true) {
    auto sig_s = step(s, col.colour_s);
    auto sig_t = step(t, col.colour_t);
    int next = assign_colours(sig_s, sig_t, col.colour_s, col.colour_t);
    if (next == col.num_colours) break;  // partition unchanged: stable
    col.num_colours = next;
  }
  std::vector<int> hist_s = col.colour_s, hist_t = col.colour_t;
  std::sort(hist_s.begin(), hist_s.end());
  std::sort(hist_t.begin(), hist_t.end());
  col.compatible = (hist_s == hist_t);
}

Colouring initial_colouring(const FiniteSemigroup& s, const FiniteSemigroup& t,
                            const GreenStructure& gs, const GreenStructure& gt) {
  const int n = s.size();
  auto class_sizes = [](const std::vector<int>& cls) {
    std::vector<int> count;
    for (int c : cls) {
      if (c >= static_cast<int>(count.size())) count.resize(static_cast<size_t>(c) + 1, 0);
      ++count[static_cast<size_t>(c)];
    }
    std::vector<int> size_of(cls.size());
    for (size_t x = 0; x < cls.size(); ++x) size_of[x] = count[static_cast<size_t>(cls[x])];
    return size_of;
  };
  auto initial = [&](const GreenStructure& g) {
    std::vector<std::vector<int>> sigs(static_cast<size_t>(n));
    auto rs = class_sizes(g.r_class), ls = class_sizes(g.l_class),
         hs = class_sizes(g.h_class), ds = class_sizes(g.d_class),
         js = class_sizes(g.j_class);
    for (int x = 0; x < n; ++x) {
      int down = 0, up = 0;
      for (int y = 0; y < n; ++y) {
        if (g.leq_j[static_cast<size_t>(y)][static_cast<size_t>(x)]) ++down;
        if (g.leq_j[static_cast<size_t>(x)][static_cast<size_t>(y)]) ++up;
      }
      sigs[static_cast<size_t>(x)] = {g.idempotent[static_cast<size_t>(x)],
                                      g.regular[static_cast<size_t>(x)],
                                      rs[static_cast<size_t>(x)],
                                      ls[static_cast<size_t>(x)],
                                      hs[static_cast<size_t>(x)],
                                      ds[static_cast<size_t>(x)],
                                      js[static_cast<size_t>(x)],
                                      down,
                                      up};
    }
    return sigs;
  };
  Colouring col;
  col.colour_s.assign(static_cast<size_t>(n), 0);
  col.colour_t.assign(static_cast<size_t>(n), 0);
  col.num_colours = assign_colours(initial(gs), initial(gt), col.colour_s, col.colour_t);
  refine(s, t, col);
  return col;
}

// Backtracking over images with immediate closure: assigning phi(x) forces
// phi on all products with already-assigned elements. Complete whenever it
// finishes inside its work budget; the budget guards against blow-up on
// highly symmetric tables, where the individualisation search below takes
// over instead.
struct ClosureSearch {
  const FiniteSemigroup& s;
  const FiniteSemigroup& t;
  const Colouring& col;
  long long budget;
  bool aborted = false;
  std::vector<int> map;       // s index -> t index or -1
  std::vector<int> preimage;  // t index -> s index or -1
  std::vector<int> trail;     // assigned s indices, for undo
  std::vector<int> order;     // static assignment order

  bool assign(int x, int u) {
    size_t mark = trail.size();
    if (!push(x, u)) {
      undo(mark);
      return false;
    }
    size_t head = mark;
    while (head < trail.size()) {
      int a = trail[head++];
      int fa = map[static_cast<size_t>(a)];
      for (size_t i = 0; i < trail.size(); ++i) {
        int b = trail[i];
        int fb = map[static_cast<size_t>(b)];
        if (!push(s.apply(a, b), t.apply(fa, fb)) ||
            !push(s.apply(b, a), t.apply(fb, fa))) {
          undo(mark);
          return false;
        }
      }
    }
    return true;
  }

  bool push(int x, int u) {
    if (--budget < 0) {
      aborted = true;
      return false;
    }
    int cur = map[static_cast<size_t>(x)];
    if (cur != -1) return cur == u;
    if (preimage[static_cast<size_t>(u)] != -1) return false;
    if (col.colour_s[static_cast<size_t>(x)] != col.colour_t[static_cast<size_t>(u)])
      return false;
    map[static_cast<size_t>(x)] = u;
    preimage[static_cast<size_t>(u)] = x;
    trail.push_back(x);
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      preimage[static_cast<size_t>(map[static_cast<size_t>(x)])] = -1;
      map[static_cast<size_t>(x)] = -1;
    }
  }

  bool solve(size_t pos) {
    while (pos < order.size() && map[static_cast<size_t>(order[pos])] != -1) ++pos;
    if (pos == order.size()) return true;
    int x = order[pos];
    for (int u = 0; u < t.size() && !aborted; ++u) {
      if (preimage[static_cast<size_t>(u)] != -1) continue;
      if (col.colour_t[static_cast<size_t>(u)] != col.colour_s[static_cast<size_t>(x)])
        continue;
      size_t mark = trail.size();
      if (assign(x, u) && solve(pos + 1)) return true;
      undo(mark);
    }
    return false;
  }
};

std::optional<std::vector<int>> individualise_and_search(const FiniteSemigroup& s,
                                                         const FiniteSemigroup& t,
                                                         const Colouring& col) {
  if (!col.compatible) return std::nullopt;
  const int n = s.size();

  // smallest ambiguous colour class, if any
  std::vector<int> count(static_cast<size_t>(col.num_colours), 0);
  for (int c : col.colour_s) ++count[static_cast<size_t>(c)];
  int target = -1;
  for (int c = 0; c < col.num_colours; ++c)
    if (count[static_cast<size_t>(c)] > 1 &&
        (target == -1 ||
         count[static_cast<size_t>(c)] < count[static_cast<size_t>(target)]))
      target = c;

  if (target == -1) {
    // discrete colouring: the colour-respecting bijection is unique, so
    // it is an isomorphism iff one exists at all
    std::vector<int> image(static_cast<size_t>(col.num_colours), -1);
    for (int u = 0; u < n; ++u) image[static_cast<size_t>(col.colour_t[static_cast<size_t>(u)])] = u;
    std::vector<int> map(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
      map[static_cast<size_t>(x)] = image[static_cast<size_t>(col.colour_s[static_cast<size_t>(x)])];
    if (is_isomorphism(s, t, map)) return map;
    return std::nullopt;
  }

  int pivot = -1;
  for (int x = 0; x < n && pivot == -1; ++x)
    if (col.colour_s[static_cast<size_t>(x)] == target) pivot = x;
  for (int u = 0; u < n; ++u) {
    if (col.colour_t[static_cast<size_t>(u)] != target) continue;
    Colouring branch = col;
    branch.colour_s[static_cast<size_t>(pivot)] = branch.num_colours;
    branch.colour_t[static_cast<size_t>(u)] = branch.num_colours;
    ++branch.num_colours;
    refine(s, t, branch);
    if (auto found = individualise_and_search(s, t, branch)) return found;
  }
  return std::nullopt;
}

}  // namespace

bool is_isomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                    const std::vector<int>& map) {
  const int n = s.size();
  if (t.size() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(static_cast<size_t>(n), 0);
  for (int u : map) {
    if (u < 0 || u >= n || hit[static_cast<size_t>(u)]) return false;
    hit[static_cast<size_t>(u)] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[static_cast<size_t>(s.apply(x, y))] !=
          t.apply(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
        return false;
  return true;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& s,
                                                 const FiniteSemigroup& t) {
  if (s.size() != t.size()) return std::nullopt;
  if (s.size() > 200) throw BoundError("isomorphism search capped at 200 elements");
  if (s.size() == 0) return std::vector<int>{};

  GreenStructure gs = green_structure(s), gt = green_structure(t);
  Colouring col = initial_colouring(s, t, gs, gt);
  if (!col.compatible) return std::nullopt;

  const int n = s.size();
  std::vector<int> colour_count(static_cast<size_t>(col.num_colours), 0);
  for (int c : col.colour_s) ++colour_count[static_cast<size_t>(c)];
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = colour_count[static_cast<size_t>(col.colour_s[static_cast<size_t>(a)])];
    int cb = colour_count[static_cast<size_t>(col.colour_s[static_cast<size_t>(b)])];
    if (ca != cb) return ca < cb;
    return a < b;
  });
  ClosureSearch closure{s,
                        t,
                        col,
                        /*budget=*/500000,
                        false,
                        std::vector<int>(static_cast<size_t>(n), -1),
                        std::vector<int>(static_cast<size_t>(n), -1),
                        {},
                        std::move(order)};
  bool solved = closure.solve(0);
  std::optional<std::vector<int>> found;
  if (solved)
    found = closure.map;
  else if (!closure.aborted)
    return std::nullopt;  // exhausted the whole space: no isomorphism
  else
    found = individualise_and_search(s, t, col);

  if (found && !is_isomorphism(s, t, *found))
    throw Error("internal: isomorphism search returned a non-isomorphism");
  return found;
}

namespace {

std::vector<Partition> regular_part(const Variant& v,
                                    const std::vector<Partition>& elems) {
  std::vector<Partition> reg;
  for (const Partition& x : elems)
    if (in_p(v, x)) reg.push_back(x);
  return reg;
}

}  // namespace

bool verify_inflation(const Variant& v, const EnumerationBounds& bounds) {
  if (v.rank() != 0)
    throw ValidationError("inflation structure requires a rank-0 sandwich, got rank " +
                          std::to_string(v.rank()));
  std::vector<Partition> elems = all_partitions(v.n(), bounds);
  std::vector<Partition> phi(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) phi[i] = v.sandwich(elems[i], elems[i]);
  // the retraction fixes the regular part pointwise ...
  for (const Partition& x : regular_part(v, elems))
    if (v.sandwich(x, x) != x) return false;
  // ... and products factor through it
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j)
      if (v.sandwich(elems[i], elems[j]) != v.sandwich(phi[i], phi[j])) return false;
  return true;
}

std::vector<int> preimage_multiset(const Variant& v, const EnumerationBounds& bounds) {
  if (v.rank() != 0)
    throw ValidationError("preimage multiset requires a rank-0 sandwich, got rank " +
                          std::to_string(v.rank()));
  std::vector<Partition> elems = all_partitions(v.n(), bounds);
  std::map<Partition, int> count;
  for (const Partition& x : regular_part(v, elems)) count.emplace(x, 0);
  for (const Partition& x : elems) {
    Partition image = v.sandwich(x, x);
    auto it = count.find(image);
    if (it == count.end())
      throw Error("internal: retraction image lies outside the regular part");
    ++it->second;
  }
  std::vector<int> sizes;
  for (const auto& [elem, c] : count) sizes.push_back(c);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace pbm
