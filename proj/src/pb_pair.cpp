#include "pbm/pb_pair.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pbm {

PBPair::PBPair(int n, const std::vector<std::pair<int, int>>& doubles,
               const std::vector<int>& domain)
    : n_(n),
      partner_(static_cast<size_t>(n + 1), 0),
      in_dom_(static_cast<size_t>(n + 1), false) {
  if (n < 0) throw ValidationError("negative ground size");
  auto check_range = [n](int x) {
    if (x < 1 || x > n)
      throw ValidationError("element " + std::to_string(x) + " out of range for n=" +
                            std::to_string(n));
  };
  for (auto [x, y] : doubles) {
    check_range(x);
    check_range(y);
    if (x == y) throw ValidationError("class pairs an element with itself");
    if (partner_[static_cast<size_t>(x)] != 0 || partner_[static_cast<size_t>(y)] != 0)
      throw ValidationError("overlapping classes in equivalence");
    partner_[static_cast<size_t>(x)] = y;
    partner_[static_cast<size_t>(y)] = x;
  }
  for (int x : domain) {
    check_range(x);
    if (partner_[static_cast<size_t>(x)] != 0)
      throw ValidationError("domain element " + std::to_string(x) +
                            " is not in a singleton class");
    if (in_dom_[static_cast<size_t>(x)])
      throw ValidationError("duplicate domain element " + std::to_string(x));
    in_dom_[static_cast<size_t>(x)] = true;
  }
  domain_ = domain;
  std::sort(domain_.begin(), domain_.end());
}

std::vector<std::pair<int, int>> PBPair::doubles() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 1; x <= n_; ++x) {
    int y = partner_[static_cast<size_t>(x)];
    if (y > x) out.emplace_back(x, y);
  }
  return out;
}

bool PBPair::operator<(const PBPair& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (partner_ != o.partner_) return partner_ < o.partner_;
  return domain_ < o.domain_;
}

PBPair epsilon_pair(int m, int k, int t) {
  if (m < 0 || k < 0 || t < 0 || k > m || (m - k) % 2 != 0 || t > k) {
    std::ostringstream os;
    os << "undefined pair: (eps_{" << m << "," << k << "},[" << t << "])";
    throw ValidationError(os.str());
  }
  std::vector<std::pair<int, int>> doubles;
  for (int x = k + 1; x < m; x += 2) doubles.emplace_back(x, x + 1);
  std::vector<int> domain(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) domain[static_cast<size_t>(i)] = i + 1;
  return PBPair(m, doubles, domain);
}

bool epsilon_pair_defined(int m, int k, int t) {
  return m >= 0 && k >= 0 && t >= 0 && k <= m && (m - k) % 2 == 0 && t <= k;
}

std::pair<PBPair, PBPair> halves(const Partition& p) {
  const int n = p.n();
  std::vector<std::pair<int, int>> upper_doubles, lower_doubles;
  std::vector<int> dom, codom;
  for (int v = 0; v < n; ++v) {
    int w = p.partner(v);
    if (w >= n)
      dom.push_back(v + 1);
    else if (w != Partition::npos && w > v)
      upper_doubles.emplace_back(v + 1, w + 1);
  }
  for (int v = n; v < 2 * n; ++v) {
    int w = p.partner(v);
    if (w != Partition::npos && w < n)
      codom.push_back(v - n + 1);
    else if (w > v)
      lower_doubles.emplace_back(v - n + 1, w - n + 1);
  }
  return {PBPair(n, upper_doubles, dom), PBPair(n, lower_doubles, codom)};
}

JoinResult join(const PBPair& p1, const PBPair& p2) {
  if (p1.n() != p2.n()) throw DimensionError("join of PB-pairs with different n");
  const int n = p1.n();
  JoinResult res;

  // connected components of the union of the two partner graphs
  std::vector<int> comp(static_cast<size_t>(n + 1), 0);
  int num_comps = 0;
  for (int s = 1; s <= n; ++s) {
    if (comp[static_cast<size_t>(s)] != 0) continue;
    ++num_comps;
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = num_comps;
    std::vector<int> members;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y : {p1.eq_partner(x), p2.eq_partner(x)}) {
        if (y != 0 && comp[static_cast<size_t>(y)] == 0) {
          comp[static_cast<size_t>(y)] = num_comps;
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    res.classes.push_back(std::move(members));
  }

  // Z: all domain pairs lying in a common class
  for (const auto& cls : res.classes) {
    std::vector<int> from1, from2;
    for (int x : cls) {
      if (p1.in_domain(x)) from1.push_back(x);
      if (p2.in_domain(x)) from2.push_back(x);
    }
    for (int x : from1)
      for (int y : from2) res.domain_pairs.emplace_back(x, y);
  }
  std::sort(res.domain_pairs.begin(), res.domain_pairs.end());
  res.rank = static_cast<int>(res.domain_pairs.size());
  res.paths = domain_paths(p1, p2);
  return res;
}

std::vector<std::vector<int>> domain_paths(const PBPair& p1, const PBPair& p2) {
  if (p1.n() != p2.n()) throw DimensionError("join of PB-pairs with different n");
  std::vector<std::vector<int>> paths;
  for (int u : p1.domain()) {
    if (p2.in_domain(u)) {
      paths.push_back({u});  // trivial path
      continue;
    }
    // u is a singleton of eq1, so the path leaves along an eq2 edge and
    // thereafter alternates; it ends when an edge is missing.
    std::vector<int> path{u};
    int cur = u;
    bool via2 = true;  // next edge drawn from p2
    while (true) {
      int next = via2 ? p2.eq_partner(cur) : p1.eq_partner(cur);
      if (next == 0) {
        path.clear();  // dead end: no element of X2 at the far side
        break;
      }
      path.push_back(next);
      cur = next;
      via2 = !via2;
      if (!via2) continue;  // just used an eq2 edge; cannot sit in X2
      if (p2.in_domain(cur)) break;  // arrived along eq1 at an X2 element
    }
    if (!path.empty()) paths.push_back(std::move(path));
  }
  return paths;
}

Partition assemble(const PBPair& upper, const PBPair& lower,
                   const std::vector<std::pair<int, int>>& pairing) {
  if (upper.n() != lower.n())
    throw DimensionError("halves with different ground sizes");
  const int n = upper.n();
  if (static_cast<int>(pairing.size()) != upper.rank() ||
      upper.rank() != lower.rank())
    throw ValidationError("pairing does not match the two domains");
  std::vector<bool> used_dom(static_cast<size_t>(n + 1), false);
  std::vector<bool> used_codom(static_cast<size_t>(n + 1), false);
  std::vector<std::vector<int>> blocks;
  for (auto [x, y] : pairing) {
    if (x < 1 || x > n || y < 1 || y > n || !upper.in_domain(x) ||
        !lower.in_domain(y) || used_dom[static_cast<size_t>(x)] ||
        used_codom[static_cast<size_t>(y)])
      throw ValidationError("pairing is not a bijection between the domains");
    used_dom[static_cast<size_t>(x)] = true;
    used_codom[static_cast<size_t>(y)] = true;
    blocks.push_back({x, -y});
  }
  for (int x = 1; x <= n; ++x) {
    int y = upper.eq_partner(x);
    if (y > x)
      blocks.push_back({x, y});
    else if (y == 0 && !used_dom[static_cast<size_t>(x)])
      blocks.push_back({x});
  }
  for (int x = 1; x <= n; ++x) {
    int y = lower.eq_partner(x);
    if (y > x)
      blocks.push_back({-x, -y});
    else if (y == 0 && !used_codom[static_cast<size_t>(x)])
      blocks.push_back({-x});
  }
  return Partition::from_blocks(n, blocks);
}

Partition witness_partition(const PBPair& p) {
  const int q = p.rank();
  std::vector<std::pair<int, int>> lower_doubles;
  std::vector<int> codom(static_cast<size_t>(q));
  for (int i = 0; i < q; ++i) codom[static_cast<size_t>(i)] = i + 1;
  PBPair lower(p.n(), lower_doubles, codom);
  std::vector<std::pair<int, int>> pairing;
  for (int i = 0; i < q; ++i) pairing.emplace_back(p.domain()[static_cast<size_t>(i)], i + 1);
  return assemble(p, lower, pairing);
}

std::string to_string(const PBPair& p) {
  std::ostringstream os;
  os << p.n() << ";eq=[";
  auto ds = p.doubles();
  for (size_t i = 0; i < ds.size(); ++i)
    os << (i ? "," : "") << "[" << ds[i].first << "," << ds[i].second << "]";
  os << "];X=[";
  const auto& dom = p.domain();
  for (size_t i = 0; i < dom.size(); ++i) os << (i ? "," : "") << dom[i];
  os << "]";
  return os.str();
}

namespace {

struct PairCursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ValidationError("expected '" + std::string(1, c) + "' at position " +
                            std::to_string(i) + " in PB-pair text");
  }
  void expect_word(const std::string& w) {
    skip_ws();
    if (s.compare(i, w.size(), w) != 0)
      throw ValidationError("expected '" + w + "' at position " + std::to_string(i));
    i += w.size();
  }
  int integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i)
      throw ValidationError("expected integer at position " + std::to_string(start));
    return std::stoi(s.substr(start, i - start));
  }
};

}  // namespace

PBPair parse_pb_pair(const std::string& text) {
  PairCursor c{text};
  int n = c.integer();
  c.expect(';');
  c.expect_word("eq");
  c.expect('=');
  c.expect('[');
  std::vector<std::pair<int, int>> doubles;
  if (!c.eat(']')) {
    while (true) {
      c.expect('[');
      int x = c.integer();
      c.expect(',');
      int y = c.integer();
      c.expect(']');
      doubles.emplace_back(x, y);
      if (c.eat(']')) break;
      c.expect(',');
    }
  }
  c.expect(';');
  c.expect_word("X");
  c.expect('=');
  c.expect('[');
  std::vector<int> domain;
  if (!c.eat(']')) {
    while (true) {
      domain.push_back(c.integer());
      if (c.eat(']')) break;
      c.expect(',');
    }
  }
  c.skip_ws();
  if (c.i != text.size())
    throw ValidationError("trailing characters after PB-pair text");
  return PBPair(n, doubles, domain);
}

}  // namespace pbm
