#include "pbm/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pbm {

namespace {

// signed 1-based label -> internal vertex index, validating range
int decode_vertex(int label, int n, const std::vector<int>& block) {
  if (label == 0 || label > n || label < -n) {
    std::ostringstream os;
    os << "vertex " << label << " out of range for n=" << n << " in block [";
    for (size_t i = 0; i < block.size(); ++i) os << (i ? "," : "") << block[i];
    os << "]";
    throw ValidationError(os.str());
  }
  return label > 0 ? label - 1 : n + (-label) - 1;
}

int encode_vertex(int v, int n) { return v < n ? v + 1 : -(v - n + 1); }

}  // namespace

Partition Partition::identity(int n) {
  Partition p;
  p.n_ = n;
  p.partner_.assign(static_cast<size_t>(2 * n), npos);
  for (int i = 0; i < n; ++i) {
    p.partner_[static_cast<size_t>(i)] = n + i;
    p.partner_[static_cast<size_t>(n + i)] = i;
  }
  return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 0) throw ValidationError("negative ground size");
  Partition p;
  p.n_ = n;
  p.partner_.assign(static_cast<size_t>(2 * n), npos);
  std::vector<bool> seen(static_cast<size_t>(2 * n), false);
  for (const auto& block : blocks) {
    if (block.empty() || block.size() > 2) {
      std::ostringstream os;
      os << "block of size " << block.size() << " (blocks have size 1 or 2)";
      throw ValidationError(os.str());
    }
    for (int label : block) {
      int v = decode_vertex(label, n, block);
      if (seen[static_cast<size_t>(v)]) {
        std::ostringstream os;
        os << "vertex " << label << " appears in two blocks";
        throw ValidationError(os.str());
      }
      seen[static_cast<size_t>(v)] = true;
    }
    if (block.size() == 2) {
      int u = decode_vertex(block[0], n, block);
      int v = decode_vertex(block[1], n, block);
      if (u == v) throw ValidationError("block pairs a vertex with itself");
      p.partner_[static_cast<size_t>(u)] = v;
      p.partner_[static_cast<size_t>(v)] = u;
    }
  }
  for (int v = 0; v < 2 * n; ++v) {
    if (!seen[static_cast<size_t>(v)]) {
      std::ostringstream os;
      os << "vertex " << encode_vertex(v, n) << " missing from block list";
      throw ValidationError(os.str());
    }
  }
  return p;
}

Partition Partition::from_permutation(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int x : images) {
    if (x < 0 || x >= n || hit[static_cast<size_t>(x)])
      throw ValidationError("mapping is not a bijection");
    hit[static_cast<size_t>(x)] = true;
  }
  Partition p;
  p.n_ = n;
  p.partner_.assign(static_cast<size_t>(2 * n), npos);
  for (int i = 0; i < n; ++i) {
    p.partner_[static_cast<size_t>(i)] = n + images[static_cast<size_t>(i)];
    p.partner_[static_cast<size_t>(n + images[static_cast<size_t>(i)])] = i;
  }
  return p;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out;
  for (int v = 0; v < 2 * n_; ++v) {
    int w = partner_[static_cast<size_t>(v)];
    if (w != npos && w < v) continue;  // emitted with its smaller partner
    std::vector<int> block{encode_vertex(v, n_)};
    if (w != npos) block.push_back(encode_vertex(w, n_));
    out.push_back(std::move(block));
  }
  return out;
}

bool Partition::operator<(const Partition& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return partner_ < o.partner_;
}

Partition product(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) throw DimensionError("product of partitions with different n");
  const int n = a.n();
  struct Builder {
    int n;
    std::vector<int> partner;
    void connect(int u, int v) {
      if (partner[static_cast<size_t>(u)] != Partition::npos ||
          partner[static_cast<size_t>(v)] != Partition::npos)
        throw Error("internal: product produced a block of size > 2");
      partner[static_cast<size_t>(u)] = v;
      partner[static_cast<size_t>(v)] = u;
    }
  } out{n, std::vector<int>(static_cast<size_t>(2 * n), Partition::npos)};

  std::vector<bool> done(static_cast<size_t>(2 * n), false);

  // Trace the alternating path entering the middle row at vertex m. "want_b"
  // says whether the next edge comes from b (true) or from a (false).
  // Returns the boundary vertex the path exits at (as a result vertex
  // index), or npos if it dies in the middle row.
  auto trace = [&](int m, bool want_b) {
    while (true) {
      if (want_b) {
        int w = b.partner(m);  // b's upper vertex m
        if (w == Partition::npos) return Partition::npos;
        if (w >= n) return w;  // exits at bottom vertex (w-n)'
        m = w;
        want_b = false;
      } else {
        int w = a.partner(n + m);  // a's lower vertex m'
        if (w == Partition::npos) return Partition::npos;
        if (w < n) return w;  // exits at top vertex w
        m = w - n;
        want_b = true;
      }
    }
  };

  for (int u = 0; u < n; ++u) {
    if (done[static_cast<size_t>(u)]) continue;
    done[static_cast<size_t>(u)] = true;
    int w = a.partner(u);
    if (w == Partition::npos) continue;  // singleton
    if (w < n) {  // upper block of a survives
      out.connect(u, w);
      done[static_cast<size_t>(w)] = true;
      continue;
    }
    int exit = trace(w - n, /*want_b=*/true);
    if (exit == Partition::npos) continue;
    out.connect(u, exit);
    done[static_cast<size_t>(exit)] = true;
  }
  for (int v = n; v < 2 * n; ++v) {
    if (done[static_cast<size_t>(v)]) continue;
    done[static_cast<size_t>(v)] = true;
    int w = b.partner(v);
    if (w == Partition::npos) continue;
    if (w >= n) {  // lower block of b survives
      out.connect(v, w);
      done[static_cast<size_t>(w)] = true;
      continue;
    }
    int exit = trace(w, /*want_b=*/false);
    if (exit == Partition::npos) continue;
    out.connect(v, exit);
    done[static_cast<size_t>(exit)] = true;
  }

  return Partition(n, std::move(out.partner));
}

Partition reflect(const Partition& p) {
  const int n = p.n();
  auto flip = [n](int v) { return v < n ? v + n : v - n; };
  std::vector<int> partner(static_cast<size_t>(2 * n), Partition::npos);
  for (int v = 0; v < 2 * n; ++v) {
    int w = p.partner(v);
    partner[static_cast<size_t>(flip(v))] = (w == Partition::npos) ? Partition::npos : flip(w);
  }
  return Partition(n, std::move(partner));
}

int rank_of(const Partition& p) {
  int r = 0;
  for (int v = 0; v < p.n(); ++v)
    if (p.partner(v) >= p.n()) ++r;
  return r;
}

PartitionStats stats(const Partition& p) {
  const int n = p.n();
  PartitionStats s;
  for (int v = 0; v < n; ++v) {
    int w = p.partner(v);
    if (w == Partition::npos) {
      s.ker_classes.push_back({v + 1});
      s.upper_nontransversals.push_back({v + 1});
      ++s.ker_singletons;
    } else if (w >= n) {
      s.dom.push_back(v + 1);
      s.ker_classes.push_back({v + 1});
      ++s.ker_singletons;
      ++s.rank;
    } else if (w > v) {
      s.ker_classes.push_back({v + 1, w + 1});
      s.upper_nontransversals.push_back({v + 1, w + 1});
    }
  }
  for (int v = n; v < 2 * n; ++v) {
    int w = p.partner(v);
    int x = v - n + 1;
    if (w == Partition::npos) {
      s.coker_classes.push_back({x});
      s.lower_nontransversals.push_back({x});
      ++s.coker_singletons;
    } else if (w < n) {
      s.codom.push_back(x);
      s.coker_classes.push_back({x});
      ++s.coker_singletons;
    } else if (w > v) {
      s.coker_classes.push_back({x, w - n + 1});
      s.lower_nontransversals.push_back({x, w - n + 1});
    }
  }
  return s;
}

std::vector<std::pair<int, int>> transversal_pairs(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < p.n(); ++v) {
    int w = p.partner(v);
    if (w >= p.n()) out.emplace_back(v + 1, w - p.n() + 1);
  }
  return out;
}

bool leq_r_natural(const Partition& s, const Partition& t) {
  if (s.n() != t.n()) throw DimensionError("preorder on partitions with different n");
  const int n = s.n();
  for (int v = 0; v < n; ++v) {
    int w = t.partner(v);
    if (w >= n) continue;  // transversal of t: no constraint
    if (s.partner(v) != w) return false;
  }
  return true;
}

bool leq_l_natural(const Partition& s, const Partition& t) {
  return leq_r_natural(reflect(s), reflect(t));
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << p.n() << ";[";
  bool first_block = true;
  for (const auto& block : p.blocks()) {
    if (!first_block) os << ",";
    first_block = false;
    os << "[";
    for (size_t i = 0; i < block.size(); ++i) os << (i ? "," : "") << block[i];
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

struct Cursor {
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
    if (!eat(c)) {
      std::ostringstream os;
      os << "expected '" << c << "' at position " << i << " in partition text";
      throw ValidationError(os.str());
    }
  }
  int integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || (i - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw ValidationError("expected integer at position " + std::to_string(start));
    return std::stoi(s.substr(start, i - start));
  }
};

}  // namespace

Partition parse_partition(const std::string& text) {
  Cursor c{text};
  int n = c.integer();
  c.expect(';');
  c.expect('[');
  std::vector<std::vector<int>> blocks;
  c.skip_ws();
  if (!c.eat(']')) {
    while (true) {
      c.expect('[');
      std::vector<int> block;
      if (!c.eat(']')) {
        while (true) {
          block.push_back(c.integer());
          if (c.eat(']')) break;
          c.expect(',');
        }
      }
      blocks.push_back(std::move(block));
      if (c.eat(']')) break;
      c.expect(',');
    }
  }
  c.skip_ws();
  if (c.i != text.size())
    throw ValidationError("trailing characters after partition text");
  return Partition::from_blocks(n, blocks);
}

}  // namespace pbm
