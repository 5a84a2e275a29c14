#include "pbm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "pbm/classify.hpp"
#include "pbm/mu.hpp"
#include "pbm/semigroup.hpp"
#include "pbm/variant.hpp"

namespace pbm {

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

std::map<Partition, int> index_map(const std::vector<Partition>& elems) {
  std::map<Partition, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    index.emplace(elems[static_cast<size_t>(i)], i);
  return index;
}

std::string tuple_str(int n, int k, int r, int q) {
  std::ostringstream os;
  os << "(" << n << "," << k << "," << r << "," << q << ")";
  return os.str();
}

// ---- individual checks ----------------------------------------------------

void check_cardinality(const VerifyOptions& opts) {
  int top = std::min(4, opts.max_n + 1);
  for (int n = 0; n <= top; ++n) {
    long long count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    require(BigInt(count) == pb_count(n),
            "|PB_" + std::to_string(n) + "| = " + std::to_string(count) +
                " but the sequence gives " + pb_count(n).str());
  }
}

void check_diagram_product(const VerifyOptions& opts) {
  // identity laws and rank monotonicity, exhaustively at small n
  for (int n = 0; n <= std::min(3, opts.max_n); ++n) {
    Partition id = Partition::identity(n);
    std::vector<Partition> elems = all_partitions(n);
    for (const Partition& x : elems) {
      require(product(id, x) == x && product(x, id) == x, "identity law fails");
      for (const Partition& y : elems)
        require(rank_of(product(x, y)) <= std::min(rank_of(x), rank_of(y)),
                "rank grew under multiplication");
    }
  }
  // associativity: all of PB_2, then random triples in PB_4
  {
    std::vector<Partition> elems = all_partitions(2);
    for (const Partition& a : elems)
      for (const Partition& b : elems)
        for (const Partition& c : elems)
          require(product(product(a, b), c) == product(a, product(b, c)),
                  "associativity fails in PB_2");
  }
  {
    std::vector<Partition> elems = all_partitions(4);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(elems.size()) - 1);
    for (int i = 0; i < 10000; ++i) {
      const Partition& a = elems[static_cast<size_t>(pick(rng))];
      const Partition& b = elems[static_cast<size_t>(pick(rng))];
      const Partition& c = elems[static_cast<size_t>(pick(rng))];
      require(product(product(a, b), c) == product(a, product(b, c)),
              "associativity fails in PB_4");
    }
  }
}

void check_r_order(const VerifyOptions& opts) {
  // containment formula vs the right-multiplication oracle, all of PB_2
  {
    std::vector<Partition> elems = all_partitions(2);
    for (const Partition& s : elems) {
      for (const Partition& t : elems) {
        bool witnessed = false;
        for (const Partition& g : elems)
          if (product(t, g) == s) {
            witnessed = true;
            break;
          }
        witnessed = witnessed || s == t;
        require(leq_r_natural(s, t) == witnessed,
                "R-preorder disagrees with the right-multiplication oracle");
      }
    }
  }
  // preorder laws at n <= 3
  for (int n = 2; n <= std::min(3, opts.max_n); ++n) {
    std::vector<Partition> elems = all_partitions(n);
    int size = static_cast<int>(elems.size());
    std::vector<std::vector<char>> leq(static_cast<size_t>(size),
                                       std::vector<char>(static_cast<size_t>(size)));
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y)
        leq[static_cast<size_t>(x)][static_cast<size_t>(y)] = leq_r_natural(
            elems[static_cast<size_t>(x)], elems[static_cast<size_t>(y)]);
      require(leq[static_cast<size_t>(x)][static_cast<size_t>(x)],
              "R-preorder not reflexive");
    }
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y)
        for (int z = 0; z < size; ++z)
          require(!(leq[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
                    leq[static_cast<size_t>(y)][static_cast<size_t>(z)]) ||
                      leq[static_cast<size_t>(x)][static_cast<size_t>(z)],
                  "R-preorder not transitive");
  }
}

void check_mu_oracle(const VerifyOptions& opts) {
  for (int n = 0; n <= opts.mu_oracle_max_n; ++n)
    for (int k = n % 2; k <= n; k += 2)
      for (int r = 0; r <= k; ++r)
        for (int q = 0; q <= r; ++q)
          require(mu(n, k, r, q) == mu_bruteforce(n, k, r, q),
                  "recurrence and enumeration disagree at " + tuple_str(n, k, r, q));
}

void check_mu_swap_symmetry(const VerifyOptions& opts) {
  int top = std::min(6, opts.mu_oracle_max_n);
  for (int n = 0; n <= top; ++n) {
    for (int k = n % 2; k <= n; k += 2) {
      for (int r = 0; r <= k; ++r) {
        PBPair fixed = epsilon_pair(n, k, r);
        std::vector<long long> lhs(static_cast<size_t>(r) + 1, 0);
        std::vector<long long> rhs(static_cast<size_t>(r) + 1, 0);
        for_each_pb_pair(n, [&](const PBPair& cand) {
          int q = cand.rank();
          if (q > r) return;
          if (join(fixed, cand).rank == q) ++lhs[static_cast<size_t>(q)];
          if (join(cand, fixed).rank == q) ++rhs[static_cast<size_t>(q)];
        });
        require(lhs == rhs, "swapped-argument counts differ at (" + std::to_string(n) +
                                "," + std::to_string(k) + "," + std::to_string(r) + ")");
      }
    }
  }
}

void check_mu_closed_form(const VerifyOptions&) {
  for (int n = 0; n <= 12; ++n)
    for (int k = n % 2; k <= n; k += 2)
      for (int r = 0; r <= k; ++r)
        require(mu(n, k, r, 0) == a_seq(n),
                "rank-0 count differs from a(n) at " + tuple_str(n, k, r, 0));
}

void check_mu_separation(const VerifyOptions&) {
  long long verified = 0;
  for (int n = 0; n <= 7; ++n)
    for (int k = n % 2; k + 2 <= n; k += 2)
      for (int r = 1; r <= k; ++r)
        for (int q = 1; q <= r; ++q) {
          require(check_mu_inequality(n, k, r, q),
                  "strict separation fails at " + tuple_str(n, k, r, q));
          ++verified;
        }
  require(verified > 0, "no separation instances in range");
  // counterpoint: with r = q = 0 the value does not depend on k at all
  for (int n = 0; n <= 12; ++n)
    for (int k = n % 2; k <= n; k += 2)
      require(mu(n, k, 0, 0) == mu(n, n % 2, 0, 0),
              "rank-0 value depends on k at n=" + std::to_string(n));
}

void check_class_counts(const VerifyOptions& opts) {
  for (int n = 0; n <= std::min(3, opts.max_n); ++n) {
    for (const Partition& alpha : all_partitions(n)) {
      Variant v(alpha);
      RegularDChain chain = regular_d_chain(v);
      for (const auto& level : chain.levels) {
        require(!level.elements.empty(), "empty regular class level");
        require(BigInt(level.l_class_count) ==
                    mu(n, v.ker_singletons(), v.rank(), level.q),
                "L-class count mismatch at n=" + std::to_string(n));
        require(BigInt(level.r_class_count) ==
                    mu(n, v.coker_singletons(), v.rank(), level.q),
                "R-class count mismatch at n=" + std::to_string(n));
      }
    }
  }
  {
    // a deterministic sample of sandwich elements at n = 4
    std::vector<Partition> elems = all_partitions(4);
    std::mt19937_64 rng(opts.seed ^ 0xa5a5a5a5u);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(elems.size()) - 1);
    EnumerationBounds bounds;
    for (int i = 0; i < 10; ++i) {
      Variant v(elems[static_cast<size_t>(pick(rng))]);
      RegularDChain chain = regular_d_chain(v, bounds);
      for (const auto& level : chain.levels) {
        require(BigInt(level.l_class_count) ==
                    mu(4, v.ker_singletons(), v.rank(), level.q),
                "L-class count mismatch at n=4");
        require(BigInt(level.r_class_count) ==
                    mu(4, v.coker_singletons(), v.rank(), level.q),
                "R-class count mismatch at n=4");
      }
    }
  }
}

// per-element data shared by the formula-side computations
struct ElementProfile {
  std::vector<int> rank;
  std::vector<std::vector<int>> rkey, lkey;  // (ker,dom) and (coker,codom)
  std::vector<char> p1, p2, p3;
};

ElementProfile profile_elements(const Variant& v, const std::vector<Partition>& elems) {
  ElementProfile prof;
  const int size = static_cast<int>(elems.size());
  prof.rank.resize(static_cast<size_t>(size));
  prof.rkey.resize(static_cast<size_t>(size));
  prof.lkey.resize(static_cast<size_t>(size));
  prof.p1.resize(static_cast<size_t>(size));
  prof.p2.resize(static_cast<size_t>(size));
  prof.p3.resize(static_cast<size_t>(size));
  const int n = v.n();
  for (int i = 0; i < size; ++i) {
    const Partition& x = elems[static_cast<size_t>(i)];
    prof.rank[static_cast<size_t>(i)] = rank_of(x);
    std::vector<int> rk(static_cast<size_t>(n)), lk(static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
      int w = x.partner(u);
      rk[static_cast<size_t>(u)] = (w >= n) ? -2 : w;
      int wl = x.partner(n + u);
      lk[static_cast<size_t>(u)] = (wl == Partition::npos) ? -1
                                   : (wl < n)              ? -2
                                                           : wl - n;
    }
    prof.rkey[static_cast<size_t>(i)] = std::move(rk);
    prof.lkey[static_cast<size_t>(i)] = std::move(lk);
    prof.p1[static_cast<size_t>(i)] = in_p1(v, x);
    prof.p2[static_cast<size_t>(i)] = in_p2(v, x);
    prof.p3[static_cast<size_t>(i)] = in_p3(v, x);
  }
  return prof;
}

void check_variant_green(const VerifyOptions& opts) {
  for (int n = 0; n <= std::min(3, opts.max_n); ++n) {
    std::vector<Partition> elems = all_partitions(n);
    const int size = static_cast<int>(elems.size());
    for (const Partition& alpha : elems) {
      Variant v(alpha);
      ElementProfile prof = profile_elements(v, elems);
      FiniteSemigroup table = build_table(v);
      GreenStructure g = green_structure(table);

      auto r_cond = [&](int x, int y) -> bool {
        if (!prof.p1[static_cast<size_t>(x)]) return y == x;
        return prof.p1[static_cast<size_t>(y)] &&
               prof.rkey[static_cast<size_t>(y)] == prof.rkey[static_cast<size_t>(x)];
      };
      auto l_cond = [&](int x, int y) -> bool {
        if (!prof.p2[static_cast<size_t>(x)]) return y == x;
        return prof.p2[static_cast<size_t>(y)] &&
               prof.lkey[static_cast<size_t>(y)] == prof.lkey[static_cast<size_t>(x)];
      };
      auto d_cond = [&](int x, int y) -> bool {
        bool px = prof.p1[static_cast<size_t>(x)] && prof.p2[static_cast<size_t>(x)];
        if (px)
          return prof.p1[static_cast<size_t>(y)] && prof.p2[static_cast<size_t>(y)] &&
                 prof.rank[static_cast<size_t>(y)] == prof.rank[static_cast<size_t>(x)];
        if (prof.p2[static_cast<size_t>(x)]) return l_cond(x, y);
        if (prof.p1[static_cast<size_t>(x)]) return r_cond(x, y);
        return y == x;
      };
      auto in_formula_class = [&](GreenKind kind, int x, int y) -> bool {
        switch (kind) {
          case GreenKind::R:
            return r_cond(x, y);
          case GreenKind::L:
            return l_cond(x, y);
          case GreenKind::H:
            if (!(prof.p1[static_cast<size_t>(x)] && prof.p2[static_cast<size_t>(x)]))
              return y == x;
            return prof.rkey[static_cast<size_t>(y)] == prof.rkey[static_cast<size_t>(x)] &&
                   prof.lkey[static_cast<size_t>(y)] == prof.lkey[static_cast<size_t>(x)];
          case GreenKind::D:
            return d_cond(x, y);
          case GreenKind::J:
            if (prof.p3[static_cast<size_t>(x)])
              return prof.p3[static_cast<size_t>(y)] &&
                     prof.rank[static_cast<size_t>(y)] == prof.rank[static_cast<size_t>(x)];
            return d_cond(x, y);
        }
        return false;
      };

      for (GreenKind kind :
           {GreenKind::R, GreenKind::L, GreenKind::H, GreenKind::D, GreenKind::J}) {
        const std::vector<int>& table_cls = g.classes(kind);
        for (int x = 0; x < size; ++x)
          for (int y = 0; y < size; ++y)
            require(in_formula_class(kind, x, y) ==
                        (table_cls[static_cast<size_t>(x)] ==
                         table_cls[static_cast<size_t>(y)]),
                    "formula and table classes disagree at n=" + std::to_string(n));
      }

      // H-classes outside P are singletons and contain no idempotent
      for (int x = 0; x < size; ++x) {
        if (prof.p1[static_cast<size_t>(x)] && prof.p2[static_cast<size_t>(x)]) continue;
        long long h_size = 0;
        for (int y = 0; y < size; ++y)
          if (g.h_class[static_cast<size_t>(y)] == g.h_class[static_cast<size_t>(x)])
            ++h_size;
        require(h_size == 1, "H-class outside P is not a singleton");
        require(table.apply(x, x) != x, "H-class outside P contains an idempotent");
      }

      // spot-check the public op against the table on a few elements
      for (int x = 0; x < size; x += std::max(1, size / 4)) {
        for (GreenKind kind : {GreenKind::R, GreenKind::H, GreenKind::J}) {
          std::vector<Partition> cls =
              variant_green_class(v, elems[static_cast<size_t>(x)], kind);
          long long expected = 0;
          for (int y = 0; y < size; ++y)
            if (g.classes(kind)[static_cast<size_t>(y)] ==
                g.classes(kind)[static_cast<size_t>(x)])
              ++expected;
          require(static_cast<long long>(cls.size()) == expected,
                  "green-class op size differs from table class size");
        }
      }
    }
  }
}

void check_psets(const VerifyOptions& opts) {
  for (int n = 0; n <= std::min(3, opts.max_n); ++n) {
    std::vector<Partition> elems = all_partitions(n);
    const int size = static_cast<int>(elems.size());
    auto index = index_map(elems);
    FiniteSemigroup natural = build_table(Variant(Partition::identity(n)));
    GreenStructure g = green_structure(natural);
    for (const Partition& alpha : elems) {
      Variant v(alpha);
      PSets rank_based = p_sets(v);
      std::vector<int> def_p1, def_p2, def_p3, def_p, reg;
      FiniteSemigroup sandwich = build_table(v);
      for (int i = 0; i < size; ++i) {
        const Partition& x = elems[static_cast<size_t>(i)];
        int xa = index.at(product(x, alpha));
        int ax = index.at(product(alpha, x));
        int axa = index.at(product(product(alpha, x), alpha));
        bool one = g.r_class[static_cast<size_t>(xa)] == g.r_class[static_cast<size_t>(i)];
        bool two = g.l_class[static_cast<size_t>(ax)] == g.l_class[static_cast<size_t>(i)];
        bool three =
            g.j_class[static_cast<size_t>(axa)] == g.j_class[static_cast<size_t>(i)];
        if (one) def_p1.push_back(i);
        if (two) def_p2.push_back(i);
        if (three) def_p3.push_back(i);
        if (one && two) def_p.push_back(i);
        for (int y = 0; y < size; ++y)
          if (sandwich.apply(sandwich.apply(i, y), i) == i) {
            reg.push_back(i);
            break;
          }
      }
      require(rank_based.p1 == def_p1 && rank_based.p2 == def_p2 &&
                  rank_based.p3 == def_p3 && rank_based.p == def_p,
              "rank-characterised and definition-based P-sets differ");
      require(rank_based.p == rank_based.p3, "P != P_3");
      require(rank_based.p == reg, "P != Reg of the variant");
    }
  }
}

void check_chain(const VerifyOptions& opts) {
  for (int n = 0; n <= std::min(3, opts.max_n); ++n) {
    std::vector<Partition> elems = all_partitions(n);
    const int size = static_cast<int>(elems.size());
    for (const Partition& alpha : elems) {
      Variant v(alpha);
      FiniteSemigroup table = build_table(v);
      GreenStructure g = green_structure(table);
      RegularDChain chain = regular_d_chain(v);
      // regular D-classes of the table are exactly the rank levels of P
      std::set<int> regular_dclasses;
      for (int i = 0; i < size; ++i)
        if (g.regular[static_cast<size_t>(i)])
          regular_dclasses.insert(g.d_class[static_cast<size_t>(i)]);
      require(static_cast<int>(regular_dclasses.size()) == v.rank() + 1,
              "number of regular D-classes differs from rank+1");
      for (const auto& level : chain.levels) {
        require(!level.elements.empty(), "empty chain level");
        int cls = g.d_class[static_cast<size_t>(level.elements.front())];
        for (int i : level.elements)
          require(g.d_class[static_cast<size_t>(i)] == cls &&
                      g.regular[static_cast<size_t>(i)],
                  "chain level is not a single regular D-class");
        long long class_size = 0;
        for (int i = 0; i < size; ++i)
          if (g.d_class[static_cast<size_t>(i)] == cls) ++class_size;
        require(class_size == static_cast<long long>(level.elements.size()),
                "regular D-class contains extra elements");
      }
      // totally ordered under <=_J, consistent with the rank
      for (const auto& low : chain.levels)
        for (const auto& high : chain.levels) {
          int x = low.elements.front(), y = high.elements.front();
          bool expect = low.q <= high.q;
          require(g.leq_j[static_cast<size_t>(x)][static_cast<size_t>(y)] ==
                      static_cast<char>(expect ? 1 : 0),
                  "regular classes are not chained by rank");
        }
    }
  }
}

void check_classification(const VerifyOptions& opts) {
  for (int n = 2; n <= std::min(3, opts.max_n); ++n) {
    std::vector<Partition> elems = all_partitions(n);
    std::vector<Partition> sandwiches;
    for (const Partition& a : elems)
      if (n == 2 || rank_of(a) >= 1) sandwiches.push_back(a);
    std::vector<FiniteSemigroup> tables;
    tables.reserve(sandwiches.size());
    for (const Partition& a : sandwiches) tables.push_back(build_table(Variant(a)));

    auto index = index_map(elems);
    for (size_t i = 0; i < sandwiches.size(); ++i) {
      for (size_t j = i; j < sandwiches.size(); ++j) {
        IsoVerdict verdict = decide_isomorphism(sandwiches[i], sandwiches[j]);
        auto oracle = find_isomorphism(tables[i], tables[j]);
        switch (verdict.status) {
          case IsoStatus::Isomorphic:
            require(oracle.has_value(), "oracle refutes an isomorphic verdict");
            break;
          case IsoStatus::NotIsomorphic:
            require(!oracle.has_value(), "oracle refutes a non-isomorphic verdict");
            break;
          case IsoStatus::ConjecturalEqualInvariants:
            require(oracle.has_value(), "rank-0 conjecture direction fails (equal)");
            break;
          case IsoStatus::ConjecturalDistinctInvariants:
            require(!oracle.has_value(), "rank-0 conjecture direction fails (distinct)");
            break;
        }
        if (verdict.status == IsoStatus::Isomorphic) {
          require(verdict.conjugators.has_value(), "isomorphic verdict lacks a witness");
          const auto& [pi1, pi2] = *verdict.conjugators;
          std::vector<int> inv1(pi1.size()), inv2(pi2.size());
          for (int x = 0; x < n; ++x) {
            inv1[static_cast<size_t>(pi1[static_cast<size_t>(x)])] = x;
            inv2[static_cast<size_t>(pi2[static_cast<size_t>(x)])] = x;
          }
          Partition q1 = Partition::from_permutation(inv1);
          Partition q2 = Partition::from_permutation(inv2);
          std::vector<int> fmap(elems.size());
          for (size_t e = 0; e < elems.size(); ++e)
            fmap[e] = index.at(product(product(q2, elems[e]), q1));
          require(is_isomorphism(tables[i], tables[j], fmap),
                  "conjugator-induced map is not a table isomorphism");
        }
      }
    }
  }
}

void check_conjugators(const VerifyOptions& opts) {
  for (int n = 0; n <= std::min(3, opts.max_n); ++n) {
    std::vector<Partition> elems = all_partitions(n);
    auto index = index_map(elems);
    std::vector<FiniteSemigroup> tables;
    tables.reserve(elems.size());
    for (const Partition& a : elems) tables.push_back(build_table(Variant(a)));
    std::map<std::array<int, 3>, std::vector<int>> groups;
    for (size_t i = 0; i < elems.size(); ++i) {
      InvariantTuple t = invariants(elems[i]);
      groups[{t.r, t.k, t.p}].push_back(static_cast<int>(i));
    }
    for (const auto& [key, members] : groups) {
      for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i; j < members.size(); ++j) {
          const Partition& a = elems[static_cast<size_t>(members[i])];
          const Partition& b = elems[static_cast<size_t>(members[j])];
          auto [pi1, pi2] = construct_conjugators(a, b);
          Partition check = product(product(Partition::from_permutation(pi1), a),
                                    Partition::from_permutation(pi2));
          require(check == b, "conjugators do not transport the sandwich");
          // the induced element map must be a table isomorphism
          std::vector<int> inv1(pi1.size()), inv2(pi2.size());
          for (int x = 0; x < n; ++x) {
            inv1[static_cast<size_t>(pi1[static_cast<size_t>(x)])] = x;
            inv2[static_cast<size_t>(pi2[static_cast<size_t>(x)])] = x;
          }
          Partition q1 = Partition::from_permutation(inv1);
          Partition q2 = Partition::from_permutation(inv2);
          std::vector<int> fmap(elems.size());
          for (size_t e = 0; e < elems.size(); ++e)
            fmap[e] = index.at(product(product(q2, elems[e]), q1));
          require(is_isomorphism(tables[static_cast<size_t>(members[i])],
                                 tables[static_cast<size_t>(members[j])], fmap),
                  "conjugator-induced map is not a table isomorphism");
        }
      }
    }
  }
}

void check_variant_preorder(const VerifyOptions&) {
  // full variant R-preorder from the natural order vs the table, n = 2
  const int n = 2;
  std::vector<Partition> elems = all_partitions(n);
  const int size = static_cast<int>(elems.size());
  for (const Partition& alpha : elems) {
    Variant v(alpha);
    FiniteSemigroup table = build_table(v);
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) {
        bool formula =
            x == y || leq_r_natural(elems[static_cast<size_t>(x)],
                                    product(elems[static_cast<size_t>(y)], alpha));
        bool from_table = x == y;
        for (int z = 0; z < size && !from_table; ++z)
          from_table = table.apply(y, z) == x;
        require(formula == from_table,
                "variant R-preorder formula disagrees with the table");
        if (in_p1(v, elems[static_cast<size_t>(x)]))
          require(leq_variant_r(v, elems[static_cast<size_t>(x)],
                                elems[static_cast<size_t>(y)]) == from_table,
                  "restricted preorder op disagrees with the table");
      }
    }
  }
}

void check_inflation(const VerifyOptions& opts) {
  for (int n = 0; n <= std::min(3, opts.max_n); ++n) {
    for (const Partition& alpha : partitions_filtered(n, 0, std::nullopt, std::nullopt)) {
      Variant v(alpha);
      require(verify_inflation(v), "inflation law fails at n=" + std::to_string(n));
      std::vector<int> sizes = preimage_multiset(v);
      BigInt total = 0;
      for (int s : sizes) total += s;
      require(total == pb_count(n), "preimage sizes do not sum to |PB_n|");
      // the retraction is idempotent
      for (const Partition& x : all_partitions(n)) {
        Partition once = v.sandwich(x, x);
        require(v.sandwich(once, once) == once, "retraction is not idempotent");
      }
    }
  }
}

void check_example_pair(const VerifyOptions&) {
  Partition alpha = parse_partition("2;[[1],[2],[-1,-2]]");
  Partition beta = parse_partition("2;[[1,2],[-1,-2]]");
  InvariantTuple ia = invariants(alpha), ib = invariants(beta);
  require(ia.r == 0 && ib.r == 0 && ia.k == 2 && ib.k == 0 && ia.p == 0 && ib.p == 0,
          "unexpected invariants for the fixed rank-0 pair");
  RankZeroReport rep = rank_zero_report(alpha, beta);
  std::vector<int> expected{1, 1, 3, 5};
  require(rep.alpha_preimage_sizes == expected && rep.beta_preimage_sizes == expected,
          "preimage multisets are not {1,1,3,5}");
  require(!rep.fingerprints_equal, "preorder fingerprints fail to separate the pair");
  require(rep.oracle_isomorphic.has_value() && !*rep.oracle_isomorphic,
          "table oracle fails to separate the pair");
  IsoVerdict verdict = decide_isomorphism(alpha, beta, /*use_oracle=*/true);
  require(verdict.status == IsoStatus::NotIsomorphic,
          "oracle-backed verdict is not non-isomorphic");
}

void check_rank0_evidence(const VerifyOptions&) {
  const int n = 2;
  std::vector<Partition> zeros = partitions_filtered(n, 0, std::nullopt, std::nullopt);
  for (size_t i = 0; i < zeros.size(); ++i) {
    for (size_t j = i; j < zeros.size(); ++j) {
      InvariantTuple a = invariants(zeros[i]), b = invariants(zeros[j]);
      RankZeroReport rep = rank_zero_report(zeros[i], zeros[j]);
      require(rep.oracle_isomorphic.has_value(), "oracle unavailable at n=2");
      bool same_counts = a.k == b.k && a.p == b.p;
      require(*rep.oracle_isomorphic == same_counts,
              "rank-0 singleton-count criterion fails at n=2");
    }
  }
}

}  // namespace

std::vector<std::string> verification_check_names() {
  return {
      "eq-cardinality",        "sec-3-diagram-product",
      "eq-pom2-r-order",       "lemma-4.3-oracle",
      "sec-4-mu-swap-symmetry", "lemma-4.3-closed-form",
      "lemma-4.4-separation",  "lemma-4.2-class-counts",
      "eq-psets-pb",           "theorem-2.1-green",
      "prop-4.1-chain",        "theorem-4.6-classification",
      "lemma-4.5-conjugators", "eq-pom1-variant-preorder",
      "prop-5.2-inflation",    "example-5.1-rank0",
      "hypothesis-5.1-evidence",
  };
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  using CheckFn = void (*)(const VerifyOptions&);
  std::vector<CheckFn> bodies = {
      check_cardinality,     check_diagram_product,
      check_r_order,         check_mu_oracle,
      check_mu_swap_symmetry, check_mu_closed_form,
      check_mu_separation,   check_class_counts,
      check_psets,           check_variant_green,
      check_chain,           check_classification,
      check_conjugators,     check_variant_preorder,
      check_inflation,       check_example_pair,
      check_rank0_evidence,
  };
  std::vector<std::string> names = verification_check_names();
  std::vector<CheckResult> results(bodies.size());

  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      size_t i = cursor.fetch_add(1);
      if (i >= bodies.size()) return;
      CheckResult& r = results[i];
      r.name = names[i];
      try {
        bodies[i](options);
        r.pass = true;
        r.detail = "ok";
      } catch (const Failure& f) {
        r.pass = false;
        r.detail = f.what;
      } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
      }
    }
  };

  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  return results;
}

}  // namespace pbm
