#include "doctest.h"

#include "pbm/mu.hpp"
#include "pbm/variant.hpp"

using namespace pbm;

TEST_CASE("sandwiching by the identity is the plain product") {
  Variant v(Partition::identity(2));
  std::vector<Partition> elems = all_partitions(2);
  for (const Partition& s : elems)
    for (const Partition& t : elems) CHECK(v.sandwich(s, t) == product(s, t));
}

TEST_CASE("the rank-0 example squares the identity to the sandwich element") {
  Partition alpha = parse_partition("2;[[1],[2],[-1,-2]]");
  Variant v(alpha);
  Partition id = Partition::identity(2);
  CHECK(v.sandwich(id, id) == alpha);
}

TEST_CASE("the sandwich operation is associative") {
  std::vector<Partition> elems = all_partitions(2);
  std::vector<Partition> sandwiches{Partition::identity(2),
                                    parse_partition("2;[[1],[2],[-1,-2]]"),
                                    parse_partition("2;[[1,-2],[2],[-1]]")};
  for (const Partition& alpha : sandwiches) {
    Variant v(alpha);
    for (const Partition& a : elems)
      for (const Partition& b : elems)
        for (const Partition& c : elems)
          CHECK(v.sandwich(v.sandwich(a, b), c) == v.sandwich(a, v.sandwich(b, c)));
  }
}

TEST_CASE("P-sets for the identity sandwich are everything") {
  for (int n = 0; n <= 2; ++n) {
    Variant v(Partition::identity(n));
    PSets sets = p_sets(v);
    int size = static_cast<int>(all_partitions(n).size());
    CHECK(static_cast<int>(sets.p1.size()) == size);
    CHECK(static_cast<int>(sets.p2.size()) == size);
    CHECK(static_cast<int>(sets.p3.size()) == size);
    CHECK(static_cast<int>(sets.p.size()) == size);
  }
}

TEST_CASE("P-sets of a rank-0 sandwich are the rank-0 layer") {
  Partition alpha = parse_partition("2;[[1],[2],[-1,-2]]");
  Variant v(alpha);
  PSets sets = p_sets(v);
  CHECK(sets.p1 == sets.p2);
  CHECK(sets.p1 == sets.p);
  CHECK(sets.p.size() == 4);
  std::vector<Partition> elems = all_partitions(2);
  for (int i : sets.p) CHECK(rank_of(elems[static_cast<size_t>(i)]) == 0);
}

TEST_CASE("regular D-chain levels and class counts") {
  // identity on PB_2: one level per rank
  {
    Variant v(Partition::identity(2));
    RegularDChain chain = regular_d_chain(v);
    REQUIRE(chain.levels.size() == 3);
    CHECK(class_counts(v, 1) == std::pair<int, int>{2, 2});
  }
  // one fixed transversal: the top level is a single element
  {
    Partition alpha = parse_partition("2;[[1],[2,-2],[-1]]");
    Variant v(alpha);
    CHECK(v.rank() == 1);
    CHECK(v.ker_singletons() == 2);
    CHECK(v.coker_singletons() == 2);
    RegularDChain chain = regular_d_chain(v);
    REQUIRE(chain.levels.size() == 2);
    CHECK(chain.levels[1].elements.size() == 1);
    std::vector<Partition> elems = all_partitions(2);
    CHECK(elems[static_cast<size_t>(chain.levels[1].elements.front())] == alpha);
    CHECK(class_counts(v, 1) == std::pair<int, int>{1, 1});
    CHECK(class_counts(v, 0) == std::pair<int, int>{2, 2});
    CHECK_THROWS_AS(class_counts(v, 2), ValidationError);
  }
  // rank-0 sandwich: a single level
  {
    Variant v(parse_partition("2;[[1,2],[-1,-2]]"));
    RegularDChain chain = regular_d_chain(v);
    REQUIRE(chain.levels.size() == 1);
    CHECK(chain.levels[0].elements.size() == 4);
  }
}

TEST_CASE("class counts match the counting sequence on all of PB_2 and PB_3") {
  for (int n = 2; n <= 3; ++n) {
    for (const Partition& alpha : all_partitions(n)) {
      Variant v(alpha);
      RegularDChain chain = regular_d_chain(v);
      for (const auto& level : chain.levels) {
        CHECK(mu(n, v.ker_singletons(), v.rank(), level.q) == level.l_class_count);
        CHECK(mu(n, v.coker_singletons(), v.rank(), level.q) == level.r_class_count);
      }
    }
  }
}

TEST_CASE("green classes outside the P-sets are singletons") {
  Partition alpha = parse_partition("2;[[1],[2],[-1,-2]]");  // rank 0
  Variant v(alpha);
  Partition id = Partition::identity(2);
  CHECK_FALSE(in_p1(v, id));
  for (GreenKind kind : {GreenKind::R, GreenKind::L, GreenKind::H}) {
    std::vector<Partition> cls = variant_green_class(v, id, kind);
    REQUIRE(cls.size() == 1);
    CHECK(cls.front() == id);
  }
}

TEST_CASE("identity sandwich green classes are the natural ones") {
  Variant v(Partition::identity(2));
  Partition x = parse_partition("2;[[1,-1],[2],[-2]]");
  // natural R-class of x: same kernel and domain
  std::vector<Partition> rclass = variant_green_class(v, x, GreenKind::R);
  CHECK(rclass.size() == 2);  // x itself and the 1 -> 2 transversal
  std::vector<Partition> dclass = variant_green_class(v, x, GreenKind::D);
  CHECK(dclass.size() == 4);  // all rank-1 elements of PB_2
  std::vector<Partition> jclass = variant_green_class(v, x, GreenKind::J);
  CHECK(jclass == dclass);
}

TEST_CASE("variant R-preorder formula and its scope") {
  Partition alpha = parse_partition("2;[[1],[2],[-1,-2]]");
  Variant v(alpha);
  std::vector<Partition> elems = all_partitions(2);
  for (const Partition& s : elems) {
    if (!in_p1(v, s)) {
      CHECK_THROWS_AS(leq_variant_r(v, s, s), ScopeError);
      continue;
    }
    CHECK(leq_variant_r(v, s, s));
  }
}

TEST_CASE("dimension guards") {
  Variant v(Partition::identity(2));
  CHECK_THROWS_AS(v.sandwich(Partition::identity(3), Partition::identity(2)),
                  DimensionError);
  CHECK_THROWS_AS(variant_green_class(v, Partition::identity(3), GreenKind::R),
                  DimensionError);
}
