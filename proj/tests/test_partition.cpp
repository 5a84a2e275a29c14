#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"

#include "pbm/enumeration.hpp"
#include "pbm/partition.hpp"

using namespace pbm;

namespace {

// Independent product oracle: build the three-row graph explicitly and take
// union-find components. Shares no code with the alternating-path trace.
Partition product_oracle(const Partition& a, const Partition& b) {
  const int n = a.n();
  std::vector<int> parent(static_cast<size_t>(3 * n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<size_t>(x)] == x
               ? x
               : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]);
  };
  auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };

  // rows: top 0..n-1, middle n..2n-1, bottom 2n..3n-1
  for (int v = 0; v < 2 * n; ++v) {
    int w = a.partner(v);
    if (w != Partition::npos) unite(v, w);  // a's lower row is the middle row
  }
  for (int v = 0; v < 2 * n; ++v) {
    int w = b.partner(v);
    if (w != Partition::npos) unite(v + n, w + n);  // b shifted down one row
  }

  std::map<int, std::vector<int>> boundary;  // root -> result vertices
  for (int t = 0; t < n; ++t) boundary[find(t)].push_back(t);
  for (int x = 0; x < n; ++x) boundary[find(2 * n + x)].push_back(n + x);

  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : boundary) {
    REQUIRE(members.size() <= 2);
    std::vector<int> block;
    for (int v : members) block.push_back(v < n ? v + 1 : -(v - n + 1));
    blocks.push_back(block);
  }
  return Partition::from_blocks(n, blocks);
}

const char* kSectionAlpha = "7;[[1,5],[2],[3,-2],[4],[6,-5],[7,-7],[-1,-6],[-3,-4]]";
const char* kSectionBeta = "7;[[1,2],[3,-2],[4],[5,7],[6,-6],[-1,-3],[-4,-7],[-5]]";

}  // namespace

TEST_CASE("from_blocks accepts the running example and validates input") {
  Partition alpha = parse_partition(kSectionAlpha);
  CHECK(rank_of(alpha) == 3);
  CHECK(stats(alpha).dom == std::vector<int>{3, 6, 7});

  CHECK(Partition::from_blocks(0, {}) == Partition());
  CHECK(all_partitions(0).size() == 1);

  CHECK_THROWS_AS(Partition::from_blocks(2, {{1, 2}, {-1}, {-2}, {1}}), ValidationError);
  CHECK_THROWS_AS(Partition::from_blocks(2, {{1, 2, -1}, {-2}}), ValidationError);
  CHECK_THROWS_AS(Partition::from_blocks(2, {{1, 3}, {2}, {-1}, {-2}}), ValidationError);
  CHECK_THROWS_AS(Partition::from_blocks(2, {{1}, {-1}, {-2}}), ValidationError);
}

TEST_CASE("canonical block lists") {
  CHECK(Partition::identity(2).blocks() ==
        std::vector<std::vector<int>>{{1, -1}, {2, -2}});
  CHECK(Partition().blocks().empty());
  Partition alpha = parse_partition(kSectionAlpha);
  CHECK(Partition::from_blocks(7, alpha.blocks()) == alpha);
  CHECK(to_string(alpha) == kSectionAlpha);
}

TEST_CASE("product matches the hand-traced example and the union-find oracle") {
  Partition alpha = parse_partition(kSectionAlpha);
  Partition beta = parse_partition(kSectionBeta);
  Partition expected = parse_partition(
      "7;[[1,5],[2],[3,-6],[4],[6,7],[-1,-3],[-2],[-4,-7],[-5]]");
  Partition got = product(alpha, beta);
  CHECK(got == expected);
  CHECK(got == product_oracle(alpha, beta));
  CHECK(rank_of(got) == 1);
}

TEST_CASE("product agrees with the union-find oracle on all of PB_2 and PB_3") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<Partition> elems = all_partitions(n);
    for (const Partition& a : elems)
      for (const Partition& b : elems) CHECK(product(a, b) == product_oracle(a, b));
  }
}

TEST_CASE("product agrees with the union-find oracle on samples at n = 4 and 5") {
  EnumerationBounds loose;
  loose.max_n_full_monoid = 5;
  std::mt19937_64 rng(4242);
  for (int n = 4; n <= 5; ++n) {
    std::vector<Partition> elems = all_partitions(n, loose);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(elems.size()) - 1);
    for (int trial = 0; trial < 20000; ++trial) {
      const Partition& a = elems[static_cast<size_t>(pick(rng))];
      const Partition& b = elems[static_cast<size_t>(pick(rng))];
      CHECK(product(a, b) == product_oracle(a, b));
    }
  }
}

TEST_CASE("identity laws and idempotent singletons") {
  for (int n = 0; n <= 3; ++n) {
    Partition id = Partition::identity(n);
    for (const Partition& x : all_partitions(n)) {
      CHECK(product(id, x) == x);
      CHECK(product(x, id) == x);
    }
  }
  Partition zeta = Partition::from_blocks(2, {{1}, {2}, {-1}, {-2}});
  CHECK(product(zeta, zeta) == zeta);
}

TEST_CASE("product dimension mismatch") {
  CHECK_THROWS_AS(product(Partition::identity(2), Partition::identity(3)),
                  DimensionError);
}

TEST_CASE("associativity, exhaustive at n=2 and sampled at n=4") {
  std::vector<Partition> small = all_partitions(2);
  for (const Partition& a : small)
    for (const Partition& b : small)
      for (const Partition& c : small)
        CHECK(product(product(a, b), c) == product(a, product(b, c)));

  std::vector<Partition> big = all_partitions(4);
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(big.size()) - 1);
  for (int i = 0; i < 1000; ++i) {
    const Partition& a = big[static_cast<size_t>(pick(rng))];
    const Partition& b = big[static_cast<size_t>(pick(rng))];
    const Partition& c = big[static_cast<size_t>(pick(rng))];
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
  }
}

TEST_CASE("rank never grows under multiplication") {
  for (int n = 0; n <= 3; ++n) {
    std::vector<Partition> elems = all_partitions(n);
    for (const Partition& a : elems)
      for (const Partition& b : elems)
        CHECK(rank_of(product(a, b)) <= std::min(rank_of(a), rank_of(b)));
  }
}

TEST_CASE("stats of the running example") {
  Partition alpha = parse_partition(kSectionAlpha);
  PartitionStats s = stats(alpha);
  CHECK(s.rank == 3);
  CHECK(s.dom == std::vector<int>{3, 6, 7});
  CHECK(s.codom == std::vector<int>{2, 5, 7});
  CHECK(s.upper_nontransversals ==
        std::vector<std::vector<int>>{{1, 5}, {2}, {4}});
  CHECK(s.lower_nontransversals ==
        std::vector<std::vector<int>>{{1, 6}, {3, 4}});
  CHECK(s.ker_singletons == 5);
  CHECK(s.coker_singletons == 3);
}

TEST_CASE("stats of identity and of a rank-0 element") {
  for (int n = 0; n <= 4; ++n) {
    PartitionStats s = stats(Partition::identity(n));
    CHECK(s.rank == n);
    CHECK(s.ker_singletons == n);
    CHECK(s.coker_singletons == n);
    CHECK(s.upper_nontransversals.empty());
    CHECK(s.lower_nontransversals.empty());
  }
  // lower hook only
  Partition alpha = parse_partition("2;[[1],[2],[-1,-2]]");
  PartitionStats s = stats(alpha);
  CHECK(s.rank == 0);
  CHECK(s.ker_singletons == 2);
  CHECK(s.coker_singletons == 0);
}

TEST_CASE("stats invariants over all of PB_3") {
  for (const Partition& p : all_partitions(3)) {
    PartitionStats s = stats(p);
    CHECK(s.rank == static_cast<int>(s.dom.size()));
    CHECK(s.rank == static_cast<int>(s.codom.size()));
    CHECK(s.ker_singletons >= s.rank);
    CHECK(s.coker_singletons >= s.rank);
    CHECK((3 - s.ker_singletons) % 2 == 0);
    CHECK((3 - s.coker_singletons) % 2 == 0);
  }
}

TEST_CASE("permutation diagrams") {
  CHECK(Partition::from_permutation({0, 1, 2}) == Partition::identity(3));
  Partition swap = Partition::from_permutation({1, 0});
  CHECK(product(swap, swap) == Partition::identity(2));
  CHECK_THROWS_AS(Partition::from_permutation({0, 0}), ValidationError);

  // composition: the product diagram applies the left factor first
  std::vector<int> base{0, 1, 2};
  std::vector<std::vector<int>> all_perms;
  std::vector<int> perm = base;
  do {
    all_perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& gp : all_perms) {
    for (const auto& hp : all_perms) {
      std::vector<int> composed(3);
      for (int i = 0; i < 3; ++i)
        composed[static_cast<size_t>(i)] = hp[static_cast<size_t>(gp[static_cast<size_t>(i)])];
      CHECK(product(Partition::from_permutation(gp), Partition::from_permutation(hp)) ==
            Partition::from_permutation(composed));
    }
  }
}

TEST_CASE("reflect") {
  CHECK(reflect(Partition::identity(3)) == Partition::identity(3));
  Partition alpha = parse_partition(kSectionAlpha);
  PartitionStats s = stats(reflect(alpha));
  CHECK(s.rank == 3);
  CHECK(s.dom == std::vector<int>{2, 5, 7});
  CHECK(s.codom == std::vector<int>{3, 6, 7});
  CHECK(s.ker_singletons == 3);  // computed by applying stats to the flip
  for (const Partition& p : all_partitions(2)) {
    CHECK(reflect(reflect(p)) == p);
    PartitionStats orig = stats(p), flip = stats(reflect(p));
    CHECK(flip.ker_classes == orig.coker_classes);
    CHECK(flip.dom == orig.codom);
  }
}

TEST_CASE("natural R-preorder") {
  Partition zeta = Partition::from_blocks(2, {{1}, {2}, {-1}, {-2}});
  CHECK(leq_r_natural(zeta, Partition::identity(2)));
  CHECK_FALSE(leq_r_natural(Partition::identity(2), zeta));

  std::vector<Partition> elems = all_partitions(2);
  for (const Partition& s : elems) {
    CHECK(leq_r_natural(s, s));
    for (const Partition& t : elems) {
      bool witnessed = (s == t);
      for (const Partition& g : elems)
        if (product(t, g) == s) witnessed = true;
      CHECK(leq_r_natural(s, t) == witnessed);
    }
  }
}

TEST_CASE("round trip through halves with the transversal pairing") {
  // reconstructing from kernel/cokernel data plus the pairing is exact
  for (const Partition& p : all_partitions(3)) {
    auto pairing = transversal_pairs(p);
    CHECK(static_cast<int>(pairing.size()) == rank_of(p));
  }
}

TEST_CASE("text format") {
  CHECK(to_string(Partition()) == "0;[]");
  CHECK(parse_partition("0;[]") == Partition());
  CHECK(parse_partition(" 2 ; [ [1, -1] , [2,-2] ] ") == Partition::identity(2));
  CHECK_THROWS_AS(parse_partition("2;[[1,-1],[2,-2]] junk"), ValidationError);
  CHECK_THROWS_AS(parse_partition("2;[[1,-1]"), ValidationError);
  CHECK_THROWS_AS(parse_partition("2;[[1],[1],[-1],[-2],[2]]"), ValidationError);
  for (const Partition& p : all_partitions(3))
    CHECK(parse_partition(to_string(p)) == p);
}
