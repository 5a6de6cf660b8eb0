#include <doctest.h>

#include <random>

#include "dilmet/cayley.hpp"
#include "oracles.hpp"

using namespace dilmet;

namespace {

const IntMatrix kM21{{1, 2, -6}, {5, 2, 4}, {2, -2, 3}};

std::vector<std::int64_t> cyclic_gens(const CayleyDigraph& g) {
  std::vector<std::int64_t> out;
  for (const auto& x : g.generators()) out.push_back(x.back());
  return out;
}

}  // namespace

TEST_CASE("group_from_matrix on the 84-vertex matrix") {
  const CayleyDigraph g = group_from_matrix(kM21);
  CHECK(g.group().factors() == std::vector<std::int64_t>{1, 1, 84});
  // U is not unique: the generators agree with the listed {7, 81, 46}
  // up to an automorphism of Z_84, coordinate by coordinate.
  const std::vector<std::int64_t> listed{7, 81, 46};
  const auto u = find_multiplier_isomorphism(84, cyclic_gens(g), listed, true);
  REQUIRE(u.has_value());
  CHECK(std::gcd(*u, std::int64_t{84}) == 1);

  const SmithDecomposition reference{IntMatrix{{0, 0, 1}, {-2, 1, 10}, {7, -3, -38}},
                                 IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 84}},
                                 IntMatrix{{2, 1, 26}, {0, 1, 23}, {-1, 0, -2}}, kM21};
  CHECK(cyclic_gens(group_from_smith(reference)) == listed);
  CHECK(g.order() == 84);
}

TEST_CASE("group_from_matrix trivial and dilated") {
  const CayleyDigraph id = group_from_matrix(IntMatrix::identity(3));
  CHECK(id.order() == 1);
  for (const auto& x : id.generators()) CHECK(x == id.group().identity());

  const CayleyDigraph g2 = group_from_matrix(Integer(2) * kM21);
  CHECK(g2.group().factors() == std::vector<std::int64_t>{2, 2, 168});
  CHECK_THROWS_AS(group_from_matrix(IntMatrix{{1, 1}, {1, 1}}), Error);
}

TEST_CASE("diameter_bfs") {
  const std::int64_t g1[] = {2, 9, 35};
  CHECK(diameter_bfs(CayleyDigraph::cyclic(84, g1)) == 7);
  const std::int64_t z3[] = {1, 2};
  CHECK(diameter_bfs(CayleyDigraph::cyclic(3, z3)) == 1);
  const std::int64_t g2[] = {2, 9, 33};
  CHECK(diameter_bfs(CayleyDigraph::cyclic(84, g2)) == 9);
  CHECK(diameter_bfs(CayleyDigraph::cyclic(87, g2)) == 9);
  CHECK(diameter_bfs(group_from_matrix(kM21)) == 7);
}

TEST_CASE("non-generating sets are rejected") {
  const std::int64_t even[] = {2, 4};
  const auto g = CayleyDigraph::cyclic(10, even);
  CHECK_FALSE(generates(g));
  try {
    diameter_bfs(g);
    FAIL("expected NotGenerating");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGenerating);
  }
  CHECK_THROWS_AS(distance_distribution(g), Error);
  CHECK_THROWS_AS(lattice_of(g), Error);
}

TEST_CASE("distance_distribution") {
  const std::int64_t z3[] = {1, 2};
  CHECK(distance_distribution(CayleyDigraph::cyclic(3, z3)) ==
        std::map<std::int64_t, std::int64_t>{{0, 1}, {1, 2}});
  const std::int64_t z1[] = {0};
  CHECK(distance_distribution(CayleyDigraph::cyclic(1, z1)) == std::map<std::int64_t, std::int64_t>{{0, 1}});
  const std::int64_t g1[] = {2, 9, 35};
  const auto hist = distance_distribution(CayleyDigraph::cyclic(84, g1));
  std::int64_t total = 0;
  for (auto [k, c] : hist) total += c;
  CHECK(total == 84);
  CHECK(hist.rbegin()->first == 7);
}

TEST_CASE("density") {
  CHECK(density(84, 3, 7) == Rational(84, 1000));
  CHECK(density(12, 2, 4) == Rational(1, 3));
  CHECK(density(1, 1, 0) == Rational(1));
  CHECK_THROWS_AS(density(0, 1, 0), Error);
}

TEST_CASE("verify_multiplier_isomorphism") {
  const std::int64_t a[] = {46, 81, 7};
  const std::int64_t b[] = {2, 9, 35};
  CHECK(verify_multiplier_isomorphism(84, a, b, 53));
  CHECK(verify_multiplier_isomorphism(84, b, b, 1));
  CHECK_FALSE(verify_multiplier_isomorphism(84, b, b, 2));
  CHECK_FALSE(verify_multiplier_isomorphism(84, a, b, 5));
}

TEST_CASE("find_multiplier_isomorphism") {
  const std::int64_t a[] = {46, 81, 7};
  const std::int64_t b[] = {2, 9, 35};
  CHECK(find_multiplier_isomorphism(84, a, b) == std::optional<std::int64_t>{53});
  const std::int64_t c[] = {2, 9, 33};
  CHECK_FALSE(find_multiplier_isomorphism(84, b, c).has_value());
}

TEST_CASE("diameter is invariant under multiplier isomorphisms") {
  std::mt19937_64 rng(3);
  for (std::int64_t n : {30, 49, 64, 77}) {
    std::uniform_int_distribution<std::int64_t> pick(1, n - 1);
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<std::int64_t> a{pick(rng), pick(rng), pick(rng)};
      std::int64_t u = pick(rng);
      while (std::gcd(u, n) != 1) u = pick(rng);
      std::vector<std::int64_t> b;
      for (auto x : a) b.push_back(x * u % n);
      REQUIRE(verify_multiplier_isomorphism(n, a, b, u));
      const auto ga = CayleyDigraph::cyclic(n, a);
      const auto gb = CayleyDigraph::cyclic(n, b);
      CHECK(generates(ga) == generates(gb));
      if (generates(ga)) CHECK(diameter_bfs(ga) == diameter_bfs(gb));
    }
  }
}

TEST_CASE("BFS agrees with the explicit-adjacency oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 120);
    std::vector<std::int64_t> gens;
    for (int j = 0; j < 1 + trial % 4; ++j) gens.push_back(static_cast<std::int64_t>(rng() % n));
    const auto g = CayleyDigraph::cyclic(n, gens);
    const std::int64_t expected = oracle::cyclic_diameter(n, gens);
    if (expected < 0) {
      CHECK_FALSE(generates(g));
    } else {
      CHECK(diameter_bfs(g) == expected);
    }
  }
  // Non-cyclic group.
  AbelianGroup grp({4, 4});
  const auto g = CayleyDigraph(grp, {{1, 1}, {2, 1}, {1, 2}});
  CHECK(diameter_bfs(g) == oracle::cayley_diameter({4, 4}, {{1, 1}, {2, 1}, {1, 2}}));
  CHECK(diameter_bfs(g) == 3);
}

TEST_CASE("group order equals |det M|") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix m = oracle::random_nonsingular(rng, 2 + trial % 2, 5);
    CHECK(Integer(group_from_matrix(m).order()) == abs(oracle::cofactor_det(m)));
  }
}

TEST_CASE("lattice_of inverts the presentation") {
  const std::int64_t g1[] = {2, 9, 35};
  const auto g = CayleyDigraph::cyclic(84, g1);
  const IntMatrix m = lattice_of(g);
  CHECK(abs(determinant(m)) == 84);
  // Columns lie in the kernel of a -> 2a1 + 9a2 + 35a3.
  for (std::size_t j = 0; j < 3; ++j) {
    Integer s = 2 * m(0, j) + 9 * m(1, j) + 35 * m(2, j);
    CHECK(s % 84 == 0);
  }
  // Same lattice as M(2,1) with coordinates reversed.
  const IntMatrix reversed{{3, -2, 2}, {4, 2, 5}, {-6, 2, 1}};
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(congruent_mod(reversed.column(j), IntVector(3), m));
    CHECK(congruent_mod(m.column(j), IntVector(3), reversed));
  }
  // Generator images of the round trip match the original digraph.
  CHECK(diameter_bfs(group_from_matrix(m)) == 7);
}

TEST_CASE("dilation diameter law on small matrices") {
  const IntMatrix delta2{{2, -1}, {-1, 2}};
  const std::int64_t k1 = diameter_bfs(group_from_matrix(delta2));
  CHECK(k1 == 1);
  for (std::int64_t t = 1; t <= 4; ++t)
    CHECK(diameter_bfs(group_from_matrix(Integer(t) * delta2)) == t * (k1 + 2) - 2);
}

TEST_CASE("inspect flags duplicates and loops") {
  const std::int64_t gens[] = {1, 1, 0};
  const auto rep = inspect(CayleyDigraph::cyclic(5, gens));
  CHECK(rep.generating);
  CHECK(rep.warnings.size() == 2);
}

TEST_CASE("AbelianGroup invariants") {
  CHECK_THROWS_AS(AbelianGroup({2, 3}), Error);
  CHECK_THROWS_AS(AbelianGroup({0}), Error);
  CHECK_THROWS_AS(AbelianGroup(std::vector<std::int64_t>{}), Error);
  AbelianGroup g({2, 6});
  for (std::int64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
  CHECK(format_element({0, 77}, AbelianGroup({1, 84})) == "77");
  CHECK(format_element({1, 3}, g) == "1:3");
}
