#include <doctest.h>

#include "cyclematch/error.hpp"
#include "cyclematch/persistence.hpp"
#include "cyclematch/representatives.hpp"
#include "cycle_check.hpp"
#include "fixtures.hpp"

using namespace cyclematch;

TEST_CASE("unit square: the four sides") {
  const auto d = pairwise_distances(fixtures::unit_square());
  const auto cycles = representative_cycles(d, compute_barcode(d, 1, kInfinity));
  REQUIRE(cycles.size() == 1);
  std::vector<std::vector<index_t>> edges;
  for (const auto& s : cycles[0].chain) edges.push_back(cns_decode(s, 4));
  std::sort(edges.begin(), edges.end());
  CHECK(edges == std::vector<std::vector<index_t>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(fixtures::check_cycle(d, cycles[0]).empty());

  // the checker itself rejects wrong claims
  auto late = cycles[0];
  late.pair.birth_value = 1.2;
  CHECK(!fixtures::check_cycle(d, late).empty());
  auto broken = cycles[0];
  broken.chain.pop_back();
  broken.coefficients.pop_back();
  CHECK(!fixtures::check_cycle(d, broken).empty());
}

TEST_CASE("triangle: nothing to represent") {
  const auto d = pairwise_distances(fixtures::triangle());
  CHECK(representative_cycles(d, compute_barcode(d, 1, kInfinity)).empty());
}

TEST_CASE("cycles are valid over Z/2 and Z/3") {
  std::size_t emitted = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto d = pairwise_distances(fixtures::uniform_cube(4 + seed % 7, 2 + seed % 2, seed));
    for (coefficient_t p : {2, 3}) {
      const auto b = compute_barcode(d, 2, kInfinity, p);
      const auto cycles = representative_cycles(d, b);
      std::size_t expected = 0;
      for (const auto& q : b.pairs) expected += q.dim >= 1 && !q.essential() && q.death_value > q.birth_value;
      CHECK(cycles.size() == expected);
      for (const auto& c : cycles) {
        CHECK(fixtures::check_cycle(d, c) == "");
        for (const auto& s : c.chain) CHECK(simplex_diameter(s, d) <= c.pair.death_value);
        for (auto coeff : c.coefficients) CHECK(coeff != 0);
      }
      emitted += cycles.size();
    }
  }
  CHECK(emitted > 20);
}

TEST_CASE("repeated runs give identical chains") {
  const auto d = pairwise_distances(fixtures::uniform_square(60, 4));
  const auto b = compute_barcode(d, 1, enclosing_radius(d));
  CHECK(representative_cycles(d, b) == representative_cycles(d, b));
}

TEST_CASE("a barcode from another metric is rejected") {
  const auto d = pairwise_distances(fixtures::uniform_square(8, 1));
  const auto other = pairwise_distances(fixtures::uniform_square(9, 1));
  CHECK_THROWS_AS(representative_cycles(d, compute_barcode(other, 1, kInfinity)), CompatibilityError);
  auto b = compute_barcode(d, 1, kInfinity);
  for (auto& p : b.pairs)
    if (p.dim == 1 && p.death_simplex) p.birth_simplex.cindex = (p.birth_simplex.cindex + 1) % 28;
  CHECK_THROWS_AS(representative_cycles(d, b), CompatibilityError);
}

TEST_CASE("boundary helper") {
  const std::vector<SimplexKey> tri{{2, 0}};
  CHECK(chain_boundary(tri, {1}, 3, 2).size() == 3);
  const auto edges = std::vector<SimplexKey>{cns_encode(std::vector<index_t>{0, 1}, 3),
                                             cns_encode(std::vector<index_t>{1, 2}, 3),
                                             cns_encode(std::vector<index_t>{0, 2}, 3)};
  CHECK(chain_boundary(edges, {1, 1, 1}, 3, 2).empty());
  CHECK(!chain_boundary(edges, {1, 1, 1}, 3, 3).empty());
  CHECK(chain_boundary(edges, {1, 1, 2}, 3, 3).empty());
}
