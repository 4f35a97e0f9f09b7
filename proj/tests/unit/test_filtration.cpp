#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "cyclematch/distance_matrix.hpp"
#include "cyclematch/error.hpp"
#include "cyclematch/filtration.hpp"
#include "cyclematch/io.hpp"
#include "cyclematch/point_cloud.hpp"
#include "cyclematch/simplex.hpp"
#include "cyclematch/union_problem.hpp"
#include "fixtures.hpp"

using namespace cyclematch;

namespace {

void all_subsets(index_t n, std::size_t size, index_t start, std::vector<index_t>& cur,
                 std::vector<std::vector<index_t>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (index_t v = start; v < n; ++v) {
    cur.push_back(v);
    all_subsets(n, size, v + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<index_t>> subsets(index_t n, std::size_t size) {
  std::vector<std::vector<index_t>> out;
  std::vector<index_t> cur;
  all_subsets(n, size, 0, cur, out);
  return out;
}

}  // namespace

TEST_SUITE("point clouds and metrics") {
  TEST_CASE("single point gives a 1x1 zero matrix") {
    const auto d = pairwise_distances(PointCloud::from_points({{0.0, 0.0}}));
    CHECK(d.size() == 1);
    CHECK(d(0, 0) == 0.0);
  }

  TEST_CASE("triangle distances") {
    const auto d = pairwise_distances(fixtures::triangle());
    CHECK(d(0, 1) == 1.0);
    CHECK(d(0, 2) == doctest::Approx(1.2247448713915890));
    CHECK(d(1, 2) == doctest::Approx(0.8763271035584387));
    CHECK(d(2, 1) == d(1, 2));
  }

  TEST_CASE("distances equal a naive double loop") {
    const auto cloud = fixtures::uniform_cube(10, 3, 5);
    const auto d = pairwise_distances(cloud);
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = 0; j < 10; ++j) {
        double s = 0.0;
        for (std::size_t c = 0; c < 3; ++c) {
          const double t = cloud.point(i)[c] - cloud.point(j)[c];
          s += t * t;
        }
        CHECK(d(i, j) == std::sqrt(s));
      }
  }

  TEST_CASE("mixed ambient dimensions are rejected") {
    CHECK_THROWS_AS(PointCloud::from_points({{0.0, 0.0}, {1.0}}), DimensionMismatchError);
    CHECK_THROWS_AS(pairwise_distances(PointCloud()), EmptyInputError);
  }

  TEST_CASE("invalid distance matrices are rejected") {
    CHECK_THROWS_AS(DistanceMatrix(2, {0, 1, 2, 0}), InputError);
    CHECK_THROWS_AS(DistanceMatrix(2, {0, -1, -1, 0}), InputError);
    CHECK_THROWS_AS(DistanceMatrix(2, {1, 1, 1, 0}), InputError);
  }

  TEST_CASE("enclosing radius") {
    CHECK(enclosing_radius(pairwise_distances(fixtures::unit_square())) == doctest::Approx(std::sqrt(2.0)));
    CHECK(enclosing_radius(pairwise_distances(PointCloud::from_points({{0.0}, {1.0}, {2.0}}))) == 1.0);
  }
}

TEST_SUITE("combinatorial number system") {
  TEST_CASE("small ranks") {
    CHECK(cns_encode(std::vector<index_t>{3}, 5).cindex == 3);
    const auto e = cns_encode(std::vector<index_t>{0, 1}, 4);
    CHECK(e.dim == 1);
    CHECK(e.cindex == 0);
  }

  TEST_CASE("all triples of six points map onto 0..19") {
    auto triples = subsets(6, 3);
    std::sort(triples.begin(), triples.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    for (std::size_t r = 0; r < triples.size(); ++r) CHECK(cns_encode(triples[r], 6).cindex == static_cast<index_t>(r));
    CHECK(triples.size() == 20);
  }

  TEST_CASE("encode and decode are inverse up to n = 12") {
    for (index_t n = 1; n <= 12; ++n)
      for (std::size_t size = 1; size <= static_cast<std::size_t>(n); ++size) {
        const auto all = subsets(n, size);
        CHECK(static_cast<index_t>(all.size()) == simplex_count(static_cast<int>(size) - 1, n));
        for (std::size_t r = 0; r < all.size(); ++r) {
          const auto key = cns_encode(all[r], n);
          REQUIRE(cns_decode(key, n) == all[r]);
        }
        for (index_t c = 0; c < simplex_count(static_cast<int>(size) - 1, n); ++c) {
          const SimplexKey key{static_cast<int>(size) - 1, c};
          REQUIRE(cns_encode(cns_decode(key, n), n) == key);
        }
      }
  }

  TEST_CASE("bad vertex lists") {
    CHECK_THROWS_AS(cns_encode(std::vector<index_t>{2, 1}, 4), InvalidSimplexError);
    CHECK_THROWS_AS(cns_encode(std::vector<index_t>{1, 1}, 4), InvalidSimplexError);
    CHECK_THROWS_AS(cns_encode(std::vector<index_t>{1, 4}, 4), InvalidSimplexError);
  }

  TEST_CASE("boundary faces carry alternating signs") {
    const auto faces = boundary_faces(cns_encode(std::vector<index_t>{0, 1, 2}, 3), 3);
    REQUIRE(faces.size() == 3);
    std::multiset<int> signs;
    for (const auto& f : faces) signs.insert(f.sign);
    CHECK(signs.count(1) == 2);
    CHECK(signs.count(-1) == 1);
  }
}

TEST_SUITE("diameters and streams") {
  TEST_CASE("diameter of triangle simplices") {
    const auto d = pairwise_distances(fixtures::triangle());
    CHECK(simplex_diameter(SimplexKey{0, 2}, d) == 0.0);
    CHECK(simplex_diameter(cns_encode(std::vector<index_t>{0, 1}, 3), d) == 1.0);
    CHECK(simplex_diameter(SimplexKey{2, 0}, d) == doctest::Approx(1.2247448713915890));
  }

  TEST_CASE("diameter is monotone under faces") {
    const auto d = pairwise_distances(fixtures::uniform_square(8, 3));
    for (const auto& s : subsets(8, 4)) {
      const auto key = cns_encode(s, 8);
      for (const auto& f : boundary_faces(key, 8)) CHECK(simplex_diameter(f.key, d) <= simplex_diameter(key, d));
    }
  }

  TEST_CASE("single point stream") {
    const auto s = simplexwise_stream(pairwise_distances(PointCloud::from_points({{1.0, 2.0}})), 1, kInfinity);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == SimplexKey{0, 0});
  }

  TEST_CASE("triangle stream order") {
    const auto d = pairwise_distances(fixtures::triangle());
    const auto s = simplexwise_stream(d, 1, kInfinity);
    REQUIRE(s.size() == 7);
    for (int i = 0; i < 3; ++i) CHECK(s[i].dim == 0);
    CHECK(simplex_diameter(s[3], d) == doctest::Approx(0.8763271035584387));
    CHECK(simplex_diameter(s[4], d) == 1.0);
    CHECK(simplex_diameter(s[5], d) == doctest::Approx(1.2247448713915890));
    CHECK(s[6] == SimplexKey{2, 0});
  }

  TEST_CASE("stream prefixes are complexes and each simplex appears once") {
    const auto d = pairwise_distances(fixtures::uniform_square(7, 11));
    for (double thr : {kInfinity, enclosing_radius(d)}) {
      const auto s = simplexwise_stream(d, 2, thr);
      std::set<SimplexKey> seen;
      for (const auto& key : s) {
        CHECK(seen.insert(key).second);
        if (key.dim > 0)
          for (const auto& f : boundary_faces(key, 7)) CHECK(seen.count(f.key) == 1);
      }
      const FiltrationOrder order(d, thr);
      CHECK(std::is_sorted(s.begin(), s.end(), order));
      std::size_t expected = 0;
      for (std::size_t size = 1; size <= 4; ++size)
        for (const auto& v : subsets(7, size)) expected += simplex_diameter(v, d) <= thr;
      CHECK(s.size() == expected);
    }
  }

  TEST_CASE("duplicate points are allowed") {
    const auto d = pairwise_distances(PointCloud::from_points({{0, 0}, {0, 0}, {1, 0}}));
    const auto s = simplexwise_stream(d, 1, kInfinity);
    CHECK(s.size() == 7);
    CHECK(std::is_sorted(s.begin(), s.end(), FiltrationOrder(d, kInfinity)));
  }

  TEST_CASE("natural indices of the triangle") {
    const auto d = pairwise_distances(fixtures::triangle());
    const auto map = natural_reindex_map(d, 1, kInfinity);
    CHECK(map == reindex_map_from_stream(simplexwise_stream(d, 1, kInfinity), d));
    CHECK(map.size() == 5);
    CHECK(std::isinf(map.value(0)));
    CHECK(map.value(0) < 0);
    CHECK(map.value(1) == 0.0);
    CHECK(map.value(4) == map.value(5));
    CHECK(std::isinf(map.value(6)));
    CHECK_THROWS_AS(map.value(7), ReindexError);
    for (index_t i = 1; i < map.size(); ++i) CHECK(map.value(i) <= map.value(i + 1));
  }

  TEST_CASE("natural indices agree with the explicit stream") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto d = pairwise_distances(fixtures::uniform_square(4 + seed % 6, seed));
      for (int maxdim : {0, 1, 2}) {
        const double thr = seed % 2 ? kInfinity : enclosing_radius(d);
        CHECK(natural_reindex_map(d, maxdim, thr) == reindex_map_from_stream(simplexwise_stream(d, maxdim, thr), d));
      }
    }
  }
}

TEST_SUITE("union problems") {
  TEST_CASE("two copies of one point") {
    const auto p = PointCloud::from_points({{1.0, 1.0}});
    const auto u = build_union_problem(p, p);
    CHECK(u.d_z.size() == 2);
    CHECK(u.d_z(0, 1) == 0.0);
    CHECK(u.d_xp.masked(0, 1));
    CHECK(u.d_xp.masked(1, 1));
    CHECK(!u.d_xp.present(1));
    CHECK(u.d_xp.present(0));
  }

  TEST_CASE("3-4-5") {
    const auto u = build_union_problem(PointCloud::from_points({{0.0, 0.0}}), PointCloud::from_points({{3.0, 4.0}}));
    CHECK(u.d_z(0, 1) == 5.0);
    CHECK(u.sentinel > 5.0);
    CHECK(u.d_xp(0, 1) == u.sentinel);
  }

  TEST_CASE("offset squares: restrictions match recomputation") {
    const auto x = fixtures::unit_square();
    const auto y = PointCloud::from_points({{0.2, 0}, {1.2, 0}, {1.2, 1}, {0.2, 1}});
    const auto u = build_union_problem(x, y);
    const auto dx = pairwise_distances(x), dy = pairwise_distances(y);
    const auto dz = pairwise_distances(concatenate(x, y));
    CHECK(u.d_z == dz);
    CHECK(u.sentinel > enclosing_diameter(dz));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        CHECK(u.d_xp(i, j) >= u.d_z(i, j));
        CHECK(u.d_yp(i, j) >= u.d_z(i, j));
        if (i < 4 && j < 4) {
          CHECK(u.d_xp(i, j) == dx(i, j));
          CHECK(!u.d_xp.masked(i, j));
        }
        if (i >= 4 && j >= 4) CHECK(u.d_yp(i, j) == dy(i - 4, j - 4));
        if ((i < 4) != (j < 4)) {
          CHECK(u.d_xp.masked(i, j));
          CHECK(u.d_yp.masked(i, j));
        }
      }
  }

  TEST_CASE("sub-cloud order is compatible with its own order") {
    const auto x = fixtures::uniform_square(5, 21), y = fixtures::uniform_square(4, 22);
    const auto u = build_union_problem(x, y);
    const auto own = simplexwise_stream(pairwise_distances(x), 2, kInfinity);
    const auto in_union = simplexwise_stream(u.d_xp, 2, kInfinity);
    CHECK(own == in_union);
    std::vector<SimplexKey> restricted;
    for (const auto& key : simplexwise_stream(u.d_z, 2, kInfinity)) {
      const auto v = cns_decode(key, 9);
      if (v.back() < 5) restricted.push_back(key);
    }
    CHECK(restricted == own);
  }

  TEST_CASE("empty clouds and mismatched dimensions") {
    CHECK_THROWS_AS(build_union_problem(PointCloud(), fixtures::unit_square()), EmptyInputError);
    CHECK_THROWS_AS(build_union_problem(PointCloud::from_points({{0.0}}), fixtures::unit_square()),
                    DimensionMismatchError);
  }
}

TEST_SUITE("file formats") {
  TEST_CASE("point clouds with comments and mixed separators") {
    std::istringstream in("# header\n0, 0\n1 0\n\n0.5,\t2\n");
    const auto c = read_point_cloud(in);
    CHECK(c.size() == 3);
    CHECK(c.point(2)[1] == 2.0);
  }

  TEST_CASE("parse errors name line and column") {
    std::istringstream in("0 0\n1 zz\n");
    try {
      read_point_cloud(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
    std::istringstream ragged("0 0\n1\n");
    CHECK_THROWS_AS(read_point_cloud(ragged), DimensionMismatchError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_point_cloud(empty), EmptyInputError);
  }

  TEST_CASE("lower distance round trip") {
    const auto d = pairwise_distances(fixtures::uniform_square(6, 4));
    std::stringstream s;
    write_lower_distance(s, d);
    CHECK(read_lower_distance(s) == d);
    std::istringstream with_blank_first("\n1\n2,3\n");
    const auto m = read_lower_distance(with_blank_first);
    CHECK(m.size() == 3);
    CHECK(m(2, 1) == 3.0);
    std::istringstream bad_count("1\n2\n");
    CHECK_THROWS_AS(read_lower_distance(bad_count), InputError);
  }

  TEST_CASE("point cloud round trip") {
    const auto c = fixtures::uniform_cube(5, 3, 8);
    std::stringstream s;
    write_point_cloud(s, c);
    CHECK(read_point_cloud(s) == c);
  }
}
