#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zigzag/geodesic.hpp"

using namespace zigzag;
using fixtures::kind_of;

namespace {

std::size_t facet(const ThinChamberComplex& c, std::vector<std::string> labels) {
  return facet_from_labels(c, labels);
}

Face face(const ThinChamberComplex& c, std::vector<std::string> labels) {
  auto f = c.complex().face_from_labels(labels);
  REQUIRE(f.has_value());
  return *f;
}

std::vector<oracle::Seq> path_facets(const ThinChamberComplex& c, const std::vector<std::size_t>& path) {
  std::vector<oracle::Seq> out;
  for (auto f : path) out.emplace_back(c.facet(f).begin(), c.facet(f).end());
  return out;
}

struct Named {
  std::string name;
  ThinChamberComplex c;
};

std::vector<Named> geodesic_fixtures() {
  return {{"simplex:3", simplex(3)},
          {"simplex:4", simplex(4)},
          {"cross:3", cross_polytope(3)},
          {"cross:4", cross_polytope(4)},
          {"coxeter:A3", coxeter_complex(CoxeterMatrix::named("A3"))},
          {"coxeter:A2", coxeter_complex(CoxeterMatrix::named("A2"))},
          {"bipyramid:6", bipyramid(6)}};
}

// k-faces along the 0-shadow: every window of k+1 consecutive vertices.
std::vector<std::set<oracle::Seq>> face_windows(const ThinChamberComplex& c, int k) {
  std::vector<std::set<oracle::Seq>> out;
  for (const auto& z : oracle::brute_zigzags(c).zero_shadows) {
    const auto w = oracle::window_facets(z, static_cast<std::size_t>(k + 1));
    out.emplace_back(w.begin(), w.end());
  }
  return out;
}

}  // namespace

TEST_CASE("distance normal pairs") {
  for (const auto& [name, c] : geodesic_fixtures()) {
    CAPTURE(name);
    for (std::size_t x = 0; x < c.num_facets(); ++x) {
      const auto dx = facet_distances(c, x);
      for (std::size_t y = 0; y < c.num_facets(); ++y) {
        const auto v = is_distance_normal_pair(c, x, y);
        CHECK(v.distance == dx[y]);
        if (dx[y] <= 2) CHECK(v.pair_normal);
        // Normal iff some geodesic is normal on every window.
        bool brute = false;
        for (const auto& g : oracle::all_geodesics(c, x, y)) brute |= oracle::windowed_normal(c, g);
        CHECK(v.pair_normal == brute);
        if (v.witness) {
          CHECK(v.witness->facets.front() == x);
          CHECK(v.witness->facets.back() == y);
          CHECK(is_distance_normal_geodesic(c, *v.witness));
        }
      }
    }
  }

  const auto b3 = cross_polytope(3);
  const auto anti = is_distance_normal_pair(b3, facet(b3, {"1", "2", "3"}), facet(b3, {"-1", "-2", "-3"}));
  CHECK(anti.distance == 3);
  CHECK(anti.pair_normal);

  // In the hexagon the distance exceeds the rank, and the windowed condition holds.
  const auto cc2 = CoxeterComplex::build(CoxeterMatrix::named("A2"));
  const int lw[] = {0, 1, 0};
  const Element longest2 = cc2.group().from_word(lw);
  const auto a2 = is_distance_normal_pair(cc2.complex(), GroupTable::identity(), longest2);
  CHECK(a2.distance == 3);
  CHECK(a2.common_vertices == 0);
  CHECK(a2.pair_normal);

  // Rank 3: s1 s2 s1 is at distance 3 yet shares a vertex with e.
  const auto cc3 = CoxeterComplex::build(CoxeterMatrix::named("A3"));
  const auto a3 = is_distance_normal_pair(cc3.complex(), GroupTable::identity(), cc3.group().from_word(lw));
  CHECK(a3.distance == 3);
  CHECK(a3.common_vertices == 1);
  CHECK_FALSE(a3.pair_normal);
  CHECK_FALSE(a3.witness.has_value());

  // Bipyramid: d = 3 > n - |X cap Y| = 2.
  const auto bp = bipyramid(6);
  CHECK_FALSE(is_distance_normal_pair(bp, facet(bp, {"a", "1", "2"}), facet(bp, {"a", "4", "5"})).pair_normal);
}

TEST_CASE("distance normal geodesics") {
  const auto b3 = cross_polytope(3);
  const FacetPath edge{{facet(b3, {"1", "2", "3"}), facet(b3, {"1", "2", "-3"})}};
  CHECK(is_distance_normal_geodesic(b3, edge));
  const FacetPath anti{{facet(b3, {"1", "2", "3"}), facet(b3, {"1", "2", "-3"}), facet(b3, {"1", "-2", "-3"}),
                        facet(b3, {"-1", "-2", "-3"})}};
  CHECK(is_geodesic(b3, anti));
  CHECK(is_distance_normal_geodesic(b3, anti));
  const FacetPath broken{{facet(b3, {"1", "2", "3"}), facet(b3, {"-1", "-2", "-3"})}};
  CHECK(kind_of([&] { is_geodesic(b3, broken); }) == ErrorKind::NotAPath);
  const FacetPath back{{facet(b3, {"1", "2", "3"}), facet(b3, {"1", "2", "-3"}), facet(b3, {"1", "2", "3"})}};
  CHECK_FALSE(is_geodesic(b3, back));

  const auto cc = CoxeterComplex::build(CoxeterMatrix::named("A2"));
  const auto& g = cc.group();
  const int w1[] = {0}, w12[] = {0, 1}, w121[] = {0, 1, 0};
  const FacetPath hex{{GroupTable::identity(), g.from_word(w1), g.from_word(w12), g.from_word(w121)}};
  CHECK(is_geodesic(cc.complex(), hex));
  CHECK(is_distance_normal_geodesic(cc.complex(), hex));
  CHECK(zigzags_through_geodesic(cc.complex(), hex).size() == 1);
}

TEST_CASE("zigzags through distance normal geodesics agree with a shadow scan") {
  for (const auto& [name, c] : geodesic_fixtures()) {
    CAPTURE(name);
    const int n = c.rank();
    const auto brute = oracle::brute_zigzags(c);
    std::vector<std::vector<oracle::Seq>> shadows;
    for (const auto& z : brute.zero_shadows) shadows.push_back(oracle::window_facets(z, static_cast<std::size_t>(n)));
    const auto inv = enumerate_zigzags(c);
    std::size_t normal_geodesics = 0;
    for (std::size_t x = 0; x < c.num_facets(); ++x)
      for (std::size_t y = 0; y < c.num_facets(); ++y)
        for (const auto& g : oracle::all_geodesics(c, x, y)) {
          const FacetPath path{g};
          const bool normal = oracle::windowed_normal(c, g);
          CHECK(is_distance_normal_geodesic(c, path) == normal);
          if (!normal) {
            CHECK(kind_of([&] { zigzags_through_geodesic(c, path); }) == ErrorKind::NotDistanceNormal);
            continue;
          }
          ++normal_geodesics;
          const auto found = zigzags_through_geodesic(c, path);
          std::set<std::size_t> expected;
          for (std::size_t i = 0; i < shadows.size(); ++i)
            if (oracle::cyclic_contains(shadows[i], path_facets(c, g))) expected.insert(i);
          std::set<std::size_t> got;
          for (const auto& z : found) {
            const auto it = std::find(inv.begin(), inv.end(), z);
            REQUIRE(it != inv.end());
            got.insert(static_cast<std::size_t>(it - inv.begin()));
            CHECK(shadow_contains(c, z, path));
          }
          CHECK(got == expected);
          const std::size_t m = path.length();
          if (m <= static_cast<std::size_t>(n)) {
            std::size_t bound = 1;
            for (std::size_t k = 2; k <= static_cast<std::size_t>(n) - m; ++k) bound *= k;
            CHECK(found.size() <= bound);
            CHECK(!found.empty());
          } else {
            CHECK(found.size() == 1);
          }
        }
    CHECK(normal_geodesics > 0);
  }
}

TEST_CASE("geodesics inside facet shadows of z-simple complexes are distance normal") {
  std::vector<Named> list{{"simplex:3", simplex(3)},
                          {"simplex:4", simplex(4)},
                          {"cross:3", cross_polytope(3)},
                          {"cross:4", cross_polytope(4)},
                          {"coxeter:A3", coxeter_complex(CoxeterMatrix::named("A3"))},
                          {"coxeter:B3", coxeter_complex(CoxeterMatrix::named("B3"))},
                          {"coxeter:H3", coxeter_complex(CoxeterMatrix::named("H3"))}};
  for (const auto& [name, c] : list) {
    CAPTURE(name);
    REQUIRE(zigzag_predicates(c).z_simple);
    for (const auto& z : enumerate_zigzags(c)) {
      const auto fs = facet_shadow(c, z);
      const std::size_t l = fs.size();
      for (std::size_t start = 0; start < l; ++start)
        for (std::size_t len = 1; len < l; ++len) {
          FacetPath p;
          for (std::size_t k = 0; k <= len; ++k) p.facets.push_back(fs[(start + k) % l]);
          if (facet_distance(c, p.facets.front(), p.facets.back()) != static_cast<int>(len)) break;
          CHECK(is_distance_normal_geodesic(c, p));
        }
    }
  }
}

TEST_CASE("z-connectedness") {
  for (int n = 2; n <= 4; ++n) {
    const auto a = simplex(n);
    const auto inv = enumerate_zigzags(a);
    for (int k = 0; k < n; ++k) CHECK(ZConnectivity(a, inv, k).all_connected());
  }

  const auto b3 = cross_polytope(3);
  CHECK_FALSE(are_z_connected(b3, face(b3, {"1", "2"}), face(b3, {"1", "-2"})));
  CHECK(are_z_connected(b3, face(b3, {"1", "2"}), face(b3, {"2", "3"})));
  CHECK(kind_of([&] { are_z_connected(b3, face(b3, {"1", "2"}), Face{0, 3}); }) == ErrorKind::FaceNotInComplex);

  for (int n = 3; n <= 5; ++n) {
    const auto b = cross_polytope(n);
    const auto inv = enumerate_zigzags(b);
    for (int k = 1; k < n - 1; ++k) {
      std::vector<std::string> x, y;
      for (int i = 1; i <= k; ++i) {
        x.push_back(std::to_string(i));
        y.push_back(std::to_string(i));
      }
      x.push_back(std::to_string(k + 1));
      y.push_back("-" + std::to_string(k + 1));
      CAPTURE(n);
      CAPTURE(k);
      CHECK_FALSE(are_z_connected(b, inv, face(b, x), face(b, y)));
    }
  }

  // Full matrices against the window scan.
  for (const auto& [name, c] : geodesic_fixtures()) {
    CAPTURE(name);
    const auto inv = enumerate_zigzags(c);
    for (int k = 0; k < c.rank(); ++k) {
      const ZConnectivity zc(c, inv, k);
      const auto windows = face_windows(c, k);
      const auto& faces = zc.faces();
      for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = 0; j < faces.size(); ++j) {
          if (i == j) continue;
          bool brute = false;
          for (const auto& w : windows) brute |= w.count(faces[i]) && w.count(faces[j]);
          CHECK(zc.connected(i, j) == brute);
        }
    }
  }
}

TEST_CASE("weak adjacency") {
  const auto b3 = cross_polytope(3);
  CHECK(weakly_adjacent(b3, face(b3, {"1", "2"}), face(b3, {"1", "-2"})));
  CHECK_FALSE(weakly_adjacent(b3, face(b3, {"1", "2"}), face(b3, {"1", "3"})));
  const auto a3 = simplex(3);
  CHECK_FALSE(weakly_adjacent(a3, face(a3, {"1", "2"}), face(a3, {"1", "3"})));
  const auto b4 = cross_polytope(4);
  CHECK_FALSE(weakly_adjacent(b4, face(b4, {"1", "2"}), face(b4, {"3", "4"})));
  CHECK(kind_of([&] { weakly_adjacent(b4, face(b4, {"1", "2"}), face(b4, {"1", "2", "3"})); }) ==
        ErrorKind::RankMismatch);
  CHECK(kind_of([&] { weakly_adjacent(b4, face(b4, {"1"}), face(b4, {"2"})); }) == ErrorKind::RankOutOfRange);
}

TEST_CASE("weak adjacency and neighborliness reports") {
  const auto b4 = section_4_3_report(cross_polytope(4));
  CHECK(b4.z_simple);
  CHECK(b4.weak_pairs == std::vector<std::size_t>{24, 48});
  CHECK(b4.rank_fully_connected == std::vector<bool>{false, false});

  const auto a5 = section_4_3_report(simplex(5));
  CHECK(a5.neighborly == 5);
  CHECK(a5.simplex_forced);
  CHECK(a5.largest_connected_k == 3);

  const auto bp = section_4_3_report(bipyramid(6));
  CHECK_FALSE(bp.z_simple);

  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    CHECK_NOTHROW(section_4_3_report(c));
  }
}

TEST_CASE("normal pairs in Coxeter complexes are reduced words with distinct letters") {
  for (const char* name : {"A3", "B3", "H3", "A4"}) {
    CAPTURE(name);
    const auto cc = CoxeterComplex::build(CoxeterMatrix::named(name));
    const auto& g = cc.group();
    for (Element w = 0; w < g.size(); ++w)
      for (Element v = 0; v < g.size(); ++v) {
        const Element u = g.multiply(g.inverse(w), v);
        if (g.length(u) > g.rank()) continue;
        const bool normal = is_distance_normal_pair(cc.complex(), w, v).pair_normal;
        CHECK(normal == oracle::has_distinct_letter_reduced_word(g, u));
      }
  }
}
