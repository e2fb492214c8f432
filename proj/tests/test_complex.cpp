#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "zigzag/complex.hpp"
#include "zigzag/error.hpp"

using namespace zigzag;
using fixtures::kind_of;

namespace {

Face labels_face(const ThinChamberComplex& c, std::vector<std::string> tokens) {
  auto f = c.complex().face_from_labels(tokens);
  REQUIRE(f.has_value());
  return *f;
}

std::vector<std::vector<std::string>> cross_facets(int n) {
  std::vector<std::vector<std::string>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<std::string> f;
    for (int i = 0; i < n; ++i) f.push_back(std::string((mask >> i) & 1 ? "-" : "") + std::to_string(i + 1));
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("build_complex interns labels and rejects malformed facet lists") {
  const Complex tri = Complex::build({{"1", "2"}, {"2", "3"}, {"3", "1"}});
  CHECK(tri.rank() == 2);
  CHECK(tri.num_facets() == 3);
  CHECK(tri.num_vertices() == 3);
  CHECK(tri.label(0) == "1");
  CHECK(tri.label(2) == "3");

  CHECK(kind_of([] { Complex::build({{"1", "2", "3"}, {"1", "2"}}); }) == ErrorKind::NotPure);
  CHECK(kind_of([] { Complex::build({{"1", "2"}, {"2", "1"}}); }) == ErrorKind::DuplicateFacet);
  CHECK(kind_of([] { Complex::build({{"1", "1"}}); }) == ErrorKind::DuplicateVertexInFacet);
  CHECK(kind_of([] { Complex::build({}); }) == ErrorKind::EmptyInput);

  const Complex b3 = Complex::build(cross_facets(3));
  CHECK(b3.rank() == 3);
  CHECK(b3.num_facets() == 8);
}

TEST_CASE("thin chamber validation") {
  CHECK(simplex(3).rank() == 3);
  CHECK(kind_of([] {
          ThinChamberComplex::validate(Complex::build({{"1", "2"}, {"2", "3"}, {"3", "1"}, {"4", "5"}, {"5", "6"}, {"6", "4"}}));
        }) == ErrorKind::NotChamber);
  try {
    ThinChamberComplex::validate(Complex::build({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "2", "5"}}));
    FAIL("expected NotThin");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotThin);
    CHECK(std::string(e.what()).find("{1,2}x3") != std::string::npos);
  }
  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    std::size_t ridges = 0;
    for (const auto& [ridge, pair] : c.ridge_index()) {
      CHECK(pair.first != pair.second);
      CHECK(static_cast<int>(ridge.size()) == c.rank() - 1);
      ++ridges;
    }
    CHECK(ridges * 2 == c.num_facets() * static_cast<std::size_t>(c.rank()));
  }
}

TEST_CASE("adjacency graphs") {
  const auto j42 = adjacency_graph(simplex(3), 1);
  CHECK(j42.nodes.size() == 6);
  for (const auto& adj : j42.adjacent) CHECK(adj.size() == 4);

  const auto cube = adjacency_graph(cross_polytope(3), 2);
  CHECK(cube.nodes.size() == 8);
  CHECK(cube.edge_count() == 12);

  const auto b2 = cross_polytope(2);
  const auto square = adjacency_graph(b2, 0);
  CHECK(square.nodes.size() == 4);
  CHECK(square.edge_count() == 4);
  for (const auto& adj : square.adjacent) CHECK(adj.size() == 2);
  const auto v1 = labels_face(b2, {"1"});
  const auto vm1 = labels_face(b2, {"-1"});
  CHECK(path_distance(square, v1, vm1) == 2);

  CHECK(kind_of([&] { adjacency_graph(b2, 2); }) == ErrorKind::LevelOutOfRange);
  CHECK(kind_of([&] { adjacency_graph(b2, -1); }) == ErrorKind::LevelOutOfRange);

  // Connectivity cascade: every Gamma_k of a chamber complex is connected.
  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    for (int k = 0; k < c.rank(); ++k) CHECK(adjacency_graph(c, k).connected());
  }
}

TEST_CASE("path distance") {
  const auto b3 = cross_polytope(3);
  const auto g = adjacency_graph(b3, 2);
  CHECK(path_distance(g, labels_face(b3, {"1", "2", "3"}), labels_face(b3, {"-1", "-2", "-3"})) == 3);
  CHECK(path_distance(g, labels_face(b3, {"1", "2", "3"}), labels_face(b3, {"1", "2", "3"})) == 0);
  CHECK(kind_of([&] { path_distance(g, labels_face(b3, {"1", "2"}), labels_face(b3, {"1", "2", "3"})); }) ==
        ErrorKind::FaceNotInGraph);

  const auto bp = bipyramid(6);
  const auto gb = adjacency_graph(bp, 2);
  CHECK(path_distance(gb, labels_face(bp, {"a", "1", "2"}), labels_face(bp, {"a", "4", "5"})) == 3);

  // d(X, Y) >= n - |X cap Y| for every pair of facets.
  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    const auto gf = adjacency_graph(c, c.rank() - 1);
    for (std::uint32_t x = 0; x < gf.nodes.size(); ++x) {
      const auto d = bfs_distances(gf, x);
      for (std::uint32_t y = 0; y < gf.nodes.size(); ++y) {
        const auto common = face_intersection(gf.nodes[x], gf.nodes[y]).size();
        CHECK(d[y] >= c.rank() - static_cast<int>(common));
      }
    }
  }
}

TEST_CASE("joins") {
  const auto j11 = join(simplex(1), simplex(1));
  CHECK(j11.rank() == 2);
  CHECK(fixtures::isomorphic(j11.complex(), cross_polytope(2).complex()));
  const auto j12 = join(simplex(1), simplex(2));
  CHECK(j12.rank() == 3);
  CHECK(j12.num_facets() == 3 * 2);
  CHECK(join(cross_polytope(2), simplex(3)).rank() == 5);
}

TEST_CASE("built-in complexes") {
  CHECK(simplex(3).num_facets() == 4);
  CHECK(cross_polytope(4).num_facets() == 16);
  CHECK(bipyramid(6).num_facets() == 12);
  CHECK(bipyramid(6).rank() == 3);
  CHECK(kind_of([] { simplex(0); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { bipyramid(2); }) == ErrorKind::ParameterOutOfRange);
  CHECK(cross_polytope(3).complex() == ThinChamberComplex::validate(Complex::build(cross_facets(3))).complex());
}

TEST_CASE("neighborliness and Fact 1") {
  for (int n = 1; n <= 6; ++n) CHECK(is_k_neighborly(simplex(n), n));
  CHECK_FALSE(is_k_neighborly(cross_polytope(3), 2));
  CHECK(is_k_neighborly(cross_polytope(3), 1));
  const auto j = join(simplex(2), simplex(3));
  CHECK(is_k_neighborly(j, 2));
  CHECK_FALSE(is_k_neighborly(j, 3));

  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    for (int k = c.rank() / 2 + 1; k <= c.rank(); ++k)
      if (is_k_neighborly(c, k)) CHECK(is_simplex(c));
  }
}

TEST_CASE(".cplx round trip") {
  const std::string text = "# octahedron\n1 2 3\n1 2 -3 # trailing\n\n1 -2 3\n1 -2 -3\n-1 2 3\n-1 2 -3\n-1 -2 3\n-1 -2 -3\n";
  const Complex c = parse_cplx(text);
  CHECK(c.num_facets() == 8);
  const std::string once = write_cplx(c);
  CHECK(write_cplx(parse_cplx(once)) == once);
  CHECK(parse_cplx(once).rank() == 3);

  for (const auto& [name, fx] : fixtures::corpus()) {
    CAPTURE(name);
    const std::string w = write_cplx(fx.complex());
    CHECK(write_cplx(parse_cplx(w)) == w);
    CHECK(canonical_form(parse_cplx(w)) == parse_cplx(w));
    CHECK(write_cplx(canonical_form(fx.complex())) == w);
  }

  try {
    parse_cplx("1 2 3\n\n1 2\n");
    FAIL("expected NotPure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPure);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(kind_of([] { parse_cplx("# nothing\n\n"); }) == ErrorKind::EmptyInput);
}
