#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "zigzag/polytope.hpp"

using namespace zigzag;
using fixtures::kind_of;

namespace {

std::vector<std::size_t> face_vector(const AbstractPolytope& p) {
  std::vector<std::size_t> v;
  for (int k = 0; k < p.rank(); ++k) v.push_back(p.face_count(k));
  return v;
}

std::vector<int> iota_delta(int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  std::iota(d.begin(), d.end(), 0);
  return d;
}

// Faces of rank k strictly between the chain neighbours, by definition.
std::vector<FaceId> between(const AbstractPolytope& p, const PolytopeFlag& f, int k) {
  std::vector<FaceId> out;
  for (FaceId x = 0; x < p.face_count(k); ++x) {
    const bool below_ok = k == 0 || p.incident(k - 1, f.chain[static_cast<std::size_t>(k - 1)], k, x);
    const bool above_ok = k == p.rank() - 1 || p.incident(k, x, k + 1, f.chain[static_cast<std::size_t>(k + 1)]);
    if (below_ok && above_ok) out.push_back(x);
  }
  return out;
}

// Every section of rank difference 2 has exactly four faces.
bool diamond(const AbstractPolytope& p) {
  const int n = p.rank();
  for (int k = -1; k + 2 <= n; ++k)
    for (FaceId a = 0; a < p.face_count(k); ++a)
      for (FaceId b = 0; b < p.face_count(k + 2); ++b) {
        if (!p.incident(k, a, k + 2, b)) continue;
        std::size_t mid = 0;
        for (FaceId x = 0; x < p.face_count(k + 1); ++x)
          if (p.incident(k, a, k + 1, x) && p.incident(k + 1, x, k + 2, b)) ++mid;
        if (mid != 2) return false;
      }
  return true;
}

std::set<std::vector<std::string>> labelled_facets(const ThinChamberComplex& c) {
  std::set<std::vector<std::string>> out;
  for (std::size_t f = 0; f < c.num_facets(); ++f) {
    auto labels = c.complex().face_labels(c.facet(f));
    std::sort(labels.begin(), labels.end());
    out.insert(labels);
  }
  return out;
}

}  // namespace

TEST_CASE("face posets of complexes") {
  const auto a2 = polytope_from_complex(simplex(2));
  CHECK(face_vector(a2) == std::vector<std::size_t>{3, 3});
  CHECK(a2.face_count(2) == 1);
  CHECK(a2.face_count(-1) == 1);
  CHECK(face_vector(polytope_from_complex(cross_polytope(3))) == std::vector<std::size_t>{6, 12, 8});
  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    const auto p = polytope_from_complex(c);
    CHECK(p.rank() == c.rank());
    CHECK(p.flag_count() == flag_count(c));
    CHECK(diamond(p));
  }
}

TEST_CASE("flag complexes") {
  const auto hex = flag_complex(polytope_from_complex(simplex(2)));
  CHECK(hex.num_facets() == 6);
  CHECK(hex.rank() == 2);
  const auto ico = polytope_by_name("icosahedron");
  CHECK(flag_complex(ico).num_facets() == 120);
  CHECK(flag_complex(ico).rank() == 3);
  CHECK(flag_complex(polytope_by_name("24-cell")).rank() == 4);
}

TEST_CASE("sigma on polytope flags") {
  const auto sq = polytope_from_complex(cross_polytope(2));
  const PolytopeFlag f = sq.flag(0);
  const PolytopeFlag g = sigma_p(sq, f, 0);
  CHECK(g.chain[1] == f.chain[1]);
  CHECK(g.chain[0] != f.chain[0]);
  CHECK(sq.incident(0, g.chain[0], 1, g.chain[1]));
  CHECK(kind_of([&] { sigma_p(sq, f, 2); }) == ErrorKind::RankOutOfRange);
  CHECK(kind_of([&] { sigma_p(sq, PolytopeFlag{{0}}, 0); }) == ErrorKind::NotAFlag);

  const auto cube = polytope_by_name("cube:3");
  CHECK(face_vector(cube) == std::vector<std::size_t>{8, 12, 6});
  for (const auto& fl : cube.flags()) {
    const auto s = sigma_p(cube, fl, 2);
    CHECK(s.chain[0] == fl.chain[0]);
    CHECK(s.chain[1] == fl.chain[1]);
    CHECK(s.chain[2] != fl.chain[2]);
  }

  for (const char* name : {"cube:3", "icosahedron", "cross:4", "simplex:3"}) {
    CAPTURE(name);
    const auto p = polytope_by_name(name);
    for (const auto& fl : p.flags())
      for (int i = 0; i < p.rank(); ++i) {
        const auto s = sigma_p(p, fl, i);
        CHECK(sigma_p(p, s, i) == fl);
        auto choices = between(p, fl, i);
        REQUIRE(choices.size() == 2);
        const FaceId other = choices[0] == fl.chain[static_cast<std::size_t>(i)] ? choices[1] : choices[0];
        CHECK(s.chain[static_cast<std::size_t>(i)] == other);
        CHECK(p.sigma_table(i)[*p.find_flag(fl)] == *p.find_flag(s));
      }
  }
}

TEST_CASE("T_delta and generalized zigzags") {
  for (const char* name : {"cube:3", "icosahedron", "cross:4", "simplex:4"}) {
    CAPTURE(name);
    const auto p = polytope_by_name(name);
    auto delta = iota_delta(p.rank());
    do {
      const auto t = t_delta_table(p, delta);
      auto rdelta = delta;
      std::reverse(rdelta.begin(), rdelta.end());
      const auto tr = t_delta_table(p, rdelta);
      for (FlagId f = 0; f < p.flag_count(); ++f) {
        PolytopeFlag cur = p.flag(f);
        for (int d : delta) cur = sigma_p(p, cur, d);
        CHECK(t[f] == *p.find_flag(cur));
        CHECK(tr[t[f]] == f);  // the reversed operator is the inverse
      }
      // The reversed-delta orbit is the reversed orbit.
      const auto z = generalized_zigzag(p, delta, p.flag(0));
      const auto zr = generalized_zigzag(p, rdelta, p.flag(0));
      CHECK(z == zr);
    } while (std::next_permutation(delta.begin(), delta.end()));
  }

  const auto b3 = polytope_by_name("cross:3");
  CHECK(generalized_zigzag(b3, iota_delta(3), b3.flag(0)).length() == 6);
  const auto ico = polytope_by_name("icosahedron");
  auto delta = iota_delta(3);
  do {
    for (const auto& z : delta_zigzags(ico, delta)) CHECK(z.length() == 10);
  } while (std::next_permutation(delta.begin(), delta.end()));
  CHECK(kind_of([&] { t_delta_table(ico, std::vector<int>{0, 0, 1}); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("the flag-complex correspondence") {
  struct Expect {
    const char* name;
    std::size_t length, flag_length;
  };
  for (const auto& [name, l, fl] : {Expect{"icosahedron", 10, 30}, Expect{"24-cell", 12, 48},
                                    Expect{"simplex:3", 4, 12}, Expect{"cross:3", 6, 18}, Expect{"cube:3", 6, 18},
                                    Expect{"simplex:1", 2, 2}, Expect{"cross:2", 4, 8}}) {
    CAPTURE(name);
    const auto p = polytope_by_name(name);
    const auto r = prop_3_6_check(p);
    CHECK(r.lengths == std::vector<std::size_t>{l});
    CHECK(r.flag_complex_lengths == std::vector<std::size_t>{fl});
    CHECK(r.simplicity_preserved);
    REQUIRE(r.expected_count.has_value());
    CHECK(*r.expected_count == r.generalized_zigzags);
    CHECK(r.flag_complex_zigzags == r.generalized_zigzags);
  }
  // Non-regular input: the face poset of a bipyramid.
  const auto r = prop_3_6_check(polytope_from_complex(bipyramid(5)));
  CHECK(r.simplicity_preserved);
  CHECK(r.flag_complex_zigzags == r.generalized_zigzags);
}

TEST_CASE("regular polytopes from string diagrams") {
  CHECK(face_vector(regular_polytope_from_string(CoxeterMatrix::named("H3"))) == std::vector<std::size_t>{12, 30, 20});
  CHECK(face_vector(regular_polytope_from_string(CoxeterMatrix::named("H3").reversed())) ==
        std::vector<std::size_t>{20, 30, 12});
  CHECK(face_vector(regular_polytope_from_string(CoxeterMatrix::named("B3"))) == std::vector<std::size_t>{6, 12, 8});
  const auto f4 = regular_polytope_from_string(CoxeterMatrix::named("F4"));
  CHECK(f4.flag_count() == 1152);
  CHECK(face_vector(f4) == std::vector<std::size_t>{24, 96, 96, 24});
  CHECK(kind_of([] { regular_polytope_from_string(CoxeterMatrix::named("D4")); }) == ErrorKind::NotStringDiagram);
  CHECK(kind_of([] { polytope_by_name("dodecahedron-ish"); }) == ErrorKind::NotStringDiagram);
  CHECK(kind_of([] { regular_polytope_from_string(CoxeterMatrix::named("A5"), 100); }) == ErrorKind::BudgetExceeded);
  for (const char* name : {"simplex:3", "cross:4", "cube:4", "24-cell", "icosahedron"}) {
    CAPTURE(name);
    CHECK(diamond(polytope_by_name(name)));
  }
}

TEST_CASE("flag complexes of regular polytopes are Coxeter complexes") {
  std::vector<std::string> names{"A1", "A2", "A3", "A4", "B3", "B4", "H3", "F4"};
  for (int m = 3; m <= 7; ++m) names.push_back("I2(" + std::to_string(m) + ")");
  for (const auto& name : names) {
    CAPTURE(name);
    const auto m = CoxeterMatrix::named(name);
    CHECK(labelled_facets(flag_complex(regular_polytope_from_string(m))) == labelled_facets(coxeter_complex(m)));
  }
}

TEST_CASE("polytope validation") {
  // Two disjoint triangles under one greatest face: diamonds hold, strong connectivity fails.
  std::vector<std::vector<std::string>> names{{"e"}, {"1", "2", "3", "4", "5", "6"},
                                              {"a", "b", "c", "d", "f", "g"}, {"P"}};
  std::vector<Incidence> inc;
  for (FaceId v = 0; v < 6; ++v) inc.push_back({-1, 0, v});
  const FaceId edges[6][2] = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  for (FaceId e = 0; e < 6; ++e) {
    inc.push_back({0, edges[e][0], e});
    inc.push_back({0, edges[e][1], e});
    inc.push_back({1, e, 0});
  }
  CHECK(kind_of([&] { AbstractPolytope::build(2, names, inc); }) == ErrorKind::InvalidPolytope);

  // A vertex on three edges breaks the diamond.
  std::vector<std::vector<std::string>> n2{{"e"}, {"1", "2", "3", "4"}, {"a", "b", "c", "d", "x"}, {"P"}};
  std::vector<Incidence> i2;
  for (FaceId v = 0; v < 4; ++v) i2.push_back({-1, 0, v});
  const FaceId e2[5][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  for (FaceId e = 0; e < 5; ++e) {
    i2.push_back({0, e2[e][0], e});
    i2.push_back({0, e2[e][1], e});
    i2.push_back({1, e, 0});
  }
  CHECK(kind_of([&] { AbstractPolytope::build(2, n2, i2); }) == ErrorKind::InvalidPolytope);
  CHECK(kind_of([&] { AbstractPolytope::build(3, n2, i2); }) == ErrorKind::RankMismatch);
  CHECK(kind_of([&] { AbstractPolytope::build(0, n2, i2); }) == ErrorKind::RankOutOfRange);
}

TEST_CASE(".apoly round trip") {
  for (const char* name : {"icosahedron", "cross:3", "24-cell", "simplex:2"}) {
    CAPTURE(name);
    const auto p = polytope_by_name(name);
    const std::string once = write_apoly(p);
    const auto back = parse_apoly(once);
    CHECK(write_apoly(back) == once);
    CHECK(face_vector(back) == face_vector(p));
    CHECK(back.flag_count() == p.flag_count());
  }
  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    const std::string once = write_apoly(polytope_from_complex(c));
    CHECK(write_apoly(parse_apoly(once)) == once);
  }

  const char* square = R"({"rank": 2,
    "faces": [["empty"], ["a", "b", "c", "d"], [1, 2, 3, 4], ["sq"]],
    "incidence": [[-1, "empty", "a"], [-1, "empty", "b"], [-1, "empty", "c"], [-1, "empty", "d"],
                  [0, "a", 1], [0, "b", 1], [0, "b", 2], [0, "c", 2], [0, "c", 3], [0, "d", 3], [0, "d", 4], [0, "a", 4],
                  [1, 1, "sq"], [1, 2, "sq"], [1, 3, "sq"], [1, 4, "sq"]]})";
  const auto sq = parse_apoly(square);
  CHECK(sq.flag_count() == 8);
  CHECK(write_apoly(parse_apoly(write_apoly(sq))) == write_apoly(sq));

  CHECK(kind_of([] { parse_apoly("{"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_apoly(R"({"rank": 2, "faces": [[0], [0]], "incidence": []})"); }) == ErrorKind::RankMismatch);
  CHECK(kind_of([] { parse_apoly(R"({"rank": 1, "faces": [[0], [0, 0], [0]], "incidence": []})"); }) ==
        ErrorKind::InvalidPolytope);
  CHECK(kind_of([] {
          parse_apoly(R"({"rank": 1, "faces": [[0], [0, 1], [0]], "incidence": [[-1, 0, 7]]})");
        }) == ErrorKind::InvalidPolytope);
  CHECK(kind_of([] { parse_apoly(R"({"faces": []})"); }) == ErrorKind::Parse);
}
