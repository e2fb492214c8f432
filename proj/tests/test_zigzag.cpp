#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zigzag/zigzag.hpp"

using namespace zigzag;
using fixtures::kind_of;

namespace {

std::vector<VertexId> ids(const ThinChamberComplex& c, std::initializer_list<const char*> labels) {
  std::vector<VertexId> out;
  for (const char* l : labels) {
    auto v = c.complex().find_vertex(l);
    REQUIRE(v.has_value());
    out.push_back(*v);
  }
  return out;
}

Flag flag_of(const ThinChamberComplex& c, std::initializer_list<const char*> labels) {
  return make_flag(c, ids(c, labels));
}

std::vector<Flag> all_flags(const ThinChamberComplex& c) {
  std::vector<Flag> out;
  for (std::size_t f = 0; f < c.num_facets(); ++f) {
    std::vector<VertexId> p(c.facet(f).begin(), c.facet(f).end());
    do out.push_back(Flag{p});
    while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

std::vector<VertexId> rotate_to_least(std::vector<VertexId> s) {
  return oracle::least_cyclic(s);
}

}  // namespace

TEST_CASE("sigma, T and R on small examples") {
  const auto a3 = simplex(3);
  CHECK(sigma(a3, flag_of(a3, {"1", "2", "3"}), 0) == flag_of(a3, {"2", "1", "3"}));
  CHECK(sigma(a3, flag_of(a3, {"1", "2", "3"}), 2) == flag_of(a3, {"1", "2", "4"}));
  CHECK(kind_of([&] { sigma(a3, flag_of(a3, {"1", "2", "3"}), 3); }) == ErrorKind::LevelOutOfRange);
  CHECK(t_step(a3, flag_of(a3, {"1", "2", "3"})) == flag_of(a3, {"2", "3", "4"}));
  const auto b2 = cross_polytope(2);
  CHECK(t_step(b2, flag_of(b2, {"1", "2"})) == flag_of(b2, {"2", "-1"}));
  CHECK(reverse_flag(flag_of(a3, {"1", "2", "3"})) == flag_of(a3, {"3", "2", "1"}));
  CHECK(kind_of([&] { make_flag(a3, ids(a3, {"1", "1", "2"})); }) == ErrorKind::NotAFlag);
  CHECK(kind_of([&] { make_flag(cross_polytope(3), ids(cross_polytope(3), {"1", "-1", "2"})); }) ==
        ErrorKind::NotAFlag);
}

TEST_CASE("flag operators agree with their definitions on every fixture flag") {
  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    const auto facets = oracle::facet_set(c);
    const int n = c.rank();
    for (const Flag& f : all_flags(c)) {
      const Flag t = t_step(c, f);
      CHECK(t.vertices == oracle::brute_t(facets, f.vertices));
      Flag composed = f;
      for (int i = 0; i < n; ++i) composed = sigma(c, composed, i);
      CHECK(composed == t);
      for (int i = 0; i < n; ++i) {
        const Flag s = sigma(c, f, i);
        CHECK(s.vertices == oracle::brute_sigma(facets, f.vertices, static_cast<std::size_t>(i)));
        CHECK(sigma(c, s, i) == f);
      }
      const Flag r = reverse_flag(f);
      CHECK(reverse_flag(r) == f);
      CHECK(t_step(c, reverse_flag(t)) == r);  // TRT = R
    }
  }
}

TEST_CASE("zigzags of the simplex and cross polytope") {
  const auto a3 = simplex(3);
  const auto b3 = cross_polytope(3);
  CHECK(zigzag_from_flag(a3, flag_of(a3, {"1", "2", "3"})).length() == 4);
  const Zigzag z = zigzag_from_flag(b3, flag_of(b3, {"1", "2", "3"}));
  CHECK(z.length() == 6);
  CHECK(z.zero_shadow() == ids(b3, {"1", "2", "3", "-1", "-2", "-3"}));
  CHECK(z.simple());

  const Shadow s0 = shadow(zigzag_from_flag(a3, flag_of(a3, {"1", "2", "3"})), 0);
  std::vector<VertexId> seq;
  for (const Face& f : s0.faces) seq.push_back(f[0]);
  CHECK(rotate_to_least(seq) == rotate_to_least(ids(a3, {"1", "2", "3", "4"})));
  CHECK(kind_of([&] { shadow(z, 3); }) == ErrorKind::LevelOutOfRange);

  // Consecutive facets of the top shadow are adjacent.
  const Shadow top = shadow(z, 2);
  for (std::size_t i = 0; i < top.faces.size(); ++i) {
    const auto& a = top.faces[i];
    const auto& b = top.faces[(i + 1) % top.faces.size()];
    CHECK(face_intersection(a, b).size() == 2);
  }
}

TEST_CASE("reconstruction from shadows") {
  const auto b2 = cross_polytope(2);
  Shadow s{0, {}};
  for (auto v : ids(b2, {"1", "2", "-1", "-2"})) s.faces.push_back(Face{v});
  const Zigzag z = reconstruct_from_shadow(b2, s);
  CHECK(z.length() == 4);
  const auto flags = z.flags();
  std::set<Flag> got(flags.begin(), flags.end());
  const std::set<Flag> orbit{flag_of(b2, {"1", "2"}), flag_of(b2, {"2", "-1"}), flag_of(b2, {"-1", "-2"}),
                             flag_of(b2, {"-2", "1"})};
  const std::set<Flag> reversed{flag_of(b2, {"2", "1"}), flag_of(b2, {"-1", "2"}), flag_of(b2, {"-2", "-1"}),
                                flag_of(b2, {"1", "-2"})};
  CHECK((got == orbit || got == reversed));

  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    for (const Zigzag& zz : enumerate_zigzags(c))
      for (int k = 0; k < c.rank(); ++k) CHECK(reconstruct_from_shadow(c, shadow(zz, k)) == zz);
  }

  const auto b3 = cross_polytope(3);
  const Zigzag zb = zigzag_from_flag(b3, flag_of(b3, {"1", "2", "3"}));
  for (int k = 0; k < 3; ++k) {
    Shadow bad = shadow(zb, k);
    for (std::size_t i = 0; i < bad.faces.size(); ++i) {
      Shadow corrupt = bad;
      // Swap in the antipodal face, which is a face but breaks the union rule.
      for (auto& v : corrupt.faces[i]) {
        const std::string l = b3.complex().label(v);
        v = *b3.complex().find_vertex(l[0] == '-' ? l.substr(1) : "-" + l);
      }
      std::sort(corrupt.faces[i].begin(), corrupt.faces[i].end());
      CAPTURE(k);
      CAPTURE(i);
      CHECK(kind_of([&] { reconstruct_from_shadow(b3, corrupt); }) == ErrorKind::NotAShadow);
    }
  }
}

TEST_CASE("zigzags from vertex sequences") {
  const auto b3 = cross_polytope(3);
  CHECK(zigzag_from_vertex_sequence(b3, ids(b3, {"1", "2", "3", "-1", "-2", "-3"})).length() == 6);
  const auto a3 = simplex(3);
  CHECK(kind_of([&] { zigzag_from_vertex_sequence(a3, ids(a3, {"1", "2", "3", "3"})); }) == ErrorKind::Z1Violation);
  const auto b2 = cross_polytope(2);
  CHECK(kind_of([&] { zigzag_from_vertex_sequence(b2, ids(b2, {"1", "2", "1", "2"})); }) == ErrorKind::Z2Violation);
}

TEST_CASE("enumeration matches a brute-force orbit scan") {
  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    const auto inv = enumerate_zigzags(c);
    const auto brute = oracle::brute_zigzags(c);
    REQUIRE(inv.size() == brute.zero_shadows.size());
    for (std::size_t i = 0; i < inv.size(); ++i) CHECK(inv[i].zero_shadow() == brute.zero_shadows[i]);
    CHECK(brute.flags == flag_count(c));
    CHECK(brute.orbits == inv.size() * static_cast<std::size_t>(orbits_per_zigzag(c.rank())));

    std::uint64_t covered = 0;
    for (const Zigzag& z : inv) covered += static_cast<std::uint64_t>(orbits_per_zigzag(c.rank())) * z.length();
    CHECK(covered == flag_count(c));
  }
}

TEST_CASE("structure of every zigzag") {
  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    const int n = c.rank();
    for (const Zigzag& z : enumerate_zigzags(c)) {
      const auto& x = z.zero_shadow();
      const std::size_t l = x.size();
      CHECK(l > static_cast<std::size_t>(n));
      // Repeats only at cyclic distance > n.
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
          if (x[i] == x[j]) CHECK(std::min(j - i, l - (j - i)) > static_cast<std::size_t>(n));
      // Reverse-zigzag law: x_{n-1}, ..., x_1, x_l, ..., x_n.
      const auto rz = zigzag_from_flag(c, reverse_flag(z.flag(0)));
      std::vector<VertexId> expect;
      for (std::size_t k = 0; k < l; ++k) expect.push_back(x[(static_cast<std::size_t>(n) - 1 + l - k) % l]);
      const auto r_orbit = orbit_vertex_sequence(c, reverse_flag(z.flag(0)));
      CHECK(r_orbit.size() == l);
      bool rotation = false;
      for (std::size_t s = 0; s < l && !rotation; ++s) {
        bool ok = true;
        for (std::size_t k = 0; k < l && ok; ++k) ok = r_orbit[(s + k) % l] == expect[k];
        rotation = ok;
      }
      CHECK(rotation);
      CHECK(rz == z);
      if (n >= 2) {
        // The reverse orbit is a different T-orbit.
        const auto fwd = z.flags();
        CHECK(std::find(fwd.begin(), fwd.end(), reverse_flag(z.flag(0))) == fwd.end());
      }
    }
  }
}

TEST_CASE("predicates and the counting identity") {
  for (int n = 2; n <= 5; ++n) {
    const auto pa = zigzag_predicates(simplex(n));
    CHECK(pa.z_simple);
    CHECK(pa.z_uniform);
    const auto pb = zigzag_predicates(cross_polytope(n));
    CHECK(pb.z_simple);
    CHECK(pb.z_uniform);
  }
  const auto p4 = zigzag_predicates(cross_polytope(4));
  CHECK(p4.count == 24);
  CHECK(p4.common_length == 8u);
  CHECK(p4.count == 24u * 16u / (2u * 8u));
  CHECK(p4.count_formula_holds);
  CHECK(zigzag_predicates(simplex(4)).count == 12);
  CHECK(zigzag_predicates(cross_polytope(3)).count == 4);

  const auto bp = enumerate_zigzags(bipyramid(6));
  std::uint64_t sum = 0;
  for (const auto& z : bp) sum += 2 * z.length();
  CHECK(sum == 72);

  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    const auto inv = enumerate_zigzags(c);
    const auto p = zigzag_predicates(c, inv);
    if (!p.z_uniform) continue;
    const auto l = *p.common_length;
    CHECK(p.count_formula_holds);
    CHECK(p.count * orbits_per_zigzag(c.rank()) * l == p.flags);
  }
}

TEST_CASE("a zigzag of length n+1 occurs exactly in the simplex") {
  for (const auto& [name, c] : fixtures::corpus()) {
    CAPTURE(name);
    bool short_one = false;
    for (const auto& z : enumerate_zigzags(c)) short_one |= z.length() == static_cast<std::size_t>(c.rank()) + 1;
    CHECK(short_one == is_simplex(c));
  }
}

TEST_CASE("flag codec") {
  const auto c = cross_polytope(3);
  FlagCodec codec(c);
  CHECK(codec.size() == 48);
  for (std::uint64_t id = 0; id < codec.size(); ++id) {
    const Flag f = codec.decode(id);
    CHECK(codec.encode(f) == id);
    CHECK(codec.decode(codec.t_step(id)) == t_step(c, f));
    CHECK(codec.decode(codec.reverse(id)) == reverse_flag(f));
  }
}
