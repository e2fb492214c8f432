#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "zigzag/complex.hpp"
#include "zigzag/coxeter.hpp"
#include "zigzag/error.hpp"
#include "zigzag/polytope.hpp"

namespace fixtures {

struct Named {
  std::string name;
  zigzag::ThinChamberComplex complex;
};

// The non-deep corpus shared by the unit tests and the acceptance run.
inline std::vector<Named> corpus() {
  using namespace zigzag;
  std::vector<Named> out;
  for (int n = 1; n <= 5; ++n) out.push_back({"simplex:" + std::to_string(n), simplex(n)});
  for (int n = 2; n <= 5; ++n) out.push_back({"cross:" + std::to_string(n), cross_polytope(n)});
  for (int m = 3; m <= 7; ++m) out.push_back({"bipyramid:" + std::to_string(m), bipyramid(m)});
  out.push_back({"simplex:1*simplex:1", join(simplex(1), simplex(1))});
  out.push_back({"simplex:1*simplex:2", join(simplex(1), simplex(2))});
  out.push_back({"simplex:2*simplex:2", join(simplex(2), simplex(2))});
  out.push_back({"simplex:2*simplex:3", join(simplex(2), simplex(3))});
  for (const char* t : {"A2", "A3", "B3", "H3", "I2(5)", "I2(8)", "A4", "D4"})
    out.push_back({std::string("coxeter:") + t, coxeter_complex(CoxeterMatrix::named(t))});
  out.push_back({"flag:cube:3", flag_complex(polytope_by_name("cube:3"))});
  return out;
}

inline zigzag::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const zigzag::Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected an error");
}

// Label-blind isomorphism by trying every vertex bijection; small inputs only.
inline bool isomorphic(const zigzag::Complex& a, const zigzag::Complex& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_facets() != b.num_facets() || a.rank() != b.rank()) return false;
  std::vector<zigzag::VertexId> map(a.num_vertices());
  std::iota(map.begin(), map.end(), 0);
  do {
    bool ok = true;
    for (std::size_t f = 0; f < a.num_facets() && ok; ++f) {
      std::vector<zigzag::VertexId> img;
      for (auto v : a.facet(f)) img.push_back(map[static_cast<std::size_t>(v)]);
      std::sort(img.begin(), img.end());
      ok = b.find_facet(img).has_value();
    }
    if (ok) return true;
  } while (std::next_permutation(map.begin(), map.end()));
  return false;
}

}  // namespace fixtures
