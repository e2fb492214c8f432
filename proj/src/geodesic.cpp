#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "zigzag/error.hpp"
#include "zigzag/geodesic.hpp"

namespace zigzag {

namespace {

struct PathHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::size_t common_count(const ThinChamberComplex& c, std::size_t a, std::size_t b) {
  return face_intersection(c.facet(a), c.facet(b)).size();
}

bool adjacent_facets(const ThinChamberComplex& c, std::size_t a, std::size_t b) {
  for (int j = 0; j < c.rank(); ++j)
    if (c.neighbor(a, j) == b) return true;
  return false;
}

std::string facet_text(const ThinChamberComplex& c, std::size_t f) {
  std::string s = "{";
  for (VertexId v : c.facet(f)) s += (s.size() > 1 ? " " : "") + c.complex().label(v);
  return s + "}";
}

void check_face(const ThinChamberComplex& c, const Face& f) {
  if (f.empty() || !std::is_sorted(f.begin(), f.end()) || !c.is_face(f)) {
    std::string s;
    for (VertexId v : f) s += (s.empty() ? "" : " ") + (v >= 0 && static_cast<std::size_t>(v) < c.num_vertices() ? c.complex().label(v) : std::to_string(v));
    throw Error(ErrorKind::FaceNotInComplex, "{" + s + "} is not a face");
  }
}

// k-faces read off as consecutive windows of the 0-shadow.
std::vector<Face> window_faces(const Zigzag& z, std::size_t size) {
  std::vector<Face> out;
  const auto& seq = z.zero_shadow();
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Face f;
    for (std::size_t k = 0; k < size; ++k) f.push_back(seq[(i + k) % seq.size()]);
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool window_ok(const ThinChamberComplex& c, std::span<const std::size_t> path, std::size_t candidate) {
  const std::size_t n = static_cast<std::size_t>(c.rank());
  const std::size_t j = path.size();
  for (std::size_t i = j > n ? j - n : 0; i < j; ++i)
    if (common_count(c, path[i], candidate) != n - (j - i)) return false;
  return true;
}

}  // namespace

std::vector<int> facet_distances(const ThinChamberComplex& complex, std::size_t from) {
  std::vector<int> dist(complex.num_facets(), -1);
  std::vector<std::size_t> queue{from};
  dist[from] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto f = queue[head];
    for (int j = 0; j < complex.rank(); ++j) {
      const auto g = complex.neighbor(f, j);
      if (dist[g] < 0) {
        dist[g] = dist[f] + 1;
        queue.push_back(g);
      }
    }
  }
  return dist;
}

int facet_distance(const ThinChamberComplex& complex, std::size_t x, std::size_t y) {
  return facet_distances(complex, x)[y];
}

std::size_t facet_from_labels(const ThinChamberComplex& complex, const std::vector<std::string>& tokens) {
  const auto face = complex.complex().face_from_labels(tokens);
  std::optional<std::size_t> f;
  if (face) f = complex.complex().find_facet(*face);
  if (!f) {
    std::string s;
    for (const auto& t : tokens) s += (s.empty() ? "" : " ") + t;
    throw Error(ErrorKind::FaceNotInComplex, "{" + s + "} is not a facet");
  }
  return *f;
}

NormalityVerdict is_distance_normal_pair(const ThinChamberComplex& complex, std::size_t x, std::size_t y) {
  const int n = complex.rank();
  const auto to_y = facet_distances(complex, y);
  NormalityVerdict v;
  v.distance = to_y[x];
  v.common_vertices = common_count(complex, x, y);

  FacetPath path{{x}};
  std::unordered_set<std::vector<std::size_t>, PathHash> dead;
  const auto state = [&] {
    const std::size_t keep = std::min<std::size_t>(path.facets.size(), static_cast<std::size_t>(n));
    return std::vector<std::size_t>(path.facets.end() - static_cast<std::ptrdiff_t>(keep), path.facets.end());
  };
  const auto search = [&](auto&& self) -> bool {
    const auto cur = path.facets.back();
    if (cur == y) return true;
    for (int j = 0; j < n; ++j) {
      const auto next = complex.neighbor(cur, j);
      if (to_y[next] != to_y[cur] - 1 || !window_ok(complex, path.facets, next)) continue;
      path.facets.push_back(next);
      if (!dead.count(state()) && self(self)) return true;
      path.facets.pop_back();
    }
    dead.insert(state());
    return false;
  };

  if (v.distance <= n) {
    v.pair_normal = static_cast<std::size_t>(v.distance) == static_cast<std::size_t>(n) - v.common_vertices;
    if (v.pair_normal) {
      // Any geodesic between a normal pair at distance <= n is distance normal.
      search(search);
      v.witness = path;
      v.reason = "d = n - |X cap Y| = " + std::to_string(v.distance);
    } else {
      v.reason = "d = " + std::to_string(v.distance) + " but n - |X cap Y| = " +
                 std::to_string(static_cast<std::size_t>(n) - v.common_vertices);
    }
    return v;
  }
  v.pair_normal = search(search);
  if (v.pair_normal) {
    v.witness = path;
    v.reason = "distance normal geodesic of length " + std::to_string(v.distance) + " found";
  } else {
    v.reason = "no geodesic of length " + std::to_string(v.distance) + " keeps every window of " + std::to_string(n) +
               " facets distance normal";
  }
  return v;
}

bool is_geodesic(const ThinChamberComplex& complex, const FacetPath& path) {
  if (path.facets.empty()) throw Error(ErrorKind::NotAPath, "empty path");
  for (std::size_t f : path.facets)
    if (f >= complex.num_facets()) throw Error(ErrorKind::NotAPath, "facet index " + std::to_string(f) + " out of range");
  for (std::size_t i = 0; i + 1 < path.facets.size(); ++i)
    if (!adjacent_facets(complex, path.facets[i], path.facets[i + 1]))
      throw Error(ErrorKind::NotAPath, facet_text(complex, path.facets[i]) + " and " +
                                           facet_text(complex, path.facets[i + 1]) + " are not adjacent");
  return static_cast<std::size_t>(facet_distance(complex, path.facets.front(), path.facets.back())) == path.length();
}

bool is_distance_normal_geodesic(const ThinChamberComplex& complex, const FacetPath& path) {
  if (!is_geodesic(complex, path)) return false;
  for (std::size_t j = 1; j < path.facets.size(); ++j)
    if (!window_ok(complex, std::span(path.facets).first(j), path.facets[j])) return false;
  return true;
}

std::vector<std::size_t> facet_shadow(const ThinChamberComplex& complex, const Zigzag& zigzag) {
  const auto& seq = zigzag.zero_shadow();
  const auto n = static_cast<std::size_t>(complex.rank());
  std::vector<std::size_t> out;
  out.reserve(seq.size());
  Face window(n);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) window[k] = seq[(i + k) % seq.size()];
    std::sort(window.begin(), window.end());
    const auto f = complex.complex().find_facet(window);
    if (!f) throw Error(ErrorKind::VerificationFailure, "zigzag window is not a facet");
    out.push_back(*f);
  }
  return out;
}

bool shadow_contains(const ThinChamberComplex& complex, const Zigzag& zigzag, const FacetPath& path) {
  const auto shadow = facet_shadow(complex, zigzag);
  const std::size_t l = shadow.size();
  const auto& p = path.facets;
  for (std::size_t start = 0; start < l; ++start) {
    bool fwd = true, bwd = true;
    for (std::size_t i = 0; i < p.size() && (fwd || bwd); ++i) {
      if (shadow[(start + i) % l] != p[i]) fwd = false;
      if (shadow[(start + l - i % l) % l] != p[i]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

std::vector<Zigzag> zigzags_through_geodesic(const ThinChamberComplex& complex, const FacetPath& path) {
  if (!is_distance_normal_geodesic(complex, path))
    throw Error(ErrorKind::NotDistanceNormal, "the path is not a distance normal geodesic");
  const int n = complex.rank();
  const std::size_t m = path.length();
  const auto facet_of = [&](std::size_t i) { return complex.facet(path.facets[i]); };
  std::vector<std::vector<VertexId>> candidates;

  if (m == 0) {
    std::vector<VertexId> seq(facet_of(0).begin(), facet_of(0).end());
    do candidates.push_back(seq);
    while (std::next_permutation(seq.begin(), seq.end()));
  } else {
    // m = 1: x0 is the vertex leaving X_0, the rest may come in any order.
    const auto shared = face_intersection(facet_of(0), facet_of(1));
    VertexId x0 = -1;
    for (VertexId v : facet_of(0))
      if (!std::binary_search(shared.begin(), shared.end(), v)) x0 = v;
    std::vector<VertexId> base{x0};
    base.insert(base.end(), shared.begin(), shared.end());
    if (m == 1) {
      std::vector<VertexId> rest(shared.begin(), shared.end());
      do {
        candidates.push_back({x0});
        candidates.back().insert(candidates.back().end(), rest.begin(), rest.end());
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    const std::size_t last = std::min<std::size_t>(m, static_cast<std::size_t>(n));
    for (std::size_t k = 2; k <= last; ++k) {
      // The zigzag through the base flag already follows X_0, ..., X_{k-1}.
      const auto seq = orbit_vertex_sequence(complex, Flag{base});
      const auto xk = facet_of(k);
      std::vector<std::size_t> leaving, staying;
      for (std::size_t i = k - 1; i < static_cast<std::size_t>(n); ++i)
        (std::binary_search(xk.begin(), xk.end(), seq[i]) ? staying : leaving).push_back(i);
      if (leaving.size() != 1)
        throw Error(ErrorKind::VerificationFailure, "no unique vertex leaves at step " + std::to_string(k));
      const auto build = [&](std::span<const std::size_t> order) {
        std::vector<VertexId> s(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k - 1));
        s.push_back(seq[leaving[0]]);
        for (std::size_t i : order) s.push_back(seq[i]);
        return s;
      };
      base = build(staying);
      if (k == last) {
        do candidates.push_back(build(staying));
        while (std::next_permutation(staying.begin(), staying.end()));
      }
    }
    if (m > static_cast<std::size_t>(n)) candidates.assign(1, base);
  }

  std::vector<Zigzag> out;
  for (const auto& seq : candidates) out.push_back(zigzag_from_flag(complex, Flag{seq}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& z : out)
    if (!shadow_contains(complex, z, path))
      throw Error(ErrorKind::VerificationFailure, "constructed zigzag does not contain the geodesic");
  return out;
}

bool are_z_connected(const ThinChamberComplex& complex, std::span<const Zigzag> inventory, const Face& x,
                     const Face& y) {
  check_face(complex, x);
  check_face(complex, y);
  for (const auto& z : inventory) {
    const auto fx = window_faces(z, x.size());
    if (!std::binary_search(fx.begin(), fx.end(), x)) continue;
    const auto fy = x.size() == y.size() ? fx : window_faces(z, y.size());
    if (std::binary_search(fy.begin(), fy.end(), y)) return true;
  }
  return false;
}

bool are_z_connected(const ThinChamberComplex& complex, const Face& x, const Face& y) {
  check_face(complex, x);
  check_face(complex, y);
  return are_z_connected(complex, enumerate_zigzags(complex), x, y);
}

ZConnectivity::ZConnectivity(const ThinChamberComplex& complex, std::span<const Zigzag> inventory, int k)
    : level_(k) {
  if (k < 0 || k >= complex.rank())
    throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(k) + " outside 0.." +
                                                std::to_string(complex.rank() - 1));
  faces_ = faces_of_rank(complex.complex(), k);
  words_ = (faces_.size() + 63) / 64;
  bits_.assign(faces_.size() * words_, 0);
  std::vector<std::size_t> present;
  for (const auto& z : inventory) {
    present.clear();
    for (const auto& f : window_faces(z, static_cast<std::size_t>(k) + 1)) {
      const auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
      present.push_back(static_cast<std::size_t>(it - faces_.begin()));
    }
    for (std::size_t a : present)
      for (std::size_t b : present) bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  }
}

bool ZConnectivity::all_connected() const noexcept {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    for (std::size_t j = 0; j < faces_.size(); ++j)
      if (!connected(i, j)) return false;
  return true;
}

std::size_t ZConnectivity::connected_pairs() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    for (std::size_t j = i + 1; j < faces_.size(); ++j) count += connected(i, j);
  return count;
}

bool weakly_adjacent(const ThinChamberComplex& complex, const Face& x, const Face& y) {
  if (x.size() != y.size())
    throw Error(ErrorKind::RankMismatch, "faces of ranks " + std::to_string(static_cast<long>(x.size()) - 1) + " and " +
                                             std::to_string(static_cast<long>(y.size()) - 1));
  const int k = static_cast<int>(x.size()) - 1;
  if (k < 1 || k > complex.rank() - 2)
    throw Error(ErrorKind::RankOutOfRange, "weak adjacency needs rank 1.." + std::to_string(complex.rank() - 2) +
                                               ", got " + std::to_string(k));
  check_face(complex, x);
  check_face(complex, y);
  if (face_intersection(x, y).size() != static_cast<std::size_t>(k)) return false;
  return !complex.is_face(face_union(x, y));
}

Section43Report section_4_3_report(const ThinChamberComplex& complex, std::span<const Zigzag> inventory) {
  const int n = complex.rank();
  const auto fail = [](const std::string& msg) { return Error(ErrorKind::VerificationFailure, msg); };
  const auto face_text = [&](const Face& f) {
    std::string s;
    for (VertexId v : f) s += (s.empty() ? "" : " ") + complex.complex().label(v);
    return "{" + s + "}";
  };
  Section43Report r;
  r.rank = n;
  r.z_simple = std::all_of(inventory.begin(), inventory.end(), [](const Zigzag& z) { return z.simple(); });
  r.simple_zigzags = static_cast<std::size_t>(
      std::count_if(inventory.begin(), inventory.end(), [](const Zigzag& z) { return z.simple(); }));

  for (int k = 1; k <= n - 2; ++k) {
    // Weakly adjacent pairs share exactly one (k-1)-face.
    const auto faces = faces_of_rank(complex.complex(), k);
    FaceMap<std::vector<std::size_t>> by_sub;
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (std::size_t drop = 0; drop < faces[i].size(); ++drop) {
        Face sub;
        for (std::size_t j = 0; j < faces[i].size(); ++j)
          if (j != drop) sub.push_back(faces[i][j]);
        by_sub[sub].push_back(i);
      }
    std::size_t weak = 0;
    for (const auto& [sub, members] : by_sub)
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          if (!complex.is_face(face_union(faces[members[a]], faces[members[b]]))) ++weak;
    r.weak_pairs.push_back(weak);

    for (const auto& z : inventory) {
      if (!z.simple()) continue;
      const auto present = window_faces(z, static_cast<std::size_t>(k) + 1);
      for (std::size_t a = 0; a < present.size(); ++a)
        for (std::size_t b = a + 1; b < present.size(); ++b)
          if (face_intersection(present[a], present[b]).size() == static_cast<std::size_t>(k) &&
              !complex.is_face(face_union(present[a], present[b])))
            throw fail("weakly adjacent faces " + face_text(present[a]) + " and " + face_text(present[b]) +
                       " lie on one simple zigzag");
    }
    r.rank_fully_connected.push_back(ZConnectivity(complex, inventory, k).all_connected());
  }

  for (int k = 1; k <= n - 2 && r.rank_fully_connected[static_cast<std::size_t>(k) - 1]; ++k) r.largest_connected_k = k;
  if (r.z_simple && r.largest_connected_k) {
    for (int k = 1; k <= *r.largest_connected_k; ++k)
      if (!is_k_neighborly(complex, k + 2))
        throw fail("z-simple with all faces of rank <= " + std::to_string(k) + " z-connected, but not " +
                   std::to_string(k + 2) + "-neighborly");
    r.neighborly = *r.largest_connected_k + 2;
    if (*r.largest_connected_k > n / 2 - 2) {
      if (!is_simplex(complex)) throw fail("the hypotheses force the simplex, but the complex is not one");
      r.simplex_forced = true;
    }
  }
  return r;
}

Section43Report section_4_3_report(const ThinChamberComplex& complex) {
  return section_4_3_report(complex, enumerate_zigzags(complex));
}

}  // namespace zigzag
