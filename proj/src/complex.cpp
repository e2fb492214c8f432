#include "zigzag/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "zigzag/error.hpp"

namespace zigzag {

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out = "{";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ",";
    out += tokens[i];
  }
  return out + "}";
}

// Calls fn(subset) for every sorted size-k subset of `set`.
template <class Fn>
void for_each_subset(std::span<const VertexId> set, int k, Fn&& fn) {
  const int n = static_cast<int>(set.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Face subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = set[idx[i]];
    fn(subset);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Face make_face(std::span<const VertexId> vertices) {
  Face f(vertices.begin(), vertices.end());
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end())
    throw Error(ErrorKind::DuplicateVertexInFacet, "vertex repeated in face");
  return f;
}

Face face_intersection(std::span<const VertexId> a, std::span<const VertexId> b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_union(std::span<const VertexId> a, std::span<const VertexId> b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool face_contains(std::span<const VertexId> outer, std::span<const VertexId> inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

// ---------------------------------------------------------------------------
// Complex

Complex Complex::build(const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::vector<VertexId>> ids;
  ids.reserve(facets.size());
  for (const auto& facet : facets) {
    std::vector<VertexId> row;
    row.reserve(facet.size());
    for (const auto& token : facet) {
      auto [it, inserted] = index.emplace(token, static_cast<VertexId>(labels.size()));
      if (inserted) labels.push_back(token);
      row.push_back(it->second);
    }
    ids.push_back(std::move(row));
  }
  return from_ids(std::move(labels), ids);
}

Complex Complex::from_ids(std::vector<std::string> labels, const std::vector<std::vector<VertexId>>& facets) {
  if (facets.empty()) throw Error(ErrorKind::EmptyInput, "no facets");
  Complex c;
  c.rank_ = static_cast<int>(facets.front().size());
  if (c.rank_ == 0) throw Error(ErrorKind::EmptyInput, "empty facet");
  c.labels_ = std::move(labels);
  for (std::size_t i = 0; i < c.labels_.size(); ++i)
    c.label_index_.emplace(c.labels_[i], static_cast<VertexId>(i));
  if (c.label_index_.size() != c.labels_.size())
    throw Error(ErrorKind::Parse, "vertex labels are not unique");

  std::vector<bool> used(c.labels_.size(), false);
  c.facet_data_.reserve(facets.size() * c.rank_);
  c.facet_index_.reserve(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto& row = facets[i];
    if (row.empty()) throw Error(ErrorKind::EmptyInput, "facet " + std::to_string(i + 1) + " is empty");
    if (static_cast<int>(row.size()) != c.rank_)
      throw Error(ErrorKind::NotPure, "facet " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                          " vertices, expected " + std::to_string(c.rank_));
    for (VertexId v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= c.labels_.size())
        throw Error(ErrorKind::Parse, "vertex id out of range");
    Face f(row.begin(), row.end());
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      std::vector<std::string> tokens;
      for (VertexId v : row) tokens.push_back(c.labels_[v]);
      throw Error(ErrorKind::DuplicateVertexInFacet, "facet " + std::to_string(i + 1) + " " + join_tokens(tokens));
    }
    if (!c.facet_index_.emplace(f, i).second) {
      std::vector<std::string> tokens;
      for (VertexId v : f) tokens.push_back(c.labels_[v]);
      throw Error(ErrorKind::DuplicateFacet, join_tokens(tokens));
    }
    for (VertexId v : f) used[v] = true;
    c.facet_data_.insert(c.facet_data_.end(), f.begin(), f.end());
  }
  for (std::size_t v = 0; v < used.size(); ++v)
    if (!used[v]) throw Error(ErrorKind::Parse, "vertex " + c.labels_[v] + " lies in no facet");
  return c;
}

std::optional<std::size_t> Complex::find_facet(std::span<const VertexId> sorted) const {
  if (static_cast<int>(sorted.size()) != rank_) return std::nullopt;
  auto it = facet_index_.find(Face(sorted.begin(), sorted.end()));
  if (it == facet_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> Complex::find_vertex(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Face> Complex::face_from_labels(const std::vector<std::string>& tokens) const {
  std::vector<VertexId> ids;
  for (const auto& t : tokens) {
    auto v = find_vertex(t);
    if (!v) return std::nullopt;
    ids.push_back(*v);
  }
  return make_face(ids);
}

std::vector<std::string> Complex::face_labels(std::span<const VertexId> face) const {
  std::vector<std::string> out;
  out.reserve(face.size());
  for (VertexId v : face) out.push_back(label(v));
  return out;
}

bool operator==(const Complex& a, const Complex& b) {
  if (a.rank_ != b.rank_ || a.labels_ != b.labels_ || a.num_facets() != b.num_facets()) return false;
  for (std::size_t i = 0; i < a.num_facets(); ++i)
    if (!b.find_facet(a.facet(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ThinChamberComplex

ThinChamberComplex ThinChamberComplex::validate(Complex c) {
  ThinChamberComplex t(std::move(c));
  const Complex& cx = t.complex_;
  const int n = cx.rank();
  const std::size_t nf = cx.num_facets();

  // Collect ridge incidences.
  FaceMap<std::vector<std::size_t>> incidence;
  incidence.reserve(nf * n);
  for (std::size_t f = 0; f < nf; ++f) {
    auto facet = cx.facet(f);
    for (int j = 0; j < n; ++j) {
      Face ridge;
      ridge.reserve(n - 1);
      for (int k = 0; k < n; ++k)
        if (k != j) ridge.push_back(facet[k]);
      incidence[std::move(ridge)].push_back(f);
    }
  }
  std::vector<std::pair<Face, std::size_t>> bad;
  for (const auto& [ridge, facets] : incidence)
    if (facets.size() != 2) bad.emplace_back(ridge, facets.size());
  if (!bad.empty()) {
    std::sort(bad.begin(), bad.end());
    std::ostringstream msg;
    msg << bad.size() << " ridge(s) not in exactly two facets:";
    std::size_t shown = 0;
    for (const auto& [ridge, count] : bad) {
      if (shown++ == 20) {
        msg << " ...";
        break;
      }
      msg << " " << join_tokens(cx.face_labels(ridge)) << "x" << count;
    }
    throw Error(ErrorKind::NotThin, msg.str());
  }

  t.neighbor_.resize(nf * n);
  t.opposite_.resize(nf * n);
  t.position_map_.resize(nf * n * n);
  t.ridges_.reserve(incidence.size());
  for (auto& [ridge, facets] : incidence) t.ridges_.emplace(ridge, std::make_pair(facets[0], facets[1]));

  for (std::size_t f = 0; f < nf; ++f) {
    auto facet = cx.facet(f);
    for (int j = 0; j < n; ++j) {
      Face ridge;
      for (int k = 0; k < n; ++k)
        if (k != j) ridge.push_back(facet[k]);
      const auto& pair = t.ridges_.at(ridge);
      const std::size_t g = pair.first == f ? pair.second : pair.first;
      auto other = cx.facet(g);
      VertexId opp = -1;
      for (VertexId v : other)
        if (!std::binary_search(facet.begin(), facet.end(), v)) opp = v;
      t.neighbor_[f * n + j] = g;
      t.opposite_[f * n + j] = opp;
      std::uint8_t* map = t.position_map_.data() + (f * n + j) * n;
      for (int k = 0; k < n; ++k) {
        VertexId v = k == j ? opp : facet[k];
        map[k] = static_cast<std::uint8_t>(std::lower_bound(other.begin(), other.end(), v) - other.begin());
      }
    }
  }

  // Chamber condition: Gamma_{n-1} connected.
  std::vector<int> component(nf, -1);
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < nf; ++s) {
    if (component[s] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    std::size_t count = 0;
    std::queue<std::size_t> q;
    q.push(s);
    component[s] = id;
    while (!q.empty()) {
      std::size_t f = q.front();
      q.pop();
      ++count;
      for (int j = 0; j < n; ++j) {
        std::size_t g = t.neighbor_[f * n + j];
        if (component[g] < 0) {
          component[g] = id;
          q.push(g);
        }
      }
    }
    sizes.push_back(count);
  }
  if (sizes.size() > 1) {
    std::ostringstream msg;
    msg << sizes.size() << " components of sizes";
    for (std::size_t s : sizes) msg << " " << s;
    throw Error(ErrorKind::NotChamber, msg.str());
  }

  t.vertex_facets_.assign(cx.num_vertices(), {});
  for (std::size_t f = 0; f < nf; ++f)
    for (VertexId v : cx.facet(f)) t.vertex_facets_[v].push_back(f);
  return t;
}

std::optional<std::pair<std::size_t, std::size_t>> ThinChamberComplex::ridge_facets(const Face& ridge) const {
  auto it = ridges_.find(ridge);
  if (it == ridges_.end()) return std::nullopt;
  return it->second;
}

bool ThinChamberComplex::is_face(std::span<const VertexId> sorted) const {
  if (sorted.empty()) return true;
  if (static_cast<int>(sorted.size()) > rank()) return false;
  const VertexId v = sorted.front();
  if (v < 0 || static_cast<std::size_t>(v) >= num_vertices()) return false;
  for (std::size_t f : vertex_facets_[v])
    if (face_contains(facet(f), sorted)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Faces and adjacency graphs

std::vector<Face> faces_of_rank(const Complex& c, int k) {
  std::vector<Face> out;
  if (k < -1 || k >= c.rank()) return out;
  if (k == -1) return {Face{}};
  FaceMap<bool> seen;
  for (std::size_t f = 0; f < c.num_facets(); ++f)
    for_each_subset(c.facet(f), k + 1, [&](const Face& s) {
      if (seen.emplace(s, true).second) out.push_back(s);
    });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::uint32_t> AdjacencyGraph::node_index(std::span<const VertexId> face) const {
  Face key(face.begin(), face.end());
  auto it = std::lower_bound(nodes.begin(), nodes.end(), key);
  if (it == nodes.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - nodes.begin());
}

std::size_t AdjacencyGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& a : adjacent) twice += a.size();
  return twice / 2;
}

bool AdjacencyGraph::connected() const {
  if (nodes.empty()) return true;
  auto d = bfs_distances(*this, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

AdjacencyGraph adjacency_graph(const ThinChamberComplex& complex, int k) {
  const int n = complex.rank();
  if (k < 0 || k > n - 1)
    throw Error(ErrorKind::LevelOutOfRange, "level " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
  AdjacencyGraph g;
  g.level = k;
  g.nodes = faces_of_rank(complex.complex(), k);
  g.adjacent.assign(g.nodes.size(), {});

  // Group k-faces by each of their (k-1)-subfaces; two members of a group are
  // adjacent when their union is a face (for k = n-1 the union never is, and
  // the shared subface is a ridge).
  FaceMap<std::vector<std::uint32_t>> groups;
  for (std::uint32_t i = 0; i < g.nodes.size(); ++i)
    for_each_subset(g.nodes[i], k, [&](const Face& sub) { groups[sub].push_back(i); });
  for (const auto& [sub, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const auto x = members[a], y = members[b];
        bool adjacent = (k == n - 1) || complex.is_face(face_union(g.nodes[x], g.nodes[y]));
        if (adjacent) {
          g.adjacent[x].push_back(y);
          g.adjacent[y].push_back(x);
        }
      }
  }
  for (auto& a : g.adjacent) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

std::vector<int> bfs_distances(const AdjacencyGraph& g, std::uint32_t source) {
  std::vector<int> dist(g.nodes.size(), -1);
  std::queue<std::uint32_t> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto w : g.adjacent[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

int path_distance(const AdjacencyGraph& g, std::span<const VertexId> x, std::span<const VertexId> y) {
  auto xi = g.node_index(x);
  auto yi = g.node_index(y);
  if (!xi || !yi) throw Error(ErrorKind::FaceNotInGraph, "face is not a node of Gamma_" + std::to_string(g.level));
  if (*xi == *yi) return 0;
  return bfs_distances(g, *xi)[*yi];
}

// ---------------------------------------------------------------------------
// Constructions

ThinChamberComplex join(const ThinChamberComplex& a, const ThinChamberComplex& b) {
  const Complex& ca = a.complex();
  const Complex& cb = b.complex();
  std::vector<std::string> labels;
  for (const auto& l : ca.labels()) labels.push_back("1." + l);
  for (const auto& l : cb.labels()) labels.push_back("2." + l);
  const auto shift = static_cast<VertexId>(ca.num_vertices());
  std::vector<std::vector<VertexId>> facets;
  facets.reserve(ca.num_facets() * cb.num_facets());
  for (std::size_t i = 0; i < ca.num_facets(); ++i)
    for (std::size_t j = 0; j < cb.num_facets(); ++j) {
      std::vector<VertexId> f(ca.facet(i).begin(), ca.facet(i).end());
      for (VertexId v : cb.facet(j)) f.push_back(v + shift);
      facets.push_back(std::move(f));
    }
  return ThinChamberComplex::validate(Complex::from_ids(std::move(labels), facets));
}

ThinChamberComplex simplex(int n) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "simplex needs n >= 1");
  std::vector<std::vector<std::string>> facets;
  // Facet omitting vertex n+1 first, so that vertex ids follow labels.
  for (int omit = n + 1; omit >= 1; --omit) {
    std::vector<std::string> f;
    for (int v = 1; v <= n + 1; ++v)
      if (v != omit) f.push_back(std::to_string(v));
    facets.push_back(std::move(f));
  }
  return ThinChamberComplex::validate(Complex::build(facets));
}

ThinChamberComplex cross_polytope(int n) {
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "cross polytope needs n >= 1");
  if (n > 20) throw Error(ErrorKind::ParameterOutOfRange, "cross polytope rank too large");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(-i));
  std::vector<std::vector<VertexId>> facets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<VertexId> f;
    for (int i = 0; i < n; ++i) f.push_back((mask >> i) & 1u ? n + i : i);
    facets.push_back(std::move(f));
  }
  return ThinChamberComplex::validate(Complex::from_ids(std::move(labels), facets));
}

ThinChamberComplex bipyramid(int m) {
  if (m < 3) throw Error(ErrorKind::ParameterOutOfRange, "bipyramid needs m >= 3");
  std::vector<std::vector<std::string>> facets;
  for (const char* apex : {"a", "b"})
    for (int i = 1; i <= m; ++i) facets.push_back({apex, std::to_string(i), std::to_string(i % m + 1)});
  return ThinChamberComplex::validate(Complex::build(facets));
}

bool is_k_neighborly(const ThinChamberComplex& complex, int k) {
  if (k < 1 || k > complex.rank())
    throw Error(ErrorKind::LevelOutOfRange, "neighborliness level " + std::to_string(k) + " outside 1.." +
                                               std::to_string(complex.rank()));
  const std::size_t v = complex.num_vertices();
  // Count k-subsets of V without overflow; compare with the number of faces.
  long double binom = 1;
  for (int i = 0; i < k; ++i) binom = binom * static_cast<long double>(v - i) / static_cast<long double>(i + 1);
  const std::size_t faces = faces_of_rank(complex.complex(), k - 1).size();
  return static_cast<long double>(faces) == binom;
}

bool is_simplex(const ThinChamberComplex& complex) {
  const auto n = static_cast<std::size_t>(complex.rank());
  return complex.num_vertices() == n + 1 && complex.num_facets() == n + 1;
}

}  // namespace zigzag
