#pragma once

// Pure simplicial complexes given by their facets, the thin-chamber
// validation, and the face adjacency graphs Gamma_k.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace zigzag {

// Dense vertex index, assigned by first appearance when a complex is built.
using VertexId = std::int32_t;

// A face is a strictly increasing list of vertex ids. A k-face has k+1 entries.
using Face = std::vector<VertexId>;

struct FaceHash {
  std::size_t operator()(std::span<const VertexId> f) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (VertexId v : f) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
  std::size_t operator()(const Face& f) const noexcept { return (*this)(std::span<const VertexId>(f)); }
};

template <class T>
using FaceMap = std::unordered_map<Face, T, FaceHash>;

// Sorted copy; throws DuplicateVertexInFacet if the input repeats a vertex.
Face make_face(std::span<const VertexId> vertices);
Face face_intersection(std::span<const VertexId> a, std::span<const VertexId> b);
Face face_union(std::span<const VertexId> a, std::span<const VertexId> b);
bool face_contains(std::span<const VertexId> outer, std::span<const VertexId> inner);

class Complex {
 public:
  // Interns tokens in first-appearance order. Rejects empty input, empty
  // facets, mixed sizes, repeated vertices inside a facet and repeated facets.
  static Complex build(const std::vector<std::vector<std::string>>& facets);
  // Same validation over already-interned ids; labels[i] names vertex i.
  static Complex from_ids(std::vector<std::string> labels, const std::vector<std::vector<VertexId>>& facets);

  int rank() const noexcept { return rank_; }
  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_facets() const noexcept { return rank_ == 0 ? 0 : facet_data_.size() / rank_; }

  // Sorted vertex ids of facet i.
  std::span<const VertexId> facet(std::size_t i) const noexcept {
    return {facet_data_.data() + i * rank_, static_cast<std::size_t>(rank_)};
  }
  std::optional<std::size_t> find_facet(std::span<const VertexId> sorted) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<VertexId> find_vertex(std::string_view label) const;
  // Maps tokens to a sorted face; nullopt if some token is not a vertex.
  std::optional<Face> face_from_labels(const std::vector<std::string>& tokens) const;
  std::vector<std::string> face_labels(std::span<const VertexId> face) const;

  // Literal equality: same labels in the same order and the same facet set.
  friend bool operator==(const Complex& a, const Complex& b);

 private:
  Complex() = default;

  int rank_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> label_index_;
  std::vector<VertexId> facet_data_;
  FaceMap<std::size_t> facet_index_;
};

// A complex whose ridges each lie in exactly two facets and whose facet
// adjacency graph is connected. Carries the ridge index and, for every facet f
// and sorted position j, the facet across the ridge f \ {f[j]}.
class ThinChamberComplex {
 public:
  static ThinChamberComplex validate(Complex c);

  const Complex& complex() const noexcept { return complex_; }
  int rank() const noexcept { return complex_.rank(); }
  std::size_t num_vertices() const noexcept { return complex_.num_vertices(); }
  std::size_t num_facets() const noexcept { return complex_.num_facets(); }
  std::span<const VertexId> facet(std::size_t i) const noexcept { return complex_.facet(i); }

  // Facet sharing the ridge facet(f) minus its j-th vertex.
  std::size_t neighbor(std::size_t f, int j) const noexcept { return neighbor_[f * rank() + j]; }
  // The vertex of neighbor(f, j) that is not in facet(f).
  VertexId opposite_vertex(std::size_t f, int j) const noexcept { return opposite_[f * rank() + j]; }
  // For k != j: sorted position of facet(f)[k] inside neighbor(f, j); for k == j:
  // position of opposite_vertex(f, j).
  std::span<const std::uint8_t> position_map(std::size_t f, int j) const noexcept {
    return {position_map_.data() + (f * rank() + j) * rank(), static_cast<std::size_t>(rank())};
  }

  std::size_t num_ridges() const noexcept { return ridges_.size(); }
  // The two facets containing a ridge, or nullopt if the face is not a ridge.
  std::optional<std::pair<std::size_t, std::size_t>> ridge_facets(const Face& ridge) const;
  const FaceMap<std::pair<std::size_t, std::size_t>>& ridge_index() const noexcept { return ridges_; }

  bool is_face(std::span<const VertexId> sorted) const;
  // Facets containing vertex v, ascending.
  std::span<const std::size_t> facets_of_vertex(VertexId v) const noexcept {
    return vertex_facets_[static_cast<std::size_t>(v)];
  }

  friend bool operator==(const ThinChamberComplex& a, const ThinChamberComplex& b) {
    return a.complex_ == b.complex_;
  }

 private:
  explicit ThinChamberComplex(Complex c) : complex_(std::move(c)) {}

  Complex complex_;
  FaceMap<std::pair<std::size_t, std::size_t>> ridges_;
  std::vector<std::size_t> neighbor_;
  std::vector<VertexId> opposite_;
  std::vector<std::uint8_t> position_map_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
};

// All k-faces (size k+1) that occur in some facet, sorted.
std::vector<Face> faces_of_rank(const Complex& c, int k);

struct AdjacencyGraph {
  int level = 0;
  std::vector<Face> nodes;                          // sorted
  std::vector<std::vector<std::uint32_t>> adjacent;  // sorted neighbor lists

  std::optional<std::uint32_t> node_index(std::span<const VertexId> face) const;
  std::size_t edge_count() const noexcept;
  bool connected() const;
};

AdjacencyGraph adjacency_graph(const ThinChamberComplex& complex, int k);

// Breadth-first distances from one node (unreachable nodes get -1).
std::vector<int> bfs_distances(const AdjacencyGraph& g, std::uint32_t source);
int path_distance(const AdjacencyGraph& g, std::span<const VertexId> x, std::span<const VertexId> y);

ThinChamberComplex join(const ThinChamberComplex& a, const ThinChamberComplex& b);

// Built-in complexes. Labels: simplex 1..n+1; cross polytope 1..n, -1..-n;
// bipyramid apexes a, b and ring 1..m.
ThinChamberComplex simplex(int n);
ThinChamberComplex cross_polytope(int n);
ThinChamberComplex bipyramid(int m);

bool is_k_neighborly(const ThinChamberComplex& complex, int k);
// True iff the complex is the n-simplex on its vertex set.
bool is_simplex(const ThinChamberComplex& complex);

// Text format: one facet per line, whitespace-separated tokens, '#' comments.
Complex parse_cplx(std::string_view text);
Complex read_cplx_file(const std::string& path);
// Writes facets sorted under the canonical vertex order, so that
// write_cplx(parse_cplx(write_cplx(c))) == write_cplx(c).
std::string write_cplx(const Complex& c);
// Relabels vertices so that the written facet order and first-appearance
// order agree; facets keep their vertex sets.
Complex canonical_form(const Complex& c);

}  // namespace zigzag
