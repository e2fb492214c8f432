#pragma once

// Facet geodesics in Gamma_{n-1}, distance normality, the extension of
// distance normal geodesics to zigzags, z-connectedness of faces and weak
// adjacency.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zigzag/complex.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

// Facet indices X_0, ..., X_m with consecutive entries adjacent.
struct FacetPath {
  std::vector<std::size_t> facets;
  std::size_t length() const noexcept { return facets.empty() ? 0 : facets.size() - 1; }
  friend bool operator==(const FacetPath&, const FacetPath&) = default;
};

// Breadth-first distances in Gamma_{n-1} from one facet.
std::vector<int> facet_distances(const ThinChamberComplex& complex, std::size_t from);
int facet_distance(const ThinChamberComplex& complex, std::size_t x, std::size_t y);
// Facet index of a label list; throws FaceNotInComplex.
std::size_t facet_from_labels(const ThinChamberComplex& complex, const std::vector<std::string>& tokens);

struct NormalityVerdict {
  bool pair_normal = false;
  int distance = 0;
  std::size_t common_vertices = 0;
  std::optional<FacetPath> witness;  // a distance normal geodesic when normal
  std::string reason;
};

// d <= n: d == n - |X cap Y|. d > n: some geodesic all of whose pairs at
// distance <= n satisfy that equality (depth-first over the breadth-first
// layers towards Y, with dead window states memoized).
NormalityVerdict is_distance_normal_pair(const ThinChamberComplex& complex, std::size_t x, std::size_t y);

// Throws NotAPath when consecutive facets are not adjacent.
bool is_geodesic(const ThinChamberComplex& complex, const FacetPath& path);
bool is_distance_normal_geodesic(const ThinChamberComplex& complex, const FacetPath& path);

// The (n-1)-shadow as facet indices, in orbit order.
std::vector<std::size_t> facet_shadow(const ThinChamberComplex& complex, const Zigzag& zigzag);
// Contiguous occurrence in the cyclic facet shadow, read forwards or backwards.
bool shadow_contains(const ThinChamberComplex& complex, const Zigzag& zigzag, const FacetPath& path);

// All zigzags whose (n-1)-shadow contains the path, built from the flags F_delta
// of the inductive construction; sorted, without repeats. At most (n-m)! for
// m <= n and exactly one for m > n. Throws NotDistanceNormal.
std::vector<Zigzag> zigzags_through_geodesic(const ThinChamberComplex& complex, const FacetPath& path);

// Throws FaceNotInComplex unless both are faces.
bool are_z_connected(const ThinChamberComplex& complex, std::span<const Zigzag> inventory, const Face& x,
                     const Face& y);
bool are_z_connected(const ThinChamberComplex& complex, const Face& x, const Face& y);

// Pairwise z-connectedness of the k-faces (ordered as faces_of_rank).
class ZConnectivity {
 public:
  ZConnectivity(const ThinChamberComplex& complex, std::span<const Zigzag> inventory, int k);

  int level() const noexcept { return level_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  bool connected(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  bool all_connected() const noexcept;
  std::size_t connected_pairs() const noexcept;  // unordered pairs i < j

 private:
  int level_;
  std::vector<Face> faces_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Faces of one rank k (1 <= k <= n-2) meeting in a (k-1)-face with no face
// containing both. Throws RankMismatch, RankOutOfRange, FaceNotInComplex.
bool weakly_adjacent(const ThinChamberComplex& complex, const Face& x, const Face& y);

struct Section43Report {
  int rank = 0;
  bool z_simple = false;
  std::size_t simple_zigzags = 0;
  std::vector<std::size_t> weak_pairs;       // per k = 1..n-2
  std::vector<bool> rank_fully_connected;    // per k = 1..n-2
  std::optional<int> largest_connected_k;    // largest k with every rank 1..k fully z-connected
  std::optional<int> neighborly;             // k + 2 verified when z-simple
  bool simplex_forced = false;               // the k > floor(n/2) - 2 case applied
};

// (a) weakly adjacent k-faces never share a simple zigzag; (b) z-simple and
// every rank 1..k fully z-connected implies (k+2)-neighborly; (c) such a k
// above floor(n/2) - 2 forces the simplex. Throws VerificationFailure.
Section43Report section_4_3_report(const ThinChamberComplex& complex, std::span<const Zigzag> inventory);
Section43Report section_4_3_report(const ThinChamberComplex& complex);

}  // namespace zigzag
