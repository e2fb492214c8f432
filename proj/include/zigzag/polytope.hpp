#pragma once

// Abstract polytopes stored as incidence between consecutive ranks. Regular
// ones come from string Coxeter diagrams; delta-zigzags act on their flags.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/complex.hpp"
#include "zigzag/coxeter.hpp"
#include "zigzag/kernels.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

using FaceId = std::uint32_t;
using FlagId = std::uint32_t;

// One proper face per rank 0..n-1.
struct PolytopeFlag {
  std::vector<FaceId> chain;
  friend auto operator<=>(const PolytopeFlag&, const PolytopeFlag&) = default;
};

struct Incidence {
  int rank = 0;  // rank of `low`; `high` has rank + 1
  FaceId low = 0;
  FaceId high = 0;
  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

class AbstractPolytope {
 public:
  // names[k + 1] lists the faces of rank k for k = -1..n, so ranks -1 and n
  // must hold exactly one face each. Incidence is given between consecutive
  // ranks only. Throws InvalidPolytope unless (P1) and (P2) hold.
  static AbstractPolytope build(int rank, std::vector<std::vector<std::string>> names,
                                std::vector<Incidence> incidences);

  int rank() const noexcept { return rank_; }
  std::size_t face_count(int k) const { return names_.at(static_cast<std::size_t>(k + 1)).size(); }
  const std::string& face_name(int k, FaceId f) const { return names_.at(static_cast<std::size_t>(k + 1)).at(f); }
  // Faces of rank k+1 above face f of rank k, ascending.
  std::span<const FaceId> up(int k, FaceId f) const { return up_[static_cast<std::size_t>(k + 1)][f]; }
  // Faces of rank k-1 below face f of rank k, ascending.
  std::span<const FaceId> down(int k, FaceId f) const { return down_[static_cast<std::size_t>(k + 1)][f]; }
  // Order relation derived by chain reachability (a of rank ka below b of rank kb).
  bool incident(int ka, FaceId a, int kb, FaceId b) const;
  std::vector<Incidence> incidences() const;

  // Flags sorted lexicographically by chain.
  std::size_t flag_count() const noexcept { return flags_.size(); }
  const PolytopeFlag& flag(FlagId id) const { return flags_.at(id); }
  const std::vector<PolytopeFlag>& flags() const noexcept { return flags_; }
  std::optional<FlagId> find_flag(const PolytopeFlag& f) const;
  // sigma_i as a permutation of flag ids.
  std::span<const kernels::Index> sigma_table(int i) const { return sigma_[static_cast<std::size_t>(i)]; }

 private:
  AbstractPolytope() = default;
  void validate_and_index();

  int rank_ = 0;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<FaceId>>> up_;
  std::vector<std::vector<std::vector<FaceId>>> down_;
  std::vector<PolytopeFlag> flags_;
  std::vector<std::vector<kernels::Index>> sigma_;
};

// Flag count above which polytope construction refuses to index flags.
inline constexpr std::size_t kMaxPolytopeFlags = 4'000'000;

// Faces of rank k are the k-faces of the complex (named by their vertex
// labels joined with ','), plus formal least and greatest faces.
AbstractPolytope polytope_from_complex(const ThinChamberComplex& complex);

// Vertex "k+1:name" for every proper face of rank k; facet j is flag j, so the
// sorted facet lists the faces by rank.
ThinChamberComplex flag_complex(const AbstractPolytope& p);

// Throws RankOutOfRange for i outside 0..n-1 and NotAFlag for a bad chain.
PolytopeFlag sigma_p(const AbstractPolytope& p, const PolytopeFlag& flag, int i);

// T_delta = sigma_{delta(n-1)} ... sigma_{delta(0)} as a flag permutation.
std::vector<kernels::Index> t_delta_table(const AbstractPolytope& p, std::span<const int> delta);

// A T_delta-orbit. The pair (delta, orbit) and (reversed delta, reversed orbit)
// describe the same generalized zigzag; the stored one is the least under
// (flags, delta) after rotating each orbit to its least flag sequence.
struct GeneralizedZigzag {
  std::vector<int> delta;
  std::vector<FlagId> flags;
  std::size_t length() const noexcept { return flags.size(); }
  friend bool operator==(const GeneralizedZigzag&, const GeneralizedZigzag&) = default;
};

GeneralizedZigzag generalized_zigzag(const AbstractPolytope& p, std::span<const int> delta, const PolytopeFlag& flag);
// Every T_delta-orbit once, in order of least flag id.
std::vector<GeneralizedZigzag> delta_zigzags(const AbstractPolytope& p, std::span<const int> delta);
// The faces X_{delta(0)}, ..., X_{delta(n-1)} of every flag of the orbit in
// turn, as flag-complex vertices.
std::vector<VertexId> interleaved_shadow(const AbstractPolytope& p, const GeneralizedZigzag& z);
bool is_simple(const AbstractPolytope& p, const GeneralizedZigzag& z);

struct Prop36Report {
  int rank = 0;
  std::size_t flags = 0;
  std::size_t permutations = 0;
  std::size_t delta_orbits = 0;  // (delta, T_delta-orbit) pairs over all delta
  std::size_t generalized_zigzags = 0;  // classes under rotation of delta and reversal
  std::size_t flag_complex_zigzags = 0;
  std::vector<std::size_t> lengths;  // distinct generalized zigzag lengths, ascending
  std::vector<std::size_t> flag_complex_lengths;
  std::optional<std::size_t> expected_count;  // (n-1)! N / 2l when uniform
  bool simplicity_preserved = false;
};

// Maps every (delta, F) to the flag-complex zigzag seeded by the vertex order
// X_{delta(0)}, ..., X_{delta(n-1)} and checks that the map is well defined,
// hits every flag-complex zigzag exactly 2n times, multiplies lengths by n and
// preserves simplicity. Throws CorrespondenceFailure with details.
Prop36Report prop_3_6_check(const AbstractPolytope& p);

// Rank-(i-1) faces are the cosets of W^i; incidence is nonempty intersection.
// Face names are coset numbers, so flag_complex() reproduces coxeter_complex()
// labels. Throws NotStringDiagram or BudgetExceeded.
AbstractPolytope regular_polytope_from_string(const CoxeterMatrix& m, std::size_t cap = kDefaultElementCap);

// icosahedron, 24-cell, 600-cell, cube:n, cross:n, simplex:n.
CoxeterMatrix polytope_diagram(std::string_view name);
AbstractPolytope polytope_by_name(std::string_view name, std::size_t cap = kDefaultElementCap);

// {"rank": n, "faces": [[ids of rank -1], ..., [ids of rank n]],
//  "incidence": [[k, low, high], ...]} with low of rank k and high of rank k+1.
AbstractPolytope parse_apoly(std::string_view json_text);
AbstractPolytope read_apoly_file(const std::string& path);
std::string write_apoly(const AbstractPolytope& p);

}  // namespace zigzag
