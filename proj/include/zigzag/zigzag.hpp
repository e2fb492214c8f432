#pragma once

// Flags, the operators sigma_i / T / R on them, zigzags (T-orbits identified
// with their reverses), shadows and zigzag inventories.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zigzag/complex.hpp"

namespace zigzag {

// A flag {x0} < {x0,x1} < ... < {x0..x_{n-1}} stored as its vertex sequence.
struct Flag {
  std::vector<VertexId> vertices;

  // The i-face {x0..xi}, sorted.
  Face face(int i) const;
  std::size_t size() const noexcept { return vertices.size(); }
  friend auto operator<=>(const Flag&, const Flag&) = default;
};

// Checks that the sequence consists of distinct vertices forming a facet.
Flag make_flag(const ThinChamberComplex& complex, std::span<const VertexId> vertices);

Flag sigma(const ThinChamberComplex& complex, const Flag& flag, int i);
Flag t_step(const ThinChamberComplex& complex, const Flag& flag);
Flag reverse_flag(const Flag& flag);

// Index of the lexicographically least rotation of a cyclic sequence.
std::size_t least_rotation(std::span<const VertexId> cyclic);

// A zigzag stored as its 0-shadow. The stored rotation and direction are the
// canonical ones: the least among all rotations of the orbit and of the
// reversed orbit, so the zigzag and its reverse have the same representative.
class Zigzag {
 public:
  Zigzag() = default;
  // Canonicalizes an oriented 0-shadow (one full period).
  static Zigzag from_orbit(int rank, std::vector<VertexId> zero_shadow);

  int rank() const noexcept { return rank_; }
  std::size_t length() const noexcept { return vertices_.size(); }
  const std::vector<VertexId>& zero_shadow() const noexcept { return vertices_; }
  VertexId vertex(std::size_t i) const noexcept { return vertices_[i % vertices_.size()]; }

  // Flag i of the canonical orbit: the window starting at vertex i.
  Flag flag(std::size_t i) const;
  std::vector<Flag> flags() const;
  bool simple() const;

  friend bool operator==(const Zigzag&, const Zigzag&) = default;
  friend bool operator<(const Zigzag& a, const Zigzag& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices_ < b.vertices_;
  }

 private:
  int rank_ = 0;
  std::vector<VertexId> vertices_;
};

struct Shadow {
  int level = 0;
  std::vector<Face> faces;  // cyclic
  friend bool operator==(const Shadow&, const Shadow&) = default;
};

// 0-shadow of the T-orbit of `flag`, in orbit order starting at `flag`.
std::vector<VertexId> orbit_vertex_sequence(const ThinChamberComplex& complex, const Flag& flag);
// Faces of size level+1 taken from consecutive windows of an oriented 0-shadow.
Shadow shadow_of_sequence(int rank, std::span<const VertexId> zero_shadow, int level);

Zigzag zigzag_from_flag(const ThinChamberComplex& complex, const Flag& flag);
Shadow shadow(const Zigzag& zigzag, int level);
Zigzag reconstruct_from_shadow(const ThinChamberComplex& complex, const Shadow& shadow);
Zigzag zigzag_from_vertex_sequence(const ThinChamberComplex& complex, std::span<const VertexId> cyclic);

// T-orbits making up one zigzag. From rank 2 on a zigzag and its reverse are
// different orbits; at rank 1 reversing a flag changes nothing.
constexpr int orbits_per_zigzag(int rank) noexcept { return rank == 1 ? 1 : 2; }

// n! * (number of facets).
std::uint64_t flag_count(const ThinChamberComplex& complex);

// All zigzags, canonical, sorted by (length, 0-shadow).
std::vector<Zigzag> enumerate_zigzags(const ThinChamberComplex& complex);

struct ZigzagPredicates {
  bool z_simple = false;
  bool z_uniform = false;
  std::optional<std::size_t> common_length;
  std::size_t count = 0;
  std::uint64_t flags = 0;
  // When uniform: count * 2 * length == flags (equivalently count == n!N/2l);
  // at rank 1 the factor 2 is dropped.
  bool count_formula_holds = false;
};

ZigzagPredicates zigzag_predicates(const ThinChamberComplex& complex);
ZigzagPredicates zigzag_predicates(const ThinChamberComplex& complex, std::span<const Zigzag> inventory);

// Dense flag numbering: facet index * n! + rank of the position permutation.
// Exposed for orbit bookkeeping in other modules.
class FlagCodec {
 public:
  explicit FlagCodec(const ThinChamberComplex& complex);

  std::uint64_t size() const noexcept { return total_; }
  std::uint64_t encode(const Flag& flag) const;
  Flag decode(std::uint64_t id) const;
  std::uint64_t t_step(std::uint64_t id) const;
  std::uint64_t reverse(std::uint64_t id) const;

 private:
  const ThinChamberComplex* complex_;
  int rank_;
  std::uint64_t perms_;
  std::uint64_t total_;
};

}  // namespace zigzag
