#pragma once

// Finite Coxeter groups in their regular permutation representation, built by
// coset enumeration over the trivial subgroup, plus parabolic cosets and the
// Coxeter complex.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/complex.hpp"
#include "zigzag/kernels.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

inline constexpr std::size_t kDefaultElementCap = 100'000;

// Generators are indexed 0..n-1 in code; names and file formats use 1..n.
class CoxeterMatrix {
 public:
  // m[i][i] == 1, m[i][j] == m[j][i] >= 2 otherwise.
  static CoxeterMatrix from_rows(std::vector<std::vector<int>> rows);
  // An, Bn, Dn, E6, E7, E8, F4, H3, H4, I2(m). Bn, F4, H3, H4 use the string
  // orientation whose polytope is the cross polytope, 24-cell, icosahedron and
  // 600-cell respectively.
  static CoxeterMatrix named(std::string_view name);
  // Text: first line n, then n rows of n integers.
  static CoxeterMatrix parse(std::string_view text);

  int rank() const noexcept { return n_; }
  int m(int i, int j) const noexcept { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  // m_ij == 2 whenever |i - j| >= 2.
  bool is_string_diagram() const noexcept;
  // Same diagram with generator order reversed.
  CoxeterMatrix reversed() const;
  std::string to_text() const;
  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_ = 0;
  std::vector<int> entries_;
  std::string name_;
};

using Element = std::uint32_t;

class GroupTable {
 public:
  std::size_t size() const noexcept { return size_; }
  int rank() const noexcept { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  static constexpr Element identity() noexcept { return 0; }

  // w * s_i
  Element right(Element w, int i) const noexcept { return right_[static_cast<std::size_t>(i)][w]; }
  // s_i * w
  Element left(Element w, int i) const noexcept { return left_[static_cast<std::size_t>(i)][w]; }
  std::span<const kernels::Index> generator_action(int i) const noexcept { return right_[static_cast<std::size_t>(i)]; }
  std::span<const kernels::Index> left_generator_action(int i) const noexcept {
    return left_[static_cast<std::size_t>(i)];
  }

  int length(Element w) const noexcept { return length_[w]; }
  // A reduced word for w (generator indices), the BFS-tree word.
  std::vector<int> word(Element w) const;
  Element from_word(std::span<const int> word) const;
  Element multiply(Element a, Element b) const;
  Element inverse(Element w) const;
  std::size_t order(Element w) const;

  // Permutation v -> w * v of all elements.
  std::vector<kernels::Index> left_multiplication(Element w) const;

  // Fixed-point-free involutive generators, braid relations, transitivity.
  // Throws VerificationFailure.
  void verify() const;

 private:
  friend GroupTable enumerate_group(const CoxeterMatrix& m, std::size_t cap);

  CoxeterMatrix matrix_;
  std::size_t size_ = 0;
  std::vector<std::vector<kernels::Index>> right_;
  std::vector<std::vector<kernels::Index>> left_;
  std::vector<int> length_;
  std::vector<Element> parent_;
  std::vector<std::int8_t> parent_gen_;
};

// Elements are numbered breadth-first from the identity, generators in index
// order. Throws BudgetExceeded when the group has more than `cap` elements
// (or does not close within the enumeration budget, as for infinite groups).
GroupTable enumerate_group(const CoxeterMatrix& m, std::size_t cap = kDefaultElementCap);

int length(const GroupTable& t, Element w);

// Order of s_{d(0)} ... s_{d(n-1)} for the given generator order.
std::size_t coxeter_element_order(const GroupTable& t, std::span<const int> order);

struct CoxeterNumber {
  std::size_t h = 0;
  std::size_t orders_checked = 0;
};
// Order of s_1 ... s_n, confirmed equal on min(n!, 24) generator orders drawn
// with the given seed. Throws VerificationFailure if two orders disagree.
CoxeterNumber coxeter_number(const GroupTable& t, std::uint64_t seed = 0);
CoxeterNumber coxeter_number(const CoxeterMatrix& m, std::size_t cap = kDefaultElementCap, std::uint64_t seed = 0);

// Left cosets of W^I, the subgroup generated by S without {s_i : i in removed}.
struct ParabolicCosets {
  std::vector<int> removed;
  std::vector<std::uint32_t> coset_of;        // element -> coset, numbered by least element
  std::vector<Element> representative;        // coset -> least element
  std::size_t count() const noexcept { return representative.size(); }
};
ParabolicCosets parabolic_cosets(const GroupTable& t, std::span<const int> removed);

// True iff some reduced expression of w uses pairwise distinct generators.
// Requires length(w) <= rank (LengthTooLarge otherwise).
bool distinct_reduced_expression_exists(const GroupTable& t, Element w);

// Sigma(W, S). Vertex "i:c" is the coset c of W^i (i in 1..n); facet index w
// is the facet {w W^1, ..., w W^n} of element w.
class CoxeterComplex {
 public:
  static CoxeterComplex build(const CoxeterMatrix& m, std::size_t cap = kDefaultElementCap);
  static CoxeterComplex build(GroupTable group);

  const GroupTable& group() const noexcept { return group_; }
  const ThinChamberComplex& complex() const noexcept { return complex_; }
  int rank() const noexcept { return group_.rank(); }

  // type is 0-based: the vertex for coset `coset` of W^{type+1}.
  VertexId vertex(int type, std::uint32_t coset) const noexcept {
    return static_cast<VertexId>(offset_[static_cast<std::size_t>(type)] + coset);
  }
  int vertex_type(VertexId v) const noexcept;
  const ParabolicCosets& maximal_cosets(int type) const noexcept { return cosets_[static_cast<std::size_t>(type)]; }
  // Vertex w W^{type+1}.
  VertexId vertex_of(Element w, int type) const noexcept {
    return vertex(type, cosets_[static_cast<std::size_t>(type)].coset_of[w]);
  }
  // The flag L_w(E_delta): vertex sequence w W^{delta(0)}, ..., w W^{delta(n-1)}
  // with delta a permutation of 0..n-1.
  Flag coxeter_flag(Element w, std::span<const int> delta) const;
  // Vertex permutation induced by L_w (index = old vertex, value = new vertex).
  std::vector<VertexId> left_multiplication(Element w) const;

 private:
  CoxeterComplex(GroupTable g, std::vector<ParabolicCosets> cosets, std::vector<std::size_t> offset,
                 ThinChamberComplex c)
      : group_(std::move(g)), cosets_(std::move(cosets)), offset_(std::move(offset)), complex_(std::move(c)) {}

  GroupTable group_;
  std::vector<ParabolicCosets> cosets_;
  std::vector<std::size_t> offset_;
  ThinChamberComplex complex_;
};

ThinChamberComplex coxeter_complex(const CoxeterMatrix& m, std::size_t cap = kDefaultElementCap);

// Applies a vertex permutation to a flag.
Flag apply_automorphism(std::span<const VertexId> vertex_map, const Flag& flag);

struct Prop35Report {
  std::string name;
  int rank = 0;
  std::size_t group_order = 0;
  std::size_t coxeter_number = 0;
  std::size_t zigzag_count = 0;
  std::size_t expected_count = 0;  // |W| (n-1)! / 2h, without the 2 at rank 1
  std::size_t zigzag_length = 0;
  std::size_t expected_length = 0;  // n h
  bool z_simple = false;
  bool z_uniform = false;
  std::size_t shadows_checked = 0;
  std::size_t powers_checked = 0;  // pairs (delta, m<h) with s_delta^m outside every W^i
};

// Checks the zigzag structure of Sigma(W,S): z-simple, uniform of length nh,
// |W|(n-1)!/2h zigzags, and for `samples` flags L_w(E_delta) drawn with
// `seed` the 0- and (n-1)-shadows follow the Coxeter-element formulas.
// Throws VerificationFailure with a counterexample on the first mismatch.
Prop35Report verify_prop_3_5(const CoxeterComplex& cc, std::size_t samples = 64, std::uint64_t seed = 0);

}  // namespace zigzag
