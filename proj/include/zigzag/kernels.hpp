#pragma once

// Permutation-table kernels used by the group and polytope code.
//
// Every table is a dense array of 32-bit indices. The scalar variants are the
// reference; the AVX2 variants must agree with them bit for bit. dispatch()
// picks the widest variant the running CPU supports unless the environment
// variable ZIGZAG_FORCE_SCALAR is set.

#include <cstdint>
#include <span>
#include <string_view>

namespace zigzag::kernels {

using Index = std::uint32_t;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  // out[i] = outer[inner[i]]  (apply inner first, then outer)
  void (*compose)(std::span<const Index> outer, std::span<const Index> inner, std::span<Index> out);
  bool (*is_identity)(std::span<const Index> perm);
  bool (*has_fixed_point)(std::span<const Index> perm);
  bool (*equal)(std::span<const Index> a, std::span<const Index> b);
  // true iff every entry is < bound
  bool (*all_below)(std::span<const Index> perm, Index bound);
};

namespace scalar {
void compose(std::span<const Index> outer, std::span<const Index> inner, std::span<Index> out);
bool is_identity(std::span<const Index> perm);
bool has_fixed_point(std::span<const Index> perm);
bool equal(std::span<const Index> a, std::span<const Index> b);
bool all_below(std::span<const Index> perm, Index bound);
}  // namespace scalar

namespace avx2 {
// Only callable when cpu_has_avx2() is true.
void compose(std::span<const Index> outer, std::span<const Index> inner, std::span<Index> out);
bool is_identity(std::span<const Index> perm);
bool has_fixed_point(std::span<const Index> perm);
bool equal(std::span<const Index> a, std::span<const Index> b);
bool all_below(std::span<const Index> perm, Index bound);
}  // namespace avx2

bool cpu_has_avx2() noexcept;
bool avx2_compiled() noexcept;

const KernelTable& scalar_table() noexcept;
// nullptr when AVX2 is unavailable at build or run time.
const KernelTable* avx2_table() noexcept;
const KernelTable& dispatch() noexcept;

// Convenience wrappers over dispatch().
inline void compose(std::span<const Index> outer, std::span<const Index> inner, std::span<Index> out) {
  dispatch().compose(outer, inner, out);
}
inline bool is_identity(std::span<const Index> perm) { return dispatch().is_identity(perm); }
inline bool has_fixed_point(std::span<const Index> perm) { return dispatch().has_fixed_point(perm); }
inline bool equal(std::span<const Index> a, std::span<const Index> b) { return dispatch().equal(a, b); }
inline bool all_below(std::span<const Index> perm, Index bound) { return dispatch().all_below(perm, bound); }

// A fixed-point-free involution: p(p(i)) == i and p(i) != i for all i.
bool is_fixed_point_free_involution(std::span<const Index> perm);

}  // namespace zigzag::kernels
