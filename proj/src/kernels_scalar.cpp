#include "zigzag/kernels.hpp"

#include <cassert>

namespace zigzag::kernels::scalar {

void compose(std::span<const Index> outer, std::span<const Index> inner, std::span<Index> out) {
  assert(inner.size() == out.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
}

bool is_identity(std::span<const Index> perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<Index>(i)) return false;
  return true;
}

bool has_fixed_point(std::span<const Index> perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] == static_cast<Index>(i)) return true;
  return false;
}

bool equal(std::span<const Index> a, std::span<const Index> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool all_below(std::span<const Index> perm, Index bound) {
  for (Index v : perm)
    if (v >= bound) return false;
  return true;
}

}  // namespace zigzag::kernels::scalar
