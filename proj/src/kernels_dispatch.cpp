#include <cstdlib>
#include <vector>

#include "zigzag/kernels.hpp"

namespace zigzag::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool avx2_compiled() noexcept {
#if defined(ZIGZAG_HAVE_AVX2)
  return true;
#else
  return false;
#endif
}

bool cpu_has_avx2() noexcept {
#if defined(ZIGZAG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{Isa::Scalar, scalar::compose, scalar::is_identity,
                                 scalar::has_fixed_point, scalar::equal, scalar::all_below};
  return table;
}

const KernelTable* avx2_table() noexcept {
  static const KernelTable table{Isa::Avx2, avx2::compose, avx2::is_identity,
                                 avx2::has_fixed_point, avx2::equal, avx2::all_below};
  if (avx2_compiled() && cpu_has_avx2()) return &table;
  return nullptr;
}

const KernelTable& dispatch() noexcept {
  static const KernelTable* chosen = [] {
    if (std::getenv("ZIGZAG_FORCE_SCALAR") == nullptr) {
      if (const KernelTable* t = avx2_table()) return t;
    }
    return &scalar_table();
  }();
  return *chosen;
}

bool is_fixed_point_free_involution(std::span<const Index> perm) {
  if (!all_below(perm, static_cast<Index>(perm.size()))) return false;
  if (has_fixed_point(perm)) return false;
  std::vector<Index> square(perm.size());
  compose(perm, perm, square);
  return is_identity(square);
}

}  // namespace zigzag::kernels
