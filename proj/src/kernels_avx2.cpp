#include "zigzag/kernels.hpp"

#if defined(ZIGZAG_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace zigzag::kernels::avx2 {

#if defined(ZIGZAG_HAVE_AVX2)

namespace {
constexpr std::size_t kLanes = 8;

inline __m256i load(const Index* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline __m256i lane_ids(std::size_t base) {
  const __m256i step = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  return _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(base)), step);
}
}  // namespace

void compose(std::span<const Index> outer, std::span<const Index> inner, std::span<Index> out) {
  const std::size_t n = inner.size();
  const int* table = reinterpret_cast<const int*>(outer.data());
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i idx = load(inner.data() + i);
    __m256i v = _mm256_i32gather_epi32(table, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), v);
  }
  for (; i < n; ++i) out[i] = outer[inner[i]];
}

bool is_identity(std::span<const Index> perm) {
  const std::size_t n = perm.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i diff = _mm256_xor_si256(load(perm.data() + i), lane_ids(i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if (perm[i] != static_cast<Index>(i)) return false;
  return true;
}

bool has_fixed_point(std::span<const Index> perm) {
  const std::size_t n = perm.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i eq = _mm256_cmpeq_epi32(load(perm.data() + i), lane_ids(i));
    if (!_mm256_testz_si256(eq, eq)) return true;
  }
  for (; i < n; ++i)
    if (perm[i] == static_cast<Index>(i)) return true;
  return false;
}

bool equal(std::span<const Index> a, std::span<const Index> b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i diff = _mm256_xor_si256(load(a.data() + i), load(b.data() + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool all_below(std::span<const Index> perm, Index bound) {
  const std::size_t n = perm.size();
  std::size_t i = 0;
  // unsigned compare via min: v < bound  <=>  min(v, bound-1) == v
  if (bound == 0) return n == 0;
  const __m256i limit = _mm256_set1_epi32(static_cast<int>(bound - 1));
  for (; i + kLanes <= n; i += kLanes) {
    __m256i v = load(perm.data() + i);
    __m256i clipped = _mm256_min_epu32(v, limit);
    __m256i diff = _mm256_xor_si256(v, clipped);
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if (perm[i] >= bound) return false;
  return true;
}

#else

void compose(std::span<const Index> outer, std::span<const Index> inner, std::span<Index> out) {
  scalar::compose(outer, inner, out);
}
bool is_identity(std::span<const Index> perm) { return scalar::is_identity(perm); }
bool has_fixed_point(std::span<const Index> perm) { return scalar::has_fixed_point(perm); }
bool equal(std::span<const Index> a, std::span<const Index> b) { return scalar::equal(a, b); }
bool all_below(std::span<const Index> perm, Index bound) { return scalar::all_below(perm, bound); }

#endif

}  // namespace zigzag::kernels::avx2
