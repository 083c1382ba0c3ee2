// Compiled with -mavx2; only reached after a runtime CPU check.

#include "pgrp/kernels.hpp"

#include <immintrin.h>

namespace pgrp::kernels::avx2 {

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
              std::uint32_t c, std::uint32_t p) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vp_minus_1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i zero = _mm256_setzero_si256();
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    // t < p^2 + p < 2^24, so the float quotient is off by at most one.
    __m256i t = _mm256_add_epi32(_mm256_mullo_epi32(vx, vc), vy);
    __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(t), inv_p));
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
    r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vp_minus_1), vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), r);
  }
  scalar::axpy_mod(y + i, x + i, n - i, c, p);
}

void compose(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
             std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(b), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  scalar::compose(a + i, b, out + i, n - i);
}

bool all_zero(const std::uint32_t* x, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc = _mm256_or_si256(
        acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)));
  }
  return _mm256_testz_si256(acc, acc) && scalar::all_zero(x + i, n - i);
}

}  // namespace pgrp::kernels::avx2
