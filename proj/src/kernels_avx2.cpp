// AVX2 kernels. One 4-wide vector accumulator stands in for the scalar
// reference's four lanes; the horizontal combine is (l0+l2)+(l1+l3) and the
// tail is sequential, exactly like the scalar path. Multiplies and adds stay
// separate (no FMA) so both backends round identically at every step.
// Compiled with -mavx2 -ffp-contract=off; only reached after a runtime
// cpuid check.

#if defined(NUMDIFF_HAVE_AVX2)

#include "kernels_impl.hpp"

#include <cmath>
#include <immintrin.h>

namespace numdiff::kernels::detail {
namespace {

inline double hsum_lanes(__m256d acc) {
    alignas(32) double l[4];
    _mm256_store_pd(l, acc);
    return (l[0] + l[2]) + (l[1] + l[3]);
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum_lanes(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    double s = hsum_lanes(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum_squared_diff_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double s = hsum_lanes(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double adjacent_abs_diff_sum_avx2(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    const std::size_t pairs = n - 1;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= pairs; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(x + i + 1));
        acc = _mm256_add_pd(acc, _mm256_and_pd(d, kAbsMask));
    }
    double s = hsum_lanes(acc);
    for (; i < pairs; ++i) s += std::fabs(x[i] - x[i + 1]);
    return s;
}

void scaled_diff_avx2(const double* x, std::size_t n, double scale, double* out) {
    if (n < 2) return;
    const std::size_t m = n - 1;
    const __m256d vs = _mm256_set1_pd(scale);
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, vs));
    }
    for (; i < m; ++i) out[i] = (x[i + 1] - x[i]) * scale;
}

}  // namespace

const Ops& avx2_ops() noexcept {
    static const Ops ops{sum_avx2, dot_avx2, sum_squared_diff_avx2, adjacent_abs_diff_sum_avx2,
                         scaled_diff_avx2};
    return ops;
}

}  // namespace numdiff::kernels::detail

#endif  // NUMDIFF_HAVE_AVX2
