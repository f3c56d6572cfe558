// Scalar reference kernels. Reductions accumulate into four independent
// lanes (lane j collects elements j, j+4, j+8, ...) and combine them as
// (l0+l2)+(l1+l3) before a sequential tail. The AVX2 variants replicate this
// exact operation order, which is what makes the backends bit-identical.
// This translation unit is compiled with -ffp-contract=off.

#include "kernels_impl.hpp"

#include <cmath>

namespace numdiff::kernels::detail {
namespace {

double sum_scalar(const double* x, std::size_t n) {
    double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        l0 += x[i];
        l1 += x[i + 1];
        l2 += x[i + 2];
        l3 += x[i + 3];
    }
    double s = (l0 + l2) + (l1 + l3);
    for (; i < n; ++i) s += x[i];
    return s;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        l0 += a[i] * b[i];
        l1 += a[i + 1] * b[i + 1];
        l2 += a[i + 2] * b[i + 2];
        l3 += a[i + 3] * b[i + 3];
    }
    double s = (l0 + l2) + (l1 + l3);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum_squared_diff_scalar(const double* a, const double* b, std::size_t n) {
    double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const double d0 = a[i] - b[i];
        const double d1 = a[i + 1] - b[i + 1];
        const double d2 = a[i + 2] - b[i + 2];
        const double d3 = a[i + 3] - b[i + 3];
        l0 += d0 * d0;
        l1 += d1 * d1;
        l2 += d2 * d2;
        l3 += d3 * d3;
    }
    double s = (l0 + l2) + (l1 + l3);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double adjacent_abs_diff_sum_scalar(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    const std::size_t pairs = n - 1;
    double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= pairs; i += 4) {
        l0 += std::fabs(x[i] - x[i + 1]);
        l1 += std::fabs(x[i + 1] - x[i + 2]);
        l2 += std::fabs(x[i + 2] - x[i + 3]);
        l3 += std::fabs(x[i + 3] - x[i + 4]);
    }
    double s = (l0 + l2) + (l1 + l3);
    for (; i < pairs; ++i) s += std::fabs(x[i] - x[i + 1]);
    return s;
}

void scaled_diff_scalar(const double* x, std::size_t n, double scale, double* out) {
    if (n < 2) return;
    for (std::size_t i = 0; i + 1 < n; ++i) out[i] = (x[i + 1] - x[i]) * scale;
}

}  // namespace

const Ops& scalar_ops() noexcept {
    static const Ops ops{sum_scalar, dot_scalar, sum_squared_diff_scalar,
                         adjacent_abs_diff_sum_scalar, scaled_diff_scalar};
    return ops;
}

}  // namespace numdiff::kernels::detail
