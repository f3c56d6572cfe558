#pragma once

// Per-backend kernel tables. The scalar implementations are the reference;
// the AVX2 ones must reproduce them bit-for-bit (same 4-lane reduction tree,
// no FMA). kernels.cpp owns runtime selection.

#include <cstddef>

namespace numdiff::kernels::detail {

struct Ops {
    double (*sum)(const double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum_squared_diff)(const double*, const double*, std::size_t);
    double (*adjacent_abs_diff_sum)(const double*, std::size_t);
    void (*scaled_diff)(const double*, std::size_t, double, double*);
};

const Ops& scalar_ops() noexcept;

#if defined(NUMDIFF_HAVE_AVX2)
const Ops& avx2_ops() noexcept;
#endif

}  // namespace numdiff::kernels::detail
