#pragma once

// Data-parallel inner loops shared by the numerical routines. Every kernel
// has a scalar reference implementation and, on x86-64, an AVX2 variant
// selected at runtime. Both paths use the same 4-lane reduction tree and are
// built without FMA contraction, so results are bit-identical across
// backends (verified by the equivalence tests).

#include <cstddef>
#include <span>

namespace numdiff::kernels {

enum class Backend { scalar, avx2 };

/// Backend in use (AVX2 when the CPU supports it, unless overridden).
Backend active_backend() noexcept;

/// Force a backend, e.g. for equivalence tests. Throws InvalidInput when the
/// requested backend is not available on this machine.
void set_backend(Backend backend);

bool avx2_available() noexcept;

double sum(std::span<const double> x) noexcept;

double dot(std::span<const double> a, std::span<const double> b) noexcept;

/// Sum of squared elementwise differences, a.size() == b.size().
double sum_squared_diff(std::span<const double> a, std::span<const double> b) noexcept;

/// Sum of |x[k] - x[k+1]| over adjacent pairs; 0 for length < 2.
double adjacent_abs_diff_sum(std::span<const double> x) noexcept;

/// out[k] = (x[k+1] - x[k]) * scale. out must provide x.size() - 1 slots.
void scaled_diff(std::span<const double> x, double scale, std::span<double> out) noexcept;

}  // namespace numdiff::kernels
