#include "numdiff/kernels.hpp"

#include <atomic>

#include "kernels_impl.hpp"
#include "numdiff/errors.hpp"

namespace numdiff::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(NUMDIFF_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const detail::Ops* backend_ops(Backend b) noexcept {
#if defined(NUMDIFF_HAVE_AVX2)
    if (b == Backend::avx2) return &detail::avx2_ops();
#endif
    (void)b;
    return &detail::scalar_ops();
}

std::atomic<const detail::Ops*>& active_ops() noexcept {
    static std::atomic<const detail::Ops*> ops{
        backend_ops(cpu_has_avx2() ? Backend::avx2 : Backend::scalar)};
    return ops;
}

std::atomic<Backend>& active() noexcept {
    static std::atomic<Backend> b{cpu_has_avx2() ? Backend::avx2 : Backend::scalar};
    return b;
}

}  // namespace

bool avx2_available() noexcept { return cpu_has_avx2(); }

Backend active_backend() noexcept { return active().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    if (backend == Backend::avx2 && !avx2_available()) {
        throw InvalidInput("kernels: AVX2 backend requested but not available on this CPU");
    }
    active_ops().store(backend_ops(backend), std::memory_order_relaxed);
    active().store(backend, std::memory_order_relaxed);
}

double sum(std::span<const double> x) noexcept {
    return active_ops().load(std::memory_order_relaxed)->sum(x.data(), x.size());
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return active_ops().load(std::memory_order_relaxed)->dot(a.data(), b.data(), a.size());
}

double sum_squared_diff(std::span<const double> a, std::span<const double> b) noexcept {
    return active_ops().load(std::memory_order_relaxed)
        ->sum_squared_diff(a.data(), b.data(), a.size());
}

double adjacent_abs_diff_sum(std::span<const double> x) noexcept {
    return active_ops().load(std::memory_order_relaxed)->adjacent_abs_diff_sum(x.data(), x.size());
}

void scaled_diff(std::span<const double> x, double scale, std::span<double> out) noexcept {
    active_ops().load(std::memory_order_relaxed)->scaled_diff(x.data(), x.size(), scale, out.data());
}

}  // namespace numdiff::kernels
