#include "numdiff/core.hpp"

#include <algorithm>
#include <cmath>

#include "numdiff/kernels.hpp"

namespace numdiff {

std::vector<double> finite_difference(std::span<const double> values, double dt) {
    if (values.size() < 2) throw InvalidInput("finite_difference: need at least 2 samples");
    if (!(dt > 0.0)) throw InvalidInput("finite_difference: dt must be positive");
    const std::size_t m = values.size();
    std::vector<double> out(m);
    kernels::scaled_diff(values, 1.0 / dt, std::span<double>(out.data(), m - 1));
    out[m - 1] = out[m - 2];
    return out;
}

std::vector<double> finite_difference(const TimeSeries& series) {
    return finite_difference(series.span(), series.dt());
}

std::vector<double> trapezoidal_integral(std::span<const double> derivative, double dt, double x0) {
    if (derivative.empty()) throw InvalidInput("trapezoidal_integral: empty input");
    if (!(dt > 0.0)) throw InvalidInput("trapezoidal_integral: dt must be positive");
    std::vector<double> out(derivative.size());
    out[0] = x0;
    double acc = x0;
    const double half_dt = 0.5 * dt;
    for (std::size_t k = 1; k < derivative.size(); ++k) {
        acc += (derivative[k - 1] + derivative[k]) * half_dt;
        out[k] = acc;
    }
    return out;
}

double total_variation(std::span<const double> x) {
    if (x.size() < 2) throw InvalidInput("total_variation: need at least 2 samples");
    return kernels::adjacent_abs_diff_sum(x) / static_cast<double>(x.size());
}

double rmse(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InvalidInput("rmse: length mismatch");
    if (a.empty()) throw InvalidInput("rmse: empty input");
    return std::sqrt(kernels::sum_squared_diff(a, b) / static_cast<double>(a.size()));
}

namespace core_detail {

double mean(std::span<const double> x) {
    return kernels::sum(x) / static_cast<double>(x.size());
}

std::vector<double> mean_aligned_integral(std::span<const double> derivative, double dt,
                                          std::span<const double> y) {
    std::vector<double> integral = trapezoidal_integral(derivative, dt, 0.0);
    const double mu = mean(y) - mean(integral);
    for (double& v : integral) v += mu;
    return integral;
}

}  // namespace core_detail

Correlation error_correlation_detail(std::span<const double> estimate,
                                     std::span<const double> truth) {
    if (estimate.size() != truth.size()) throw InvalidInput("error_correlation: length mismatch");
    if (estimate.size() < 3) throw InvalidInput("error_correlation: need at least 3 samples");
    const std::size_t m = truth.size();

    std::vector<double> err(m);
    for (std::size_t k = 0; k < m; ++k) err[k] = estimate[k] - truth[k];

    const double mean_err = core_detail::mean(err);
    const double mean_truth = core_detail::mean(truth);
    std::vector<double> ce(m), ct(m);
    for (std::size_t k = 0; k < m; ++k) {
        ce[k] = err[k] - mean_err;
        ct[k] = truth[k] - mean_truth;
    }

    const double var_err = kernels::dot(ce, ce) / static_cast<double>(m);
    const double var_truth = kernels::dot(ct, ct) / static_cast<double>(m);
    const double sd_err = std::sqrt(var_err);
    const double sd_truth = std::sqrt(var_truth);

    // Constant truth or constant error: the correlation is undefined.
    const double eps_err = 1e-12 * (1.0 + std::fabs(mean_err));
    const double eps_truth = 1e-12 * (1.0 + std::fabs(mean_truth));
    if (sd_err <= eps_err || sd_truth <= eps_truth) return {0.0, true};

    const double cov = kernels::dot(ce, ct) / static_cast<double>(m);
    const double r = cov / (sd_err * sd_truth);
    return {std::clamp(r * r, 0.0, 1.0), false};
}

double error_correlation(std::span<const double> estimate, std::span<const double> truth) {
    return error_correlation_detail(estimate, truth).r2;
}

std::vector<double> gaussian_smooth(std::span<const double> x, int window) {
    const std::size_t m = x.size();
    if (window < 1 || window % 2 == 0) {
        throw InvalidInput("gaussian_smooth: window must be a positive odd integer");
    }
    if (static_cast<std::size_t>(window) > m) {
        throw InvalidInput("gaussian_smooth: window exceeds signal length");
    }
    if (window == 1) return {x.begin(), x.end()};

    const int half = window / 2;
    const double sigma = static_cast<double>(window) / 6.0;
    std::vector<double> kernel(window);
    double norm = 0.0;
    for (int j = -half; j <= half; ++j) {
        const double w = std::exp(-0.5 * (j / sigma) * (j / sigma));
        kernel[j + half] = w;
        norm += w;
    }
    for (double& w : kernel) w /= norm;

    std::vector<double> out(m);
    const std::size_t lo = static_cast<std::size_t>(half);
    const std::size_t hi = m - static_cast<std::size_t>(half);  // first index past the interior
    for (std::size_t i = lo; i < hi; ++i) {
        out[i] = kernels::dot(kernel, x.subspan(i - half, window));
    }
    // Edges: renormalize over the in-range part of the kernel.
    for (std::size_t i = 0; i < std::min(lo, m); ++i) {
        const int start = half - static_cast<int>(i);
        const int count = window - start;
        const std::span<const double> kw(kernel.data() + start, count);
        out[i] = kernels::dot(kw, x.subspan(0, count)) / kernels::sum(kw);
    }
    for (std::size_t i = std::max(hi, lo); i < m; ++i) {
        const int count = half + static_cast<int>(m - i);
        const std::span<const double> kw(kernel.data(), count);
        out[i] = kernels::dot(kw, x.subspan(i - half, count)) / kernels::sum(kw);
    }
    return out;
}

}  // namespace numdiff
