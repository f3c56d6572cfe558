#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "numdiff/core.hpp"
#include "numdiff/kernels.hpp"
#include "numdiff/methods.hpp"

namespace numdiff {
namespace {

// Least-squares slope extraction: fit a degree-`degree` polynomial over the
// sample offsets `tau` and return weights such that dot(weights, values)
// gives the fitted derivative at tau = 0 (per sample unit). Offsets are
// rescaled to [-1, 1] before forming the normal equations.
std::vector<double> slope_weights(const std::vector<double>& tau, int degree) {
    const int n = static_cast<int>(tau.size());
    double scale = 0.0;
    for (double t : tau) scale = std::max(scale, std::fabs(t));
    if (scale == 0.0) scale = 1.0;

    Eigen::MatrixXd design(n, degree + 1);
    for (int j = 0; j < n; ++j) {
        double p = 1.0;
        for (int k = 0; k <= degree; ++k) {
            design(j, k) = p;
            p *= tau[j] / scale;
        }
    }
    Eigen::MatrixXd gram = design.transpose() * design;
    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(degree + 1);
    e1(1) = 1.0;
    const Eigen::VectorXd u = gram.ldlt().solve(e1);
    const Eigen::VectorXd w = design * u / scale;
    return {w.data(), w.data() + n};
}

}  // namespace

DerivativeEstimate savgol_diff(const TimeSeries& series, const SavGolParams& params) {
    validate(params, series);
    const std::vector<double>& y = series.values();
    const std::size_t m = y.size();
    const int half = params.window / 2;
    const double inv_dt = 1.0 / series.dt();

    std::vector<double> raw(m);

    // Interior: one fixed weight vector applied as a sliding dot product.
    {
        std::vector<double> tau(params.window);
        for (int j = 0; j < params.window; ++j) tau[j] = j - half;
        const std::vector<double> w = slope_weights(tau, params.polyorder);
        for (std::size_t i = half; i + half < m; ++i) {
            raw[i] = kernels::dot(w, std::span<const double>(y.data() + i - half, w.size())) * inv_dt;
        }
    }

    // Edges: the window loses the out-of-range side; the polynomial degree
    // drops when the shrunken window cannot support it.
    for (int i = 0; i < half && static_cast<std::size_t>(i) < m; ++i) {
        const int count = std::min<std::size_t>(i + half + 1, m);
        std::vector<double> tau(count);
        for (int j = 0; j < count; ++j) tau[j] = j - i;
        const int degree = std::min(params.polyorder, count - 1);
        const std::vector<double> w = slope_weights(tau, degree);
        raw[i] = kernels::dot(w, std::span<const double>(y.data(), w.size())) * inv_dt;
    }
    for (std::size_t i = std::max<std::size_t>(m > static_cast<std::size_t>(half) ? m - half : 0,
                                               static_cast<std::size_t>(half));
         i < m; ++i) {
        const int count = static_cast<int>(m - i) + half;
        std::vector<double> tau(count);
        const std::size_t start = i - half;
        for (int j = 0; j < count; ++j) tau[j] = static_cast<double>(start + j) - static_cast<double>(i);
        const int degree = std::min(params.polyorder, count - 1);
        const std::vector<double> w = slope_weights(tau, degree);
        raw[i] = kernels::dot(w, std::span<const double>(y.data() + start, w.size())) * inv_dt;
    }

    DerivativeEstimate est;
    est.dxdt_hat = gaussian_smooth(raw, params.smooth_window);
    est.x_hat = core_detail::mean_aligned_integral(est.dxdt_hat, series.dt(), y);
    return est;
}

}  // namespace numdiff
