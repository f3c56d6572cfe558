#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "numdiff/core.hpp"
#include "numdiff/methods.hpp"

namespace numdiff {
namespace {

struct TransferFunction {
    std::vector<double> b;  // numerator, descending powers of z, same length as a
    std::vector<double> a;  // denominator, a[0] == 1
};

// Digital low-pass Butterworth via the bilinear transform with frequency
// pre-warping. Gain is renormalized so the DC gain is exactly 1 in floating
// point (sum(b) == sum(a)).
TransferFunction design_butterworth(int order, double cutoff_hz, double fs) {
    using cd = std::complex<double>;
    const double warped = 2.0 * fs * std::tan(std::numbers::pi * cutoff_hz / fs);

    std::vector<cd> zpoles(order);
    for (int k = 0; k < order; ++k) {
        const double theta =
            std::numbers::pi * (2.0 * k + order + 1.0) / (2.0 * order);
        const cd analog = warped * cd(std::cos(theta), std::sin(theta));
        zpoles[k] = (2.0 * fs + analog) / (2.0 * fs - analog);
    }

    // Expand the monic denominator polynomial from its roots.
    std::vector<cd> acoef{cd(1.0, 0.0)};
    for (const cd& p : zpoles) {
        std::vector<cd> next(acoef.size() + 1, cd(0.0, 0.0));
        for (std::size_t i = 0; i < acoef.size(); ++i) {
            next[i] += acoef[i];
            next[i + 1] -= acoef[i] * p;
        }
        acoef = std::move(next);
    }

    TransferFunction tf;
    tf.a.resize(acoef.size());
    for (std::size_t i = 0; i < acoef.size(); ++i) tf.a[i] = acoef[i].real();

    // Numerator: order zeros at z = -1, scaled for unit DC gain.
    tf.b.resize(tf.a.size());
    tf.b[0] = 1.0;
    for (int i = 1; i <= order; ++i) {
        tf.b[i] = tf.b[i - 1] * (order - i + 1) / static_cast<double>(i);
    }
    double sum_b = 0.0, sum_a = 0.0;
    for (std::size_t i = 0; i < tf.a.size(); ++i) {
        sum_b += tf.b[i];
        sum_a += tf.a[i];
    }
    const double gain = sum_a / sum_b;
    for (double& v : tf.b) v *= gain;
    return tf;
}

// Steady-state filter state for a unit-step input, so transients at the
// start of each pass stay small.
std::vector<double> step_steady_state(const TransferFunction& tf) {
    const int n = static_cast<int>(tf.a.size()) - 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (int j = 0; j < n; ++j) m(j, 0) += tf.a[j + 1];
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) -= 1.0;
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) rhs(i) = tf.b[i + 1] - tf.a[i + 1] * tf.b[0];
    const Eigen::VectorXd zi = m.partialPivLu().solve(rhs);
    return {zi.data(), zi.data() + n};
}

// Direct-form II transposed single pass; state is scaled by the first sample.
void filter_in_place(const TransferFunction& tf, const std::vector<double>& zi_unit,
                     std::vector<double>& x) {
    const std::size_t n = tf.a.size() - 1;
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = zi_unit[i] * x[0];
    for (double& sample : x) {
        const double xn = sample;
        const double yn = tf.b[0] * xn + z[0];
        for (std::size_t i = 0; i + 1 < n; ++i) {
            z[i] = tf.b[i + 1] * xn + z[i + 1] - tf.a[i + 1] * yn;
        }
        z[n - 1] = tf.b[n] * xn - tf.a[n] * yn;
        sample = yn;
    }
}

}  // namespace

DerivativeEstimate butterworth_diff(const TimeSeries& series, const ButterworthParams& params) {
    validate(params, series);
    const std::size_t m = series.size();
    const std::size_t pad = 3 * (static_cast<std::size_t>(params.order) + 1);
    const TransferFunction tf = design_butterworth(params.order, params.cutoff, 1.0 / series.dt());
    const std::vector<double> zi = step_steady_state(tf);

    // Odd reflection about both endpoints, then a forward and a backward pass.
    const std::vector<double>& y = series.values();
    std::vector<double> ext(m + 2 * pad);
    for (std::size_t i = 0; i < pad; ++i) ext[i] = 2.0 * y[0] - y[pad - i];
    std::copy(y.begin(), y.end(), ext.begin() + pad);
    for (std::size_t i = 0; i < pad; ++i) ext[pad + m + i] = 2.0 * y[m - 1] - y[m - 2 - i];

    filter_in_place(tf, zi, ext);
    std::reverse(ext.begin(), ext.end());
    filter_in_place(tf, zi, ext);
    std::reverse(ext.begin(), ext.end());

    DerivativeEstimate est;
    est.x_hat.assign(ext.begin() + pad, ext.begin() + pad + m);
    est.dxdt_hat = finite_difference(est.x_hat, series.dt());
    return est;
}

}  // namespace numdiff
