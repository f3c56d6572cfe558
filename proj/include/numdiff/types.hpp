#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "numdiff/errors.hpp"

namespace numdiff {

/// Uniformly sampled scalar measurements. Validated on construction:
/// dt > 0, at least 4 samples, all values finite.
class TimeSeries {
public:
    TimeSeries(std::vector<double> values, double dt) : values_(std::move(values)), dt_(dt) {
        if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
            throw InvalidInput("TimeSeries: dt must be positive and finite");
        }
        if (values_.size() < 4) {
            throw InvalidInput("TimeSeries: need at least 4 samples");
        }
        for (double v : values_) {
            if (!std::isfinite(v)) throw InvalidInput("TimeSeries: values must be finite");
        }
    }

    const std::vector<double>& values() const noexcept { return values_; }
    std::span<const double> span() const noexcept { return values_; }
    double dt() const noexcept { return dt_; }
    std::size_t size() const noexcept { return values_.size(); }
    double duration() const noexcept { return dt_ * static_cast<double>(values_.size() - 1); }
    double nyquist() const noexcept { return 0.5 / dt_; }

private:
    std::vector<double> values_;
    double dt_;
};

/// Smoothed position and derivative estimate, same length as the source series.
struct DerivativeEstimate {
    std::vector<double> x_hat;
    std::vector<double> dxdt_hat;
};

/// Ground-truth comparison metrics.
struct EvalMetrics {
    double rmse = 0.0;
    double error_correlation = 0.0;  // squared Pearson correlation, in [0, 1]
};

/// One-sided periodogram: frequencies ascending from 0 toward Nyquist.
struct PowerSpectrum {
    std::vector<double> frequencies;
    std::vector<double> power;
};

}  // namespace numdiff
