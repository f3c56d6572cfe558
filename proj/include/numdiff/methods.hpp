#pragma once

// The four differentiation methods. Each maps a TimeSeries plus a parameter
// set to a (smoothed position, derivative) pair of the same length. All are
// pure functions; the TVRJ sliding-window solves are independent and their
// blended result does not depend on execution order.

#include <string>
#include <variant>
#include <vector>

#include "numdiff/types.hpp"

namespace numdiff {

enum class Method { butterworth, savgol, kalman, tvrj };

const char* method_name(Method method);
Method method_from_name(const std::string& name);  // throws InvalidInput

/// Zero-phase low-pass filter followed by finite difference.
struct ButterworthParams {
    int order = 2;         // >= 1
    double cutoff = 1.0;   // (0, Nyquist), in 1/time units
};

/// Sliding polynomial fit whose analytic derivative is smoothed by a
/// Gaussian kernel.
struct SavGolParams {
    int window = 5;         // odd, >= 3
    int polyorder = 2;      // in [1, window - 1]
    int smooth_window = 1;  // odd, >= 1
};

/// Constant-acceleration forward-backward smoother driven by white jerk.
struct KalmanParams {
    double q = 1.0;  // process-noise intensity, > 0
    double r = 1.0;  // measurement-noise variance, > 0
};

/// Total-variation penalty on the third difference of the derivative.
struct TvrjParams {
    double gamma_tv = 0.0;  // >= 0
};

using MethodParams = std::variant<ButterworthParams, SavGolParams, KalmanParams, TvrjParams>;

Method method_of(const MethodParams& params);
std::string format_params(const MethodParams& params);

/// Validate parameter bounds against a series; throws InvalidInput.
void validate(const ButterworthParams& p, const TimeSeries& series);
void validate(const SavGolParams& p, const TimeSeries& series);
void validate(const KalmanParams& p, const TimeSeries& series);
void validate(const TvrjParams& p, const TimeSeries& series);
void validate(const MethodParams& p, const TimeSeries& series);

DerivativeEstimate butterworth_diff(const TimeSeries& series, const ButterworthParams& params);
DerivativeEstimate savgol_diff(const TimeSeries& series, const SavGolParams& params);
DerivativeEstimate kalman_diff(const TimeSeries& series, const KalmanParams& params);

struct TvrjOptions {
    int window = 1000;           // sliding-window length for long series
    double overlap = 0.5;        // fraction of the window shared with its neighbor
    int max_iterations = 10000;
    double tolerance = 1e-10;    // relative objective-change stopping rule
};

/// Objective value after each solver iteration, one trace per window.
/// Monotonically non-increasing by construction of the solver.
struct TvrjTrace {
    std::vector<std::vector<double>> objective;
};

DerivativeEstimate tvrj_diff(const TimeSeries& series, const TvrjParams& params,
                             const TvrjOptions& options = {}, TvrjTrace* trace = nullptr);

/// Dispatch on the active variant.
DerivativeEstimate differentiate(const TimeSeries& series, const MethodParams& params);

/// Forward-filter and smoothed velocity tracks, for diagnostics and tests.
struct KalmanDetail {
    std::vector<double> filtered_velocity;
    std::vector<double> smoothed_velocity;
};
KalmanDetail kalman_detail(const TimeSeries& series, const KalmanParams& params);

/// Objective the TVRJ solver minimizes (used by its trace): squared
/// data-fit of the mean-aligned integral plus gamma_tv times the mean
/// absolute third difference of the derivative scaled by 1/dt^3.
double tvrj_objective(std::span<const double> dxdt, const TimeSeries& series, double gamma_tv);

/// Mean absolute third difference of a sequence divided by dt^3 (the
/// quantity the TVRJ penalty controls).
double jerk_total_variation(std::span<const double> dxdt, double dt);

}  // namespace numdiff
