#pragma once

// Foundational numerical primitives: differencing, integration, total
// variation, error metrics, Gaussian smoothing and spectral analysis.
// All functions are pure and safe to call concurrently.

#include <span>
#include <vector>

#include "numdiff/types.hpp"

namespace numdiff {

/// Forward differences (y[k+1] - y[k]) / dt. Output keeps the input length by
/// duplicating the final difference. Throws InvalidInput for length < 2.
std::vector<double> finite_difference(std::span<const double> values, double dt);
std::vector<double> finite_difference(const TimeSeries& series);

/// Cumulative trapezoidal integral starting at x0. Output matches the input
/// length; out[0] == x0. Throws InvalidInput for empty input or dt <= 0.
std::vector<double> trapezoidal_integral(std::span<const double> derivative, double dt, double x0);

/// Mean absolute adjacent difference: (1/m) * sum |x[k] - x[k+1]|.
/// Throws InvalidInput for length < 2.
double total_variation(std::span<const double> x);

/// Root of the mean squared elementwise difference. Throws InvalidInput on
/// length mismatch or empty input.
double rmse(std::span<const double> a, std::span<const double> b);

struct Correlation {
    double r2 = 0.0;       // squared Pearson correlation, clamped to [0, 1]
    bool degenerate = false;  // set when truth or error is (numerically) constant
};

/// Squared Pearson correlation between (estimate - truth) and truth. A
/// constant truth or constant error makes the correlation undefined; the
/// result is then 0 with the degenerate flag set. Throws InvalidInput for
/// mismatched lengths or fewer than 3 samples.
Correlation error_correlation_detail(std::span<const double> estimate,
                                     std::span<const double> truth);
double error_correlation(std::span<const double> estimate, std::span<const double> truth);

/// Convolution with a normalized Gaussian kernel of support `window` (odd)
/// and standard deviation window/6. Near the edges the kernel is
/// renormalized over the samples that remain in range, so a constant signal
/// maps to itself. Throws InvalidInput for an even window or window > length.
std::vector<double> gaussian_smooth(std::span<const double> x, int window);

/// One-sided periodogram of the mean-removed signal at frequencies
/// k/(m*dt), k = 0..floor(m/2). Power is |DFT|^2 folded onto positive
/// frequencies and scaled by 1/m^2, so the total power excluding the DC bin
/// equals the population variance of the signal. Requires length >= 8.
PowerSpectrum power_spectrum(const TimeSeries& series);

/// Lowest frequency at which the cumulative power (DC bin excluded) reaches
/// `fraction` of the total. Throws NoSignal when the spectrum carries no
/// power outside DC.
double estimate_cutoff_frequency(const PowerSpectrum& spectrum, double fraction = 0.95);

namespace core_detail {
/// mean(y) helper used across modules.
double mean(std::span<const double> x);
/// Integral of `derivative` shifted so its mean matches `y`'s.
std::vector<double> mean_aligned_integral(std::span<const double> derivative, double dt,
                                          std::span<const double> y);
}  // namespace core_detail

}  // namespace numdiff
