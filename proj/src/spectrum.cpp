#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include <fftw3.h>

#include "numdiff/core.hpp"
#include "numdiff/kernels.hpp"

namespace numdiff {
namespace {

// FFTW plan creation/destruction is not thread-safe; execution of a private
// plan is. Guard the planner so power_spectrum stays concurrently callable.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

PowerSpectrum power_spectrum(const TimeSeries& series) {
    const std::size_t m = series.size();
    if (m < 8) throw InvalidInput("power_spectrum: need at least 8 samples");

    std::vector<double> centered(series.values());
    const double mu = core_detail::mean(centered);
    for (double& v : centered) v -= mu;

    const std::size_t bins = m / 2 + 1;
    std::vector<fftw_complex> out(bins);
    {
        fftw_plan plan;
        {
            std::lock_guard<std::mutex> lock(planner_mutex());
            plan = fftw_plan_dft_r2c_1d(static_cast<int>(m), centered.data(), out.data(),
                                        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
        }
        fftw_execute(plan);
        {
            std::lock_guard<std::mutex> lock(planner_mutex());
            fftw_destroy_plan(plan);
        }
    }

    // |DFT|^2 folded one-sided and scaled by 1/m^2: the sum over non-DC bins
    // then equals the population variance of the signal (Parseval).
    PowerSpectrum spec;
    spec.frequencies.resize(bins);
    spec.power.resize(bins);
    const double df = 1.0 / (static_cast<double>(m) * series.dt());
    const double scale = 1.0 / (static_cast<double>(m) * static_cast<double>(m));
    for (std::size_t k = 0; k < bins; ++k) {
        spec.frequencies[k] = df * static_cast<double>(k);
        const double mag2 = out[k][0] * out[k][0] + out[k][1] * out[k][1];
        const bool self_conjugate = (k == 0) || (m % 2 == 0 && k == bins - 1);
        spec.power[k] = (self_conjugate ? 1.0 : 2.0) * mag2 * scale;
    }
    return spec;
}

double estimate_cutoff_frequency(const PowerSpectrum& spectrum, double fraction) {
    if (spectrum.frequencies.size() != spectrum.power.size() || spectrum.power.size() < 2) {
        throw InvalidInput("estimate_cutoff_frequency: malformed spectrum");
    }
    if (!(fraction > 0.0) || fraction > 1.0) {
        throw InvalidInput("estimate_cutoff_frequency: fraction must be in (0, 1]");
    }
    const std::span<const double> tail(spectrum.power.data() + 1, spectrum.power.size() - 1);
    const double total = kernels::sum(tail);
    if (!(total > 0.0)) {
        throw NoSignal("estimate_cutoff_frequency: spectrum carries no power outside DC");
    }
    const double target = fraction * total;
    double cum = 0.0;
    for (std::size_t k = 1; k < spectrum.power.size(); ++k) {
        cum += spectrum.power[k];
        if (cum >= target) return spectrum.frequencies[k];
    }
    return spectrum.frequencies.back();
}

}  // namespace numdiff
