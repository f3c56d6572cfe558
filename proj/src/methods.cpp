#include "numdiff/methods.hpp"

#include <cmath>
#include <cstdio>

namespace numdiff {

const char* method_name(Method method) {
    switch (method) {
        case Method::butterworth: return "butterworth";
        case Method::savgol: return "savgol";
        case Method::kalman: return "kalman";
        case Method::tvrj: return "tvrj";
    }
    return "unknown";
}

Method method_from_name(const std::string& name) {
    if (name == "butterworth") return Method::butterworth;
    if (name == "savgol") return Method::savgol;
    if (name == "kalman") return Method::kalman;
    if (name == "tvrj") return Method::tvrj;
    throw InvalidInput("unknown method '" + name +
                       "' (expected butterworth|savgol|kalman|tvrj)");
}

Method method_of(const MethodParams& params) {
    return std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ButterworthParams>) return Method::butterworth;
            if constexpr (std::is_same_v<T, SavGolParams>) return Method::savgol;
            if constexpr (std::is_same_v<T, KalmanParams>) return Method::kalman;
            if constexpr (std::is_same_v<T, TvrjParams>) return Method::tvrj;
        },
        params);
}

std::string format_params(const MethodParams& params) {
    char buf[160];
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ButterworthParams>) {
                std::snprintf(buf, sizeof(buf), "order=%d;cutoff=%.10g", p.order, p.cutoff);
            } else if constexpr (std::is_same_v<T, SavGolParams>) {
                std::snprintf(buf, sizeof(buf), "window=%d;polyorder=%d;smooth_window=%d",
                              p.window, p.polyorder, p.smooth_window);
            } else if constexpr (std::is_same_v<T, KalmanParams>) {
                std::snprintf(buf, sizeof(buf), "q=%.10g;r=%.10g", p.q, p.r);
            } else {
                std::snprintf(buf, sizeof(buf), "gamma_tv=%.10g", p.gamma_tv);
            }
        },
        params);
    return buf;
}

void validate(const ButterworthParams& p, const TimeSeries& series) {
    if (p.order < 1) throw InvalidInput("butterworth: order must be >= 1");
    if (!(p.cutoff > 0.0) || !(p.cutoff < series.nyquist())) {
        throw InvalidInput("butterworth: cutoff must lie in (0, Nyquist)");
    }
    const std::size_t pad = 3 * (static_cast<std::size_t>(p.order) + 1);
    if (series.size() < pad + 1) {
        throw InvalidInput("butterworth: series too short for reflection padding");
    }
}

void validate(const SavGolParams& p, const TimeSeries& series) {
    if (p.window < 3 || p.window % 2 == 0) throw InvalidInput("savgol: window must be odd, >= 3");
    if (static_cast<std::size_t>(p.window) > series.size()) {
        throw InvalidInput("savgol: window exceeds series length");
    }
    if (p.polyorder < 1 || p.polyorder >= p.window) {
        throw InvalidInput("savgol: polyorder must lie in [1, window - 1]");
    }
    if (p.smooth_window < 1 || p.smooth_window % 2 == 0 ||
        static_cast<std::size_t>(p.smooth_window) > series.size()) {
        throw InvalidInput("savgol: smooth_window must be odd, >= 1 and <= length");
    }
}

void validate(const KalmanParams& p, const TimeSeries&) {
    if (!(p.q > 0.0) || !std::isfinite(p.q)) throw InvalidInput("kalman: q must be positive");
    if (!(p.r > 0.0) || !std::isfinite(p.r)) throw InvalidInput("kalman: r must be positive");
}

void validate(const TvrjParams& p, const TimeSeries& series) {
    if (!(p.gamma_tv >= 0.0) || !std::isfinite(p.gamma_tv)) {
        throw InvalidInput("tvrj: gamma_tv must be nonnegative");
    }
    if (series.size() < 8) throw InvalidInput("tvrj: need at least 8 samples");
}

void validate(const MethodParams& p, const TimeSeries& series) {
    std::visit([&](const auto& v) { validate(v, series); }, p);
}

DerivativeEstimate differentiate(const TimeSeries& series, const MethodParams& params) {
    return std::visit(
        [&](const auto& p) -> DerivativeEstimate {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ButterworthParams>) return butterworth_diff(series, p);
            if constexpr (std::is_same_v<T, SavGolParams>) return savgol_diff(series, p);
            if constexpr (std::is_same_v<T, KalmanParams>) return kalman_diff(series, p);
            if constexpr (std::is_same_v<T, TvrjParams>) return tvrj_diff(series, p);
        },
        params);
}

}  // namespace numdiff
