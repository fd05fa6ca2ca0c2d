#include <algorithm>
#include <stdexcept>

#include "../optim.hpp"
#include "enscast/models.hpp"
#include "internal.hpp"

namespace enscast {

namespace {

constexpr double kAlphaLower = 0.0001;
constexpr double kAlphaUpper = 0.9999;
constexpr double kThetaLower = 1.0;
constexpr double kThetaUpper = 5.0;

struct ThetaFit {
    std::vector<double> adjusted;
    std::optional<SeasonalIndices> indices;
    double alpha = 0.0;
    double level = 0.0;  // final SES level on the adjusted series
    double slope = 0.0;  // full-sample OLS slope of the adjusted series
};

ThetaFit fit_theta_core(const std::vector<double>& values, int period) {
    ThetaFit fit;
    fit.indices = detail::maybe_seasonal_indices(values, period);
    fit.adjusted = fit.indices ? deseasonalize(values, *fit.indices) : values;
    fit.alpha = detail::golden_section_minimize(
        [&fit](double a) { return ses_sse(fit.adjusted, a); }, kAlphaLower, kAlphaUpper);
    fit.level = ses_level(fit.adjusted, fit.alpha);
    fit.slope = detail::ols_line(fit.adjusted).slope;
    return fit;
}

ForecastVector drift_forecast(const ThetaFit& fit, int h, std::size_t n, double drift_coeff) {
    ForecastVector out(static_cast<std::size_t>(h));
    for (int k = 0; k < h; ++k) {
        out[static_cast<std::size_t>(k)] = fit.level + drift_coeff * fit.slope * (k + 1);
    }
    if (fit.indices) out = reseasonalize(out, *fit.indices, n);
    return out;
}

/// In-sample one-step squared error of the drift predictor
/// level_t + u * slope as a function of u = 1 - 1/theta. Exactly
/// quadratic in u, so the golden section finds the global optimum.
double drift_sse(const std::vector<double>& adjusted, double alpha, double slope, double u) {
    double level = adjusted[0];
    double sse = 0.0;
    for (std::size_t t = 1; t < adjusted.size(); ++t) {
        const double e = adjusted[t] - (level + u * slope);
        sse += e * e;
        level = alpha * adjusted[t] + (1.0 - alpha) * level;
    }
    return sse;
}

}  // namespace

ForecastVector theta_forecast(const std::vector<double>& values, int h, int period) {
    if (values.size() < 3) throw std::invalid_argument("theta: need at least 3 observations");
    const ThetaFit fit = fit_theta_core(values, period);
    return drift_forecast(fit, h, values.size(), 0.5);
}

double otm_optimal_theta(const std::vector<double>& values, int period) {
    if (values.size() < 3) throw std::invalid_argument("otm: need at least 3 observations");
    const ThetaFit fit = fit_theta_core(values, period);
    const double theta = detail::golden_section_minimize(
        [&fit](double th) {
            return drift_sse(fit.adjusted, fit.alpha, fit.slope, 1.0 - 1.0 / th);
        },
        kThetaLower, kThetaUpper);
    return std::clamp(theta, kThetaLower, kThetaUpper);
}

ForecastVector otm_forecast(const std::vector<double>& values, int h, int period,
                            std::optional<double> fixed_theta) {
    if (values.size() < 3) throw std::invalid_argument("otm: need at least 3 observations");
    const ThetaFit fit = fit_theta_core(values, period);
    double theta;
    if (fixed_theta) {
        theta = *fixed_theta;
    } else {
        theta = detail::golden_section_minimize(
            [&fit](double th) {
                return drift_sse(fit.adjusted, fit.alpha, fit.slope, 1.0 - 1.0 / th);
            },
            kThetaLower, kThetaUpper);
    }
    return drift_forecast(fit, h, values.size(), 1.0 - 1.0 / theta);
}

}  // namespace enscast
