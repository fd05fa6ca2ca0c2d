#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "enscast/series.hpp"

namespace enscast {

enum class ModelFamily {
    Naive1,
    Naive2,
    SES,
    ETSAuto,
    Theta,
    OptimizedTheta,
    ArimaAuto,
    LinearTrend,
    Mean,
};

enum class Regressor { Constant, Linear, Logarithmic };

/// One base model variant of the pool. Options beyond the family:
/// damping / trend removal (ETS), regressor set (linear trend), a
/// trailing-window trim, a seasonal period override (hourly 24/168,
/// weekly 1/52), and application to deseasonalized data.
struct ModelSpec {
    ModelFamily family = ModelFamily::Naive1;
    std::optional<bool> damped;           // ETSAuto: force damped trend
    std::optional<bool> trend_disabled;   // ETSAuto: level-only candidates
    std::set<Regressor> regressors;       // LinearTrend
    std::optional<int> trim;              // keep only the trailing observations
    std::optional<int> seasonal_period_override;
    bool apply_deseasonalized = false;

    /// Display name following the usual conventions ("Auto ARIMA",
    /// "LR (1, t)", "Theta, freq 168", "Seas. SES", ...).
    std::string display_name() const;

    /// Compact config token, e.g. "ets damped trim=504 period=168".
    std::string token() const;
};

ModelSpec parse_model_spec(const std::string& token);

/// Validates option combinations for the frequency the spec is used
/// with (period overrides, trim >= 2 * effective period).
void validate_model_spec(const ModelSpec& spec, Frequency frequency);

using ForecastVector = std::vector<double>;

/// Effective seasonal period of a spec applied to a frequency.
int effective_period(const ModelSpec& spec, Frequency frequency);

/// Fits the specified model to the series and produces h point
/// forecasts. Applies the trim first, then the optional deseasonalized
/// wrapper. Fit failures (or non-finite output) fall back to Naive 1
/// with a logged warning; this function never throws on numeric
/// trouble so a long batch cannot die on one pathological series.
ForecastVector forecast(const ModelSpec& spec, const TimeSeries& series, int h);

// Family implementations. All take plain value vectors; seasonal
// handling is internal where the family defines it.

ForecastVector naive1_forecast(const std::vector<double>& values, int h);

/// Seasonally adjusted naive: when the seasonality test passes,
/// deseasonalize, repeat the last adjusted value, reseasonalize;
/// otherwise identical to Naive 1.
ForecastVector naive2_forecast(const std::vector<double>& values, int h, int period);

/// Simple exponential smoothing, alpha optimized over
/// [0.0001, 0.9999] against in-sample one-step squared error unless
/// fixed_alpha is given. Flat forecast at the final level.
ForecastVector ses_forecast(const std::vector<double>& values, int h,
                            std::optional<double> fixed_alpha = std::nullopt);

/// The SES level after the full pass (exposed for the Theta drift).
double ses_level(const std::vector<double>& values, double alpha);

/// In-sample one-step SSE of SES at a given alpha.
double ses_sse(const std::vector<double>& values, double alpha);

/// Automatic additive-error exponential smoothing state-space model:
/// trend in {none, additive, damped}, season in {none, additive,
/// multiplicative}; parameters by Nelder-Mead on the one-step squared
/// error, selection by AICc. damped forces a damped trend; trend_disabled
/// keeps level-only candidates.
ForecastVector ets_auto_forecast(const std::vector<double>& values, int h, int period,
                                 std::optional<bool> damped = std::nullopt,
                                 std::optional<bool> trend_disabled = std::nullopt);

/// Classic Theta method: seasonal adjustment when the seasonality test
/// passes, SES level plus half the OLS slope as drift, reseasonalized.
ForecastVector theta_forecast(const std::vector<double>& values, int h, int period);

/// Optimized Theta: drift scaled by (1 - 1/theta) with theta chosen in
/// [1, 5] by in-sample one-step squared error (theta = 2 reproduces
/// theta_forecast exactly). fixed_theta bypasses the optimization.
ForecastVector otm_forecast(const std::vector<double>& values, int h, int period,
                            std::optional<double> fixed_theta = std::nullopt);

/// The optimized theta coefficient (exposed for tests/diagnostics).
double otm_optimal_theta(const std::vector<double>& values, int period);

/// Automatic ARIMA: grid over p,q in 0..3, d around a
/// successive-differencing variance heuristic, and (when period > 1)
/// P,Q in {0,1}, D in {0,1}; conditional-sum-of-squares estimation and
/// AICc selection on one-step errors over a common range.
ForecastVector arima_auto_forecast(const std::vector<double>& values, int h, int period);

/// OLS of the series on the selected trend regressors over t = 1..n
/// (constant -> 1, linear -> t, logarithmic -> ln t), evaluated at
/// t = n+1..n+h.
ForecastVector linear_trend_forecast(const std::vector<double>& values, int h,
                                     const std::set<Regressor>& regressors);

ForecastVector mean_forecast(const std::vector<double>& values, int h);

}  // namespace enscast
