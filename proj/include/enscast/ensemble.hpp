#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enscast/models.hpp"
#include "enscast/series.hpp"

namespace enscast {

/// How per-origin errors are averaged into one score per model.
/// Exponential weights origin k = 1..N (1 = most recent) by 2^-(k-1).
enum class AveragingKind { Mean, Exponential };

/// Score-to-weight formula g: inv = 1/(s+eps), sqr = inv^2,
/// exp = exp(inv).
enum class WeightingFormula { Inv, Sqr, Exp };

struct WeightingKind {
    WeightingFormula formula = WeightingFormula::Sqr;
    double epsilon = 1e-8;
};

/// Per-frequency configuration of the combination pipeline.
struct FrequencyParams {
    int origins = 1;  // N, 1 <= N <= h
    AveragingKind averaging = AveragingKind::Mean;
    WeightingKind weighting;
    std::optional<double> random_walk_threshold;  // t_rnd, daily only
    std::optional<double> analogy_threshold;      // t_cor
    bool analogy_enabled = false;
};

/// Defaults per the published configuration: N per frequency table,
/// f = mean except daily/yearly exponential, g = sqr except hourly inv
/// and weekly exp, t_rnd = 0.05 (daily), t_cor = 0.99 daily / 0.995
/// hourly, analogy on for daily and hourly.
FrequencyParams default_frequency_params(Frequency f);

using ScoreVector = std::vector<double>;

struct WeightVector {
    std::vector<double> raw;         // g(s_i), positive
    std::vector<double> normalized;  // raw / sum(raw), sums to 1
};

/// Rolling-origin one-step sMAPE errors: for j = 1..N the model is
/// fitted to the series minus its last j observations and scored on
/// the one-step-ahead forecast. Result ordered j = 1 (most recent
/// origin) first. Requires length - N >= 3.
std::vector<double> rolling_origin_errors(const ModelSpec& spec, const TimeSeries& series,
                                          int origins);

/// Averages per-origin errors with f (errors ordered most recent
/// first).
double aggregate_scores(const std::vector<double>& errors, AveragingKind averaging);

/// Converts aggregated scores to combination weights with g. For the
/// exponential formula the normalization shifts by the max exponent,
/// so normalized weights stay finite for any score scale.
WeightVector weights_from_scores(const ScoreVector& scores, const WeightingKind& weighting);

/// Per-step weighted mean with normalized weights, negatives clamped
/// to zero.
ForecastVector combine_forecasts(const std::vector<ForecastVector>& forecasts,
                                 const WeightVector& weights);

/// Everything forecast_series computes, kept for audit and plots.
struct CombinationResult {
    ForecastVector combination;
    WeightVector weights;
    std::vector<ForecastVector> model_forecasts;
    ScoreVector scores;
};

/// The core per-series procedure: rolling-origin errors on the full
/// series per pool model, aggregation with f, weights with g, h-step
/// forecasts from full-series fits, weighted combination.
CombinationResult forecast_series_detailed(const TimeSeries& series,
                                           const std::vector<ModelSpec>& pool,
                                           const FrequencyParams& params);

ForecastVector forecast_series(const TimeSeries& series, const std::vector<ModelSpec>& pool,
                               const FrequencyParams& params);

const char* averaging_name(AveragingKind k);
const char* weighting_name(WeightingFormula g);
AveragingKind averaging_from_name(const std::string& name);
WeightingFormula weighting_from_name(const std::string& name);

}  // namespace enscast
