#pragma once

#include <string>
#include <utility>
#include <vector>

#include "enscast/ensemble.hpp"
#include "enscast/metrics.hpp"

namespace enscast {

struct EliminationStep {
    std::string model;
    bool removed = false;
    double error_before = 0.0;
    double error_after = 0.0;
};

struct PoolSelectionResult {
    std::vector<ModelSpec> pool;
    double holdout_owa = 0.0;
    std::vector<EliminationStep> elimination_log;

    /// CSV audit of the greedy elimination: model,action,error_before,error_after.
    std::string log_csv() const;
};

/// Mean holdout OWA of the combination over the series set: each
/// series is split, forecast from its training part, and scored
/// against the holdout; Naive 2 on the same splits provides the
/// baselines. Series with undefined MASE are excluded from the MASE
/// mean with a warning.
double holdout_error(const std::vector<ModelSpec>& pool, const std::vector<TimeSeries>& series_set,
                     const FrequencyParams& params);

/// Greedy pool selection: per-model holdout errors, sort by error
/// descending, then try removing models in that order and revert any
/// removal that strictly increases the combination's holdout error.
/// Never returns an empty pool.
PoolSelectionResult select_pool(const std::vector<ModelSpec>& default_pool,
                                const std::vector<TimeSeries>& series_set,
                                const FrequencyParams& params);

/// Scans N = 1..h (f = mean), then f at the chosen N. Ties keep the
/// smaller N and the mean.
std::pair<int, AveragingKind> tune_rolling_params(const std::vector<ModelSpec>& pool,
                                                  const std::vector<TimeSeries>& series_set,
                                                  Frequency frequency);

/// Evaluates g in {sqr, inv, exp} at fixed (N, f); first (default)
/// candidate wins ties.
WeightingFormula tune_weighting(const std::vector<ModelSpec>& pool,
                                const std::vector<TimeSeries>& series_set, int origins,
                                AveragingKind averaging);

/// Scans t_rnd over the 10 values 0.01..0.10 (daily routing only,
/// analogy off) and then t_cor over {0.95, 0.96, 0.97, 0.98, 0.99,
/// 0.995, 0.999} with full routing, scoring each candidate's routed
/// forecast set by holdout OWA. combination_forecasts[i] must be the
/// combination computed from the training part of series_set[i].
/// Defaults win when no candidate strictly improves.
std::pair<double, double> tune_thresholds(const std::vector<TimeSeries>& series_set,
                                          const std::vector<ForecastVector>& combination_forecasts,
                                          const FrequencyParams& params);

}  // namespace enscast
