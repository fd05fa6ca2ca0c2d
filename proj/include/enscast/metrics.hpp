#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "enscast/series.hpp"

namespace enscast {

/// Symmetric MAPE on the fraction scale: mean over steps of
/// 2|F - Y| / (|F| + |Y|); a step with both magnitudes zero counts 0.
double smape(const std::vector<double>& forecast, const std::vector<double>& actual);

/// Single-step sMAPE term.
double smape_step(double forecast, double actual);

/// Mean absolute scaled error: forecast MAE over the in-sample
/// seasonal-naive MAE at the given period. Throws std::runtime_error
/// when the denominator is zero (seasonally constant in-sample part).
double mase(const std::vector<double>& forecast, const std::vector<double>& actual,
            const std::vector<double>& insample, int period);

/// Overall Weighted Average: mean of the sMAPE and MASE ratios against
/// the Naive 2 baselines. Baselines must be positive.
double owa(double smape_model, double mase_model, double smape_naive2, double mase_naive2);

struct EvalRow {
    std::size_t series_count = 0;
    double smape = 0.0;  // fraction scale
    double mase = 0.0;
    double owa = 0.0;
};

/// Accuracy summary per frequency plus an overall row, with the
/// corpus-level Naive 2 baselines used for the OWA.
struct EvalReport {
    std::map<Frequency, EvalRow> per_frequency;
    EvalRow overall;
    std::size_t mase_excluded = 0;  // series with undefined MASE

    /// Plain-text table; sMAPE printed both as fraction and percent.
    std::string to_text() const;
    /// CSV: frequency,count,smape_pct,mase,owa.
    std::string to_csv() const;
};

/// Per-series inputs for report aggregation.
struct SeriesScore {
    Frequency frequency = Frequency::Yearly;
    double smape = 0.0;
    double mase = 0.0;
    bool mase_defined = true;
    double naive2_smape = 0.0;
    double naive2_mase = 0.0;
};

/// Aggregates per-series scores into the report: per-frequency and
/// overall means, OWA against the same corpus' Naive 2 means.
/// Summation follows the input order for cross-run determinism.
EvalReport aggregate_scores_report(const std::vector<SeriesScore>& scores);

}  // namespace enscast
