#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enscast/series.hpp"

namespace enscast {

/// Sample autocorrelations r_1..r_max_lag (demeaned, denominator n).
/// A zero-variance series yields all zeros.
std::vector<double> autocorrelations(const std::vector<double>& values, int max_lag);

/// 90% autocorrelation seasonality test: true iff
/// |r_m| > 1.645 * sqrt((1 + 2*sum_{i<m} r_i^2) / n).
/// Degenerate inputs (period 1, length < 3*period, zero variance)
/// return false.
bool seasonality_test(const std::vector<double>& values, int period);

/// Mann-Kendall trend test at 95% confidence, with tie correction.
/// Requires length >= 3.
bool mann_kendall_test(const std::vector<double>& values);

/// Z statistic behind mann_kendall_test (exposed for reporting).
double mann_kendall_z(const std::vector<double>& values);

/// Multiplicative seasonal indices, normalized to average 1.
struct SeasonalIndices {
    std::vector<double> indices;

    int period() const { return static_cast<int>(indices.size()); }
    double at(std::size_t position) const { return indices[position % indices.size()]; }
};

/// Classical multiplicative decomposition: centered moving average,
/// detrended ratios, per-season means, normalized so the indices
/// average 1. Requires length >= 2*period and strictly positive values.
SeasonalIndices classical_decomposition(const std::vector<double>& values, int period);

/// Divides each observation by its seasonal index (cycle starts at 0).
std::vector<double> deseasonalize(const std::vector<double>& values,
                                  const SeasonalIndices& indices);

/// Multiplies forecast step k by the index at cycle position phase + k.
/// phase is the cycle position of the first forecast step, i.e. n % m
/// when forecasting right after n observations.
std::vector<double> reseasonalize(const std::vector<double>& forecast,
                                  const SeasonalIndices& indices, std::size_t phase);

/// Frequency plus trend/seasonality flags; flags are set only for
/// yearly, quarterly and monthly series (13 reachable classes).
struct SeriesClass {
    Frequency frequency = Frequency::Yearly;
    std::optional<bool> has_trend;
    std::optional<bool> has_seasonality;
};

/// Stable textual key, e.g. "quarterly trend no-seasonal", "daily".
std::string class_key(const SeriesClass& cls);

/// Assigns the series to one of the 13 classes. The tests run on the
/// training part (series minus the final h observations): class
/// membership drives pool/parameter choices that are tuned against the
/// holdout, so the holdout itself must not influence it.
SeriesClass classify_series(const TimeSeries& series);

}  // namespace enscast
