#pragma once

#include <optional>
#include <vector>

#include "enscast/stat_tests.hpp"

namespace enscast::detail {

struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
};

/// OLS of values on t = 1..n.
LineFit ols_line(const std::vector<double>& values);

/// Seasonal indices when the series is worth adjusting: the
/// seasonality test passes, the values are strictly positive and two
/// full periods are available. Otherwise nullopt (no adjustment).
std::optional<SeasonalIndices> maybe_seasonal_indices(const std::vector<double>& values,
                                                      int period);

}  // namespace enscast::detail
