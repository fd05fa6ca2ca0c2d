#pragma once

#include <limits>
#include <string>
#include <vector>

#include "enscast/ensemble.hpp"
#include "enscast/series.hpp"

namespace enscast {

/// Best correlated window found by the analogy scan.
struct AnalogyMatch {
    std::string source_id;
    std::size_t offset = 0;  // start index of the window inside the source
    double correlation = -std::numeric_limits<double>::infinity();
    int window_len = 0;

    bool found() const { return correlation > -std::numeric_limits<double>::infinity(); }
};

enum class RouteKind { Combination, RandomWalkNaive, Analogy };

struct RoutingDecision {
    RouteKind kind = RouteKind::Combination;
    AnalogyMatch match;           // set for Analogy
    double naive1_smape = -1.0;   // set when the random-walk check ran
};

const char* route_name(RouteKind kind);

/// Random-walk label: the Naive 1 forecast from the series' own
/// training part scores below t_rnd on the final h observations.
bool is_random_walk(const TimeSeries& series, double t_rnd);

/// Exhaustive scan of every window of every corpus series (same
/// frequency) against the last window_len observations of the target.
/// Window starts run over 0..len-h-window_len so the h-step
/// continuation always fits inside the source, which also excludes the
/// target's own terminal window. Zero-variance windows are skipped;
/// ties break by (source id, smallest offset). Returns a no-match
/// sentinel (correlation -inf) when nothing qualifies.
AnalogyMatch analogy_search(const std::vector<double>& target,
                            const std::vector<TimeSeries>& corpus, int window_len, int h);

/// Affine replacement forecast:
/// (Z'' - mean(Z')) * sigma(X')/sigma(Z') + mean(X').
/// Requires sigma(Z') > 0.
ForecastVector analogy_forecast(const std::vector<double>& target_window,
                                const std::vector<double>& matched_window,
                                const std::vector<double>& continuation);

/// Applies the special-case heuristics after the combination forecast:
/// analogy replacement (daily/hourly, monthly when enabled) when the
/// best correlation exceeds t_cor with window 2h, otherwise Naive 1
/// for daily series labeled random, otherwise the combination.
std::pair<RoutingDecision, ForecastVector> route(const TimeSeries& series,
                                                 const ForecastVector& combination_forecast,
                                                 const std::vector<TimeSeries>& corpus,
                                                 const FrequencyParams& params);

}  // namespace enscast
