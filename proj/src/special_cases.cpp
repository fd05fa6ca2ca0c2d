#include "enscast/special_cases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "enscast/metrics.hpp"

namespace enscast {

namespace {

struct WindowStats {
    double mean = 0.0;
    double sd = 0.0;  // population convention
};

WindowStats window_stats(const double* data, std::size_t len) {
    WindowStats st;
    for (std::size_t i = 0; i < len; ++i) st.mean += data[i];
    st.mean /= static_cast<double>(len);
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double d = data[i] - st.mean;
        acc += d * d;
    }
    st.sd = std::sqrt(acc / static_cast<double>(len));
    return st;
}

}  // namespace

const char* route_name(RouteKind kind) {
    switch (kind) {
        case RouteKind::Combination: return "combination";
        case RouteKind::RandomWalkNaive: return "naive1";
        case RouteKind::Analogy: return "analogy";
    }
    return "?";
}

bool is_random_walk(const TimeSeries& series, double t_rnd) {
    const SplitSeries split = split_train_holdout(series);
    const std::vector<double> naive(split.holdout.size(), split.train.values().back());
    return smape(naive, split.holdout) < t_rnd;
}

AnalogyMatch analogy_search(const std::vector<double>& target,
                            const std::vector<TimeSeries>& corpus, int window_len, int h) {
    if (window_len < 2) throw std::invalid_argument("analogy: window length must be >= 2");
    AnalogyMatch best;
    best.window_len = window_len;
    const std::size_t M = static_cast<std::size_t>(window_len);
    if (target.size() < M) return best;

    const double* x = target.data() + (target.size() - M);
    const WindowStats xs = window_stats(x, M);
    if (xs.sd <= 0.0) return best;

    for (const TimeSeries& source : corpus) {
        const auto& y = source.values();
        if (y.size() < M + static_cast<std::size_t>(h)) continue;
        const std::size_t last_start = y.size() - M - static_cast<std::size_t>(h);
        for (std::size_t i = 0; i <= last_start; ++i) {
            const WindowStats ws = window_stats(y.data() + i, M);
            if (ws.sd <= 0.0) continue;
            double cov = 0.0;
            for (std::size_t k = 0; k < M; ++k) {
                cov += (x[k] - xs.mean) * (y[i + k] - ws.mean);
            }
            const double r = cov / (static_cast<double>(M) * xs.sd * ws.sd);
            const bool better =
                r > best.correlation ||
                (r == best.correlation &&
                 (source.id() < best.source_id ||
                  (source.id() == best.source_id && i < best.offset)));
            if (better) {
                best.source_id = source.id();
                best.offset = i;
                best.correlation = r;
            }
        }
    }
    return best;
}

ForecastVector analogy_forecast(const std::vector<double>& target_window,
                                const std::vector<double>& matched_window,
                                const std::vector<double>& continuation) {
    if (target_window.empty() || matched_window.empty()) {
        throw std::invalid_argument("analogy_forecast: empty window");
    }
    const WindowStats xs = window_stats(target_window.data(), target_window.size());
    const WindowStats zs = window_stats(matched_window.data(), matched_window.size());
    if (zs.sd <= 0.0) {
        throw std::invalid_argument("analogy_forecast: matched window has zero variance");
    }
    const double scale = xs.sd / zs.sd;
    ForecastVector out(continuation.size());
    for (std::size_t k = 0; k < continuation.size(); ++k) {
        out[k] = (continuation[k] - zs.mean) * scale + xs.mean;
    }
    return out;
}

std::pair<RoutingDecision, ForecastVector> route(const TimeSeries& series,
                                                 const ForecastVector& combination_forecast,
                                                 const std::vector<TimeSeries>& corpus,
                                                 const FrequencyParams& params) {
    RoutingDecision decision;
    const int h = series.horizon();

    if (params.analogy_enabled && params.analogy_threshold) {
        const AnalogyMatch match = analogy_search(series.values(), corpus, 2 * h, h);
        if (match.found() && match.correlation > *params.analogy_threshold) {
            const auto& target = series.values();
            const std::size_t M = static_cast<std::size_t>(match.window_len);
            const std::vector<double> x_window(target.end() - static_cast<std::ptrdiff_t>(M),
                                               target.end());
            const TimeSeries* source = nullptr;
            for (const TimeSeries& s : corpus) {
                if (s.id() == match.source_id) {
                    source = &s;
                    break;
                }
            }
            if (source != nullptr) {
                const auto& z = source->values();
                const std::vector<double> z_window(
                    z.begin() + static_cast<std::ptrdiff_t>(match.offset),
                    z.begin() + static_cast<std::ptrdiff_t>(match.offset + M));
                const std::vector<double> z_cont(
                    z.begin() + static_cast<std::ptrdiff_t>(match.offset + M),
                    z.begin() + static_cast<std::ptrdiff_t>(match.offset + M +
                                                            static_cast<std::size_t>(h)));
                decision.kind = RouteKind::Analogy;
                decision.match = match;
                return {decision, analogy_forecast(x_window, z_window, z_cont)};
            }
        }
        decision.match = match;  // keep the best correlation for the audit
    }

    if (series.frequency() == Frequency::Daily && params.random_walk_threshold &&
        series.size() > static_cast<std::size_t>(h)) {
        const SplitSeries split = split_train_holdout(series);
        const std::vector<double> naive(split.holdout.size(), split.train.values().back());
        decision.naive1_smape = smape(naive, split.holdout);
        if (decision.naive1_smape < *params.random_walk_threshold) {
            decision.kind = RouteKind::RandomWalkNaive;
            return {decision, naive1_forecast(series.values(), h)};
        }
    }

    decision.kind = RouteKind::Combination;
    return {decision, combination_forecast};
}

}  // namespace enscast
