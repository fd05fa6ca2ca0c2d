#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "../optim.hpp"
#include "enscast/models.hpp"
#include "enscast/stat_tests.hpp"
#include "internal.hpp"

namespace enscast {

namespace {

enum class TrendType { None, Additive, Damped };
enum class SeasonType { None, Additive, Multiplicative };

constexpr double kAlphaLower = 0.0001;
constexpr double kAlphaUpper = 0.9999;
constexpr double kPhiLower = 0.80;
constexpr double kPhiUpper = 0.98;
constexpr double kBad = std::numeric_limits<double>::max();

struct EtsState {
    double level = 0.0;
    double trend = 0.0;
    std::vector<double> season;  // ring of m values, slot t % m
};

struct EtsParams {
    double alpha = 0.5;
    double beta = 0.0;
    double gamma = 0.0;
    double phi = 1.0;
};

struct EtsCandidate {
    TrendType trend = TrendType::None;
    SeasonType season = SeasonType::None;
    int m = 1;
    EtsState init;
    EtsParams params;
    double aicc = kBad;
};

/// Additive-error recursion; returns the one-step SSE or kBad when the
/// state degenerates.
double ets_sse(const std::vector<double>& values, const EtsCandidate& cand, const EtsParams& p,
               EtsState* final_state = nullptr) {
    EtsState st = cand.init;
    const std::size_t m = st.season.empty() ? 1 : st.season.size();
    double sse = 0.0;
    for (std::size_t t = 0; t < values.size(); ++t) {
        const double phi_b = cand.trend == TrendType::None
                                 ? 0.0
                                 : (cand.trend == TrendType::Damped ? p.phi * st.trend : st.trend);
        const double base = st.level + phi_b;
        double s_used = 1.0;
        double mu = base;
        if (cand.season == SeasonType::Additive) {
            s_used = st.season[t % m];
            mu = base + s_used;
        } else if (cand.season == SeasonType::Multiplicative) {
            s_used = st.season[t % m];
            if (std::abs(s_used) < 1e-10 || std::abs(base) < 1e-10) return kBad;
            mu = base * s_used;
        }
        if (!std::isfinite(mu)) return kBad;
        const double e = values[t] - mu;
        sse += e * e;

        const double adj = cand.season == SeasonType::Multiplicative ? e / s_used : e;
        st.level = base + p.alpha * adj;
        if (cand.trend != TrendType::None) st.trend = phi_b + p.beta * adj;
        if (cand.season == SeasonType::Additive) {
            st.season[t % m] = s_used + p.gamma * e;
        } else if (cand.season == SeasonType::Multiplicative) {
            st.season[t % m] = s_used + p.gamma * e / base;
        }
    }
    if (!std::isfinite(sse)) return kBad;
    if (final_state) *final_state = st;
    return sse;
}

/// Heuristic initial state: seasonal part from a classical
/// decomposition, level/trend from a line through the first adjusted
/// observations.
bool initial_state(const std::vector<double>& values, TrendType trend, SeasonType season, int m,
                   EtsState* out) {
    std::vector<double> adjusted = values;
    out->season.clear();
    if (season != SeasonType::None) {
        const std::size_t mm = static_cast<std::size_t>(m);
        if (values.size() < 2 * mm) return false;
        if (season == SeasonType::Multiplicative) {
            for (double v : values) {
                if (v <= 0.0) return false;
            }
            SeasonalIndices idx = classical_decomposition(values, m);
            out->season = idx.indices;
            adjusted = deseasonalize(values, idx);
        } else {
            // additive analogue of the multiplicative decomposition
            std::vector<double> sums(mm, 0.0), counts(mm, 0.0);
            const bool even = (mm % 2 == 0);
            const std::size_t half = mm / 2;
            for (std::size_t t = half; t + half < values.size(); ++t) {
                double acc = even ? 0.5 * values[t - half] + 0.5 * values[t + half] : 0.0;
                const std::size_t lo = even ? t - half + 1 : t - half;
                const std::size_t hi = even ? t + half - 1 : t + half;
                for (std::size_t k = lo; k <= hi; ++k) acc += values[k];
                const double trend_val = acc / static_cast<double>(mm);
                sums[t % mm] += values[t] - trend_val;
                counts[t % mm] += 1.0;
            }
            out->season.assign(mm, 0.0);
            for (std::size_t s = 0; s < mm; ++s) {
                if (counts[s] > 0.0) out->season[s] = sums[s] / counts[s];
            }
            const double mean =
                std::accumulate(out->season.begin(), out->season.end(), 0.0) / static_cast<double>(mm);
            for (double& s : out->season) s -= mean;
            adjusted.resize(values.size());
            for (std::size_t t = 0; t < values.size(); ++t) {
                adjusted[t] = values[t] - out->season[t % mm];
            }
        }
    }

    const std::size_t lead = std::min(adjusted.size(),
                                      std::max<std::size_t>(10, 2 * static_cast<std::size_t>(m)));
    std::vector<double> head(adjusted.begin(), adjusted.begin() + static_cast<std::ptrdiff_t>(lead));
    if (trend == TrendType::None) {
        out->level = std::accumulate(head.begin(), head.end(), 0.0) / static_cast<double>(head.size());
        out->trend = 0.0;
    } else {
        const detail::LineFit line = detail::ols_line(head);
        out->level = line.intercept;
        out->trend = line.slope;
    }
    return std::isfinite(out->level) && std::isfinite(out->trend);
}

int parameter_count(TrendType trend, SeasonType season, int m) {
    int smoothing = 1;  // alpha
    if (trend != TrendType::None) smoothing += 1;
    if (trend == TrendType::Damped) smoothing += 1;
    if (season != SeasonType::None) smoothing += 1;
    int states = 1 + (trend != TrendType::None ? 1 : 0) +
                 (season != SeasonType::None ? m - 1 : 0);
    return smoothing + states + 1;  // + residual variance
}

ForecastVector ets_point_forecast(const EtsCandidate& cand, const EtsState& st, std::size_t n,
                                  int h) {
    ForecastVector out(static_cast<std::size_t>(h));
    const std::size_t m = st.season.empty() ? 1 : st.season.size();
    double phi_sum = 0.0;
    for (int k = 1; k <= h; ++k) {
        switch (cand.trend) {
            case TrendType::None: break;
            case TrendType::Additive: phi_sum = static_cast<double>(k); break;
            case TrendType::Damped: phi_sum += std::pow(cand.params.phi, k); break;
        }
        double value = st.level + phi_sum * st.trend;
        if (cand.season == SeasonType::Additive) {
            value += st.season[(n + static_cast<std::size_t>(k) - 1) % m];
        } else if (cand.season == SeasonType::Multiplicative) {
            value *= st.season[(n + static_cast<std::size_t>(k) - 1) % m];
        }
        out[static_cast<std::size_t>(k - 1)] = value;
    }
    return out;
}

}  // namespace

ForecastVector ets_auto_forecast(const std::vector<double>& values, int h, int period,
                                 std::optional<bool> damped,
                                 std::optional<bool> trend_disabled) {
    const std::size_t n = values.size();
    if (n < 3) throw std::invalid_argument("ets: need at least 3 observations");

    std::vector<TrendType> trends;
    if (trend_disabled.value_or(false)) {
        trends = {TrendType::None};
    } else if (damped.value_or(false)) {
        trends = {TrendType::Damped};
    } else {
        trends = {TrendType::None, TrendType::Additive};
    }
    std::vector<SeasonType> seasons = {SeasonType::None};
    if (period > 1 && n >= 2 * static_cast<std::size_t>(period)) {
        seasons.push_back(SeasonType::Additive);
        if (std::all_of(values.begin(), values.end(), [](double v) { return v > 0.0; })) {
            seasons.push_back(SeasonType::Multiplicative);
        }
    }

    EtsCandidate best;
    EtsState best_state;
    bool have_best = false;

    for (SeasonType season : seasons) {
        for (TrendType trend : trends) {
            EtsCandidate cand;
            cand.trend = trend;
            cand.season = season;
            cand.m = season == SeasonType::None ? 1 : period;

            const int k = parameter_count(trend, season, cand.m);
            if (static_cast<double>(n) - k - 1 <= 0) continue;
            if (!initial_state(values, trend, season, cand.m, &cand.init)) continue;

            // active parameters: alpha [, beta] [, phi] [, gamma]
            std::vector<double> start = {0.5};
            std::vector<double> lower = {kAlphaLower};
            std::vector<double> upper = {kAlphaUpper};
            const bool has_trend = trend != TrendType::None;
            const bool has_phi = trend == TrendType::Damped;
            const bool has_season = season != SeasonType::None;
            if (has_trend) {
                start.push_back(0.1);
                lower.push_back(kAlphaLower);
                upper.push_back(kAlphaUpper);
            }
            if (has_phi) {
                start.push_back(0.95);
                lower.push_back(kPhiLower);
                upper.push_back(kPhiUpper);
            }
            if (has_season) {
                start.push_back(0.05);
                lower.push_back(kAlphaLower);
                upper.push_back(kAlphaUpper);
            }

            auto unpack = [&](const std::vector<double>& v) {
                EtsParams p;
                std::size_t i = 0;
                p.alpha = v[i++];
                if (has_trend) p.beta = v[i++];
                if (has_phi) p.phi = v[i++];
                if (has_season) p.gamma = v[i++];
                return p;
            };
            auto objective = [&](const std::vector<double>& v) {
                const EtsParams p = unpack(v);
                if (p.beta > p.alpha) return kBad;          // usual admissibility
                if (p.gamma > 1.0 - p.alpha) return kBad;
                return ets_sse(values, cand, p);
            };

            const std::vector<double> opt =
                detail::nelder_mead_minimize(objective, start, lower, upper, 1e-6);
            cand.params = unpack(opt);
            EtsState final_state;
            const double sse = ets_sse(values, cand, cand.params, &final_state);
            if (sse >= kBad) continue;

            const double dn = static_cast<double>(n);
            double aicc = dn * std::log(std::max(sse, 1e-12) / dn) + 2.0 * k +
                          2.0 * k * (k + 1.0) / (dn - k - 1.0);
            if (!have_best || aicc < best.aicc) {
                best = cand;
                best.aicc = aicc;
                best_state = final_state;
                have_best = true;
            }
        }
    }

    if (!have_best) throw std::runtime_error("ets: no admissible candidate");
    return ets_point_forecast(best, best_state, n, h);
}

}  // namespace enscast
