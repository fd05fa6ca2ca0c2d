#include "enscast/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "enscast/metrics.hpp"

namespace enscast {

FrequencyParams default_frequency_params(Frequency f) {
    FrequencyParams p;
    p.origins = default_origins(f);
    p.averaging = (f == Frequency::Daily || f == Frequency::Yearly) ? AveragingKind::Exponential
                                                                    : AveragingKind::Mean;
    p.weighting.formula = f == Frequency::Hourly  ? WeightingFormula::Inv
                          : f == Frequency::Weekly ? WeightingFormula::Exp
                                                   : WeightingFormula::Sqr;
    if (f == Frequency::Daily) {
        p.random_walk_threshold = 0.05;
        p.analogy_threshold = 0.99;
        p.analogy_enabled = true;
    } else if (f == Frequency::Hourly) {
        p.analogy_threshold = 0.995;
        p.analogy_enabled = true;
    } else if (f == Frequency::Monthly) {
        p.analogy_threshold = 0.995;  // used only when monthly analogy is enabled
        p.analogy_enabled = false;
    }
    return p;
}

std::vector<double> rolling_origin_errors(const ModelSpec& spec, const TimeSeries& series,
                                          int origins) {
    if (origins < 1) throw std::invalid_argument("rolling origin: need at least one origin");
    const std::size_t n = series.size();
    if (n < static_cast<std::size_t>(origins) + 3) {
        throw std::invalid_argument("rolling origin: series " + series.id() + " too short for " +
                                    spec.display_name() + " with " + std::to_string(origins) +
                                    " origins");
    }
    std::vector<double> errors(static_cast<std::size_t>(origins));
    const auto& values = series.values();
    for (int j = 1; j <= origins; ++j) {
        std::vector<double> head(values.begin(), values.end() - j);
        TimeSeries train(series.id(), series.frequency(), std::move(head));
        const ForecastVector f = forecast(spec, train, 1);
        const double actual = values[n - static_cast<std::size_t>(j)];
        errors[static_cast<std::size_t>(j - 1)] = smape_step(f[0], actual);
    }
    return errors;
}

double aggregate_scores(const std::vector<double>& errors, AveragingKind averaging) {
    if (errors.empty()) throw std::invalid_argument("aggregate_scores: empty error vector");
    if (averaging == AveragingKind::Mean) {
        double acc = 0.0;
        for (double e : errors) acc += e;
        return acc / static_cast<double>(errors.size());
    }
    double acc = 0.0, weight_sum = 0.0;
    double w = 1.0;  // origin k = 1 (most recent) counts the most
    for (double e : errors) {
        acc += w * e;
        weight_sum += w;
        w *= 0.5;
    }
    return acc / weight_sum;
}

WeightVector weights_from_scores(const ScoreVector& scores, const WeightingKind& weighting) {
    if (scores.empty()) throw std::invalid_argument("weights_from_scores: empty score vector");
    WeightVector out;
    out.raw.resize(scores.size());
    out.normalized.resize(scores.size());

    std::vector<double> inv(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!(scores[i] >= 0.0) || !std::isfinite(scores[i])) {
            throw std::invalid_argument("weights_from_scores: scores must be finite and >= 0");
        }
        inv[i] = 1.0 / (scores[i] + weighting.epsilon);
    }

    switch (weighting.formula) {
        case WeightingFormula::Inv:
        case WeightingFormula::Sqr: {
            double sum = 0.0;
            for (std::size_t i = 0; i < scores.size(); ++i) {
                out.raw[i] = weighting.formula == WeightingFormula::Inv ? inv[i] : inv[i] * inv[i];
                sum += out.raw[i];
            }
            for (std::size_t i = 0; i < scores.size(); ++i) out.normalized[i] = out.raw[i] / sum;
            break;
        }
        case WeightingFormula::Exp: {
            // normalize in the exponent domain so huge 1/(s+eps) values
            // cannot overflow the ratio
            const double shift = *std::max_element(inv.begin(), inv.end());
            double sum = 0.0;
            for (std::size_t i = 0; i < scores.size(); ++i) {
                out.raw[i] = std::exp(inv[i]);  // reported raw weight, may saturate
                sum += std::exp(inv[i] - shift);
            }
            for (std::size_t i = 0; i < scores.size(); ++i) {
                out.normalized[i] = std::exp(inv[i] - shift) / sum;
            }
            break;
        }
    }
    return out;
}

ForecastVector combine_forecasts(const std::vector<ForecastVector>& forecasts,
                                 const WeightVector& weights) {
    if (forecasts.empty()) throw std::invalid_argument("combine_forecasts: no forecasts");
    if (forecasts.size() != weights.normalized.size()) {
        throw std::invalid_argument("combine_forecasts: " + std::to_string(forecasts.size()) +
                                    " forecasts vs " + std::to_string(weights.normalized.size()) +
                                    " weights");
    }
    const std::size_t h = forecasts.front().size();
    for (const auto& f : forecasts) {
        if (f.size() != h) {
            throw std::invalid_argument("combine_forecasts: forecasts differ in length");
        }
    }
    ForecastVector out(h, 0.0);
    for (std::size_t t = 0; t < h; ++t) {
        double acc = 0.0;
        for (std::size_t i = 0; i < forecasts.size(); ++i) {
            acc += weights.normalized[i] * forecasts[i][t];
        }
        out[t] = std::max(acc, 0.0);
    }
    return out;
}

CombinationResult forecast_series_detailed(const TimeSeries& series,
                                           const std::vector<ModelSpec>& pool,
                                           const FrequencyParams& params) {
    if (pool.empty()) throw std::invalid_argument("forecast_series: empty model pool");
    const int h = series.horizon();

    CombinationResult result;
    result.scores.reserve(pool.size());
    result.model_forecasts.reserve(pool.size());
    for (const ModelSpec& spec : pool) {
        const auto errors = rolling_origin_errors(spec, series, params.origins);
        result.scores.push_back(aggregate_scores(errors, params.averaging));
        result.model_forecasts.push_back(forecast(spec, series, h));
    }
    result.weights = weights_from_scores(result.scores, params.weighting);
    result.combination = combine_forecasts(result.model_forecasts, result.weights);
    return result;
}

ForecastVector forecast_series(const TimeSeries& series, const std::vector<ModelSpec>& pool,
                               const FrequencyParams& params) {
    return forecast_series_detailed(series, pool, params).combination;
}

const char* averaging_name(AveragingKind k) {
    return k == AveragingKind::Mean ? "mean" : "exponential";
}

const char* weighting_name(WeightingFormula g) {
    switch (g) {
        case WeightingFormula::Inv: return "inv";
        case WeightingFormula::Sqr: return "sqr";
        case WeightingFormula::Exp: return "exp";
    }
    return "?";
}

AveragingKind averaging_from_name(const std::string& name) {
    if (name == "mean") return AveragingKind::Mean;
    if (name == "exponential" || name == "exp") return AveragingKind::Exponential;
    throw std::invalid_argument("unknown averaging '" + name + "'");
}

WeightingFormula weighting_from_name(const std::string& name) {
    if (name == "inv") return WeightingFormula::Inv;
    if (name == "sqr") return WeightingFormula::Sqr;
    if (name == "exp") return WeightingFormula::Exp;
    throw std::invalid_argument("unknown weighting '" + name + "'");
}

}  // namespace enscast
