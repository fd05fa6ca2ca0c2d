#include "enscast/pool_selection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "enscast/csv.hpp"
#include "enscast/log.hpp"
#include "enscast/special_cases.hpp"

namespace enscast {

namespace {

struct SplitSet {
    std::vector<SplitSeries> splits;
    std::vector<double> naive2_smape;
    std::vector<double> naive2_mase;
    std::vector<bool> mase_defined;
};

SplitSet prepare_splits(const std::vector<TimeSeries>& series_set) {
    SplitSet out;
    for (const TimeSeries& series : series_set) {
        SplitSeries split = split_train_holdout(series);
        const int period = seasonal_period(series.frequency());
        const ForecastVector naive2 = naive2_forecast(
            split.train.values(), static_cast<int>(split.holdout.size()), period);
        out.naive2_smape.push_back(smape(naive2, split.holdout));
        bool defined = true;
        double n2_mase = 0.0;
        try {
            n2_mase = mase(naive2, split.holdout, split.train.values(),
                           mase_period(series.frequency()));
        } catch (const std::exception& e) {
            defined = false;
            log_warning("series " + series.id() + " excluded from MASE aggregation (" + e.what() +
                        ")");
        }
        out.naive2_mase.push_back(n2_mase);
        out.mase_defined.push_back(defined);
        out.splits.push_back(std::move(split));
    }
    return out;
}

/// Corpus OWA of per-series forecasts against the prepared splits.
double owa_of_forecasts(const SplitSet& set, const std::vector<ForecastVector>& forecasts,
                        const std::vector<TimeSeries>& series_set) {
    double smape_sum = 0.0, mase_sum = 0.0;
    double n2_smape_sum = 0.0, n2_mase_sum = 0.0;
    std::size_t count = 0, mase_count = 0;
    for (std::size_t i = 0; i < set.splits.size(); ++i) {
        smape_sum += smape(forecasts[i], set.splits[i].holdout);
        n2_smape_sum += set.naive2_smape[i];
        ++count;
        if (!set.mase_defined[i]) continue;
        mase_sum += mase(forecasts[i], set.splits[i].holdout, set.splits[i].train.values(),
                         mase_period(series_set[i].frequency()));
        n2_mase_sum += set.naive2_mase[i];
        ++mase_count;
    }
    if (count == 0) throw std::invalid_argument("holdout_error: empty series set");
    const double s_model = smape_sum / static_cast<double>(count);
    const double s_naive = n2_smape_sum / static_cast<double>(count);
    if (mase_count == 0) {
        if (s_naive <= 0.0) throw std::runtime_error("holdout_error: zero Naive 2 baseline");
        return s_model / s_naive;  // MASE leg unavailable everywhere
    }
    const double m_model = mase_sum / static_cast<double>(mase_count);
    const double m_naive = n2_mase_sum / static_cast<double>(mase_count);
    return owa(s_model, m_model, s_naive, m_naive);
}

std::vector<ForecastVector> combination_forecasts(const std::vector<ModelSpec>& pool,
                                                  const SplitSet& set,
                                                  const FrequencyParams& params) {
    std::vector<ForecastVector> out;
    out.reserve(set.splits.size());
    for (const SplitSeries& split : set.splits) {
        out.push_back(forecast_series(split.train, pool, params));
    }
    return out;
}

}  // namespace

double holdout_error(const std::vector<ModelSpec>& pool, const std::vector<TimeSeries>& series_set,
                     const FrequencyParams& params) {
    if (pool.empty()) throw std::invalid_argument("holdout_error: empty pool");
    const SplitSet set = prepare_splits(series_set);
    return owa_of_forecasts(set, combination_forecasts(pool, set, params), series_set);
}

std::string PoolSelectionResult::log_csv() const {
    std::ostringstream out;
    out << "model,action,error_before,error_after\n";
    for (const EliminationStep& step : elimination_log) {
        out << '"' << step.model << "\"," << (step.removed ? "removed" : "kept") << ','
            << format_number(step.error_before) << ',' << format_number(step.error_after) << "\n";
    }
    return out.str();
}

PoolSelectionResult select_pool(const std::vector<ModelSpec>& default_pool,
                                const std::vector<TimeSeries>& series_set,
                                const FrequencyParams& params) {
    if (default_pool.empty()) throw std::invalid_argument("select_pool: empty default pool");
    const SplitSet set = prepare_splits(series_set);

    // per-model holdout errors (model used alone), for the removal order
    std::vector<double> model_errors(default_pool.size());
    for (std::size_t i = 0; i < default_pool.size(); ++i) {
        model_errors[i] =
            owa_of_forecasts(set, combination_forecasts({default_pool[i]}, set, params),
                             series_set);
    }
    std::vector<std::size_t> order(default_pool.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return model_errors[a] > model_errors[b];  // worst first
    });

    std::vector<bool> active(default_pool.size(), true);
    auto active_pool = [&]() {
        std::vector<ModelSpec> pool;
        for (std::size_t i = 0; i < default_pool.size(); ++i) {
            if (active[i]) pool.push_back(default_pool[i]);
        }
        return pool;
    };

    PoolSelectionResult result;
    double current =
        owa_of_forecasts(set, combination_forecasts(active_pool(), set, params), series_set);

    for (std::size_t idx : order) {
        if (std::count(active.begin(), active.end(), true) <= 1) break;
        active[idx] = false;
        const double without =
            owa_of_forecasts(set, combination_forecasts(active_pool(), set, params), series_set);
        EliminationStep step;
        step.model = default_pool[idx].display_name();
        step.error_before = current;
        step.error_after = without;
        if (without > current) {
            active[idx] = true;  // strict increase: put the model back
            step.removed = false;
        } else {
            step.removed = true;
            current = without;
        }
        result.elimination_log.push_back(step);
    }

    result.pool = active_pool();
    result.holdout_owa = current;
    return result;
}

std::pair<int, AveragingKind> tune_rolling_params(const std::vector<ModelSpec>& pool,
                                                  const std::vector<TimeSeries>& series_set,
                                                  Frequency frequency) {
    if (pool.empty()) throw std::invalid_argument("tune_rolling_params: empty pool");
    const SplitSet set = prepare_splits(series_set);
    const int h = horizon_for(frequency);

    FrequencyParams params = default_frequency_params(frequency);
    params.averaging = AveragingKind::Mean;

    int best_n = 1;
    double best_error = 0.0;
    for (int n = 1; n <= h; ++n) {
        params.origins = n;
        const double error =
            owa_of_forecasts(set, combination_forecasts(pool, set, params), series_set);
        if (n == 1 || error < best_error) {
            best_n = n;
            best_error = error;
        }
    }

    params.origins = best_n;
    AveragingKind best_f = AveragingKind::Mean;
    params.averaging = AveragingKind::Exponential;
    const double exp_error =
        owa_of_forecasts(set, combination_forecasts(pool, set, params), series_set);
    if (exp_error < best_error) best_f = AveragingKind::Exponential;

    return {best_n, best_f};
}

WeightingFormula tune_weighting(const std::vector<ModelSpec>& pool,
                                const std::vector<TimeSeries>& series_set, int origins,
                                AveragingKind averaging) {
    if (pool.empty()) throw std::invalid_argument("tune_weighting: empty pool");
    const SplitSet set = prepare_splits(series_set);

    FrequencyParams params = default_frequency_params(series_set.front().frequency());
    params.origins = origins;
    params.averaging = averaging;

    WeightingFormula best = WeightingFormula::Sqr;
    double best_error = 0.0;
    bool first = true;
    for (WeightingFormula g : {WeightingFormula::Sqr, WeightingFormula::Inv,
                               WeightingFormula::Exp}) {
        params.weighting.formula = g;
        const double error =
            owa_of_forecasts(set, combination_forecasts(pool, set, params), series_set);
        if (first || error < best_error) {
            best = g;
            best_error = error;
            first = false;
        }
    }
    return best;
}

std::pair<double, double> tune_thresholds(const std::vector<TimeSeries>& series_set,
                                          const std::vector<ForecastVector>& combination_forecasts,
                                          const FrequencyParams& params) {
    if (series_set.empty()) throw std::invalid_argument("tune_thresholds: empty series set");
    if (combination_forecasts.size() != series_set.size()) {
        throw std::invalid_argument("tune_thresholds: one combination forecast per series needed");
    }
    const Frequency frequency = series_set.front().frequency();
    const int h = horizon_for(frequency);
    const SplitSet set = prepare_splits(series_set);

    // per-series ingredients computed once: Naive 1 forecast and error,
    // best analogy over the training corpus
    std::vector<TimeSeries> trains;
    trains.reserve(set.splits.size());
    for (const SplitSeries& split : set.splits) trains.push_back(split.train);

    struct Routed {
        ForecastVector naive1;
        double naive1_smape = 1.0;
        AnalogyMatch match;
        ForecastVector analogy;
    };
    std::vector<Routed> routed(set.splits.size());
    for (std::size_t i = 0; i < set.splits.size(); ++i) {
        const TimeSeries& train = trains[i];
        Routed& r = routed[i];
        r.naive1 = naive1_forecast(train.values(), h);
        r.naive1_smape = smape(r.naive1, set.splits[i].holdout);
        r.match = analogy_search(train.values(), trains, 2 * h, h);
        if (!r.match.found()) continue;
        const auto z_it = std::find_if(trains.begin(), trains.end(), [&](const TimeSeries& s) {
            return s.id() == r.match.source_id;
        });
        const auto& z = z_it->values();
        const std::size_t M = static_cast<std::size_t>(r.match.window_len);
        const std::vector<double> x_window(train.values().end() - static_cast<std::ptrdiff_t>(M),
                                           train.values().end());
        const std::vector<double> z_window(
            z.begin() + static_cast<std::ptrdiff_t>(r.match.offset),
            z.begin() + static_cast<std::ptrdiff_t>(r.match.offset + M));
        const std::vector<double> z_cont(
            z.begin() + static_cast<std::ptrdiff_t>(r.match.offset + M),
            z.begin() +
                static_cast<std::ptrdiff_t>(r.match.offset + M + static_cast<std::size_t>(h)));
        r.analogy = analogy_forecast(x_window, z_window, z_cont);
    }

    const bool daily = frequency == Frequency::Daily;
    const double default_t_rnd = params.random_walk_threshold.value_or(0.05);
    const double default_t_cor =
        params.analogy_threshold.value_or(frequency == Frequency::Hourly ? 0.995 : 0.99);

    auto routed_owa = [&](double t_rnd, std::optional<double> t_cor) {
        std::vector<ForecastVector> forecasts(series_set.size());
        for (std::size_t i = 0; i < series_set.size(); ++i) {
            if (t_cor && routed[i].match.found() && routed[i].match.correlation > *t_cor) {
                forecasts[i] = routed[i].analogy;
            } else if (daily && routed[i].naive1_smape < t_rnd) {
                forecasts[i] = routed[i].naive1;
            } else {
                forecasts[i] = combination_forecasts[i];
            }
        }
        return owa_of_forecasts(set, forecasts, series_set);
    };

    // t_rnd first (daily only), analogy disabled during this stage
    double best_t_rnd = default_t_rnd;
    if (daily) {
        double best_error = routed_owa(default_t_rnd, std::nullopt);
        for (int i = 1; i <= 10; ++i) {
            const double cand = 0.01 * i;
            const double error = routed_owa(cand, std::nullopt);
            if (error < best_error) {
                best_error = error;
                best_t_rnd = cand;
            }
        }
    }

    // then t_cor with full routing at the chosen t_rnd
    double best_t_cor = default_t_cor;
    double best_error = routed_owa(best_t_rnd, default_t_cor);
    for (double cand : {0.95, 0.96, 0.97, 0.98, 0.99, 0.995, 0.999}) {
        const double error = routed_owa(best_t_rnd, cand);
        if (error < best_error) {
            best_error = error;
            best_t_cor = cand;
        }
    }
    return {best_t_rnd, best_t_cor};
}

}  // namespace enscast
