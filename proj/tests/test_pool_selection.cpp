#include <doctest.h>

#include <cmath>
#include <random>

#include "enscast/log.hpp"
#include "enscast/pool_selection.hpp"
#include "fixtures.hpp"

using namespace enscast;

namespace {

std::vector<TimeSeries> synthetic_quarterly_set(std::mt19937& rng, int count, double drift = 1.5) {
    std::vector<TimeSeries> out;
    std::normal_distribution<double> noise(0.0, 2.0);
    for (int i = 0; i < count; ++i) {
        std::vector<double> values;
        double level = 100.0 + 10.0 * i;
        for (int t = 0; t < 36; ++t) {
            level += drift + noise(rng);
            values.push_back(std::max(level, 1.0));
        }
        out.emplace_back("Q" + std::to_string(100 + i), Frequency::Quarterly, values);
    }
    return out;
}

// straight-line reimplementation used as the holdout_error oracle:
// split, combine with the same mechanics, aggregate OWA
double holdout_error_oracle(const std::vector<ModelSpec>& pool,
                            const std::vector<TimeSeries>& set, const FrequencyParams& params) {
    double sm = 0.0, ms = 0.0, n2sm = 0.0, n2ms = 0.0;
    std::size_t count = 0;
    for (const TimeSeries& series : set) {
        const SplitSeries split = split_train_holdout(series);
        std::vector<ForecastVector> forecasts;
        ScoreVector scores;
        for (const ModelSpec& spec : pool) {
            scores.push_back(aggregate_scores(
                rolling_origin_errors(spec, split.train, params.origins), params.averaging));
            forecasts.push_back(forecast(spec, split.train, series.horizon()));
        }
        const auto combined =
            combine_forecasts(forecasts, weights_from_scores(scores, params.weighting));
        sm += smape(combined, split.holdout);
        ms += mase(combined, split.holdout, split.train.values(),
                   mase_period(series.frequency()));
        const auto naive2 = naive2_forecast(split.train.values(), series.horizon(),
                                            seasonal_period(series.frequency()));
        n2sm += smape(naive2, split.holdout);
        n2ms += mase(naive2, split.holdout, split.train.values(),
                     mase_period(series.frequency()));
        ++count;
    }
    const double dc = static_cast<double>(count);
    return ((sm / dc) / (n2sm / dc) + (ms / dc) / (n2ms / dc)) / 2.0;
}

}  // namespace

TEST_CASE("holdout error of naive2 against itself is exactly one") {
    std::mt19937 rng(113);
    const auto set = synthetic_quarterly_set(rng, 4);
    FrequencyParams params = default_frequency_params(Frequency::Quarterly);
    CHECK(holdout_error({parse_model_spec("naive2")}, set, params) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("holdout error of an exact forecaster is zero") {
    // exact lines: the linear-trend model reproduces the holdout
    // exactly while the Naive 2 baseline stays positive
    std::vector<TimeSeries> set;
    for (int i = 0; i < 3; ++i) {
        std::vector<double> line;
        for (int t = 1; t <= 30; ++t) line.push_back(20.0 * (i + 1) + 2.5 * t);
        set.emplace_back("Q" + std::to_string(i), Frequency::Quarterly, line);
    }
    FrequencyParams params = default_frequency_params(Frequency::Quarterly);
    const double error = holdout_error({parse_model_spec("lr 1,t")}, set, params);
    CHECK(error == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("holdout error matches a straight-line recomputation") {
    std::mt19937 rng(127);
    const auto set = synthetic_quarterly_set(rng, 3);
    FrequencyParams params = default_frequency_params(Frequency::Quarterly);
    const std::vector<ModelSpec> pool = {parse_model_spec("naive1"), parse_model_spec("mean")};
    CHECK(holdout_error(pool, set, params) ==
          doctest::Approx(holdout_error_oracle(pool, set, params)).epsilon(1e-12));
}

TEST_CASE("select_pool keeps a single-model pool unchanged") {
    std::mt19937 rng(131);
    const auto set = synthetic_quarterly_set(rng, 3);
    FrequencyParams params = default_frequency_params(Frequency::Quarterly);
    const auto result = select_pool({parse_model_spec("naive1")}, set, params);
    REQUIRE(result.pool.size() == 1);
    CHECK(result.pool[0].family == ModelFamily::Naive1);
}

TEST_CASE("select_pool drops a clearly harmful model") {
    // strongly trending series: the Mean forecast is far off while
    // Naive 1 stays close, so removing Mean strictly lowers the error
    std::mt19937 rng(137);
    const auto set = synthetic_quarterly_set(rng, 4, 4.0);
    FrequencyParams params = default_frequency_params(Frequency::Quarterly);
    const std::vector<ModelSpec> pool = {parse_model_spec("naive1"), parse_model_spec("mean")};
    const auto result = select_pool(pool, set, params);
    REQUIRE(result.pool.size() == 1);
    CHECK(result.pool[0].family == ModelFamily::Naive1);
    CHECK(result.elimination_log.size() >= 1);
    CHECK(result.log_csv().find("Mean") != std::string::npos);

    // exhaustive check over the three candidate subsets
    const double with_both = holdout_error(pool, set, params);
    const double naive_only = holdout_error({pool[0]}, set, params);
    CHECK(result.holdout_owa == doctest::Approx(naive_only).epsilon(1e-12));
    CHECK(naive_only <= with_both);
}

TEST_CASE("select_pool never raises the holdout error above the full pool") {
    std::mt19937 rng(139);
    FrequencyParams params = default_frequency_params(Frequency::Quarterly);
    params.origins = 4;
    const std::vector<ModelSpec> pool = {parse_model_spec("naive1"), parse_model_spec("mean"),
                                         parse_model_spec("ses"), parse_model_spec("lr 1,t")};
    for (int i = 0; i < 20; ++i) {
        const auto set = synthetic_quarterly_set(rng, 2 + i % 3, 0.5 + 0.8 * (i % 5));
        const auto result = select_pool(pool, set, params);
        const double full = holdout_error(pool, set, params);
        CHECK(result.holdout_owa <= full + 1e-12);
        CHECK_FALSE(result.pool.empty());
    }
}

TEST_CASE("tune_rolling_params ties break toward N = 1 and the mean") {
    // a single-model pool always carries weight one, so every N and f
    // produce the same combination and the scan is one big tie
    std::mt19937 rng(141);
    const auto set = synthetic_quarterly_set(rng, 3);
    const auto [n, f] = tune_rolling_params({parse_model_spec("mean")}, set,
                                            Frequency::Quarterly);
    CHECK(n == 1);
    CHECK(f == AveragingKind::Mean);
}

TEST_CASE("tune_rolling_params matches brute force on a small set") {
    std::mt19937 rng(149);
    const auto set = synthetic_quarterly_set(rng, 5);
    const std::vector<ModelSpec> pool = {parse_model_spec("naive1"), parse_model_spec("ses"),
                                         parse_model_spec("mean")};
    const auto [n, f] = tune_rolling_params(pool, set, Frequency::Quarterly);
    CHECK(n >= 1);
    CHECK(n <= 8);

    // brute force the same staged scan
    FrequencyParams params = default_frequency_params(Frequency::Quarterly);
    params.averaging = AveragingKind::Mean;
    int best_n = 1;
    double best = 0.0;
    for (int cand = 1; cand <= 8; ++cand) {
        params.origins = cand;
        const double error = holdout_error(pool, set, params);
        if (cand == 1 || error < best) {
            best = error;
            best_n = cand;
        }
    }
    CHECK(n == best_n);
    params.origins = best_n;
    params.averaging = AveragingKind::Exponential;
    const AveragingKind expected_f =
        holdout_error(pool, set, params) < best ? AveragingKind::Exponential
                                                : AveragingKind::Mean;
    CHECK(f == expected_f);
}

TEST_CASE("tune_weighting defaults to sqr on ties and matches brute force") {
    std::mt19937 tie_rng(143);
    const auto tie_set = synthetic_quarterly_set(tie_rng, 3);
    CHECK(tune_weighting({parse_model_spec("mean")}, tie_set, 4, AveragingKind::Mean) ==
          WeightingFormula::Sqr);
    CHECK_THROWS_AS(tune_weighting({}, tie_set, 4, AveragingKind::Mean), std::invalid_argument);

    std::mt19937 rng(151);
    const auto set = synthetic_quarterly_set(rng, 4);
    const std::vector<ModelSpec> pool = {parse_model_spec("naive1"), parse_model_spec("mean"),
                                         parse_model_spec("ses")};
    const WeightingFormula chosen = tune_weighting(pool, set, 8, AveragingKind::Mean);

    FrequencyParams params = default_frequency_params(Frequency::Quarterly);
    params.origins = 8;
    params.averaging = AveragingKind::Mean;
    WeightingFormula best = WeightingFormula::Sqr;
    double best_error = 0.0;
    bool first = true;
    for (WeightingFormula g : {WeightingFormula::Sqr, WeightingFormula::Inv,
                               WeightingFormula::Exp}) {
        params.weighting.formula = g;
        const double error = holdout_error(pool, set, params);
        if (first || error < best_error) {
            best = g;
            best_error = error;
            first = false;
        }
    }
    CHECK(chosen == best);
}

TEST_CASE("tune_thresholds keeps defaults on a vacuous scan and stays on the grids") {
    std::mt19937 rng(157);
    // noisy series: no random-walk label, no strong analogy anywhere
    std::vector<TimeSeries> set;
    std::vector<ForecastVector> combos;
    for (int i = 0; i < 4; ++i) {
        auto values = testing::random_positive_series(rng, 60, 100.0, 0.15);
        set.emplace_back("D" + std::to_string(i), Frequency::Daily, values);
    }
    for (const TimeSeries& s : set) {
        const SplitSeries split = split_train_holdout(s);
        combos.push_back(naive2_forecast(split.train.values(), s.horizon(), 7));
    }
    FrequencyParams params = default_frequency_params(Frequency::Daily);
    const auto [t_rnd, t_cor] = tune_thresholds(set, combos, params);
    const std::vector<double> rnd_grid = {0.01, 0.02, 0.03, 0.04, 0.05,
                                          0.06, 0.07, 0.08, 0.09, 0.10};
    const std::vector<double> cor_grid = {0.95, 0.96, 0.97, 0.98, 0.99, 0.995, 0.999};
    CHECK(std::any_of(rnd_grid.begin(), rnd_grid.end(),
                      [&](double g) { return std::abs(g - t_rnd) < 1e-12; }));
    CHECK(std::any_of(cor_grid.begin(), cor_grid.end(),
                      [&](double g) { return std::abs(g - t_cor) < 1e-12; }));
}
