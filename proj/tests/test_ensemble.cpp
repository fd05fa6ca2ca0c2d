#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "enscast/ensemble.hpp"
#include "enscast/metrics.hpp"
#include "fixtures.hpp"

using namespace enscast;

TEST_CASE("rolling origin errors are ordered most recent origin first") {
    // Naive 1 at origin 1 forecasts the second-to-last value
    const TimeSeries q123 = testing::q123_series();
    const auto errors = rolling_origin_errors(parse_model_spec("naive1"), q123, 8);
    REQUIRE(errors.size() == 8);
    // oracle: direct arithmetic on the last two observations
    const double expected = 2.0 * std::abs(1728.56 - 1756.94) / (1728.56 + 1756.94);
    CHECK(errors[0] == doctest::Approx(expected).epsilon(1e-9));
    CHECK(expected == doctest::Approx(0.0162846).epsilon(1e-3));
}

TEST_CASE("rolling origin theta errors on Q123 average to the reference sMAPE") {
    const auto errors =
        rolling_origin_errors(parse_model_spec("theta"), testing::q123_series(), 8);
    const double mean = aggregate_scores(errors, AveragingKind::Mean);
    CHECK(std::abs(mean - testing::kQ123ThetaMeanSmape) / testing::kQ123ThetaMeanSmape < 0.05);
}

TEST_CASE("rolling origin on a constant series gives zero errors") {
    const TimeSeries constant("Q7", Frequency::Quarterly, std::vector<double>(30, 40.0));
    for (const char* token : {"naive1", "mean", "ses"}) {
        const auto errors = rolling_origin_errors(parse_model_spec(token), constant, 5);
        for (double e : errors) CHECK(e == 0.0);
    }
}

TEST_CASE("rolling origin rejects too-short series naming the offender") {
    const TimeSeries tiny("Q8", Frequency::Quarterly, {1.0, 2.0, 3.0, 4.0});
    CHECK_THROWS_WITH_AS(rolling_origin_errors(parse_model_spec("naive1"), tiny, 4),
                         doctest::Contains("Q8"), std::invalid_argument);
}

TEST_CASE("with one origin the rolling evaluation is a single holdout-1 check") {
    std::mt19937 rng(101);
    const auto values = testing::random_positive_series(rng, 30);
    const TimeSeries series("Q2", Frequency::Quarterly, values);
    const auto errors = rolling_origin_errors(parse_model_spec("naive1"), series, 1);
    REQUIRE(errors.size() == 1);
    const double expected = smape_step(values[values.size() - 2], values.back());
    CHECK(errors[0] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("score aggregation") {
    CHECK(aggregate_scores({0.1, 0.2}, AveragingKind::Exponential) ==
          doctest::Approx((0.1 + 0.2 * 0.5) / 1.5).epsilon(1e-12));
    CHECK(aggregate_scores(std::vector<double>(7, 0.3), AveragingKind::Mean) ==
          doctest::Approx(0.3));
    CHECK(aggregate_scores(std::vector<double>(7, 0.3), AveragingKind::Exponential) ==
          doctest::Approx(0.3));
    const std::vector<double> table2 = {0.0129, 0.0122, 0.0014, 0.0120,
                                        0.0096, 0.0011, 0.0080, 0.0015};
    CHECK(aggregate_scores(table2, AveragingKind::Mean) ==
          doctest::Approx(0.0073375).epsilon(1e-9));
}

TEST_CASE("inverse-square weight of the reference Theta score") {
    const WeightVector w = weights_from_scores({testing::kQ123ThetaMeanSmape},
                                               WeightingKind{WeightingFormula::Sqr, 1e-8});
    CHECK(std::abs(w.raw[0] - 18531.7) < 1.0);
}

TEST_CASE("raw reference weights normalize to the printed column") {
    WeightVector w;
    w.raw = testing::kQ123RawWeights;
    double sum = 0.0;
    for (double v : w.raw) sum += v;
    for (double v : w.raw) w.normalized.push_back(v / sum);
    for (std::size_t i = 0; i < w.raw.size(); ++i) {
        CHECK(std::abs(w.normalized[i] - testing::kQ123NormalizedWeights[i]) < 1e-4);
    }
}

TEST_CASE("equal scores produce uniform weights under every formula") {
    for (WeightingFormula g : {WeightingFormula::Inv, WeightingFormula::Sqr,
                               WeightingFormula::Exp}) {
        const WeightVector w = weights_from_scores({0.2, 0.2, 0.2, 0.2},
                                                   WeightingKind{g, 1e-8});
        for (double v : w.normalized) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));
    }
}

TEST_CASE("weights normalize to one and reward lower scores") {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> score(0.0, 1.5);
    std::uniform_int_distribution<int> count(1, 12);
    for (int i = 0; i < 200; ++i) {
        ScoreVector scores(static_cast<std::size_t>(count(rng)));
        for (double& s : scores) s = score(rng);
        for (WeightingFormula g : {WeightingFormula::Inv, WeightingFormula::Sqr,
                                   WeightingFormula::Exp}) {
            const WeightVector w = weights_from_scores(scores, WeightingKind{g, 1e-8});
            double sum = 0.0;
            for (double v : w.normalized) {
                CHECK(v >= 0.0);
                sum += v;
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
            for (std::size_t a = 0; a < scores.size(); ++a) {
                for (std::size_t b = 0; b < scores.size(); ++b) {
                    if (scores[a] < scores[b]) CHECK(w.normalized[a] >= w.normalized[b] - 1e-12);
                }
            }
        }
    }
}

TEST_CASE("inv and sqr weights are scale invariant, exp is exempt") {
    std::mt19937 rng(107);
    std::uniform_real_distribution<double> score(1e-4, 0.9);
    std::uniform_real_distribution<double> factor(0.1, 50.0);
    for (int i = 0; i < 200; ++i) {
        ScoreVector scores(5);
        for (double& s : scores) s = score(rng);
        const double c = factor(rng);
        ScoreVector scaled = scores;
        for (double& s : scaled) s *= c;
        for (WeightingFormula g : {WeightingFormula::Inv, WeightingFormula::Sqr}) {
            // epsilon scaled along with the scores keeps the ratios exact
            const WeightVector w1 = weights_from_scores(scores, WeightingKind{g, 1e-10});
            const WeightVector w2 = weights_from_scores(scaled, WeightingKind{g, 1e-10 * c});
            for (std::size_t k = 0; k < 5; ++k) {
                CHECK(w2.normalized[k] == doctest::Approx(w1.normalized[k]).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("exp weighting survives a perfect score without overflow") {
    const WeightVector w =
        weights_from_scores({0.0, 0.5}, WeightingKind{WeightingFormula::Exp, 1e-8});
    CHECK(std::isfinite(w.normalized[0]));
    CHECK(w.normalized[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(w.normalized[1] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("combining the reference model rows reproduces the combination row") {
    WeightVector weights;
    weights.raw = testing::kQ123NormalizedWeights;
    double sum = 0.0;
    for (double v : weights.raw) sum += v;
    for (double v : weights.raw) weights.normalized.push_back(v / sum);

    const auto combined = combine_forecasts(testing::kQ123ModelForecasts, weights);
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(std::abs(combined[k] - testing::kQ123Combination[k]) < 0.5);
    }
    CHECK(smape(combined, testing::kQ123FutureValues) ==
          doctest::Approx(testing::kQ123CombinationSmape).epsilon(0.12));
}

TEST_CASE("combination identities and the clamp rule") {
    WeightVector unit;
    unit.raw = {1.0};
    unit.normalized = {1.0};
    const ForecastVector f = {3.0, 4.0, 5.0};
    CHECK(combine_forecasts({f}, unit) == f);

    WeightVector two;
    two.raw = {0.9, 0.1};
    two.normalized = {0.9, 0.1};
    const auto clamped = combine_forecasts({{-5.0}, {1.0}}, two);
    CHECK(clamped == ForecastVector{0.0});  // weighted mean -4.4 clamps to zero

    CHECK_THROWS_AS(combine_forecasts({{1.0}, {2.0, 3.0}}, two), std::invalid_argument);
    WeightVector mismatched;
    mismatched.raw = {1.0};
    mismatched.normalized = {1.0};
    CHECK_THROWS_AS(combine_forecasts({{1.0}, {2.0}}, mismatched), std::invalid_argument);
}

TEST_CASE("combination is a clamped convex blend invariant under permutation") {
    std::mt19937 rng(109);
    std::uniform_real_distribution<double> value(-40.0, 120.0);
    std::uniform_real_distribution<double> score(0.01, 1.0);
    std::uniform_int_distribution<int> model_count(1, 7);
    for (int i = 0; i < 200; ++i) {
        const int n_models = model_count(rng);
        std::vector<ForecastVector> forecasts(static_cast<std::size_t>(n_models),
                                              ForecastVector(4));
        ScoreVector scores(static_cast<std::size_t>(n_models));
        for (int m = 0; m < n_models; ++m) {
            scores[static_cast<std::size_t>(m)] = score(rng);
            for (int t = 0; t < 4; ++t) forecasts[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)] = value(rng);
        }
        const WeightVector weights =
            weights_from_scores(scores, WeightingKind{WeightingFormula::Sqr, 1e-8});
        const auto combined = combine_forecasts(forecasts, weights);
        for (std::size_t t = 0; t < 4; ++t) {
            double lo = forecasts[0][t], hi = forecasts[0][t];
            for (const auto& f : forecasts) {
                lo = std::min(lo, f[t]);
                hi = std::max(hi, f[t]);
            }
            CHECK(combined[t] >= std::min(lo, 0.0) - 1e-9);
            CHECK(combined[t] <= std::max(hi, 0.0) + 1e-9);
            CHECK(combined[t] >= 0.0);
        }

        // permute the (forecast, weight) pairs
        std::vector<std::size_t> perm(static_cast<std::size_t>(n_models));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<ForecastVector> pf;
        WeightVector pw;
        for (std::size_t idx : perm) {
            pf.push_back(forecasts[idx]);
            pw.raw.push_back(weights.raw[idx]);
            pw.normalized.push_back(weights.normalized[idx]);
        }
        const auto permuted = combine_forecasts(pf, pw);
        for (std::size_t t = 0; t < 4; ++t) {
            CHECK(permuted[t] == doctest::Approx(combined[t]).epsilon(1e-12));
        }
    }
}

TEST_CASE("forecast_series with a single naive model is that model") {
    const TimeSeries q123 = testing::q123_series();
    FrequencyParams params = default_frequency_params(Frequency::Quarterly);
    const auto combo = forecast_series(q123, {parse_model_spec("naive1")}, params);
    CHECK(combo == ForecastVector(8, 1756.94));
}

TEST_CASE("a pool of two identical models combines to the single-model forecast") {
    const TimeSeries q123 = testing::q123_series();
    FrequencyParams params = default_frequency_params(Frequency::Quarterly);
    const auto once = forecast_series(q123, {parse_model_spec("theta")}, params);
    const auto twice = forecast_series(
        q123, {parse_model_spec("theta"), parse_model_spec("theta")}, params);
    for (std::size_t k = 0; k < once.size(); ++k) {
        CHECK(twice[k] == doctest::Approx(once[k]).epsilon(1e-12));
    }
}
