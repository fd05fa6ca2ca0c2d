#include "enscast/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "enscast/csv.hpp"
#include "enscast/log.hpp"
#include "enscast/stat_tests.hpp"

namespace enscast {

namespace {

FrequencyParams effective_params(const PipelineConfig& config, Frequency f) {
    FrequencyParams params = config.params_for(f);
    if (f == Frequency::Monthly && config.monthly_analogy) {
        params.analogy_enabled = true;
        if (!params.analogy_threshold) params.analogy_threshold = 0.995;
    }
    return params;
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config, const std::vector<TimeSeries>& train,
                            const std::vector<TimeSeries>* test) {
    config.validate();
    PipelineResult result;

    // ingestion floor: holdout split plus a nonempty training part
    std::vector<const TimeSeries*> accepted;
    std::map<Frequency, std::vector<TimeSeries>> corpus_by_freq;
    for (const TimeSeries& series : train) {
        if (series.size() < min_pipeline_length(series.frequency())) {
            result.warnings.push_back("series " + series.id() + " rejected: length " +
                                      std::to_string(series.size()) + " below minimum " +
                                      std::to_string(min_pipeline_length(series.frequency())));
            continue;
        }
        accepted.push_back(&series);
        corpus_by_freq[series.frequency()].push_back(series);
    }
    for (const std::string& warning : result.warnings) log_warning(warning);

    result.records.assign(accepted.size(), ForecastRecord{});
    std::atomic<std::size_t> next{0};
    const int jobs = std::max(1, config.jobs);

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= accepted.size()) break;
            const TimeSeries& series = *accepted[i];
            ForecastRecord record;
            record.id = series.id();
            const int h = series.horizon();
            try {
                const SeriesClass cls = classify_series(series);
                record.class_key = class_key(cls);
                const FrequencyParams params = effective_params(config, series.frequency());
                const std::vector<ModelSpec>& pool = config.pool_for(cls);

                CombinationResult combo = forecast_series_detailed(series, pool, params);
                auto [decision, routed] =
                    route(series, combo.combination, corpus_by_freq[series.frequency()], params);
                record.decision = decision;
                record.values = std::move(routed);
                for (double& v : record.values) v = std::max(v, 0.0);
                record.model_names.reserve(pool.size());
                for (const ModelSpec& spec : pool) record.model_names.push_back(spec.display_name());
                record.weights = combo.weights.normalized;
            } catch (const std::exception& e) {
                log_warning("series " + series.id() + ": " + e.what() +
                            "; falling back to Naive 1");
                record.class_key = record.class_key.empty() ? frequency_name(series.frequency())
                                                            : record.class_key;
                record.decision = RoutingDecision{};
                record.values = naive1_forecast(series.values(), h);
            }
            result.records[i] = std::move(record);
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }

    if (test != nullptr) {
        std::map<std::string, const TimeSeries*> test_by_id;
        for (const TimeSeries& s : *test) test_by_id[s.id()] = &s;
        std::vector<SeriesScore> scores;
        for (std::size_t i = 0; i < accepted.size(); ++i) {
            const TimeSeries& series = *accepted[i];
            const auto it = test_by_id.find(series.id());
            if (it == test_by_id.end()) {
                result.warnings.push_back("series " + series.id() + " missing from the test set");
                continue;
            }
            const std::vector<double>& actual = it->second->values();
            const ForecastVector& predicted = result.records[i].values;
            if (actual.size() != predicted.size()) {
                result.warnings.push_back("series " + series.id() + ": test length " +
                                          std::to_string(actual.size()) + " != horizon " +
                                          std::to_string(predicted.size()));
                continue;
            }
            SeriesScore score;
            score.frequency = series.frequency();
            score.smape = smape(predicted, actual);
            const ForecastVector naive2 = naive2_forecast(
                series.values(), series.horizon(), seasonal_period(series.frequency()));
            score.naive2_smape = smape(naive2, actual);
            try {
                score.mase = mase(predicted, actual, series.values(),
                                  mase_period(series.frequency()));
                score.naive2_mase = mase(naive2, actual, series.values(),
                                         mase_period(series.frequency()));
            } catch (const std::exception& e) {
                score.mase_defined = false;
                log_warning("series " + series.id() + " excluded from MASE aggregation (" +
                            e.what() + ")");
            }
            scores.push_back(score);
        }
        result.report = aggregate_scores_report(scores);
    }
    return result;
}

std::string PipelineResult::forecasts_csv() const {
    std::size_t max_h = 0;
    for (const ForecastRecord& r : records) max_h = std::max(max_h, r.values.size());
    std::ostringstream out;
    out << "id";
    for (std::size_t i = 1; i <= max_h; ++i) out << ",F" << i;
    out << "\n";
    for (const ForecastRecord& r : records) {
        out << '"' << r.id << '"';
        for (double v : r.values) out << ',' << format_number(v);
        for (std::size_t i = r.values.size(); i < max_h; ++i) out << ',';
        out << "\n";
    }
    return out.str();
}

std::string PipelineResult::mean_weights_csv() const {
    // class keys start with the frequency name
    std::map<std::string, std::map<std::string, std::pair<double, std::size_t>>> acc;
    for (const ForecastRecord& r : records) {
        const std::string freq = r.class_key.substr(0, r.class_key.find(' '));
        for (std::size_t i = 0; i < r.model_names.size(); ++i) {
            auto& cell = acc[freq][r.model_names[i]];
            cell.first += r.weights[i];
            cell.second += 1;
        }
    }
    std::ostringstream out;
    out << "frequency,model,mean_weight\n";
    for (const auto& [freq, by_model] : acc) {
        for (const auto& [model, cell] : by_model) {
            out << freq << ",\"" << model << "\","
                << format_number(cell.first / static_cast<double>(cell.second)) << "\n";
        }
    }
    return out.str();
}

std::string PipelineResult::audit_csv() const {
    std::ostringstream out;
    out << "id,class,routing,criterion,weights\n";
    for (const ForecastRecord& r : records) {
        out << '"' << r.id << "\"," << r.class_key << ',' << route_name(r.decision.kind) << ',';
        if (r.decision.kind == RouteKind::Analogy) {
            out << format_number(r.decision.match.correlation);
        } else if (r.decision.naive1_smape >= 0.0) {
            out << format_number(r.decision.naive1_smape);
        } else if (r.decision.match.found()) {
            out << format_number(r.decision.match.correlation);
        }
        out << ",\"";
        for (std::size_t i = 0; i < r.model_names.size(); ++i) {
            if (i > 0) out << ';';
            out << r.model_names[i] << '=' << format_number(r.weights[i]);
        }
        out << "\"\n";
    }
    return out.str();
}

}  // namespace enscast
