// enscast command line: batch forecasting, evaluation, tuning and
// plotting over M4-format CSV files.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "enscast/config.hpp"
#include "enscast/csv.hpp"
#include "enscast/pipeline.hpp"
#include "enscast/pool_selection.hpp"
#include "enscast/stat_tests.hpp"
#include "enscast/svg.hpp"

namespace fs = std::filesystem;
using namespace enscast;

namespace {

struct CommonOptions {
    std::string train_path;
    std::string test_path;
    std::string config_path;
    std::string out_dir = ".";
    int jobs = 0;
    bool monthly_analogy = false;
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool needs_test) {
    cmd->add_option("--train", opts->train_path, "training CSV (M4 layout)")
        ->required()
        ->check(CLI::ExistingFile);
    auto* test = cmd->add_option("--test", opts->test_path, "test CSV with the future values")
                     ->check(CLI::ExistingFile);
    if (needs_test) test->required();
    cmd->add_option("--config", opts->config_path, "configuration file (defaults embedded)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opts->out_dir, "output directory");
    cmd->add_option("--jobs", opts->jobs, "worker threads (default: config value)");
    cmd->add_flag("--enable-monthly-analogy", opts->monthly_analogy,
                  "apply forecast-by-analogy to monthly series");
}

PipelineConfig make_config(const CommonOptions& opts) {
    PipelineConfig config =
        opts.config_path.empty() ? default_config() : load_config(opts.config_path);
    if (opts.jobs > 0) config.jobs = opts.jobs;
    if (opts.monthly_analogy) config.monthly_analogy = true;
    return config;
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    std::cout << "wrote " << path.string() << "\n";
}

int run_forecast(const CommonOptions& opts, bool with_plots) {
    const PipelineConfig config = make_config(opts);
    const auto train = load_m4_csv(opts.train_path);
    std::vector<TimeSeries> test;
    if (!opts.test_path.empty()) test = load_m4_csv(opts.test_path);

    const PipelineResult result =
        run_pipeline(config, train, opts.test_path.empty() ? nullptr : &test);

    const fs::path out_dir(opts.out_dir);
    write_file(out_dir / "forecasts.csv", result.forecasts_csv());
    write_file(out_dir / "audit.csv", result.audit_csv());
    write_file(out_dir / "mean_weights.csv", result.mean_weights_csv());
    if (result.report) {
        write_file(out_dir / "report.txt", result.report->to_text());
        write_file(out_dir / "report.csv", result.report->to_csv());
        std::cout << result.report->to_text();
    }

    if (with_plots) {
        std::map<std::string, const TimeSeries*> by_id;
        for (const TimeSeries& s : train) by_id[s.id()] = &s;
        std::map<std::string, const TimeSeries*> future_by_id;
        for (const TimeSeries& s : test) future_by_id[s.id()] = &s;

        // per-frequency mean weights for the summary charts
        std::map<Frequency, std::map<std::string, std::pair<double, std::size_t>>> weight_acc;
        for (const ForecastRecord& record : result.records) {
            const TimeSeries* series = by_id.at(record.id);
            const FrequencyParams params = config.params_for(series->frequency());
            const SeriesClass cls = classify_series(*series);
            const CombinationResult combo =
                forecast_series_detailed(*series, config.pool_for(cls), params);
            std::vector<std::pair<std::string, ForecastVector>> models;
            for (std::size_t i = 0; i < combo.model_forecasts.size(); ++i) {
                models.emplace_back(record.model_names[i], combo.model_forecasts[i]);
                auto& acc = weight_acc[series->frequency()][record.model_names[i]];
                acc.first += record.weights[i];
                acc.second += 1;
            }
            const auto future_it = future_by_id.find(record.id);
            const std::vector<double> future =
                future_it != future_by_id.end() ? future_it->second->values()
                                                : std::vector<double>{};
            write_file(out_dir / (record.id + ".svg"),
                       emit_plot(series->values(), models, combo.combination, future));
        }
        for (const auto& [freq, by_model] : weight_acc) {
            std::vector<std::pair<std::string, double>> means;
            for (const auto& [name, acc] : by_model) {
                means.emplace_back(name, acc.first / static_cast<double>(acc.second));
            }
            write_file(out_dir / (std::string("weights_") + frequency_name(freq) + ".svg"),
                       emit_weights_chart(means, std::string("mean normalized weights, ") +
                                                     frequency_name(freq)));
        }
    }

    for (const std::string& warning : result.warnings) std::cerr << warning << "\n";
    return 0;
}

int run_tune_pool(const CommonOptions& opts) {
    PipelineConfig config = make_config(opts);
    const auto train = load_m4_csv(opts.train_path);

    std::map<std::string, std::vector<TimeSeries>> by_class;
    for (const TimeSeries& series : train) {
        if (series.size() < min_pipeline_length(series.frequency())) continue;
        by_class[class_key(classify_series(series))].push_back(series);
    }

    const fs::path out_dir(opts.out_dir);
    for (auto& [key, series_set] : by_class) {
        const FrequencyParams& params = config.params_for(series_set.front().frequency());
        const PoolSelectionResult result =
            select_pool(config.pools.at(key), series_set, params);
        std::cout << key << ": kept " << result.pool.size() << " of "
                  << config.pools.at(key).size() << " models, holdout OWA "
                  << format_number(result.holdout_owa) << "\n";
        std::string log_name = "elimination_" + key + ".csv";
        for (char& c : log_name) {
            if (c == ' ') c = '_';
        }
        write_file(out_dir / log_name, result.log_csv());
        config.pools[key] = result.pool;
    }
    write_file(out_dir / "tuned_config.txt", serialize_config(config));
    return 0;
}

int run_tune_params(const CommonOptions& opts) {
    PipelineConfig config = make_config(opts);
    const auto train = load_m4_csv(opts.train_path);

    std::map<Frequency, std::vector<TimeSeries>> by_freq;
    std::map<Frequency, std::map<std::string, std::vector<TimeSeries>>> class_split;
    for (const TimeSeries& series : train) {
        if (series.size() < min_pipeline_length(series.frequency())) continue;
        by_freq[series.frequency()].push_back(series);
        class_split[series.frequency()][class_key(classify_series(series))].push_back(series);
    }

    for (auto& [freq, series_set] : by_freq) {
        FrequencyParams& params = config.params[freq];
        // tune on the largest class of the frequency, the paper's
        // per-frequency staging
        const auto& classes = class_split[freq];
        const auto largest = std::max_element(
            classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
        const std::vector<ModelSpec>& pool = config.pools.at(largest->first);

        const auto [n, f] = tune_rolling_params(pool, largest->second, freq);
        params.origins = n;
        params.averaging = f;
        params.weighting.formula = tune_weighting(pool, largest->second, n, f);
        std::cout << frequency_name(freq) << ": N = " << n << ", f = " << averaging_name(f)
                  << ", g = " << weighting_name(params.weighting.formula) << "\n";

        if (freq == Frequency::Daily || freq == Frequency::Hourly ||
            (freq == Frequency::Monthly && config.monthly_analogy)) {
            std::vector<ForecastVector> combos;
            for (const TimeSeries& series : series_set) {
                combos.push_back(
                    forecast_series(split_train_holdout(series).train, pool, params));
            }
            const auto [t_rnd, t_cor] = tune_thresholds(series_set, combos, params);
            if (freq == Frequency::Daily) params.random_walk_threshold = t_rnd;
            params.analogy_threshold = t_cor;
            std::cout << frequency_name(freq) << ": t_rnd = " << format_number(t_rnd)
                      << ", t_cor = " << format_number(t_cor) << "\n";
        }
    }
    write_file(fs::path(opts.out_dir) / "tuned_config.txt", serialize_config(config));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted-ensemble statistical forecasting over M4-format data"};
    app.require_subcommand(1);

    CommonOptions forecast_opts, evaluate_opts, tune_pool_opts, tune_params_opts, plot_opts;

    CLI::App* forecast_cmd =
        app.add_subcommand("forecast", "forecast every series and emit CSV outputs");
    add_common(forecast_cmd, &forecast_opts, false);

    CLI::App* evaluate_cmd =
        app.add_subcommand("evaluate", "forecast and score against a test file (OWA report)");
    add_common(evaluate_cmd, &evaluate_opts, true);

    CLI::App* tune_pool_cmd =
        app.add_subcommand("tune-pool", "greedy per-class model pool selection");
    add_common(tune_pool_cmd, &tune_pool_opts, false);

    CLI::App* tune_params_cmd = app.add_subcommand(
        "tune-params", "scan rolling-origin, weighting and threshold parameters");
    add_common(tune_params_cmd, &tune_params_opts, false);

    CLI::App* plot_cmd =
        app.add_subcommand("plot", "emit per-series forecast SVGs and weight charts");
    add_common(plot_cmd, &plot_opts, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (forecast_cmd->parsed()) return run_forecast(forecast_opts, false);
        if (evaluate_cmd->parsed()) return run_forecast(evaluate_opts, false);
        if (tune_pool_cmd->parsed()) return run_tune_pool(tune_pool_opts);
        if (tune_params_cmd->parsed()) return run_tune_params(tune_params_opts);
        if (plot_cmd->parsed()) return run_forecast(plot_opts, true);
    } catch (const std::exception& e) {
        std::cerr << "enscast: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
