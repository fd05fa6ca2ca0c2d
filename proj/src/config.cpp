#include "enscast/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "enscast/csv.hpp"

namespace enscast {

namespace {

constexpr Frequency kAllFrequencies[] = {Frequency::Yearly, Frequency::Quarterly,
                                         Frequency::Monthly, Frequency::Weekly,
                                         Frequency::Daily,  Frequency::Hourly};

std::vector<ModelSpec> parse_pool(const std::vector<std::string>& tokens, Frequency frequency) {
    std::vector<ModelSpec> pool;
    for (const std::string& token : tokens) {
        ModelSpec spec = parse_model_spec(token);
        validate_model_spec(spec, frequency);
        pool.push_back(std::move(spec));
    }
    return pool;
}

Frequency frequency_of_key(const std::string& key) {
    const std::string name = key.substr(0, key.find(' '));
    for (Frequency f : kAllFrequencies) {
        if (name == frequency_name(f)) return f;
    }
    throw std::invalid_argument("unknown class key '" + key + "'");
}

std::string trim_spaces(const std::string& s) {
    const std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> all_class_keys() {
    std::vector<std::string> keys;
    keys.push_back("yearly trend no-seasonal");
    keys.push_back("yearly no-trend no-seasonal");
    for (const char* freq : {"quarterly", "monthly"}) {
        for (const char* trend : {"trend", "no-trend"}) {
            for (const char* seas : {"seasonal", "no-seasonal"}) {
                keys.push_back(std::string(freq) + " " + trend + " " + seas);
            }
        }
    }
    keys.push_back("weekly");
    keys.push_back("daily");
    keys.push_back("hourly");
    return keys;
}

const FrequencyParams& PipelineConfig::params_for(Frequency f) const {
    const auto it = params.find(f);
    if (it == params.end()) {
        throw std::invalid_argument(std::string("no parameters configured for ") +
                                    frequency_name(f) + " series");
    }
    return it->second;
}

const std::vector<ModelSpec>& PipelineConfig::pool_for(const SeriesClass& cls) const {
    const std::string key = class_key(cls);
    const auto it = pools.find(key);
    if (it == pools.end() || it->second.empty()) {
        throw std::invalid_argument("no model pool configured for class '" + key + "'");
    }
    return it->second;
}

void PipelineConfig::validate() const {
    for (Frequency f : kAllFrequencies) {
        const FrequencyParams& p = params_for(f);
        if (p.origins < 1 || p.origins > horizon_for(f)) {
            throw std::invalid_argument(std::string("origins out of range for ") +
                                        frequency_name(f));
        }
        if (p.weighting.epsilon <= 0.0) {
            throw std::invalid_argument("weighting epsilon must be positive");
        }
        for (const std::optional<double>& t : {p.random_walk_threshold, p.analogy_threshold}) {
            if (t && (*t <= 0.0 || *t >= 1.0)) {
                throw std::invalid_argument("threshold out of (0, 1)");
            }
        }
    }
    for (const std::string& key : all_class_keys()) {
        const auto it = pools.find(key);
        if (it == pools.end() || it->second.empty()) {
            throw std::invalid_argument("class '" + key + "' has no model pool");
        }
        const Frequency f = frequency_of_key(key);
        for (const ModelSpec& spec : it->second) validate_model_spec(spec, f);
    }
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

PipelineConfig default_config() {
    PipelineConfig config;
    for (Frequency f : kAllFrequencies) config.params[f] = default_frequency_params(f);

    auto pool = [](std::initializer_list<const char*> tokens, Frequency f) {
        std::vector<std::string> list(tokens.begin(), tokens.end());
        return parse_pool(list, f);
    };

    const auto yearly = pool({"naive1", "ses", "ets", "ets damped", "theta", "otm", "arima",
                              "lr 1,t"},
                             Frequency::Yearly);
    config.pools["yearly trend no-seasonal"] = yearly;
    config.pools["yearly no-trend no-seasonal"] = yearly;

    // the trend / no-seasonality pool follows the published worked example
    config.pools["quarterly trend no-seasonal"] =
        pool({"arima", "ets damped", "ets", "ets no-trend", "lr 1,t", "mean", "otm", "theta"},
             Frequency::Quarterly);
    const auto quarterly = pool({"naive2", "ses", "ets", "ets damped", "ets no-trend", "theta",
                                 "otm", "arima", "lr 1,t", "mean"},
                                Frequency::Quarterly);
    config.pools["quarterly trend seasonal"] = quarterly;
    config.pools["quarterly no-trend seasonal"] = quarterly;
    config.pools["quarterly no-trend no-seasonal"] = quarterly;

    const auto monthly = pool({"naive1", "naive2", "ses deseasonalized", "ets", "ets damped",
                               "theta", "otm", "arima", "lr 1,t deseasonalized", "mean"},
                              Frequency::Monthly);
    for (const char* trend : {"trend", "no-trend"}) {
        for (const char* seas : {"seasonal", "no-seasonal"}) {
            config.pools[std::string("monthly ") + trend + " " + seas] = monthly;
        }
    }

    config.pools["weekly"] =
        pool({"naive1", "naive2", "ses", "theta", "otm", "otm trim=260 period=52",
              "ets trim=260", "arima trim=260", "lr 1,t"},
             Frequency::Weekly);
    config.pools["daily"] =
        pool({"naive1", "naive2", "ses", "theta trim=70", "otm trim=70", "ets trim=70",
              "arima trim=70", "lr 1,t"},
             Frequency::Daily);
    config.pools["hourly"] =
        pool({"naive1", "naive2", "naive2 period=168", "theta", "theta period=168", "otm",
              "otm period=168", "ets trim=504", "ets trim=504 period=168", "arima trim=504",
              "arima trim=504 period=168"},
             Frequency::Hourly);
    return config;
}

std::string serialize_config(const PipelineConfig& config) {
    std::ostringstream out;
    out << "# enscast pipeline configuration\n";
    out << "jobs = " << config.jobs << "\n";
    out << "monthly-analogy = " << (config.monthly_analogy ? "on" : "off") << "\n";
    for (const auto& [freq, p] : config.params) {
        out << "\n[params " << frequency_name(freq) << "]\n";
        out << "origins = " << p.origins << "\n";
        out << "averaging = " << averaging_name(p.averaging) << "\n";
        out << "weighting = " << weighting_name(p.weighting.formula) << "\n";
        out << "epsilon = " << format_number(p.weighting.epsilon) << "\n";
        if (p.random_walk_threshold) {
            out << "random-walk-threshold = " << format_number(*p.random_walk_threshold) << "\n";
        }
        if (p.analogy_threshold) {
            out << "analogy-threshold = " << format_number(*p.analogy_threshold) << "\n";
        }
        out << "analogy = " << (p.analogy_enabled ? "on" : "off") << "\n";
    }
    for (const auto& [key, pool] : config.pools) {
        out << "\n[pool " << key << "]\n";
        for (const ModelSpec& spec : pool) out << spec.token() << "\n";
    }
    return out.str();
}

PipelineConfig parse_config(const std::string& text) {
    PipelineConfig config = default_config();
    std::istringstream in(text);
    std::string line;
    std::size_t line_number = 0;

    std::string section;       // "params" or "pool"
    Frequency section_freq = Frequency::Yearly;
    std::string pool_key;
    std::vector<std::string> pool_tokens;
    bool pool_open = false;

    auto flush_pool = [&]() {
        if (!pool_open) return;
        config.pools[pool_key] = parse_pool(pool_tokens, frequency_of_key(pool_key));
        pool_tokens.clear();
        pool_open = false;
    };

    while (std::getline(in, line)) {
        ++line_number;
        line = trim_spaces(line);
        if (line.empty() || line[0] == '#') continue;
        try {
            if (line.front() == '[') {
                flush_pool();
                if (line.back() != ']') throw std::invalid_argument("unterminated section header");
                const std::string header = trim_spaces(line.substr(1, line.size() - 2));
                if (header.rfind("params ", 0) == 0) {
                    section = "params";
                    const std::string name = trim_spaces(header.substr(7));
                    bool known = false;
                    for (Frequency f : kAllFrequencies) {
                        if (name == frequency_name(f)) {
                            section_freq = f;
                            known = true;
                        }
                    }
                    if (!known) throw std::invalid_argument("unknown frequency '" + name + "'");
                } else if (header.rfind("pool ", 0) == 0) {
                    section = "pool";
                    pool_key = trim_spaces(header.substr(5));
                    frequency_of_key(pool_key);  // validates the key prefix
                    pool_open = true;
                } else {
                    throw std::invalid_argument("unknown section '" + header + "'");
                }
                continue;
            }
            if (section == "pool") {
                pool_tokens.push_back(line);
                continue;
            }
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("expected key = value");
            const std::string key = trim_spaces(line.substr(0, eq));
            const std::string value = trim_spaces(line.substr(eq + 1));
            if (section.empty()) {
                if (key == "jobs") config.jobs = std::stoi(value);
                else if (key == "monthly-analogy") config.monthly_analogy = value == "on";
                else throw std::invalid_argument("unknown top-level key '" + key + "'");
                continue;
            }
            FrequencyParams& p = config.params[section_freq];
            if (key == "origins") p.origins = std::stoi(value);
            else if (key == "averaging") p.averaging = averaging_from_name(value);
            else if (key == "weighting") p.weighting.formula = weighting_from_name(value);
            else if (key == "epsilon") p.weighting.epsilon = std::stod(value);
            else if (key == "random-walk-threshold") p.random_walk_threshold = std::stod(value);
            else if (key == "analogy-threshold") p.analogy_threshold = std::stod(value);
            else if (key == "analogy") p.analogy_enabled = value == "on";
            else throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::exception& e) {
            throw std::runtime_error("config line " + std::to_string(line_number) + ": " +
                                     e.what());
        }
    }
    flush_pool();
    config.validate();
    return config;
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace enscast
