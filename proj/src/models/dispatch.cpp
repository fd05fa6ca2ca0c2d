#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "enscast/log.hpp"
#include "enscast/models.hpp"
#include "enscast/stat_tests.hpp"
#include "internal.hpp"

namespace enscast {

namespace {

std::string family_token(ModelFamily family) {
    switch (family) {
        case ModelFamily::Naive1: return "naive1";
        case ModelFamily::Naive2: return "naive2";
        case ModelFamily::SES: return "ses";
        case ModelFamily::ETSAuto: return "ets";
        case ModelFamily::Theta: return "theta";
        case ModelFamily::OptimizedTheta: return "otm";
        case ModelFamily::ArimaAuto: return "arima";
        case ModelFamily::LinearTrend: return "lr";
        case ModelFamily::Mean: return "mean";
    }
    return "?";
}

std::size_t family_min_length(const ModelSpec& spec) {
    switch (spec.family) {
        case ModelFamily::Naive1:
        case ModelFamily::Naive2:
        case ModelFamily::Mean: return 1;
        case ModelFamily::SES:
        case ModelFamily::Theta:
        case ModelFamily::OptimizedTheta:
        case ModelFamily::ETSAuto: return 3;
        case ModelFamily::ArimaAuto: return 10;
        case ModelFamily::LinearTrend: return spec.regressors.size() + 1;
    }
    return 1;
}

ForecastVector dispatch_family(const ModelSpec& spec, const std::vector<double>& values, int h,
                               int period) {
    switch (spec.family) {
        case ModelFamily::Naive1: return naive1_forecast(values, h);
        case ModelFamily::Naive2: return naive2_forecast(values, h, period);
        case ModelFamily::SES: return ses_forecast(values, h);
        case ModelFamily::ETSAuto:
            return ets_auto_forecast(values, h, period, spec.damped, spec.trend_disabled);
        case ModelFamily::Theta: return theta_forecast(values, h, period);
        case ModelFamily::OptimizedTheta: return otm_forecast(values, h, period);
        case ModelFamily::ArimaAuto: return arima_auto_forecast(values, h, period);
        case ModelFamily::LinearTrend: return linear_trend_forecast(values, h, spec.regressors);
        case ModelFamily::Mean: return mean_forecast(values, h);
    }
    throw std::logic_error("unknown model family");
}

}  // namespace

int effective_period(const ModelSpec& spec, Frequency frequency) {
    return spec.seasonal_period_override.value_or(seasonal_period(frequency));
}

std::string ModelSpec::display_name() const {
    std::string name;
    switch (family) {
        case ModelFamily::Naive1: name = "Naive 1"; break;
        case ModelFamily::Naive2: name = "Naive 2"; break;
        case ModelFamily::SES: name = "SES"; break;
        case ModelFamily::ETSAuto:
            name = damped.value_or(false) ? "Auto damped ETS" : "Auto ETS";
            if (trend_disabled.value_or(false)) name = "Auto ETS, no trend";
            break;
        case ModelFamily::Theta: name = "Theta"; break;
        case ModelFamily::OptimizedTheta: name = "Optimized Theta"; break;
        case ModelFamily::ArimaAuto: name = "Auto ARIMA"; break;
        case ModelFamily::LinearTrend: {
            std::string regs;
            for (Regressor r : regressors) {
                if (!regs.empty()) regs += ", ";
                regs += r == Regressor::Constant ? "1" : (r == Regressor::Linear ? "t" : "ln t");
            }
            name = "LR (" + regs + ")";
            break;
        }
        case ModelFamily::Mean: name = "Mean"; break;
    }
    if (apply_deseasonalized) name = "Seas. " + name;
    if (trim) name += ", trim " + std::to_string(*trim);
    if (seasonal_period_override) name += ", freq " + std::to_string(*seasonal_period_override);
    return name;
}

std::string ModelSpec::token() const {
    std::string out = family_token(family);
    if (family == ModelFamily::LinearTrend) {
        std::string regs;
        for (Regressor r : regressors) {
            if (!regs.empty()) regs += ",";
            regs += r == Regressor::Constant ? "1" : (r == Regressor::Linear ? "t" : "ln");
        }
        out += " " + regs;
    }
    if (damped.value_or(false)) out += " damped";
    if (trend_disabled.value_or(false)) out += " no-trend";
    if (trim) out += " trim=" + std::to_string(*trim);
    if (seasonal_period_override) out += " period=" + std::to_string(*seasonal_period_override);
    if (apply_deseasonalized) out += " deseasonalized";
    return out;
}

ModelSpec parse_model_spec(const std::string& token) {
    std::istringstream in(token);
    std::string word;
    if (!(in >> word)) throw std::invalid_argument("empty model token");

    ModelSpec spec;
    if (word == "naive1") spec.family = ModelFamily::Naive1;
    else if (word == "naive2") spec.family = ModelFamily::Naive2;
    else if (word == "ses") spec.family = ModelFamily::SES;
    else if (word == "ets") spec.family = ModelFamily::ETSAuto;
    else if (word == "theta") spec.family = ModelFamily::Theta;
    else if (word == "otm") spec.family = ModelFamily::OptimizedTheta;
    else if (word == "arima") spec.family = ModelFamily::ArimaAuto;
    else if (word == "lr") spec.family = ModelFamily::LinearTrend;
    else if (word == "mean") spec.family = ModelFamily::Mean;
    else throw std::invalid_argument("unknown model family '" + word + "'");

    if (spec.family == ModelFamily::LinearTrend) {
        std::string regs;
        if (!(in >> regs)) throw std::invalid_argument("lr: missing regressor list");
        std::istringstream rs(regs);
        std::string reg;
        while (std::getline(rs, reg, ',')) {
            if (reg == "1") spec.regressors.insert(Regressor::Constant);
            else if (reg == "t") spec.regressors.insert(Regressor::Linear);
            else if (reg == "ln") spec.regressors.insert(Regressor::Logarithmic);
            else throw std::invalid_argument("lr: unknown regressor '" + reg + "'");
        }
        if (spec.regressors.empty()) throw std::invalid_argument("lr: empty regressor list");
    }

    while (in >> word) {
        if (word == "damped") spec.damped = true;
        else if (word == "no-trend") spec.trend_disabled = true;
        else if (word == "deseasonalized") spec.apply_deseasonalized = true;
        else if (word.rfind("trim=", 0) == 0) spec.trim = std::stoi(word.substr(5));
        else if (word.rfind("period=", 0) == 0) spec.seasonal_period_override = std::stoi(word.substr(7));
        else throw std::invalid_argument("unknown model option '" + word + "'");
    }
    if (spec.damped.value_or(false) && spec.trend_disabled.value_or(false)) {
        throw std::invalid_argument("model cannot be both damped and no-trend");
    }
    return spec;
}

void validate_model_spec(const ModelSpec& spec, Frequency frequency) {
    if (spec.seasonal_period_override) {
        const int p = *spec.seasonal_period_override;
        const bool ok = (frequency == Frequency::Hourly && (p == 24 || p == 168)) ||
                        (frequency == Frequency::Weekly && (p == 1 || p == 52));
        if (!ok) {
            throw std::invalid_argument("model '" + spec.token() + "': period override " +
                                        std::to_string(p) + " not allowed for " +
                                        frequency_name(frequency) + " series");
        }
    }
    if (spec.trim) {
        const int min_trim = 2 * effective_period(spec, frequency);
        if (*spec.trim < min_trim) {
            throw std::invalid_argument("model '" + spec.token() + "': trim " +
                                        std::to_string(*spec.trim) + " below twice the period (" +
                                        std::to_string(min_trim) + ")");
        }
    }
    if ((spec.damped || spec.trend_disabled) && spec.family != ModelFamily::ETSAuto) {
        throw std::invalid_argument("model '" + spec.token() +
                                    "': trend options apply to ets only");
    }
    if (!spec.regressors.empty() && spec.family != ModelFamily::LinearTrend) {
        throw std::invalid_argument("model '" + spec.token() + "': regressors apply to lr only");
    }
    if (spec.family == ModelFamily::LinearTrend && spec.regressors.empty()) {
        throw std::invalid_argument("lr model needs a regressor set");
    }
}

ForecastVector forecast(const ModelSpec& spec, const TimeSeries& series, int h) {
    if (h <= 0) throw std::invalid_argument("forecast: horizon must be positive");
    const int period = effective_period(spec, series.frequency());

    std::vector<double> values = series.values();
    if (spec.trim && values.size() > static_cast<std::size_t>(*spec.trim)) {
        values.assign(values.end() - *spec.trim, values.end());
    }

    try {
        if (values.size() < family_min_length(spec)) {
            throw std::invalid_argument("series too short for " + spec.display_name());
        }
        ForecastVector result;
        if (spec.apply_deseasonalized) {
            const auto indices = detail::maybe_seasonal_indices(values, period);
            if (indices) {
                const auto adjusted = deseasonalize(values, *indices);
                result = dispatch_family(spec, adjusted, h, 1);
                result = reseasonalize(result, *indices, values.size());
            } else {
                result = dispatch_family(spec, values, h, period);
            }
        } else {
            result = dispatch_family(spec, values, h, period);
        }
        for (double v : result) {
            if (!std::isfinite(v)) throw std::runtime_error("non-finite forecast value");
        }
        return result;
    } catch (const std::exception& e) {
        log_warning(spec.display_name() + " failed on series " + series.id() + " (" + e.what() +
                    "); falling back to Naive 1");
        return naive1_forecast(values.empty() ? series.values() : values, h);
    }
}

}  // namespace enscast
