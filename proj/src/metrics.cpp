#include "enscast/metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "enscast/csv.hpp"

namespace enscast {

double smape_step(double forecast, double actual) {
    const double denom = std::abs(forecast) + std::abs(actual);
    if (denom == 0.0) return 0.0;
    return 2.0 * std::abs(forecast - actual) / denom;
}

double smape(const std::vector<double>& forecast, const std::vector<double>& actual) {
    if (forecast.size() != actual.size()) {
        throw std::invalid_argument("smape: forecast/actual length mismatch (" +
                                    std::to_string(forecast.size()) + " vs " +
                                    std::to_string(actual.size()) + ")");
    }
    if (forecast.empty()) {
        throw std::invalid_argument("smape: empty input");
    }
    double acc = 0.0;
    for (std::size_t t = 0; t < forecast.size(); ++t) acc += smape_step(forecast[t], actual[t]);
    return acc / static_cast<double>(forecast.size());
}

double mase(const std::vector<double>& forecast, const std::vector<double>& actual,
            const std::vector<double>& insample, int period) {
    if (forecast.size() != actual.size()) {
        throw std::invalid_argument("mase: forecast/actual length mismatch");
    }
    if (forecast.empty()) throw std::invalid_argument("mase: empty input");
    if (period < 1 || insample.size() <= static_cast<std::size_t>(period)) {
        throw std::invalid_argument("mase: in-sample part must be longer than the period");
    }
    double denom = 0.0;
    const std::size_t p = static_cast<std::size_t>(period);
    for (std::size_t t = p; t < insample.size(); ++t) {
        denom += std::abs(insample[t] - insample[t - p]);
    }
    denom /= static_cast<double>(insample.size() - p);
    if (denom == 0.0) {
        throw std::runtime_error("mase: undefined, in-sample part is seasonally constant");
    }
    double mae = 0.0;
    for (std::size_t t = 0; t < forecast.size(); ++t) mae += std::abs(forecast[t] - actual[t]);
    mae /= static_cast<double>(forecast.size());
    return mae / denom;
}

double owa(double smape_model, double mase_model, double smape_naive2, double mase_naive2) {
    if (smape_naive2 <= 0.0 || mase_naive2 <= 0.0) {
        throw std::invalid_argument("owa: Naive 2 baselines must be positive");
    }
    return (smape_model / smape_naive2 + mase_model / mase_naive2) / 2.0;
}

EvalReport aggregate_scores_report(const std::vector<SeriesScore>& scores) {
    struct Acc {
        std::size_t count = 0;
        double smape_sum = 0.0;
        std::size_t mase_count = 0;
        double mase_sum = 0.0;
        double n2_smape_sum = 0.0;
        double n2_mase_sum = 0.0;
    };
    std::map<Frequency, Acc> by_freq;
    Acc total;
    std::size_t excluded = 0;

    for (const auto& s : scores) {
        for (Acc* acc : {&by_freq[s.frequency], &total}) {
            acc->count += 1;
            acc->smape_sum += s.smape;
            acc->n2_smape_sum += s.naive2_smape;
            if (s.mase_defined) {
                acc->mase_count += 1;
                acc->mase_sum += s.mase;
                acc->n2_mase_sum += s.naive2_mase;
            }
        }
        if (!s.mase_defined) ++excluded;
    }

    auto to_row = [](const Acc& acc) {
        EvalRow row;
        row.series_count = acc.count;
        if (acc.count == 0) return row;
        row.smape = acc.smape_sum / static_cast<double>(acc.count);
        const double n2_smape = acc.n2_smape_sum / static_cast<double>(acc.count);
        double mase_ratio = 0.0;
        if (acc.mase_count > 0) {
            row.mase = acc.mase_sum / static_cast<double>(acc.mase_count);
            const double n2_mase = acc.n2_mase_sum / static_cast<double>(acc.mase_count);
            if (n2_mase > 0.0) mase_ratio = row.mase / n2_mase;
        }
        if (n2_smape > 0.0) {
            row.owa = (row.smape / n2_smape + mase_ratio) / 2.0;
        }
        return row;
    };

    EvalReport report;
    for (const auto& [freq, acc] : by_freq) report.per_frequency[freq] = to_row(acc);
    report.overall = to_row(total);
    report.mase_excluded = excluded;
    return report;
}

namespace {

void append_row(std::ostringstream& out, const std::string& label, const EvalRow& row) {
    out << label << "  count=" << row.series_count << "  smape=" << format_number(row.smape)
        << " (" << format_number(row.smape * 100.0) << "%)  mase=" << format_number(row.mase)
        << "  owa=" << format_number(row.owa) << "\n";
}

}  // namespace

std::string EvalReport::to_text() const {
    std::ostringstream out;
    out << "evaluation report (sMAPE fraction scale; OWA vs Naive 2)\n";
    for (const auto& [freq, row] : per_frequency) append_row(out, frequency_name(freq), row);
    append_row(out, "overall", overall);
    if (mase_excluded > 0) {
        out << "note: " << mase_excluded << " series excluded from MASE (undefined denominator)\n";
    }
    return out.str();
}

std::string EvalReport::to_csv() const {
    std::ostringstream out;
    out << "frequency,count,smape_pct,mase,owa\n";
    auto line = [&out](const std::string& name, const EvalRow& row) {
        out << name << ',' << row.series_count << ',' << format_number(row.smape * 100.0) << ','
            << format_number(row.mase) << ',' << format_number(row.owa) << "\n";
    };
    for (const auto& [freq, row] : per_frequency) line(frequency_name(freq), row);
    line("overall", overall);
    return out.str();
}

}  // namespace enscast
