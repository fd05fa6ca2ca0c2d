#include <stdexcept>

#include "../optim.hpp"
#include "enscast/models.hpp"

namespace enscast {

namespace {
constexpr double kAlphaLower = 0.0001;
constexpr double kAlphaUpper = 0.9999;
}  // namespace

double ses_sse(const std::vector<double>& values, double alpha) {
    if (values.size() < 2) return 0.0;
    double level = values[0];
    double sse = 0.0;
    for (std::size_t t = 1; t < values.size(); ++t) {
        const double e = values[t] - level;
        sse += e * e;
        level = alpha * values[t] + (1.0 - alpha) * level;
    }
    return sse;
}

double ses_level(const std::vector<double>& values, double alpha) {
    if (values.empty()) throw std::invalid_argument("ses: empty series");
    double level = values[0];
    for (std::size_t t = 1; t < values.size(); ++t) {
        level = alpha * values[t] + (1.0 - alpha) * level;
    }
    return level;
}

ForecastVector ses_forecast(const std::vector<double>& values, int h,
                            std::optional<double> fixed_alpha) {
    if (values.empty()) throw std::invalid_argument("ses: empty series");
    double alpha;
    if (fixed_alpha) {
        alpha = *fixed_alpha;
    } else {
        alpha = detail::golden_section_minimize(
            [&values](double a) { return ses_sse(values, a); }, kAlphaLower, kAlphaUpper);
    }
    return ForecastVector(static_cast<std::size_t>(h), ses_level(values, alpha));
}

}  // namespace enscast
