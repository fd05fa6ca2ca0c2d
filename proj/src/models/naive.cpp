#include <numeric>
#include <stdexcept>

#include "enscast/models.hpp"
#include "internal.hpp"

namespace enscast {

namespace detail {

LineFit ols_line(const std::vector<double>& values) {
    const std::size_t n = values.size();
    const double t_mean = (static_cast<double>(n) + 1.0) / 2.0;
    const double x_mean =
        std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double dt = static_cast<double>(t + 1) - t_mean;
        num += dt * (values[t] - x_mean);
        den += dt * dt;
    }
    const double slope = den > 0.0 ? num / den : 0.0;
    return LineFit{x_mean - slope * t_mean, slope};
}

std::optional<SeasonalIndices> maybe_seasonal_indices(const std::vector<double>& values,
                                                      int period) {
    if (period <= 1 || values.size() < 2 * static_cast<std::size_t>(period)) return std::nullopt;
    if (!seasonality_test(values, period)) return std::nullopt;
    for (double v : values) {
        if (v <= 0.0) return std::nullopt;
    }
    return classical_decomposition(values, period);
}

}  // namespace detail

ForecastVector naive1_forecast(const std::vector<double>& values, int h) {
    if (values.empty()) throw std::invalid_argument("naive1: empty series");
    return ForecastVector(static_cast<std::size_t>(h), values.back());
}

ForecastVector naive2_forecast(const std::vector<double>& values, int h, int period) {
    if (values.empty()) throw std::invalid_argument("naive2: empty series");
    const auto indices = detail::maybe_seasonal_indices(values, period);
    if (!indices) return naive1_forecast(values, h);
    const auto adjusted = deseasonalize(values, *indices);
    ForecastVector flat(static_cast<std::size_t>(h), adjusted.back());
    return reseasonalize(flat, *indices, values.size());
}

ForecastVector mean_forecast(const std::vector<double>& values, int h) {
    if (values.empty()) throw std::invalid_argument("mean: empty series");
    const double mean =
        std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    return ForecastVector(static_cast<std::size_t>(h), mean);
}

}  // namespace enscast
