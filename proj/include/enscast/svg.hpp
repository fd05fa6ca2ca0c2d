#pragma once

#include <string>
#include <utility>
#include <vector>

#include "enscast/models.hpp"

namespace enscast {

/// One SVG document: history polyline (future values appended when
/// given), one polyline per model forecast, the combination
/// highlighted, and a legend with the model names.
std::string emit_plot(const std::vector<double>& history,
                      const std::vector<std::pair<std::string, ForecastVector>>& model_forecasts,
                      const ForecastVector& combination,
                      const std::vector<double>& future = {});

/// Bar chart of mean normalized weights per model name.
std::string emit_weights_chart(const std::vector<std::pair<std::string, double>>& mean_weights,
                               const std::string& title);

}  // namespace enscast
