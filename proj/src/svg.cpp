#include "enscast/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "enscast/csv.hpp"

namespace enscast {

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 60.0;
constexpr double kMarginRight = 210.0;  // legend area
constexpr double kMarginTop = 20.0;
constexpr double kMarginBottom = 30.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Scale {
    double x0, x1, y0, y1;
    double px(double x) const {
        const double span = x1 > x0 ? x1 - x0 : 1.0;
        return kMarginLeft + (x - x0) / span * (kWidth - kMarginLeft - kMarginRight);
    }
    double py(double y) const {
        const double span = y1 > y0 ? y1 - y0 : 1.0;
        return kHeight - kMarginBottom - (y - y0) / span * (kHeight - kMarginTop - kMarginBottom);
    }
};

void polyline(std::ostringstream& out, const Scale& scale, const std::vector<double>& values,
              std::size_t t_offset, const std::string& color, double stroke_width) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << stroke_width
        << "\" points=\"";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ' ';
        out << scale.px(static_cast<double>(t_offset + i)) << ',' << scale.py(values[i]);
    }
    out << "\"/>\n";
}

}  // namespace

std::string emit_plot(const std::vector<double>& history,
                      const std::vector<std::pair<std::string, ForecastVector>>& model_forecasts,
                      const ForecastVector& combination, const std::vector<double>& future) {
    std::vector<double> full_history = history;
    full_history.insert(full_history.end(), future.begin(), future.end());

    double lo = full_history.empty() ? 0.0 : full_history.front();
    double hi = lo;
    auto stretch = [&lo, &hi](const std::vector<double>& v) {
        for (double x : v) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    };
    stretch(full_history);
    for (const auto& [name, f] : model_forecasts) stretch(f);
    stretch(combination);

    std::size_t max_t = full_history.size();
    const std::size_t fc_end = history.size() + combination.size();
    max_t = std::max(max_t, fc_end);
    for (const auto& [name, f] : model_forecasts) max_t = std::max(max_t, history.size() + f.size());

    Scale scale{0.0, static_cast<double>(max_t > 1 ? max_t - 1 : 1), lo, hi};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axis baseline
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom << "\" x2=\""
        << kWidth - kMarginRight << "\" y2=\"" << kHeight - kMarginBottom
        << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    polyline(out, scale, full_history, 0, "#000000", 1.6);

    double legend_y = kMarginTop + 14.0;
    auto legend_entry = [&out, &legend_y](const std::string& color, const std::string& label,
                                          double stroke_width) {
        out << "<line x1=\"" << kWidth - kMarginRight + 12 << "\" y1=\"" << legend_y - 4
            << "\" x2=\"" << kWidth - kMarginRight + 40 << "\" y2=\"" << legend_y - 4
            << "\" stroke=\"" << color << "\" stroke-width=\"" << stroke_width << "\"/>\n";
        out << "<text x=\"" << kWidth - kMarginRight + 46 << "\" y=\"" << legend_y
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << label << "</text>\n";
        legend_y += 18.0;
    };
    legend_entry("#000000", "series", 1.6);

    const std::size_t anchor = history.empty() ? 0 : history.size() - 1;
    for (std::size_t i = 0; i < model_forecasts.size(); ++i) {
        const auto& [name, f] = model_forecasts[i];
        // anchor each forecast to the last historical point for continuity
        std::vector<double> line;
        if (!history.empty()) line.push_back(history.back());
        line.insert(line.end(), f.begin(), f.end());
        const std::string color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        polyline(out, scale, line, anchor, color, 1.0);
        legend_entry(color, name, 1.0);
    }
    if (!combination.empty()) {
        std::vector<double> line;
        if (!history.empty()) line.push_back(history.back());
        line.insert(line.end(), combination.begin(), combination.end());
        polyline(out, scale, line, anchor, "#d62728", 2.6);
        legend_entry("#d62728", "Combination", 2.6);
    }
    out << "</svg>\n";
    return out.str();
}

std::string emit_weights_chart(const std::vector<std::pair<std::string, double>>& mean_weights,
                               const std::string& title) {
    const double bar_height = 22.0;
    const double gap = 8.0;
    const double label_width = 220.0;
    const double chart_width = 520.0;
    const double height =
        kMarginTop + 24.0 + static_cast<double>(mean_weights.size()) * (bar_height + gap) +
        kMarginBottom;

    double max_w = 0.0;
    for (const auto& [name, w] : mean_weights) max_w = std::max(max_w, w);
    if (max_w <= 0.0) max_w = 1.0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << label_width + chart_width + 120.0 << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"10\" y=\"" << kMarginTop << "\" font-family=\"sans-serif\" font-size=\"14\""
        << " font-weight=\"bold\">" << title << "</text>\n";

    double y = kMarginTop + 24.0;
    for (const auto& [name, w] : mean_weights) {
        out << "<text x=\"10\" y=\"" << y + bar_height - 7.0
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << name << "</text>\n";
        out << "<rect x=\"" << label_width << "\" y=\"" << y << "\" width=\""
            << (w / max_w) * chart_width << "\" height=\"" << bar_height
            << "\" fill=\"#1f77b4\"/>\n";
        out << "<text x=\"" << label_width + (w / max_w) * chart_width + 6.0 << "\" y=\""
            << y + bar_height - 7.0 << "\" font-family=\"sans-serif\" font-size=\"12\">"
            << format_number(w) << "</text>\n";
        y += bar_height + gap;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace enscast
