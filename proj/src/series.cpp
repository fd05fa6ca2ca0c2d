#include "enscast/series.hpp"

#include <cmath>

namespace enscast {

const char* frequency_name(Frequency f) {
    switch (f) {
        case Frequency::Yearly: return "yearly";
        case Frequency::Quarterly: return "quarterly";
        case Frequency::Monthly: return "monthly";
        case Frequency::Weekly: return "weekly";
        case Frequency::Daily: return "daily";
        case Frequency::Hourly: return "hourly";
    }
    return "?";
}

Frequency frequency_from_prefix(char prefix) {
    switch (prefix) {
        case 'Y': case 'y': return Frequency::Yearly;
        case 'Q': case 'q': return Frequency::Quarterly;
        case 'M': case 'm': return Frequency::Monthly;
        case 'W': case 'w': return Frequency::Weekly;
        case 'D': case 'd': return Frequency::Daily;
        case 'H': case 'h': return Frequency::Hourly;
        default:
            throw std::invalid_argument(std::string("unknown series id prefix '") + prefix +
                                        "' (expected Y/Q/M/W/D/H)");
    }
}

TimeSeries::TimeSeries(std::string id, Frequency frequency, std::vector<double> values)
    : id_(std::move(id)), frequency_(frequency), values_(std::move(values)) {
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("series " + id_ + ": non-finite observation");
        }
    }
}

SplitSeries split_train_holdout(const TimeSeries& series) {
    const std::size_t h = static_cast<std::size_t>(series.horizon());
    if (series.size() <= h) {
        throw std::invalid_argument("series " + series.id() + ": too short to split (length " +
                                    std::to_string(series.size()) + ", horizon " +
                                    std::to_string(h) + ")");
    }
    const auto& v = series.values();
    std::vector<double> train(v.begin(), v.end() - static_cast<std::ptrdiff_t>(h));
    std::vector<double> holdout(v.end() - static_cast<std::ptrdiff_t>(h), v.end());
    return SplitSeries{TimeSeries(series.id(), series.frequency(), std::move(train)),
                       std::move(holdout)};
}

}  // namespace enscast
