#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace enscast {

enum class Frequency { Yearly, Quarterly, Monthly, Weekly, Daily, Hourly };

/// Forecast horizon h for a frequency.
constexpr int horizon_for(Frequency f) {
    switch (f) {
        case Frequency::Yearly: return 6;
        case Frequency::Quarterly: return 8;
        case Frequency::Monthly: return 18;
        case Frequency::Weekly: return 13;
        case Frequency::Daily: return 14;
        case Frequency::Hourly: return 48;
    }
    return 0;
}

/// Seasonal period m used for decomposition and seasonal model variants.
constexpr int seasonal_period(Frequency f) {
    switch (f) {
        case Frequency::Yearly: return 1;
        case Frequency::Quarterly: return 4;
        case Frequency::Monthly: return 12;
        case Frequency::Weekly: return 52;
        case Frequency::Daily: return 7;
        case Frequency::Hourly: return 24;
    }
    return 1;
}

/// Default number of rolling-origin evaluation points N.
constexpr int default_origins(Frequency f) {
    switch (f) {
        case Frequency::Yearly: return 3;
        case Frequency::Quarterly: return 8;
        case Frequency::Monthly: return 10;
        case Frequency::Weekly: return 13;
        case Frequency::Daily: return 8;
        case Frequency::Hourly: return 24;
    }
    return 1;
}

/// Seasonal lag of the scaled-error denominator (MASE), M4 convention.
constexpr int mase_period(Frequency f) {
    switch (f) {
        case Frequency::Yearly: return 1;
        case Frequency::Quarterly: return 4;
        case Frequency::Monthly: return 12;
        case Frequency::Weekly: return 1;
        case Frequency::Daily: return 1;
        case Frequency::Hourly: return 24;
    }
    return 1;
}

const char* frequency_name(Frequency f);

/// Maps an M4 series id prefix (Y/Q/M/W/D/H) to its frequency.
/// Throws std::invalid_argument for anything else.
Frequency frequency_from_prefix(char prefix);

/// A univariate equally-spaced series. Values are validated finite on
/// construction; instances are immutable afterwards and safe to share
/// across threads.
class TimeSeries {
public:
    TimeSeries() = default;
    TimeSeries(std::string id, Frequency frequency, std::vector<double> values);

    const std::string& id() const { return id_; }
    Frequency frequency() const { return frequency_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    int horizon() const { return horizon_for(frequency_); }

private:
    std::string id_;
    Frequency frequency_ = Frequency::Yearly;
    std::vector<double> values_;
};

struct SplitSeries {
    TimeSeries train;
    std::vector<double> holdout;  // length = horizon
};

/// Splits off the final h observations as the holdout part.
/// Requires length > h; the error message names the series id.
SplitSeries split_train_holdout(const TimeSeries& series);

/// Minimum length accepted at pipeline entry: holdout plus a training
/// part of at least the same size.
constexpr std::size_t min_pipeline_length(Frequency f) {
    return 2 * static_cast<std::size_t>(horizon_for(f));
}

}  // namespace enscast
