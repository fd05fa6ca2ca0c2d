#pragma once

#include <random>
#include <string>
#include <vector>

#include "enscast/series.hpp"

namespace enscast::testing {

// M4 quarterly series Q123 (39 given observations) and the reference
// values used across the golden tests.
inline const std::vector<double> kQ123 = {
    1281.37, 1297.41, 1320.54, 1338.16, 1364.89, 1379.98, 1390.85, 1406.64,
    1423.32, 1442.23, 1456.97, 1468.53, 1466.84, 1481.30, 1484.30, 1454.99,
    1438.39, 1434.04, 1438.41, 1456.65, 1468.11, 1488.86, 1505.77, 1523.02,
    1523.84, 1546.09, 1558.71, 1578.53, 1597.39, 1612.19, 1622.79, 1629.73,
    1647.54, 1654.14, 1674.93, 1699.99, 1702.52, 1728.56, 1756.94};

// rolling-origin reference for the Theta method: series value and
// one-step forecast per origin k = 8..1 (fitted without the last k
// observations), plus the printed per-origin sMAPE row. The sMAPE row
// is printed in reverse order relative to the origins; pairing is by
// recomputation.
inline const std::vector<double> kQ123ThetaOriginValues = {
    1629.73, 1647.54, 1654.14, 1674.93, 1699.99, 1702.52, 1728.56, 1756.94};
inline const std::vector<double> kQ123ThetaOriginForecasts = {
    1627.34, 1634.35, 1652.24, 1658.90, 1679.77, 1704.93, 1707.53, 1734.47};
inline const std::vector<double> kQ123ThetaPrintedSmape = {
    0.0129, 0.0122, 0.0014, 0.0120, 0.0096, 0.0011, 0.0080, 0.0015};
inline constexpr double kQ123ThetaMeanSmape = 0.007345856;

// combination weights for the 8-model pool (raw and normalized)
inline const std::vector<std::string> kQ123PoolNames = {
    "Auto ARIMA", "Auto damped ETS", "Auto ETS", "Auto ETS, no trend",
    "LR (1, t)",  "Mean",            "Optimized Theta", "Theta"};
inline const std::vector<double> kQ123RawWeights = {24117.0, 22189.2, 24503.9, 9607.0,
                                                    2138.4,  58.4,    18133.6, 18531.7};
inline const std::vector<double> kQ123NormalizedWeights = {0.2022, 0.1860, 0.2054, 0.0805,
                                                           0.0179, 0.0005, 0.1520, 0.1554};

// 8-step forecasts of the hidden future values per pool model
inline const std::vector<std::vector<double>> kQ123ModelForecasts = {
    {1777.17, 1793.55, 1808.12, 1821.84, 1835.15, 1848.27, 1861.30, 1874.29},  // Auto ARIMA
    {1778.71, 1798.92, 1817.70, 1835.13, 1851.32, 1866.35, 1880.30, 1893.26},  // Auto damped ETS
    {1781.17, 1805.40, 1829.63, 1853.87, 1878.10, 1902.33, 1926.57, 1950.80},  // Auto ETS
    {1754.48, 1747.64, 1752.83, 1756.93, 1754.48, 1747.64, 1752.83, 1756.93},  // no trend
    {1714.64, 1725.06, 1735.48, 1745.89, 1756.31, 1766.73, 1777.15, 1787.57},  // LR (1, t)
    {1506.29, 1506.29, 1506.29, 1506.29, 1506.29, 1506.29, 1506.29, 1506.29},  // Mean
    {1761.21, 1762.44, 1771.28, 1777.25, 1781.74, 1782.92, 1791.81, 1797.78},  // Optimized Theta
    {1761.51, 1762.81, 1771.73, 1777.77, 1782.34, 1783.59, 1792.56, 1798.61},  // Theta
};
inline const std::vector<double> kQ123Combination = {1770.34, 1782.41, 1797.16, 1810.52,
                                                     1822.59, 1833.02, 1846.58, 1858.96};
inline const std::vector<double> kQ123FutureValues = {1769.22, 1778.36, 1799.83, 1814.19,
                                                      1822.28, 1828.16, 1845.01, 1867.53};
inline constexpr double kQ123CombinationSmape = 0.0018;

inline TimeSeries q123_series() { return TimeSeries("Q123", Frequency::Quarterly, kQ123); }

inline TimeSeries make_series(const std::string& id, Frequency f, std::vector<double> values) {
    return TimeSeries(id, f, std::move(values));
}

/// Deterministic positive random-walk series for property tests.
inline std::vector<double> random_positive_series(std::mt19937& rng, std::size_t length,
                                                  double level = 100.0, double vol = 0.05) {
    std::normal_distribution<double> step(0.0, vol);
    std::vector<double> out;
    out.reserve(length);
    double x = level;
    for (std::size_t i = 0; i < length; ++i) {
        x = std::max(1.0, x * (1.0 + step(rng)));
        out.push_back(x);
    }
    return out;
}

}  // namespace enscast::testing
