#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace enscast::detail {

/// Golden-section minimization on [lower, upper]. Deterministic; the
/// objective is assumed unimodal on the interval.
inline double golden_section_minimize(const std::function<double(double)>& objective,
                                      double lower, double upper, double tol = 1e-6) {
    const double gr = (std::sqrt(5.0) + 1.0) / 2.0;
    double a = lower, b = upper;
    double c = b - (b - a) / gr;
    double d = a + (b - a) / gr;
    double fc = objective(c);
    double fd = objective(d);
    while (std::abs(b - a) > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) / gr;
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) / gr;
            fd = objective(d);
        }
    }
    return (a + b) / 2.0;
}

/// Box-constrained Nelder-Mead with a fixed deterministic start
/// simplex. Points are clamped to the box before evaluation.
std::vector<double> nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> start, const std::vector<double>& lower,
    const std::vector<double>& upper, double tol = 1e-6, int max_iterations = 0);

}  // namespace enscast::detail
