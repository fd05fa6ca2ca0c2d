#include "optim.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace enscast::detail {

namespace {

double clamped_eval(const std::function<double(const std::vector<double>&)>& objective,
                    std::vector<double> point, const std::vector<double>& lower,
                    const std::vector<double>& upper) {
    for (std::size_t i = 0; i < point.size(); ++i) {
        point[i] = std::clamp(point[i], lower[i], upper[i]);
    }
    double value = objective(point);
    if (!std::isfinite(value)) {
        return std::numeric_limits<double>::max();
    }
    return value;
}

}  // namespace

std::vector<double> nelder_mead_minimize(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> start, const std::vector<double>& lower,
    const std::vector<double>& upper, double tol, int max_iterations) {
    const std::size_t n = start.size();
    if (max_iterations <= 0) {
        max_iterations = 400 * static_cast<int>(n);
    }
    for (std::size_t i = 0; i < n; ++i) {
        start[i] = std::clamp(start[i], lower[i], upper[i]);
    }

    std::vector<std::vector<double>> simplex(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) {
        double step = 0.1 * (upper[i] - lower[i]);
        if (step == 0.0) step = 1e-4;
        if (simplex[i + 1][i] + step > upper[i]) step = -step;
        simplex[i + 1][i] += step;
    }
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        values[i] = clamped_eval(objective, simplex[i], lower, upper);
    }

    std::vector<std::size_t> order(n + 1);
    for (int iter = 0; iter < max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order[0], worst = order[n];
        const std::size_t second_worst = order[n - 1];
        if (std::abs(values[worst] - values[best]) <=
            tol * (std::abs(values[best]) + std::abs(values[worst]) + 1e-12)) {
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coeff) {
            std::vector<double> point(n);
            for (std::size_t k = 0; k < n; ++k) {
                point[k] = centroid[k] + coeff * (simplex[worst][k] - centroid[k]);
            }
            return point;
        };

        std::vector<double> reflected = blend(-1.0);
        double f_reflected = clamped_eval(objective, reflected, lower, upper);
        if (f_reflected < values[order[0]]) {
            std::vector<double> expanded = blend(-2.0);
            double f_expanded = clamped_eval(objective, expanded, lower, upper);
            if (f_expanded < f_reflected) {
                simplex[worst] = std::move(expanded);
                values[worst] = f_expanded;
            } else {
                simplex[worst] = std::move(reflected);
                values[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < values[second_worst]) {
            simplex[worst] = std::move(reflected);
            values[worst] = f_reflected;
            continue;
        }
        std::vector<double> contracted = blend(0.5);
        double f_contracted = clamped_eval(objective, contracted, lower, upper);
        if (f_contracted < values[worst]) {
            simplex[worst] = std::move(contracted);
            values[worst] = f_contracted;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {  // shrink toward best
            if (i == best) continue;
            for (std::size_t k = 0; k < n; ++k) {
                simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
            }
            values[i] = clamped_eval(objective, simplex[i], lower, upper);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (values[i] < values[best]) best = i;
    }
    for (std::size_t k = 0; k < n; ++k) {
        simplex[best][k] = std::clamp(simplex[best][k], lower[k], upper[k]);
    }
    return simplex[best];
}

}  // namespace enscast::detail
