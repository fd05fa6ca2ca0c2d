#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "enscast/models.hpp"

namespace enscast {

namespace {

std::string regressor_set_name(const std::set<Regressor>& regressors) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (Regressor r : regressors) {
        if (!first) out << ", ";
        first = false;
        switch (r) {
            case Regressor::Constant: out << "1"; break;
            case Regressor::Linear: out << "t"; break;
            case Regressor::Logarithmic: out << "ln t"; break;
        }
    }
    out << "}";
    return out.str();
}

double regressor_value(Regressor r, double t) {
    switch (r) {
        case Regressor::Constant: return 1.0;
        case Regressor::Linear: return t;
        case Regressor::Logarithmic: return std::log(t);
    }
    return 0.0;
}

}  // namespace

ForecastVector linear_trend_forecast(const std::vector<double>& values, int h,
                                     const std::set<Regressor>& regressors) {
    if (regressors.empty()) {
        throw std::invalid_argument("linear trend: empty regressor set");
    }
    const std::size_t n = values.size();
    const std::size_t p = regressors.size();
    if (n < p + 1) {
        throw std::invalid_argument("linear trend: need at least " + std::to_string(p + 1) +
                                    " observations for regressors " +
                                    regressor_set_name(regressors));
    }

    // normal equations on the (at most 3-column) design
    std::array<std::array<double, 4>, 3> system{};  // [row][col], last col = rhs
    std::vector<Regressor> regs(regressors.begin(), regressors.end());
    for (std::size_t t = 0; t < n; ++t) {
        std::array<double, 3> row{};
        for (std::size_t j = 0; j < p; ++j) {
            row[j] = regressor_value(regs[j], static_cast<double>(t + 1));
        }
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j) system[i][j] += row[i] * row[j];
            system[i][3] += row[i] * values[t];
        }
    }

    // Gaussian elimination with partial pivoting
    std::array<std::size_t, 3> pivot{0, 1, 2};
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < p; ++r) {
            if (std::abs(system[pivot[r]][col]) > std::abs(system[pivot[best]][col])) best = r;
        }
        std::swap(pivot[col], pivot[best]);
        const double diag = system[pivot[col]][col];
        if (std::abs(diag) < 1e-12) {
            throw std::runtime_error("linear trend: singular design for regressors " +
                                     regressor_set_name(regressors));
        }
        for (std::size_t r = 0; r < p; ++r) {
            if (r == col) continue;
            const double factor = system[pivot[r]][col] / diag;
            for (std::size_t c = col; c <= 3; ++c) system[pivot[r]][c] -= factor * system[pivot[col]][c];
        }
    }
    std::array<double, 3> coef{};
    for (std::size_t j = 0; j < p; ++j) coef[j] = system[pivot[j]][3] / system[pivot[j]][j];

    ForecastVector out(static_cast<std::size_t>(h));
    for (int k = 0; k < h; ++k) {
        const double t = static_cast<double>(n) + 1.0 + static_cast<double>(k);
        double value = 0.0;
        for (std::size_t j = 0; j < p; ++j) value += coef[j] * regressor_value(regs[j], t);
        out[static_cast<std::size_t>(k)] = value;
    }
    return out;
}

}  // namespace enscast
