#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "../optim.hpp"
#include "enscast/models.hpp"

namespace enscast {

namespace {

constexpr int kMaxOrder = 3;  // p, q
constexpr double kCoeffBound = 0.98;
constexpr double kBad = std::numeric_limits<double>::max();

struct ArimaOrder {
    int p = 0, d = 0, q = 0;
    int P = 0, D = 0, Q = 0;
    bool constant = true;
};

struct ArimaFit {
    ArimaOrder order;
    int m = 1;
    std::vector<double> ar;  // combined AR coefficients by lag
    std::vector<double> ma;  // combined MA coefficients by lag
    double mean = 0.0;
    double aicc = kBad;
};

double variance(const std::vector<double>& x) {
    if (x.size() < 2) return 0.0;
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    double acc = 0.0;
    for (double v : x) acc += (v - mean) * (v - mean);
    return acc / static_cast<double>(x.size() - 1);
}

std::vector<double> difference(const std::vector<double>& x, std::size_t lag) {
    std::vector<double> out;
    if (x.size() <= lag) return out;
    out.reserve(x.size() - lag);
    for (std::size_t t = lag; t < x.size(); ++t) out.push_back(x[t] - x[t - lag]);
    return out;
}

/// Smallest d in 0..2 at which successive differencing stops shrinking
/// the sample variance.
int choose_d_by_variance(const std::vector<double>& x) {
    std::vector<double> cur = x;
    int d = 0;
    while (d < 2) {
        std::vector<double> next = difference(cur, 1);
        if (next.size() < 4) break;
        if (variance(next) >= variance(cur)) break;
        cur = std::move(next);
        ++d;
    }
    return d;
}

/// Durbin-Levinson map from partial autocorrelations in (-1,1) to AR
/// coefficients of a stationary polynomial.
std::vector<double> pacf_to_coeffs(const std::vector<double>& pac) {
    std::vector<double> a(pac.size(), 0.0);
    std::vector<double> prev;
    for (std::size_t k = 0; k < pac.size(); ++k) {
        prev.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
        a[k] = pac[k];
        for (std::size_t j = 0; j < k; ++j) a[j] = prev[j] - pac[k] * prev[k - 1 - j];
    }
    return a;
}

/// Combined polynomial coefficients for (regular, seasonal-at-lag-m).
std::vector<double> combine_poly(const std::vector<double>& regular, double seasonal, int m,
                                 double cross_sign) {
    const std::size_t len = regular.size() + (seasonal != 0.0 ? static_cast<std::size_t>(m) : 0);
    std::vector<double> full(len + 1, 0.0);  // index = lag, slot 0 unused
    for (std::size_t i = 0; i < regular.size(); ++i) full[i + 1] = regular[i];
    if (seasonal != 0.0) {
        full[static_cast<std::size_t>(m)] += seasonal;
        for (std::size_t i = 0; i < regular.size(); ++i) {
            full[static_cast<std::size_t>(m) + i + 1] += cross_sign * seasonal * regular[i];
        }
    }
    return full;
}

/// Conditional-sum-of-squares residuals of the ARMA recursion on w;
/// e_t for t < warmup are zero. Returns SSE over t in
/// [score_from, w.size()).
double css(const std::vector<double>& w, const std::vector<double>& ar,
           const std::vector<double>& ma, double mean, std::size_t warmup,
           std::size_t score_from, std::vector<double>* residuals = nullptr) {
    const std::size_t n = w.size();
    std::vector<double> e(n, 0.0);
    // compact nonzero-lag views keep the inner loop short
    std::vector<std::pair<std::size_t, double>> ar_nz, ma_nz;
    for (std::size_t lag = 1; lag < ar.size(); ++lag) {
        if (ar[lag] != 0.0) ar_nz.emplace_back(lag, ar[lag]);
    }
    for (std::size_t lag = 1; lag < ma.size(); ++lag) {
        if (ma[lag] != 0.0) ma_nz.emplace_back(lag, ma[lag]);
    }
    double sse = 0.0;
    for (std::size_t t = warmup; t < n; ++t) {
        double value = w[t] - mean;
        for (const auto& [lag, coeff] : ar_nz) {
            if (lag > t) continue;
            value -= coeff * (w[t - lag] - mean);
        }
        for (const auto& [lag, coeff] : ma_nz) {
            if (lag > t) continue;
            value -= coeff * e[t - lag];
        }
        e[t] = value;
        if (t >= score_from) sse += value * value;
        if (!std::isfinite(sse)) return kBad;
    }
    if (residuals) *residuals = std::move(e);
    return sse;
}

struct Estimated {
    std::vector<double> ar;
    std::vector<double> ma;
    double mean = 0.0;
    double sse = kBad;
};

Estimated estimate(const std::vector<double>& w, const ArimaOrder& o, int m,
                   std::size_t score_from, double tol) {
    const std::size_t warmup = static_cast<std::size_t>(o.p + o.P * m);
    const std::size_t from = std::max(warmup, score_from);

    const int dim = o.p + o.q + o.P + o.Q + (o.constant ? 1 : 0);
    const double w_mean =
        w.empty() ? 0.0 : std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
    const double w_sd = std::sqrt(std::max(variance(w), 1e-12));

    auto build = [&](const std::vector<double>& v, Estimated* out) {
        std::size_t i = 0;
        std::vector<double> pac_ar(v.begin() + static_cast<std::ptrdiff_t>(i),
                                   v.begin() + static_cast<std::ptrdiff_t>(i + o.p));
        i += o.p;
        std::vector<double> pac_ma(v.begin() + static_cast<std::ptrdiff_t>(i),
                                   v.begin() + static_cast<std::ptrdiff_t>(i + o.q));
        i += o.q;
        const double sar = o.P > 0 ? v[i++] : 0.0;
        const double sma = o.Q > 0 ? v[i++] : 0.0;
        out->mean = o.constant ? v[i++] : 0.0;

        // AR: (1 - sum c B)(1 - sar B^m); MA: (1 + sum th B)(1 + sma B^m),
        // with th from the same stationarity transform (invertibility)
        out->ar = combine_poly(pacf_to_coeffs(pac_ar), sar, m, -1.0);
        std::vector<double> theta_reg = pacf_to_coeffs(pac_ma);
        for (double& c : theta_reg) c = -c;
        out->ma = combine_poly(theta_reg, sma, m, 1.0);
    };

    Estimated best;
    if (dim == 0) {
        best.ar = {0.0};
        best.ma = {0.0};
        best.mean = 0.0;
        best.sse = css(w, best.ar, best.ma, 0.0, warmup, from);
        return best;
    }

    std::vector<double> start, lower, upper;
    for (int i = 0; i < o.p + o.q + o.P + o.Q; ++i) {
        start.push_back(0.1);
        lower.push_back(-kCoeffBound);
        upper.push_back(kCoeffBound);
    }
    if (o.constant) {
        start.push_back(w_mean);
        lower.push_back(w_mean - 10.0 * w_sd - 1.0);
        upper.push_back(w_mean + 10.0 * w_sd + 1.0);
    }

    auto objective = [&](const std::vector<double>& v) {
        Estimated cand;
        build(v, &cand);
        return css(w, cand.ar, cand.ma, cand.mean, warmup, from);
    };
    const std::vector<double> opt =
        detail::nelder_mead_minimize(objective, start, lower, upper, tol);
    build(opt, &best);
    best.sse = css(w, best.ar, best.ma, best.mean, warmup, from);
    return best;
}

}  // namespace

ForecastVector arima_auto_forecast(const std::vector<double>& values, int h, int period) {
    const std::size_t n = values.size();
    if (n < 10) throw std::invalid_argument("arima: need at least 10 observations");
    const int m = period;
    const bool seasonal = m > 1 && n >= 2 * static_cast<std::size_t>(m) + 4;

    const int d_heur = choose_d_by_variance(values);
    std::vector<int> d_grid;
    for (int d = std::max(0, d_heur - 1); d <= std::min(2, d_heur + 1); ++d) d_grid.push_back(d);
    const std::vector<int> D_grid = seasonal ? std::vector<int>{0, 1} : std::vector<int>{0};

    // common scoring range so AICc is comparable across differencing
    std::size_t t0 = 0;
    for (int d : d_grid) {
        for (int D : D_grid) {
            const std::size_t lhs = static_cast<std::size_t>(d + D * m + kMaxOrder +
                                                             (seasonal ? m : 0));
            t0 = std::max(t0, lhs);
        }
    }
    if (t0 + 8 > n) {
        // shrink ambitions on short series: drop the seasonal block first
        t0 = static_cast<std::size_t>(*std::max_element(d_grid.begin(), d_grid.end()) + kMaxOrder);
        if (t0 + 6 > n) t0 = n > 6 ? n - 6 : 0;
    }

    ArimaFit best;
    std::size_t best_score_from = 0;
    std::vector<double> best_w;
    std::vector<std::vector<double>> best_stages;

    // coarse tolerance across the grid, the winner is refit tightly below
    constexpr double kScanTol = 1e-4;
    constexpr double kRefitTol = 1e-8;

    for (int d : d_grid) {
        for (int D : D_grid) {
            // stages of differencing: seasonal first, then regular
            std::vector<std::vector<double>> stages = {values};
            for (int i = 0; i < D; ++i) stages.push_back(difference(stages.back(), static_cast<std::size_t>(m)));
            for (int i = 0; i < d; ++i) stages.push_back(difference(stages.back(), 1));
            const std::vector<double>& w = stages.back();
            const std::size_t offset = static_cast<std::size_t>(d + D * m);
            if (w.size() < 8) continue;
            const std::size_t score_from = t0 > offset ? t0 - offset : 0;
            if (score_from + 4 >= w.size()) continue;
            const double n_eff = static_cast<double>(w.size() - score_from);

            for (int P = 0; P <= (seasonal ? 1 : 0); ++P) {
                for (int Q = 0; Q <= (seasonal ? 1 : 0); ++Q) {
                    for (int p = 0; p <= kMaxOrder; ++p) {
                        for (int q = 0; q <= kMaxOrder; ++q) {
                            ArimaOrder order{p, d, q, P, D, Q, d + D <= 1};
                            const int k =
                                p + q + P + Q + (order.constant ? 1 : 0) + 1;
                            if (n_eff - k - 1 <= 0) continue;
                            if (static_cast<std::size_t>(p + P * m) + 4 >= w.size()) continue;

                            Estimated est = estimate(w, order, m, score_from, kScanTol);
                            if (est.sse >= kBad) continue;
                            const double aicc =
                                n_eff * std::log(std::max(est.sse, 1e-12) / n_eff) + 2.0 * k +
                                2.0 * k * (k + 1.0) / (n_eff - k - 1.0);
                            if (aicc < best.aicc) {
                                best.order = order;
                                best.m = m;
                                best.aicc = aicc;
                                best_score_from = score_from;
                                best_w = w;
                                best_stages = stages;
                            }
                        }
                    }
                }
            }
        }
    }

    if (best.aicc >= kBad) throw std::runtime_error("arima: no candidate could be estimated");

    const Estimated refit = estimate(best_w, best.order, m, best_score_from, kRefitTol);
    best.ar = refit.ar;
    best.ma = refit.ma;
    best.mean = refit.mean;
    std::vector<double> best_resid;
    css(best_w, best.ar, best.ma, best.mean,
        static_cast<std::size_t>(best.order.p + best.order.P * m), best_score_from, &best_resid);

    // forecast recursion on w, then integrate the differencing stages
    std::vector<double> w_ext = best_w;
    std::vector<double> e_ext = best_resid;
    ForecastVector out(static_cast<std::size_t>(h));
    std::vector<std::size_t> lags;  // integration lags, outermost first
    for (int i = 0; i < best.order.D; ++i) lags.push_back(static_cast<std::size_t>(best.m));
    for (int i = 0; i < best.order.d; ++i) lags.push_back(1);

    for (int k = 0; k < h; ++k) {
        double value = best.mean;
        const std::size_t t = w_ext.size();
        for (std::size_t lag = 1; lag < best.ar.size(); ++lag) {
            if (best.ar[lag] == 0.0 || lag > t) continue;
            value += best.ar[lag] * (w_ext[t - lag] - best.mean);
        }
        for (std::size_t lag = 1; lag < best.ma.size(); ++lag) {
            if (best.ma[lag] == 0.0 || lag > t) continue;
            value += best.ma[lag] * e_ext[t - lag];
        }
        w_ext.push_back(value);
        e_ext.push_back(0.0);

        // integrate back through the stages (reverse build order)
        double integrated = value;
        for (std::size_t s = best_stages.size() - 1; s-- > 0;) {
            const std::size_t lag = lags[s];
            const std::vector<double>& stage = best_stages[s];
            integrated += stage[stage.size() - lag];
            best_stages[s].push_back(integrated);
        }
        // best_stages[0] holds the original scale, but when d=D=0 there
        // is only one stage and `integrated` is already the level
        out[static_cast<std::size_t>(k)] =
            best_stages.size() == 1 ? value : best_stages.front().back();
    }
    return out;
}

}  // namespace enscast
