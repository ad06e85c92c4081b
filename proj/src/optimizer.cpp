#include "qspline/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qspline {

std::vector<double> central_difference(const Objective& f, std::span<const double> x, double step) {
    std::vector<double> probe(x.begin(), x.end());
    std::vector<double> grad(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double saved = probe[j];
        probe[j] = saved + step;
        const double up = f(probe);
        probe[j] = saved - step;
        const double down = f(probe);
        probe[j] = saved;
        grad[j] = (up - down) / (2.0 * step);
    }
    return grad;
}

namespace {

std::vector<double> gradient_at(const Objective& f, const GradientFn& gradient,
                                std::span<const double> x, double step) {
    return gradient ? gradient(x) : central_difference(f, x, step);
}

}  // namespace

OptimizeResult gradient_descent(const Objective& f, std::vector<double> x0,
                                const OptimizeOptions& options, const GradientFn& gradient) {
    OptimizeResult r;
    r.x = std::move(x0);
    r.value = f(r.x);
    r.trace.push_back(r.value);
    double rate = options.learning_rate;
    const double max_rate = 64.0 * options.learning_rate;
    std::vector<double> trial(r.x.size());
    std::size_t stalled = 0;

    for (; r.iterations < options.max_iterations; ++r.iterations) {
        if (r.value <= options.target) {
            r.stopped_early = true;
            break;
        }
        const auto g = gradient_at(f, gradient, r.x, options.fd_step);
        double step = rate;
        double value = r.value;
        bool accepted = false;
        while (step > 1e-12) {
            for (std::size_t j = 0; j < r.x.size(); ++j) trial[j] = r.x[j] - step * g[j];
            value = f(trial);
            if (value < r.value) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            r.stopped_early = true;
            break;
        }
        const double improvement = r.value - value;
        r.x.swap(trial);
        r.value = value;
        r.trace.push_back(value);
        rate = std::min(2.0 * step, max_rate);
        stalled = improvement < options.tolerance ? stalled + 1 : 0;
        if (stalled >= options.patience) {
            r.stopped_early = true;
            ++r.iterations;
            break;
        }
    }
    return r;
}

OptimizeResult bfgs(const Objective& f, std::vector<double> x0, const OptimizeOptions& options,
                    const GradientFn& gradient) {
    const std::size_t n = x0.size();
    OptimizeResult r;
    r.x = std::move(x0);
    r.value = f(r.x);
    r.trace.push_back(r.value);

    std::vector<double> hinv(n * n, 0.0);  // inverse Hessian estimate
    for (std::size_t i = 0; i < n; ++i) hinv[i * n + i] = 1.0;
    auto g = gradient_at(f, gradient, r.x, options.fd_step);
    std::vector<double> dir(n), trial(n), s(n), y(n), hy(n);
    std::size_t stalled = 0;

    for (; r.iterations < options.max_iterations; ++r.iterations) {
        if (r.value <= options.target) {
            r.stopped_early = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc -= hinv[i * n + j] * g[j];
            dir[i] = acc;
        }
        double slope = std::inner_product(g.begin(), g.end(), dir.begin(), 0.0);
        if (slope >= 0.0) {
            // Lost positive definiteness; restart from steepest descent.
            std::fill(hinv.begin(), hinv.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                hinv[i * n + i] = 1.0;
                dir[i] = -g[i];
            }
            slope = -std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
        }
        if (slope == 0.0) {
            r.stopped_early = true;
            break;
        }

        double step = 1.0;
        double value = r.value;
        bool accepted = false;
        while (step > 1e-12) {
            for (std::size_t i = 0; i < n; ++i) trial[i] = r.x[i] + step * dir[i];
            value = f(trial);
            if (value <= r.value + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            r.stopped_early = true;
            break;
        }
        const double improvement = r.value - value;
        const auto g_new = gradient_at(f, gradient, trial, options.fd_step);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = trial[i] - r.x[i];
            y[i] = g_new[i] - g[i];
        }
        r.x = trial;
        r.value = value;
        r.trace.push_back(value);
        g = g_new;

        const double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
        if (sy > 1e-16) {
            for (std::size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < n; ++j) acc += hinv[i * n + j] * y[j];
                hy[i] = acc;
            }
            const double yhy = std::inner_product(y.begin(), y.end(), hy.begin(), 0.0);
            const double rho = 1.0 / sy;
            const double coef = (1.0 + rho * yhy) * rho;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    hinv[i * n + j] += coef * s[i] * s[j] - rho * (hy[i] * s[j] + s[i] * hy[j]);
                }
            }
        }
        stalled = improvement < options.tolerance ? stalled + 1 : 0;
        if (stalled >= options.patience) {
            r.stopped_early = true;
            ++r.iterations;
            break;
        }
    }
    return r;
}

OptimizeResult nelder_mead(const Objective& f, std::vector<double> x0, const OptimizeOptions& options) {
    const std::size_t n = x0.size();
    if (n == 0) throw std::invalid_argument("nelder_mead needs at least one parameter");
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.learning_rate;
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

    OptimizeResult r;
    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    };
    sort_simplex();
    r.trace.push_back(values[order[0]]);

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    auto along = [&](double t, std::vector<double>& out) {
        const auto& worst = simplex[order[n]];
        for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + t * (worst[j] - centroid[j]);
    };

    for (; r.iterations < options.max_iterations; ++r.iterations) {
        const double best = values[order[0]];
        if (best <= options.target || values[order[n]] - best < options.tolerance * 1e-3) {
            r.stopped_early = true;
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[order[i]][j] / n;
        }
        along(-1.0, xr);
        const double fr = f(xr);
        if (fr < values[order[0]]) {
            along(-2.0, xe);
            const double fe = f(xe);
            if (fe < fr) {
                simplex[order[n]] = xe;
                values[order[n]] = fe;
            } else {
                simplex[order[n]] = xr;
                values[order[n]] = fr;
            }
        } else if (fr < values[order[n - 1]]) {
            simplex[order[n]] = xr;
            values[order[n]] = fr;
        } else {
            const bool outside = fr < values[order[n]];
            along(outside ? -0.5 : 0.5, xc);
            const double fc = f(xc);
            if (fc < std::min(fr, values[order[n]])) {
                simplex[order[n]] = xc;
                values[order[n]] = fc;
            } else {
                const auto& best_x = simplex[order[0]];
                for (std::size_t i = 1; i <= n; ++i) {
                    auto& v = simplex[order[i]];
                    for (std::size_t j = 0; j < n; ++j) v[j] = best_x[j] + 0.5 * (v[j] - best_x[j]);
                    values[order[i]] = f(v);
                }
            }
        }
        sort_simplex();
        r.trace.push_back(values[order[0]]);
    }
    r.x = simplex[order[0]];
    r.value = values[order[0]];
    return r;
}

}  // namespace qspline
