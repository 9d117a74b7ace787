#include "snpvar/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace snpvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Evaluator {
public:
    Evaluator(const ObjectiveFn& f, int budget) : f_(f), budget_(budget) {}

    double operator()(const std::vector<double>& x) {
        ++evals_;
        double v = f_(x);
        if (!std::isfinite(v)) v = kInf;
        if (v < best_f_) {
            best_f_ = v;
            best_x_ = x;
        }
        return v;
    }

    bool exhausted() const { return evals_ >= budget_; }
    int evals() const { return evals_; }
    double best_f() const { return best_f_; }
    const std::vector<double>& best_x() const { return best_x_; }

private:
    const ObjectiveFn& f_;
    int budget_;
    int evals_ = 0;
    double best_f_ = kInf;
    std::vector<double> best_x_;
};

void nelder_mead(Evaluator& eval, std::vector<double> x0, double step, int budget) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i + 1][i] += step * std::max(1.0, std::abs(x0[i]));
    }
    for (std::size_t i = 0; i <= n; ++i) fv[i] = eval(pts[i]);

    std::vector<std::size_t> idx(n + 1);
    auto resort = [&] {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    };

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    const int start_evals = eval.evals();
    while (eval.evals() - start_evals < budget && !eval.exhausted()) {
        resort();
        const std::size_t best = idx[0], worst = idx[n], second = idx[n - 1];
        if (std::isfinite(fv[best]) &&
            fv[worst] - fv[best] <= 1e-13 * (1.0 + std::abs(fv[best]))) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
        }
        for (double& cj : centroid) cj /= static_cast<double>(n);

        for (std::size_t j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - pts[worst][j]);
        double fr = eval(xr);

        if (fr < fv[best]) {
            for (std::size_t j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (centroid[j] - pts[worst][j]);
            double fe = eval(xe);
            if (fe < fr) {
                pts[worst] = xe;
                fv[worst] = fe;
            } else {
                pts[worst] = xr;
                fv[worst] = fr;
            }
        } else if (fr < fv[second]) {
            pts[worst] = xr;
            fv[worst] = fr;
        } else {
            bool outside = fr < fv[worst];
            const std::vector<double>& base = outside ? xr : pts[worst];
            for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (base[j] - centroid[j]);
            double fc = eval(xc);
            if (fc < std::min(fr, fv[worst])) {
                pts[worst] = xc;
                fv[worst] = fc;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t j = 0; j < n; ++j) {
                        pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
                    }
                    fv[i] = eval(pts[i]);
                }
            }
        }
    }
}

std::vector<double> gradient(Evaluator& eval, const std::vector<double>& x, double step_scale) {
    const std::size_t n = x.size();
    std::vector<double> g(n);
    std::vector<double> xp = x;
    for (std::size_t i = 0; i < n; ++i) {
        const double h = step_scale * std::max(std::abs(x[i]), 1.0);
        xp[i] = x[i] + h;
        double fp = eval(xp);
        xp[i] = x[i] - h;
        double fm = eval(xp);
        xp[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// BFGS on the inverse Hessian, Armijo backtracking line search.
void bfgs(Evaluator& eval, std::vector<double> x, double fx, double grad_tol,
          double& grad_norm_out) {
    const std::size_t n = x.size();
    std::vector<std::vector<double>> B(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) B[i][i] = 1.0;

    std::vector<double> g = gradient(eval, x, 1e-6);
    grad_norm_out = inf_norm(g);

    std::vector<double> d(n), xn(n), gn(n), s(n), y(n);
    while (!eval.exhausted() && grad_norm_out > grad_tol) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += B[i][j] * g[j];
            d[i] = -acc;
        }
        double slope = std::inner_product(d.begin(), d.end(), g.begin(), 0.0);
        if (!(slope < 0.0)) {
            // reset to steepest descent
            for (std::size_t i = 0; i < n; ++i) {
                std::fill(B[i].begin(), B[i].end(), 0.0);
                B[i][i] = 1.0;
                d[i] = -g[i];
            }
            slope = -std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
            if (slope == 0.0) break;
        }

        double t = 1.0;
        double fn = kInf;
        bool ok = false;
        for (int bt = 0; bt < 45; ++bt) {
            for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + t * d[i];
            fn = eval(xn);
            if (fn <= fx + 1e-4 * t * slope) {
                ok = true;
                break;
            }
            t *= 0.5;
            if (eval.exhausted()) break;
        }
        if (!ok) break;

        gn = gradient(eval, xn, 1e-6);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = xn[i] - x[i];
            y[i] = gn[i] - g[i];
        }
        double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
        double ss = std::sqrt(std::inner_product(s.begin(), s.end(), s.begin(), 0.0));
        double yy = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        if (sy > 1e-12 * ss * yy && sy > 0.0) {
            // B <- (I - s y'/sy) B (I - y s'/sy) + s s'/sy
            std::vector<double> By(n);
            for (std::size_t i = 0; i < n; ++i) {
                By[i] = std::inner_product(B[i].begin(), B[i].end(), y.begin(), 0.0);
            }
            double yBy = std::inner_product(y.begin(), y.end(), By.begin(), 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    B[i][j] += (sy + yBy) * s[i] * s[j] / (sy * sy) -
                               (By[i] * s[j] + s[i] * By[j]) / sy;
                }
            }
        }

        double df = fx - fn;
        x = xn;
        fx = fn;
        g = gn;
        grad_norm_out = inf_norm(g);
        if (df <= 1e-14 * (1.0 + std::abs(fx)) && inf_norm(s) <= 1e-12) break;
    }
}

} // namespace

std::vector<double> fd_gradient(const ObjectiveFn& f, const std::vector<double>& x,
                                double step_scale) {
    std::vector<double> g(x.size());
    std::vector<double> xp = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = step_scale * std::max(std::abs(x[i]), 1.0);
        xp[i] = x[i] + h;
        double fp = f(xp);
        xp[i] = x[i] - h;
        double fm = f(xp);
        xp[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

std::vector<std::vector<double>> fd_hessian(const ObjectiveFn& f, const std::vector<double>& x,
                                            double step_scale) {
    const std::size_t n = x.size();
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = step_scale * std::max(std::abs(x[i]), 1.0);

    std::vector<std::vector<double>> H(n, std::vector<double>(n, 0.0));
    const double f0 = f(x);
    std::vector<double> xp = x;
    for (std::size_t i = 0; i < n; ++i) {
        xp[i] = x[i] + h[i];
        double fp = f(xp);
        xp[i] = x[i] - h[i];
        double fm = f(xp);
        xp[i] = x[i];
        H[i][i] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            xp[i] = x[i] + h[i];
            xp[j] = x[j] + h[j];
            double fpp = f(xp);
            xp[j] = x[j] - h[j];
            double fpm = f(xp);
            xp[i] = x[i] - h[i];
            xp[j] = x[j] + h[j];
            double fmp = f(xp);
            xp[j] = x[j] - h[j];
            double fmm = f(xp);
            xp[i] = x[i];
            xp[j] = x[j];
            H[i][j] = H[j][i] = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
        }
    }
    return H;
}

bool spd_inverse(const std::vector<std::vector<double>>& m,
                 std::vector<std::vector<double>>& inverse) {
    const std::size_t n = m.size();
    std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = m[i][j];
            for (std::size_t k = 0; k < j; ++k) acc -= L[i][k] * L[j][k];
            if (i == j) {
                if (!(acc > 0.0) || !std::isfinite(acc)) return false;
                L[i][i] = std::sqrt(acc);
            } else {
                L[i][j] = acc / L[j][j];
            }
        }
    }
    // Invert L in place, then inverse = L^-T L^-1.
    std::vector<std::vector<double>> Li(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        Li[i][i] = 1.0 / L[i][i];
        for (std::size_t j = 0; j < i; ++j) {
            double acc = 0.0;
            for (std::size_t k = j; k < i; ++k) acc += L[i][k] * Li[k][j];
            Li[i][j] = -acc / L[i][i];
        }
    }
    inverse.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = 0.0;
            for (std::size_t k = i; k < n; ++k) acc += Li[k][i] * Li[k][j];
            inverse[i][j] = inverse[j][i] = acc;
        }
    }
    return true;
}

OptimResult minimize(const ObjectiveFn& f, std::vector<double> x0, const OptimOptions& options) {
    Evaluator eval(f, options.max_evals);
    double f0 = eval(x0);
    (void)f0;

    nelder_mead(eval, x0, options.simplex_step, options.max_evals / 2);

    double grad_norm = kInf;
    if (!eval.exhausted() && std::isfinite(eval.best_f())) {
        bfgs(eval, eval.best_x(), eval.best_f(), options.grad_tol, grad_norm);
    }

    OptimResult out;
    out.x = eval.best_x();
    out.f = eval.best_f();
    out.evals = eval.evals();
    out.grad_inf_norm = grad_norm;
    out.converged = std::isfinite(out.f) && grad_norm <= std::max(options.grad_tol, 1e-5);
    return out;
}

} // namespace snpvar
