#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "snpvar/kernels.hpp"
#include "snpvar/math.hpp"
#include "snpvar/rng.hpp"
#include "support/oracles.hpp"

using namespace snpvar;
using Catch::Approx;

namespace {

const std::vector<KernelParams> kAllFamilies = {
    GpdParams{0.8, 1.5},         LogLogisticParams{1.4, 0.7}, LognormalParams{-0.3, 1.2},
    WeibullParams{0.7, 0.9},     ExponentialParams{1.3},      Gb2Params{1.5, 0.8, 1.2, 2.0},
};

} // namespace

TEST_CASE("cdf is zero at the lower support endpoint", "[kernels]") {
    for (const auto& params : kAllFamilies) {
        REQUIRE(kernel_cdf(params, 0.0) == 0.0);
    }
}

TEST_CASE("cdf closed-form fixtures", "[kernels]") {
    // direct substitution into the log-logistic CDF: (50/0.05)^(2/3) = 100
    double ll = kernel_cdf(LogLogisticParams{2.0 / 3.0, 0.05}, 50.0);
    REQUIRE(ll == Approx(100.0 / 101.0).epsilon(1e-12));
    REQUIRE(ll == Approx(0.99010).margin(5e-6));

    double gpd = kernel_cdf(GpdParams{4.0 / 3.0, 0.25}, 50.0);
    double expected = 1.0 - std::pow(1.0 + (4.0 / 3.0) * 200.0, -0.75);
    REQUIRE(gpd == Approx(expected).epsilon(1e-12));
    REQUIRE(gpd == Approx(0.9848).margin(1e-4));
}

TEST_CASE("logpdf closed-form fixtures", "[kernels]") {
    REQUIRE(kernel_logpdf(ExponentialParams{1.0}, 1e-12) == Approx(0.0).margin(1e-9));
    REQUIRE(kernel_logpdf(WeibullParams{1.0, 2.0}, 1.0) ==
            Approx(std::log(2.0) - 2.0).epsilon(1e-14));
    REQUIRE(kernel_logpdf(LognormalParams{0.0, 1.0}, 1.0) ==
            Approx(-0.5 * std::log(2.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("quantile at 99.9% reproduces reported fits", "[kernels]") {
    // parameters are rounded to four digits, hence the 0.5% tolerance
    REQUIRE(kernel_quantile(GpdParams{1.5858, 0.0281}, 0.999) ==
            Approx(1013.9).epsilon(0.005));
    REQUIRE(kernel_quantile(LognormalParams{-3.1454, 2.1745}, 0.999) ==
            Approx(35.67).epsilon(0.005));
    REQUIRE(kernel_quantile(LogLogisticParams{1.0 / 1.1921, std::exp(-3.2692)}, 0.999) ==
            Approx(143.21).epsilon(0.005));
    REQUIRE(kernel_quantile(GpdParams{1.1178, 0.0232}, 0.999) ==
            Approx(46.77).epsilon(0.005));
}

TEST_CASE("quantile/cdf round trip", "[kernels]") {
    const std::vector<double> ps = {1e-4, 1e-3, 0.01, 0.1, 0.25, 0.5,
                                    0.75, 0.9,  0.99, 1.0 - 1e-3, 1.0 - 1e-4};
    for (const auto& params : kAllFamilies) {
        for (double p : ps) {
            double x = kernel_quantile(params, p);
            REQUIRE(kernel_cdf(params, x) == Approx(p).margin(1e-8));
        }
        // numerically reaches 1 in the far tail
        double far = kernel_quantile(params, 1.0 - 1e-6);
        REQUIRE(kernel_cdf(params, far) >= 1.0 - 1.1e-6);
    }
}

TEST_CASE("cdf is nondecreasing", "[kernels]") {
    for (const auto& params : kAllFamilies) {
        double prev = 0.0;
        for (double lx = -6.0; lx <= 6.0; lx += 0.25) {
            double c = kernel_cdf(params, std::exp(lx));
            REQUIRE(c >= prev);
            prev = c;
        }
    }
}

TEST_CASE("exp(logpdf) matches the cdf derivative", "[kernels]") {
    // log-spaced grid across the body of each family, where the finite
    // difference of the CDF still carries signal
    for (const auto& params : kAllFamilies) {
        const double lo = kernel_quantile(params, 0.01);
        const double hi = kernel_quantile(params, 0.99);
        for (int i = 0; i <= 12; ++i) {
            const double x = lo * std::pow(hi / lo, i / 12.0);
            double pdf = std::exp(kernel_logpdf(params, x));
            double num = oracles::derivative([&](double t) { return kernel_cdf(params, t); }, x);
            REQUIRE(pdf == Approx(num).epsilon(1e-5));
        }
    }
}

TEST_CASE("exponential equals Weibull with unit shape", "[kernels]") {
    const ExponentialParams e{1.7};
    const WeibullParams w{1.0, 1.7};
    for (double x : {0.13, 0.9, 2.4, 17.0}) {
        REQUIRE(kernel_cdf(e, x) == kernel_cdf(w, x));
        REQUIRE(kernel_logpdf(e, x) == kernel_logpdf(w, x));
    }
    for (double p : {0.05, 0.5, 0.995}) {
        REQUIRE(kernel_quantile(e, p) == kernel_quantile(w, p));
    }
}

TEST_CASE("sampling: empty, mean, ecdf", "[kernels]") {
    RngStream rng(42);
    REQUIRE(kernel_sample(ExponentialParams{1.0}, rng, 0).empty());

    auto exp_draws = kernel_sample(ExponentialParams{1.0}, rng, 1000000);
    double mean = 0.0;
    for (double v : exp_draws) mean += v;
    mean /= static_cast<double>(exp_draws.size());
    REQUIRE(mean == Approx(1.0).margin(0.005));

    RngStream rng2(7);
    auto gpd_draws = kernel_sample(GpdParams{0.5, 1.0}, rng2, 1000000);
    REQUIRE(oracles::ecdf(gpd_draws, 1.0) == Approx(5.0 / 9.0).margin(0.002));
}

TEST_CASE("parameter and argument domain errors", "[kernels]") {
    REQUIRE_THROWS_AS(kernel_cdf(GpdParams{-1.0, 1.0}, 1.0), std::domain_error);
    REQUIRE_THROWS_AS(kernel_cdf(LognormalParams{0.0, 0.0}, 1.0), std::domain_error);
    REQUIRE_THROWS_AS(kernel_cdf(Gb2Params{1.0, 1.0, 1.0, -0.5}, 1.0), std::domain_error);
    REQUIRE_THROWS_AS(kernel_cdf(ExponentialParams{1.0}, -0.1), std::domain_error);
    REQUIRE_THROWS_AS(kernel_logpdf(ExponentialParams{1.0}, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(kernel_quantile(ExponentialParams{1.0}, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(kernel_quantile(ExponentialParams{1.0}, 1.0), std::domain_error);
}

TEST_CASE("truncated lognormal density", "[kernels]") {
    // wide truncation recovers the plain lognormal
    TruncLognormalParams wide{0.0, 1.0, 1e-12, 1e12};
    for (double x : {0.2, 1.0, 4.0}) {
        REQUIRE(trunc_lgn_logpdf(wide, x) ==
                Approx(kernel_logpdf(LognormalParams{0.0, 1.0}, x)).margin(1e-12));
    }

    // density at the lower endpoint against normal-CDF table values
    TruncLognormalParams unit{0.0, 1.0, 1.0, std::exp(1.0)};
    const double phi1 = 0.841344746068543;  // Phi(1)
    double expected = std::log((1.0 / kSqrtTwoPi) / (phi1 - 0.5));
    REQUIRE(trunc_lgn_logpdf(unit, 1.0) == Approx(expected).margin(1e-9));

    REQUIRE_THROWS_AS(trunc_lgn_logpdf(unit, 0.5), std::domain_error);
    REQUIRE_THROWS_AS(trunc_lgn_logpdf(unit, 3.0), std::domain_error);
}

TEST_CASE("truncated lognormal mass integrates to one", "[kernels]") {
    const LognormalParams base{-0.4, 1.7};
    for (double q : {0.01, 0.1}) {
        TruncLognormalParams tp{base.mu, base.sigma, kernel_quantile(base, q),
                                kernel_quantile(base, 1.0 - q)};
        auto density = [&](double x) { return std::exp(trunc_lgn_logpdf(tp, x)); };
        std::vector<double> brk;
        for (double t = 0.0; t <= 1.0; t += 0.125) {
            brk.push_back(trunc_lgn_quantile(tp, std::min(std::max(t, 1e-9), 1.0 - 1e-9)));
        }
        brk.front() = tp.rt;
        brk.back() = tp.bt;
        REQUIRE(oracles::integrate_density(density, brk, 1e-9) == Approx(1.0).margin(1e-6));
    }
}

TEST_CASE("truncated lognormal quantile round trip", "[kernels]") {
    TruncLognormalParams tp{-2.0, 2.5, 0.01, 30.0};
    for (double p : {0.001, 0.1, 0.5, 0.9, 0.999}) {
        double x = trunc_lgn_quantile(tp, p);
        REQUIRE(x >= tp.rt);
        REQUIRE(x <= tp.bt);
        REQUIRE(trunc_lgn_cdf(tp, x) == Approx(p).margin(1e-9));
    }
    REQUIRE_THROWS_AS(validate(TruncLognormalParams{0.0, 1.0, 2.0, 1.0}), std::domain_error);
}

TEST_CASE("GB2 density matches its cdf derivative and beta form", "[kernels]") {
    Gb2Params g{2.2, 1.3, 0.8, 1.7};
    for (double x : {0.1, 0.6, 1.3, 5.0, 40.0}) {
        double pdf = std::exp(kernel_logpdf(g, x));
        double num = oracles::derivative([&](double t) { return kernel_cdf(g, t); }, x);
        REQUIRE(pdf == Approx(num).epsilon(1e-6));
    }
    // quantile consistency to tight tolerance (numeric inversion)
    for (double p : {1e-5, 0.2, 0.97, 1.0 - 1e-6}) {
        REQUIRE(kernel_cdf(g, kernel_quantile(g, p)) == Approx(p).margin(1e-9));
    }
}
