#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "snpvar/kernels.hpp"
#include "snpvar/math.hpp"
#include "snpvar/rng.hpp"
#include "snpvar/snp.hpp"
#include "support/oracles.hpp"

using namespace snpvar;
using Catch::Approx;

namespace {

SnpTheta theta_of(std::initializer_list<double> coeffs) {
    SnpTheta t;
    t.theta.assign(coeffs);
    return t;
}

double squared_poly(const SnpTheta& theta, double x) {
    double acc = 0.0;
    for (auto it = theta.theta.rbegin(); it != theta.theta.rend(); ++it) acc = acc * x + *it;
    return acc * acc;
}

// coefficients in [-5,5], theta_0 in (0,5], K <= 4
SnpTheta random_theta(RngStream& rng) {
    const int K = static_cast<int>(rng.next_u64() % 5);
    SnpTheta t;
    t.theta.resize(K + 1);
    t.theta[0] = 5.0 * rng.next_unit();
    if (t.theta[0] < 1e-3) t.theta[0] = 1e-3;
    for (int k = 1; k <= K; ++k) t.theta[k] = 10.0 * rng.next_unit() - 5.0;
    if (K > 0 && t.theta[K] == 0.0) t.theta[K] = 0.5;
    return t;
}

} // namespace

TEST_CASE("gamma coefficients by substitution", "[snp]") {
    SnpGamma g1 = gamma_from_theta(theta_of({2.0, 3.0}));
    REQUIRE(g1.gamma == std::vector<double>{4.0, 6.0, 3.0});

    SnpGamma g3 = gamma_from_theta(theta_of({1.0, 0.0, 0.0, 1.0}));
    REQUIRE(g3.gamma == std::vector<double>{1.0, 0.0, 0.0, 0.5, 0.0, 0.0, 1.0 / 7.0});
}

TEST_CASE("gamma matches quadrature of the squared polynomial", "[snp]") {
    const SnpTheta theta = theta_of({0.5, -1.2, 0.8});
    const SnpGamma gamma = gamma_from_theta(theta);
    double direct = h_eval(gamma, 0.7);
    double quad = oracles::integrate([&](double t) { return squared_poly(theta, t); }, 0.0, 0.7,
                                     1e-14);
    REQUIRE(direct == Approx(quad).margin(1e-10));
}

TEST_CASE("transform evaluation", "[snp]") {
    REQUIRE(h_eval(SnpGamma{{1.0}}, 5.0) == 5.0);
    REQUIRE(h_eval(SnpGamma{{1.0, 1.0, 1.0 / 3.0}}, 1.0) == Approx(7.0 / 3.0).epsilon(1e-15));
    REQUIRE(h_eval(SnpGamma{{4.0, 6.0, 3.0}}, 2.0) == 56.0);
    REQUIRE(h_eval(SnpGamma{{4.0, 6.0, 3.0}}, 0.0) == 0.0);
}

TEST_CASE("transform gradient", "[snp]") {
    REQUIRE(h_grad(SnpGamma{{1.0}}, 3.7) == 1.0);
    // theta = (1,-1): gradient vanishes at the root x = 1
    SnpGamma g = gamma_from_theta(theta_of({1.0, -1.0}));
    REQUIRE(h_grad(g, 1.0) == Approx(0.0).margin(1e-15));
    // two routes agree: (2 + 3x)^2 at x=1 vs sum of i*gamma_i
    SnpGamma g2 = gamma_from_theta(theta_of({2.0, 3.0}));
    REQUIRE(h_grad(g2, 1.0) == Approx(25.0).epsilon(1e-12));
    REQUIRE(h_grad(g2, 1.0) == Approx(1.0 * 4.0 + 2.0 * 6.0 + 3.0 * 3.0).epsilon(1e-12));
}

TEST_CASE("transform inverse", "[snp]") {
    REQUIRE(h_inverse(SnpGamma{{1.0}}, 42.0) == Approx(42.0).epsilon(1e-12));
    SnpGamma g{{1.0, 1.0, 1.0 / 3.0}};
    REQUIRE(h_inverse(g, 7.0 / 3.0) == Approx(1.0).epsilon(1e-10));
    // x + x^2 + x^3/3 = 999  <=>  (x+1)^3 = 2998
    REQUIRE(h_inverse(g, 999.0) == Approx(std::cbrt(2998.0) - 1.0).epsilon(1e-10));
    REQUIRE(h_inverse(g, 0.0) == 0.0);
    REQUIRE_THROWS_AS(h_inverse(g, -1.0), std::domain_error);
}

TEST_CASE("log-density closed forms", "[snp]") {
    SnpModelSpec gpd{KernelFamily::GPD, 1.0, theta_of({1.0})};
    REQUIRE(snp_logpdf(gpd, 1.0) == Approx(-2.0 * std::log(2.0)).epsilon(1e-14));

    SnpModelSpec wbl{KernelFamily::Weibull, 1.0, theta_of({1.0})};
    REQUIRE(snp_logpdf(wbl, 3.0) == Approx(-3.0).epsilon(1e-14));

    // a root of the squared polynomial at the observation signals -inf
    SnpModelSpec degen{KernelFamily::GPD, 1.0, theta_of({1.0, -1.0})};
    REQUIRE(snp_logpdf(degen, 1.0) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("cdf fixtures", "[snp]") {
    SnpModelSpec gpd{KernelFamily::GPD, 1.0, theta_of({1.0})};
    REQUIRE(snp_cdf(gpd, 0.0) == 0.0);
    REQUIRE(snp_cdf(gpd, 1.0) == Approx(0.5).epsilon(1e-14));

    SnpModelSpec lgt{KernelFamily::LogLogistic, 1.0, theta_of({2.0, 3.0})};
    double x_med = h_inverse(gamma_from_theta(lgt.theta), 1.0);
    REQUIRE(snp_cdf(lgt, x_med) == Approx(0.5).margin(1e-12));
}

TEST_CASE("quantile fixtures", "[snp]") {
    SnpModelSpec gpd1{KernelFamily::GPD, 1.0, theta_of({1.0})};
    REQUIRE(snp_quantile(gpd1, 0.999) == Approx(999.0).epsilon(1e-10));

    SnpModelSpec wbl{KernelFamily::Weibull, 1.0, theta_of({1.0})};
    REQUIRE(snp_quantile(wbl, 1.0 - std::exp(-1.0)) == Approx(1.0).epsilon(1e-10));

    SnpModelSpec gpd2{KernelFamily::GPD, 1.0, theta_of({1.0, 1.0})};
    REQUIRE(snp_quantile(gpd2, 0.999) == Approx(std::cbrt(2998.0) - 1.0).epsilon(1e-10));
}

TEST_CASE("density normalization by quadrature", "[snp]") {
    const std::vector<SnpModelSpec> specs = {
        {KernelFamily::GPD, 0.7, theta_of({1.2, -0.4, 0.05})},
        {KernelFamily::Lognormal, 1.5, theta_of({0.8, 0.3})},
        {KernelFamily::Weibull, 0.6, theta_of({1.0, 0.2})},
    };
    const std::vector<double> ps = {1e-7, 0.01, 0.1, 0.3, 0.5, 0.7,
                                    0.9,  0.99, 0.999, 1.0 - 1e-4, 1.0 - 1e-6};
    for (const auto& spec : specs) {
        std::vector<double> brk;
        brk.push_back(0.0);
        for (double p : ps) brk.push_back(snp_quantile(spec, p));
        auto density = [&](double x) {
            return x > 0.0 ? std::exp(snp_logpdf(spec, x)) : 0.0;
        };
        REQUIRE(oracles::integrate_density(density, brk, 1e-7) == Approx(1.0).margin(1e-4));
    }
}

TEST_CASE("sampling fixtures", "[snp]") {
    RngStream rng(11);
    SnpModelSpec spec{KernelFamily::GPD, 0.5, theta_of({1.0})};
    REQUIRE(snp_sample(spec, rng, 0).empty());

    auto draws = snp_sample(spec, rng, 1000000);
    double q90 = snp_quantile(spec, 0.9);
    REQUIRE(oracles::ecdf(draws, q90) == Approx(0.9).margin(0.002));
}

TEST_CASE("order-zero sampler equals the scaled kernel sampler", "[snp]") {
    const double theta0 = 1.7;
    const double c = 0.8;
    SnpModelSpec spec{KernelFamily::GPD, c, theta_of({theta0})};
    KernelParams kernel = GpdParams{c, 1.0 / (theta0 * theta0)};

    RngStream r1(101), r2(202);
    auto a = snp_sample(spec, r1, 100000);
    auto b = kernel_sample(kernel, r2, 100000);
    // 1% critical value for the two-sample KS statistic
    const double critical = 1.628 * std::sqrt(2.0 / 100000.0);
    REQUIRE(oracles::ks_two_sample(a, b) < critical);
}

TEST_CASE("tail index by kernel class", "[snp]") {
    SnpModelSpec gpd{KernelFamily::GPD, 1.5110, theta_of({1.0, 0.1, 0.1, 0.1})};
    TailIndex ti = snp_tail_index(gpd);
    REQUIRE(ti.mda == MdaClass::Frechet);
    REQUIRE(ti.xi == Approx(1.5110 / 7.0).epsilon(1e-15));
    REQUIRE(ti.xi == Approx(0.2157).epsilon(1e-3)); // reported constant, 4-digit rounding

    SnpModelSpec lgt{KernelFamily::LogLogistic, 0.9162, theta_of({1.0, 0.1, 0.1, 0.1})};
    REQUIRE(snp_tail_index(lgt).xi == Approx(1.0 / (0.9162 * 7.0)).epsilon(1e-15));
    REQUIRE(snp_tail_index(lgt).xi == Approx(0.1559).epsilon(1e-3));

    SnpModelSpec gpd0{KernelFamily::GPD, 0.42, theta_of({2.0})};
    REQUIRE(snp_tail_index(gpd0).xi == Approx(0.42).epsilon(1e-15));

    SnpModelSpec lgn{KernelFamily::Lognormal, 1.2, theta_of({1.0, 0.5})};
    REQUIRE(snp_tail_index(lgn).mda == MdaClass::Gumbel);
    REQUIRE(snp_tail_index(lgn).xi == 0.0);

    SnpModelSpec wbl{KernelFamily::Weibull, 0.8, theta_of({1.0})};
    REQUIRE(snp_tail_index(wbl).mda == MdaClass::Gumbel);
    SnpModelSpec exp{KernelFamily::Exponential, 1.0, theta_of({1.0})};
    REQUIRE(snp_tail_index(exp).xi == 0.0);
}

TEST_CASE("order-zero model equals the kernel with mapped scale", "[snp]") {
    const double theta0 = 1.31;
    const double c = 0.9;
    auto theta = theta_of({theta0});
    const double b = 1.0 / (theta0 * theta0);

    struct Case {
        SnpModelSpec spec;
        KernelParams kernel;
    };
    const std::vector<Case> cases = {
        {{KernelFamily::GPD, c, theta}, GpdParams{c, b}},
        {{KernelFamily::LogLogistic, c, theta}, LogLogisticParams{c, b}},
        {{KernelFamily::Weibull, c, theta}, WeibullParams{c, std::pow(theta0, 2.0 * c)}},
        {{KernelFamily::Lognormal, c, theta}, LognormalParams{-2.0 * std::log(theta0), c}},
        {{KernelFamily::Exponential, 1.0, theta}, ExponentialParams{theta0 * theta0}},
    };
    for (const auto& tc : cases) {
        for (int i = 1; i <= 20; ++i) {
            double x = 0.25 * i;
            REQUIRE(snp_logpdf(tc.spec, x) ==
                    Approx(kernel_logpdf(tc.kernel, x)).margin(1e-10));
            REQUIRE(snp_cdf(tc.spec, x) == Approx(kernel_cdf(tc.kernel, x)).margin(1e-12));
        }
    }
}

TEST_CASE("random-theta transform properties", "[snp][properties]") {
    RngStream rng(0xABCD);
    for (int rep = 0; rep < 200; ++rep) {
        const SnpTheta theta = random_theta(rng);
        const SnpGamma gamma = gamma_from_theta(theta);

        // gamma-theta consistency against quadrature
        for (int i = 0; i < 20; ++i) {
            double x = std::exp(std::log(10.0) * rng.next_unit() * 2.0 - std::log(10.0));
            double direct = h_eval(gamma, x);
            double quad = oracles::integrate(
                [&](double t) { return squared_poly(theta, t); }, 0.0, x, 1e-13 * std::max(1.0, direct));
            REQUIRE(direct == Approx(quad).epsilon(1e-9));
        }

        // monotone transform, nonnegative gradient
        double prev = 0.0;
        for (int i = 1; i <= 50; ++i) {
            double x = 0.2 * i;
            double h = h_eval(gamma, x);
            REQUIRE(h >= prev);
            REQUIRE(h_grad(gamma, x) >= -1e-12);
            prev = h;
        }

        // inverse round trip on (0, 1e3]
        for (int i = 0; i < 10; ++i) {
            double x = std::exp(std::log(1e-3) + std::log(1e6) * rng.next_unit());
            double y = h_eval(gamma, x);
            double back = h_inverse(gamma, y);
            REQUIRE(back == Approx(x).epsilon(1e-8));
        }
    }
}

TEST_CASE("tail slope of a transformed heavy-tail model", "[snp]") {
    // fitted-form shape 1.5110, m = 7; theta with a dominant top
    // coefficient so the probed window sits in the asymptotic regime
    SnpModelSpec spec{KernelFamily::GPD, 1.5110, theta_of({1.0, 0.1, 0.1, 0.1})};
    const double xi = snp_tail_index(spec).xi;

    // slope of log-survival vs log-x between the 1-1e-4 and 1-1e-6 quantiles
    double x_lo = snp_quantile(spec, 1.0 - 1e-4);
    double x_hi = snp_quantile(spec, 1.0 - 1e-6);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = 50;
    for (int i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / (n - 1);
        double x = x_lo * std::pow(x_hi / x_lo, t);
        double lx = std::log(x);
        double ls = std::log(1.0 - snp_cdf(spec, x));
        sx += lx;
        sy += ls;
        sxx += lx * lx;
        sxy += lx * ls;
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    REQUIRE(slope == Approx(-1.0 / xi).epsilon(0.05));
}

TEST_CASE("spec validation", "[snp]") {
    REQUIRE_THROWS_AS(snp_cdf({KernelFamily::GPD, 1.0, theta_of({-1.0})}, 1.0),
                      std::domain_error);
    REQUIRE_THROWS_AS(snp_cdf({KernelFamily::GB2, 1.0, theta_of({1.0})}, 1.0),
                      std::domain_error);
    REQUIRE_THROWS_AS(snp_cdf({KernelFamily::Exponential, 2.0, theta_of({1.0})}, 1.0),
                      std::domain_error);
    REQUIRE_THROWS_AS(snp_quantile({KernelFamily::GPD, 1.0, theta_of({1.0})}, 1.5),
                      std::domain_error);
}
