#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracburgers/power_sum.hpp"
#include "fracburgers/quadrature.hpp"
#include "fracburgers/special.hpp"

#include <cmath>
#include <cstdint>

using namespace fracburgers;

namespace {

struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    double next()
    {
        state += 0x9E3779B97f4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    double in(double lo, double hi) { return lo + (hi - lo) * next(); }
};

} // namespace

TEST_CASE("fractional integral: catalog examples")
{
    // order 1 on a constant is the plain integral
    CHECK(rl_integral_num([](double) { return 1.0; }, 1.0, 2.0) == doctest::Approx(2.0).epsilon(1e-13));

    // linear integrand is interpolated exactly
    CHECK(rl_integral_num([](double s) { return s; }, 0.5, 1.0)
          == doctest::Approx(0.7522527780636750492641).epsilon(1e-9));

    // quadratic integrand against Gamma(3)/Gamma(3.5)
    const QuadratureSpec fine{2048, 2.0};
    const double q = rl_integral_num([](double s) { return s * s; }, 0.5, 1.0, fine);
    CHECK(std::fabs(q - 0.6018022224509400394113) <= 1e-6);

    CHECK_THROWS_AS(rl_integral_num([](double) { return 1.0; }, 0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(rl_integral_num([](double) { return 1.0; }, 1.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(rl_integral_num([](double) { return 1.0; }, 0.5, 1.0, QuadratureSpec{8, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("modified derivative: catalog examples")
{
    CHECK(std::fabs(mrl_derivative_num([](double s) { return s; }, 0.5, 1.0)
                    - 1.128379167095512573896) <= 1e-4);

    // constants are annihilated by the f - f(0) subtraction
    CHECK(std::fabs(mrl_derivative_num([](double) { return 7.3; }, 0.5, 1.7)) <= 1e-8);

    // D^(1/2) x^(1/2) is x-independent
    CHECK(std::fabs(mrl_derivative_num([](double s) { return std::sqrt(s); }, 0.5, 0.7)
                    - 0.8862269254527580136491) <= 1e-4);

    CHECK_THROWS_AS(mrl_derivative_num([](double s) { return s; }, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(mrl_derivative_num([](double s) { return s; }, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("agreement with the symbolic power rule at the default spec")
{
    SplitMix rng(31u);
    for (double order : {0.35, 0.6}) {
        for (int i = 0; i < 20; ++i) {
            const double p = rng.in(order, 3.0);
            const double x = rng.in(0.5, 2.0);
            const GenPowerSum mono = GenPowerSum::monomial(1.0, p, 0.0);
            const double exact = mrl_derivative_power(mono, order, Var::x).eval(x, 1.0);
            const double numeric =
                mrl_derivative_num([p](double s) { return std::pow(s, p); }, order, x);
            CHECK(std::fabs(numeric - exact) / std::fabs(exact) <= 1e-3);
        }
    }
}

TEST_CASE("mesh refinement improves with empirical order >= 1.5")
{
    SplitMix rng(37u);
    for (int i = 0; i < 6; ++i) {
        const double order = rng.in(0.3, 0.7);
        const double p = rng.in(order, 3.0);
        const double x = rng.in(0.8, 2.0);
        const double exact = gamma_eval(1.0 + p) / gamma_eval(1.0 + p - order) * std::pow(x, p - order);
        double err[3];
        int idx = 0;
        for (int nodes : {128, 256, 512}) {
            const double v =
                mrl_derivative_num([p](double s) { return std::pow(s, p); }, order, x,
                                   QuadratureSpec{nodes, 2.0});
            err[idx++] = std::fabs(v - exact) + 1e-16;
        }
        const double rate = 0.5 * (std::log2(err[0] / err[1]) + std::log2(err[1] / err[2]));
        CHECK(rate >= 1.5);
    }
}

TEST_CASE("integral is linear in the integrand")
{
    auto f = [](double s) { return std::sqrt(s) + 0.3; };
    auto g = [](double s) { return s * s - 1.0; };
    const double a = 1.7, b = -0.6;
    auto combo = [&](double s) { return a * f(s) + b * g(s); };
    const double lhs = rl_integral_num(combo, 0.4, 1.3);
    const double rhs = a * rl_integral_num(f, 0.4, 1.3) + b * rl_integral_num(g, 0.4, 1.3);
    CHECK(std::fabs(lhs - rhs) <= 1e-12);
}

TEST_CASE("semigroup spot check: I^0.3 after I^0.4 equals I^0.7 on f(t) = t")
{
    auto f = [](double s) { return s; };
    auto inner = [&](double y) { return y <= 0.0 ? 0.0 : rl_integral_num(f, 0.4, y); };
    const double lhs = rl_integral_num(inner, 0.3, 1.0);
    const double rhs = rl_integral_num(f, 0.7, 1.0);
    CHECK(std::fabs(lhs - rhs) <= 1e-5);
}
