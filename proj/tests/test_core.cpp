#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracburgers/expr.hpp"
#include "fracburgers/parser.hpp"
#include "fracburgers/power_sum.hpp"
#include "fracburgers/rules.hpp"
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

bool same_sums(const GenPowerSum& a, const GenPowerSum& b, double tol = 1e-12)
{
    const GenPowerSum d = a - b;
    for (const auto& t : d.terms())
        if (std::fabs(t.coef) > tol)
            return false;
    return true;
}

} // namespace

TEST_CASE("gamma against high-precision reference")
{
    // values frozen from a 40-digit computation
    CHECK(gamma_eval(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_eval(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(std::fabs(gamma_eval(0.5) - 1.7724538509) < 5e-11); // sqrt(pi) to 10 digits
    const double cases[][2] = {
        {0.001, 999.423772484595466115}, {0.1, 9.513507698668731836292},
        {0.3, 2.991568987687590628313},  {0.7, 1.298055332647557785681},
        {1.3, 0.8974706963062771884938}, {1.5, 0.8862269254527580136491},
        {2.5, 1.329340388179137020474},  {3.7, 4.170651783796603165394},
        {7.5, 1871.254305797788346476},  {10.0, 362880.0},
        {15.25, 170491265198.1923249058}, {24.9, 4.506867476705075391132e23},
        {30.0, 8.841761993739701954544e30},
    };
    for (const auto& row : cases)
        CHECK(std::fabs(gamma_eval(row[0]) - row[1]) / row[1] <= 1e-12);
    CHECK_THROWS_AS(gamma_eval(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_eval(-1.5), std::domain_error);
}

TEST_CASE("erf within 1e-12 absolute on both branches")
{
    const double cases[][2] = {
        {0.05, 0.05637197779701662383127}, {0.3, 0.3286267594591274276389},
        {0.5, 0.5204998778130465376827},   {1.0, 0.8427007929497148693412},
        {1.5, 0.966105146475310727067},    {2.0, 0.9953222650189527341621},
        {2.5, 0.9995930479825550410604},   {3.0, 0.9999779095030014145586},
        {3.5, 0.9999992569016276585873},   {4.2, 0.9999999971445058204078},
        {5.0, 0.9999999999984625402056},   {6.0, 0.9999999999999999784803},
    };
    for (const auto& row : cases) {
        CHECK(std::fabs(erf_eval(row[0]) - row[1]) <= 1e-12);
        CHECK(erf_eval(-row[0]) == -erf_eval(row[0]));
    }
    CHECK(erf_eval(0.0) == 0.0);
    CHECK(erf_eval(8.0) == 1.0);
}

TEST_CASE("power sum normalization")
{
    GenPowerSum p({{1.0, 2.0, 0.0}, {3.0, 2.0, 0.0}, {1e-15, 1.0, 0.0}});
    CHECK(p.size() == 1);
    CHECK(p.terms()[0].coef == doctest::Approx(4.0));
    CHECK_THROWS_AS(GenPowerSum({{1.0, -0.5, 0.0}}), std::invalid_argument);
    CHECK(GenPowerSum::monomial(2.0, 1.5, 0.5).eval(2.0, 4.0) ==
          doctest::Approx(2.0 * std::pow(2.0, 1.5) * 2.0));
}

TEST_CASE("power-rule derivative: catalog examples")
{
    const GenPowerSum half = GenPowerSum::monomial(1.0 / gamma_eval(1.5), 0.5, 0.0);
    const GenPowerSum one = mrl_derivative_power(half, 0.5, Var::x);
    REQUIRE(one.size() == 1);
    CHECK(one.terms()[0].coef == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(one.terms()[0].xExp == doctest::Approx(0.0));

    // constants map to zero for any order
    CHECK(mrl_derivative_power(GenPowerSum::constant(7.3), 0.4, Var::t).empty());

    // classical limit
    const GenPowerSum x2 = GenPowerSum::monomial(1.0, 2.0, 0.0);
    const GenPowerSum d = mrl_derivative_power(x2, 1.0, Var::x);
    CHECK(same_sums(d, GenPowerSum::monomial(2.0, 1.0, 0.0)));

    CHECK_THROWS_AS(mrl_derivative_power(GenPowerSum::monomial(1.0, 0.5, 0.0), 1.0, Var::x),
                    ExponentBelowOrder);
}

TEST_CASE("fractional primitive: examples and properties")
{
    const GenPowerSum primT = frac_primitive_power(GenPowerSum::constant(1.0), 0.6, Var::t);
    REQUIRE(primT.size() == 1);
    CHECK(primT.terms()[0].tExp == doctest::Approx(0.6));
    CHECK(primT.terms()[0].coef == doctest::Approx(1.0 / gamma_eval(1.6)).epsilon(1e-14));

    // classical limit: primitive of x is x^2/2
    const GenPowerSum classical = frac_primitive_power(GenPowerSum::monomial(1.0, 1.0, 0.0), 1.0, Var::x);
    CHECK(same_sums(classical, GenPowerSum::monomial(0.5, 2.0, 0.0)));

    SplitMix rng(11u);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<PowerTerm> terms;
        for (int i = 0; i < 4; ++i)
            terms.push_back({rng.in(-3, 3), rng.in(0, 3), rng.in(0, 3)});
        const GenPowerSum p(terms);
        const double order = rng.in(0.1, 1.0);
        const Var var = trial % 2 ? Var::x : Var::t;
        // round trip is the identity
        CHECK(same_sums(mrl_derivative_power(frac_primitive_power(p, order, var), order, var), p));
        // linearity of both operators
        std::vector<PowerTerm> terms2;
        for (int i = 0; i < 3; ++i)
            terms2.push_back({rng.in(-3, 3), rng.in(1.1, 3), rng.in(1.1, 3)});
        const GenPowerSum q(terms2);
        const double a = rng.in(-2, 2), b = rng.in(-2, 2);
        CHECK(same_sums(frac_primitive_power(a * p + b * q, order, var),
                        a * frac_primitive_power(p, order, var) + b * frac_primitive_power(q, order, var)));
        CHECK(same_sums(mrl_derivative_power(a * q, order, var) + mrl_derivative_power(b * q, order, var),
                        mrl_derivative_power((a + b) * q, order, var), 1e-11));
    }
}

TEST_CASE("classical limit of the power rule matches d/dx")
{
    SplitMix rng(13u);
    for (int i = 0; i < 20; ++i) {
        const double coefficient = rng.in(-2, 2), p = rng.in(1.0, 3.5);
        const GenPowerSum mono = GenPowerSum::monomial(coefficient, p, 0.0);
        const GenPowerSum d = mrl_derivative_power(mono, 1.0, Var::x);
        REQUIRE(d.size() == 1);
        CHECK(d.terms()[0].coef == doctest::Approx(coefficient * p).epsilon(1e-12));
        CHECK(d.terms()[0].xExp == doctest::Approx(p - 1.0));
    }
}

TEST_CASE("to_canonical and back")
{
    const FracOrders ord{0.5, 0.5};
    const double gb = gamma_eval(1.5);

    const CanonicalExpr justX = to_canonical(GenPowerSum::monomial(1.0 / gb, 0.5, 0.0), ord);
    CHECK(justX.eval(1.3, 0.0) == doctest::Approx(1.3).epsilon(1e-14));

    // x^{2b}/Gamma(1+2b) -> (pi/4) X^2 at b = 1/2
    const CanonicalExpr sq = to_canonical(GenPowerSum::monomial(1.0 / gamma_eval(2.0), 1.0, 0.0), ord);
    CHECK(sq.eval(2.0, 0.0) == doctest::Approx(3.14159265358979 / 4.0 * 4.0).epsilon(1e-13));

    CHECK_THROWS_AS(to_canonical(GenPowerSum::monomial(1.0, 1.3, 0.0), ord), NonCommensurateExponent);

    SplitMix rng(17u);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<PowerTerm> terms;
        for (int i = 0; i < 3; ++i) {
            const double m = std::floor(rng.in(0, 4)), n = std::floor(rng.in(0, 4));
            terms.push_back({rng.in(-2, 2), m * ord.beta, n * ord.alpha});
        }
        const GenPowerSum p(terms);
        CHECK(same_sums(from_canonical(to_canonical(p, ord), ord), p, 1e-11));
    }
}

TEST_CASE("symbolic derivative against central finite differences")
{
    using CE = CanonicalExpr;
    const CE X = CE::X(), T = CE::T();
    const std::vector<CE> corpus = {
        log(cosh(X)),
        erf(sqrt(X) / 2.0),
        X * X * T,
        sqrt(X) / T,
        tanh(X * T),
        exp(-T) * pow(X, 2.5),
        pow(X + T, 3.0),
        sinh(X) / (1.0 + T * T),
        log(X * T + 1.0),
    };
    SplitMix rng(21u);
    const double h = 1e-6;
    for (const auto& e : corpus) {
        const CE dX = e.diff(CanonVar::X);
        const CE dT = e.diff(CanonVar::T);
        for (int p = 0; p < 100; ++p) {
            const double x = rng.in(0.1, 3.0), t = rng.in(0.1, 3.0);
            const double fdX = (e.eval(x + h, t) - e.eval(x - h, t)) / (2.0 * h);
            const double fdT = (e.eval(x, t + h) - e.eval(x, t - h)) / (2.0 * h);
            const double sX = dX.eval(x, t), sT = dT.eval(x, t);
            CHECK(std::fabs(sX - fdX) <= 1e-6 * std::max(1.0, std::fabs(sX)));
            CHECK(std::fabs(sT - fdT) <= 1e-6 * std::max(1.0, std::fabs(sT)));
        }
    }

    // catalog examples
    CHECK(log(cosh(X)).diff(CanonVar::X).eval(0.7, 0.0) == doctest::Approx(std::tanh(0.7)).epsilon(1e-14));
    CHECK((T * T).diff(CanonVar::T).eval(0.0, 1.7) == doctest::Approx(3.4).epsilon(1e-14));
    CHECK(erf(sqrt(X) / 2.0).diff(CanonVar::X).eval(1.0, 0.0)
          == doctest::Approx(0.2196956447338612).epsilon(1e-12));
}

TEST_CASE("expression substitution and printing round trip")
{
    using CE = CanonicalExpr;
    const CE X = CE::X(), T = CE::T();
    const std::vector<CE> corpus = {
        X + 2.0 * T,
        log(cosh(X)) - T,
        pow(X, 2.5) / (T + 1.0),
        erf(X) * sinh(T),
    };
    for (const auto& e : corpus) {
        const CanonicalExpr reparsed = parse_canonical(e.to_string());
        for (double x : {0.3, 1.0, 2.4})
            for (double t : {0.5, 1.7})
                CHECK(reparsed.eval(x, t) == doctest::Approx(e.eval(x, t)).epsilon(1e-14));
        // printing is stable under a parse/print cycle
        CHECK(parse_canonical(e.to_string()).to_string() == e.to_string());
    }

    const CE shifted = (X * X + T).substitute(X + 1.0, T * T);
    CHECK(shifted.eval(2.0, 3.0) == doctest::Approx(9.0 + 9.0));
}

TEST_CASE("parser: grammar, classification and errors")
{
    const GenPowerSum p = parse_power_sum("x^2 + 3*t");
    REQUIRE(p.size() == 2);
    CHECK(p.terms()[0].tExp == doctest::Approx(1.0)); // 3 t
    CHECK(p.terms()[0].coef == doctest::Approx(3.0));
    CHECK(p.terms()[1].xExp == doctest::Approx(2.0));

    CHECK(parse_power_sum("(x + t)^2 / 2").eval(2.0, 1.0) == doctest::Approx(4.5));
    CHECK(parse_power_sum("gamma(1.5) * x").eval(1.0, 0.0) == doctest::Approx(gamma_eval(1.5)));

    const CanonicalExpr c = parse_canonical("log(cosh(X))");
    CHECK(c.eval(0.9, 0.0) == doctest::Approx(std::log(std::cosh(0.9))).epsilon(1e-14));
    CHECK(parse_canonical("T^-1").eval(0.0, 4.0) == doctest::Approx(0.25));

    try {
        parse_expr("x^");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse_expr("foo + 1"), ParseError);
    CHECK_THROWS_AS(parse_expr("x + X"), ParseError);
    CHECK_THROWS_AS(parse_expr("log(x)"), ParseError);     // function of a raw variable
    CHECK_THROWS_AS(parse_expr("gamma(X)"), ParseError);   // gamma needs a constant
    CHECK_THROWS_AS(parse_expr("1 + "), ParseError);
    CHECK_THROWS_AS(parse_power_sum("x / t"), ParseError);
}

TEST_CASE("rule audit: asserted identities and quantified defects")
{
    const FracOrders halfBeta{1.0, 0.5};
    const std::vector<GenPowerSum> samples = {
        GenPowerSum::monomial(1.0, 0.5, 0.0),
        GenPowerSum::monomial(1.0, 1.5, 0.0),
        GenPowerSum::monomial(2.0, 1.0, 0.0) + GenPowerSum::constant(0.7),
    };
    const RuleAuditReport audit = audit_jumarie_rules(halfBeta, samples);
    for (const auto& r : audit.rules)
        if (r.asserted)
            CHECK(r.maxViolation <= 1e-12);

    // the product-rule defect for u = v = x^(1/2) at x = 1 is |2/sqrt(pi) - sqrt(pi)|
    const RuleAuditReport pair =
        audit_jumarie_rules(halfBeta, {GenPowerSum::monomial(1.0, 0.5, 0.0)}, {1.0});
    double productViolation = -1.0;
    for (const auto& r : pair.rules)
        if (r.id == "ii")
            productViolation = r.maxViolation;
    CHECK(productViolation == doctest::Approx(0.644074683810003453402).epsilon(1e-9));

    // chain-rule ratio 2 Gamma(1+b)^2/Gamma(1+2b): pi/2 at b = 1/2, 1 at b = 1
    CHECK(audit.chainOverDirectRatio == doctest::Approx(1.570796326794896619).epsilon(1e-12));
    const RuleAuditReport classical = audit_jumarie_rules({1.0, 1.0}, samples);
    CHECK(classical.chainOverDirectRatio == doctest::Approx(1.0).epsilon(1e-14));
    for (const auto& r : classical.rules)
        CHECK(r.maxViolation <= 1e-12); // every rule holds in the classical limit

    CHECK_THROWS_AS(audit_jumarie_rules(halfBeta, {}), std::invalid_argument);
}
