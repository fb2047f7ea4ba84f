#include "fracburgers/selfcheck.hpp"

#include "fracburgers/lie.hpp"
#include "fracburgers/report.hpp"
#include "fracburgers/rules.hpp"
#include "fracburgers/special.hpp"
#include "fracburgers/subspace.hpp"
#include "fracburgers/verify.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>

namespace fracburgers {
namespace selfcheck {

namespace {

using solutions::SolutionFamily;
using solutions::SolutionId;
using verify::GridSpec;
using verify::SemanticsMode;

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

std::string fmt(const char* format, ...)
{
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

const double kPi = 3.14159265358979323846;

// --- individual checks -----------------------------------------------------

CheckResult check_gamma()
{
    // frozen high-precision reference values
    static const double table[][2] = {
        {0.1, 9.513507698668731836292},   {0.5, 1.772453850905516027298},
        {1.0, 1.0},                       {1.3, 0.8974706963062771884938},
        {1.5, 0.8862269254527580136491},  {2.0, 1.0},
        {2.5, 1.329340388179137020474},   {5.0, 24.0},
        {7.5, 1871.254305797788346476},   {10.0, 362880.0},
        {20.0, 121645100408832000.0},     {30.0, 8.841761993739701954544e30},
    };
    double worst = 0.0;
    for (const auto& row : table)
        worst = std::max(worst, std::fabs(gamma_eval(row[0]) - row[1]) / row[1]);
    return {"fracpoly.gamma", 0, worst <= 1e-12,
            fmt("max relative error %.3e against reference table (tol 1e-12)", worst)};
}

CheckResult check_operators()
{
    SplitMix rng(20240811u);
    const QuadratureSpec defaults{};
    const QuadratureSpec fine{4096, 2.0};
    double worstDeriv = 0.0, worstInt = 0.0;
    for (double a : {0.3, 0.5, 0.7}) {
        for (int i = 0; i < 20; ++i) {
            const double p = rng.in(a, 3.0);
            for (double x : {0.5, 1.0, 2.0}) {
                auto mono = [p](double s) { return std::pow(s, p); };
                const double exactD = gamma_eval(1.0 + p) / gamma_eval(1.0 + p - a) * std::pow(x, p - a);
                const double numD = mrl_derivative_num(mono, a, x, defaults);
                worstDeriv = std::max(worstDeriv, std::fabs(numD - exactD) / std::fabs(exactD));
                const double exactI = gamma_eval(1.0 + p) / gamma_eval(1.0 + p + a) * std::pow(x, p + a);
                const double numI = rl_integral_num(mono, a, x, fine);
                worstInt = std::max(worstInt, std::fabs(numI - exactI) / std::fabs(exactI));
            }
        }
    }
    const bool pass = worstDeriv <= 1e-3 && worstInt <= 1e-6;
    return {"numfrac.operators", 1, pass,
            fmt("derivative max rel %.3e (tol 1e-3, default spec); integral max rel %.3e (tol 1e-6, 4096 nodes)",
                worstDeriv, worstInt)};
}

CheckResult check_rules()
{
    const FracOrders orders{1.0, 0.5};
    const std::vector<GenPowerSum> samples = {
        GenPowerSum::monomial(1.0, 0.5, 0.0),
        GenPowerSum::monomial(1.0, 1.5, 0.0),
        GenPowerSum::monomial(2.0, 1.0, 0.0) + GenPowerSum::constant(0.7),
    };
    const RuleAuditReport audit = audit_jumarie_rules(orders, samples, {1.0});
    double assertedWorst = 0.0, productViolation = 0.0;
    for (const auto& r : audit.rules) {
        if (r.asserted)
            assertedWorst = std::max(assertedWorst, r.maxViolation);
        if (r.id == "ii")
            productViolation = r.maxViolation;
    }
    // pair u = v = x^(1/2) at x = 1: |Gamma(2)/Gamma(1.5) - 2 Gamma(1.5)|
    const RuleAuditReport pair =
        audit_jumarie_rules(orders, {GenPowerSum::monomial(1.0, 0.5, 0.0)}, {1.0});
    double pairViolation = 0.0;
    for (const auto& r : pair.rules)
        if (r.id == "ii")
            pairViolation = r.maxViolation;
    const double expected = 0.644074683810003453402;
    const bool pass = assertedWorst <= 1e-12 && std::fabs(pairViolation - expected) <= 1e-6;
    return {"fracpoly.rules", 2, pass,
            fmt("asserted rules max %.3e (tol 1e-12); product-rule pair violation %.12g vs %.12g",
                assertedWorst, pairViolation, expected, productViolation)};
}

CheckResult check_determining()
{
    SplitMix rng(77210033u);
    double worst = 0.0;
    std::string where;
    for (const CoeffFamily& fam : {CoeffFamily{1.0, 0.0, 1.0}, CoeffFamily{1.0, 0.5, 1.0}}) {
        for (const FracOrders& ord : {FracOrders{1.0, 1.0}, FracOrders{0.5, 0.5}}) {
            lie::InfinitesimalFamily coeffs{rng.in(-1, 1), rng.in(-1, 1), rng.in(-1, 1),
                                            rng.in(-1, 1), rng.in(-1, 1), rng.in(-1, 1)};
            std::vector<lie::SamplePoint> pts;
            for (int i = 0; i < 100; ++i)
                pts.push_back({rng.in(0.5, 2.0), rng.in(0.5, 2.0), rng.in(-1.0, 1.0)});
            const auto rep = lie::check_determining(coeffs, fam, ord, pts);
            for (const auto& eq : rep.equations) {
                if (eq.maxAbs > worst) {
                    worst = eq.maxAbs;
                    where = eq.id + fmt(" (nu=%g, alpha=%g)", fam.nu, ord.alpha);
                }
            }
        }
    }
    return {"lie.determining", 3, worst <= 1e-9,
            fmt("max residual %.3e (tol 1e-9)%s", worst,
                where.empty() ? "" : (" worst at " + where).c_str())};
}

CheckResult check_bracket_table()
{
    const CoeffFamily unit{1.0, 0.0, 1.0};
    const FracOrders classical{1.0, 1.0};
    const auto gens = lie::standard_generators(unit, classical);
    const auto audit = lie::bracket_table_audit(gens, classical);

    auto mismatch = [&](int i, int j) {
        for (const auto& m : audit.mismatches)
            if (m.first == i && m.second == j)
                return true;
        return false;
    };
    auto row_v3_matches = [&] {
        for (const auto& e : audit.entries)
            if ((e.i == 3 || e.j == 3) && !e.match)
                return false;
        return true;
    };

    bool pass = audit.maxAntisymmetryDefect <= 1e-12 && audit.jacobiMaxResidual <= 1e-10
                && audit.maxFitResidual <= 1e-9;
    pass = pass && mismatch(1, 4) && mismatch(4, 1) && mismatch(4, 5) && mismatch(5, 4);
    pass = pass && row_v3_matches() && !mismatch(1, 5) && !mismatch(1, 6);
    return {"lie.bracket-table", 4, pass,
            fmt("antisymmetry %.2e, jacobi %.2e, fit %.2e, %zu mismatches incl required "
                "(1,4),(4,1),(4,5),(5,4); row V3 and (1,5),(1,6) agree",
                audit.maxAntisymmetryDefect, audit.jacobiMaxResidual, audit.maxFitResidual,
                audit.mismatches.size())};
}

CheckResult check_flows()
{
    const CoeffFamily unit{1.0, 0.0, 1.0};
    double groupWorst = 0.0, derivWorst = 0.0, refWorst = 0.0;
    for (const FracOrders& ord : {FracOrders{1.0, 1.0}, FracOrders{0.5, 0.5}}) {
        const auto gens = lie::standard_generators(unit, ord);
        for (int i = 1; i <= 6; ++i) {
            const double e1 = 0.13, e2 = -0.06, h = 1e-5;
            const auto F1 = lie::exponentiate_flow(i, e1, unit, ord);
            const auto F2 = lie::exponentiate_flow(i, e2, unit, ord);
            const auto F12 = lie::exponentiate_flow(i, e1 + e2, unit, ord);
            const auto Fp = lie::exponentiate_flow(i, h, unit, ord);
            const auto Fm = lie::exponentiate_flow(i, -h, unit, ord);
            for (int p = 0; p < 20; ++p) {
                const double X = 0.55 + 0.07 * p, T = 1.95 - 0.07 * p, u = 0.3 - 0.02 * p;
                const auto ab = F1.apply(F2.apply(X, T, u)[0], F2.apply(X, T, u)[1], F2.apply(X, T, u)[2]);
                const auto direct = F12.apply(X, T, u);
                for (int kk = 0; kk < 3; ++kk)
                    groupWorst = std::max(groupWorst, std::fabs(ab[kk] - direct[kk]));
                const auto plus = Fp.apply(X, T, u);
                const auto minus = Fm.apply(X, T, u);
                const double gen[3] = {gens[i - 1].xi.eval(X, T), gens[i - 1].tau.eval(X, T),
                                       gens[i - 1].eta.eval(X, T)};
                for (int kk = 0; kk < 3; ++kk)
                    derivWorst =
                        std::max(derivWorst, std::fabs((plus[kk] - minus[kk]) / (2.0 * h) - gen[kk]));
            }
            if (i >= 3) {
                const auto cmp = lie::compare_flow_with_reference(i, 0.17, unit, ord);
                refWorst = std::max({refWorst, cmp.maxDevX, cmp.maxDevT, cmp.maxDevU});
            }
        }
    }
    const bool pass = groupWorst <= 1e-10 && derivWorst <= 1e-6 && refWorst <= 1e-12;
    return {"lie.flows", 5, pass,
            fmt("group law %.2e (tol 1e-10); eps-derivative %.2e (tol 1e-6); g3..g6 vs catalogued maps %.2e (tol 1e-12)",
                groupWorst, derivWorst, refWorst)};
}

CheckResult check_reduced_odes()
{
    double worst = 0.0;
    std::string worstId;
    auto track = [&](const solutions::ReducedOdeResidual& r) {
        if (r.maxAbs > worst) {
            worst = r.maxAbs;
            worstId = r.odeId;
        }
    };

    std::vector<double> tPts, xpPts, zPts, gPts;
    for (int i = 0; i < 50; ++i) {
        tPts.push_back(0.5 + 7.5 * i / 49.0);
        xpPts.push_back(0.5 + 7.5 * i / 49.0);
        zPts.push_back(-1.0 + 3.0 * i / 49.0);
        gPts.push_back(-2.0 + 4.0 * i / 49.0);
    }

    for (const CoeffFamily& fam : {CoeffFamily{1.0, 0.0, 1.0}, CoeffFamily{1.5, 0.5, 2.0}}) {
        for (const FracOrders& ord : {FracOrders{1.0, 1.0}, FracOrders{0.5, 0.5}}) {
            track(solutions::reduced_ode_residual(
                solutions::make_solution(SolutionId::thm41, {{"k1", 0.3}}, fam, ord), tPts));
            track(solutions::reduced_ode_residual(
                solutions::make_solution(SolutionId::thm42, {{"k2", 1.2}, {"K", 0.7}, {"k3", 0.4}}, fam, ord),
                xpPts));
            track(solutions::reduced_ode_residual(
                solutions::make_solution(SolutionId::thm43, {{"m", 2.0}, {"n", 3.0}, {"k4", 0.5}}, fam, ord),
                tPts));
            track(solutions::reduced_ode_residual(
                solutions::make_solution(SolutionId::thm44, {{"r", 1.0}, {"c1", -2.0}, {"c2", 0.3}}, fam, ord),
                zPts));
            track(solutions::reduced_ode_residual(
                solutions::make_solution(SolutionId::thm45, {{"c3", 0.2}, {"c4", 0.1}}, fam, ord), gPts));
        }
    }
    return {"solutions.reduced-odes", 6, worst <= 1e-9,
            fmt("max profile residual %.3e (tol 1e-9)%s", worst,
                worstId.empty() ? "" : (" worst: " + worstId).c_str())};
}

CheckResult check_canonical_residuals()
{
    const CoeffFamily unit{1.0, 0.0, 1.0};
    const GridSpec grid{0.5, 2.0, 0.5, 2.0, 30, 30};
    double zeroWorst = 0.0;

    for (const FracOrders& ord :
         {FracOrders{1.0, 1.0}, FracOrders{0.5, 0.5}, FracOrders{0.5, 1.0}}) {
        const auto r42 = verify::pde_residual(
            solutions::make_solution(SolutionId::thm42, {{"k2", 1.2}, {"K", 0.7}, {"k3", 0.0}}, unit, ord),
            SemanticsMode::canonical, grid);
        const auto r43 = verify::pde_residual(
            solutions::make_solution(SolutionId::thm43, {{"m", 1.0}, {"n", 1.0}, {"k4", 0.0}}, unit, ord),
            SemanticsMode::canonical, grid);
        const auto r45 = verify::pde_residual(
            solutions::make_solution(SolutionId::thm45, {{"c3", 0.0}, {"c4", 0.0}}, unit, ord),
            SemanticsMode::canonical, grid);
        zeroWorst = std::max({zeroWorst, r42.maxAbs, r43.maxAbs, r45.maxAbs});
        if (ord.beta == 1.0) {
            const auto r41 = verify::pde_residual(
                solutions::make_solution(SolutionId::thm41, {{"k1", 0.0}}, unit, ord),
                SemanticsMode::canonical, grid);
            zeroWorst = std::max(zeroWorst, r41.maxAbs);
        }
    }

    const auto thm41half =
        solutions::make_solution(SolutionId::thm41, {{"k1", 0.0}}, unit, FracOrders{0.5, 0.5});
    const auto mismatch = verify::pde_residual(thm41half, SemanticsMode::canonical, grid);
    const auto disc = verify::semantics_discrepancy(thm41half, GridSpec{0.5, 2.0, 0.5, 2.0, 16, 16});
    const double expectedRatio = 2.0 / kPi;
    const bool ratioOk = disc.hasSpatialRatio && std::fabs(disc.ratioMedian - expectedRatio) <= 1e-6;

    const bool pass = zeroWorst <= 1e-10 && mismatch.maxAbs > 0.05 && ratioOk && !disc.consistent;
    return {"verify.canonical-residuals", 7, pass,
            fmt("exact families max %.3e (tol 1e-10); thm41 beta=0.5 residual %.3g (> 0.05 required, "
                "flagged inconsistent=%s); second-derivative ratio %.9g vs 2/pi=%.9g (tol 1e-6)",
                zeroWorst, mismatch.maxAbs, disc.consistent ? "no" : "yes", disc.ratioMedian,
                expectedRatio)};
}

CheckResult check_numeric_residuals()
{
    const CoeffFamily unit{1.0, 0.0, 1.0};
    const GridSpec grid{0.5, 2.0, 0.5, 2.0, 16, 16};

    const auto thm43 = solutions::make_solution(SolutionId::thm43, {{"m", 1.0}, {"n", 1.0}, {"k4", 0.0}},
                                                unit, FracOrders{0.5, 0.5});
    const double r43 = verify::pde_residual(thm43, SemanticsMode::numericMRL, grid).maxAbs;

    double r45worst = 0.0;
    for (double alpha : {0.5, 1.0}) {
        const auto thm45 = solutions::make_solution(SolutionId::thm45, {{"c3", 0.0}, {"c4", 0.0}}, unit,
                                                    FracOrders{alpha, 1.0});
        r45worst = std::max(r45worst,
                            verify::pde_residual(thm45, SemanticsMode::numericMRL, grid).maxAbs);
    }
    const bool pass = r43 <= 1e-3 && r45worst <= 1e-3;
    return {"verify.numeric-residuals", 8, pass,
            fmt("thm43 (0.5,0.5) max %.3e; thm45 beta=1 max %.3e (tol 1e-3)", r43, r45worst)};
}

CheckResult check_subspace_chain()
{
    double worst = 0.0;
    std::vector<double> times;
    for (int i = 0; i < 50; ++i)
        times.push_back(0.5 + 1.5 * i / 49.0);
    for (double alpha : {0.5, 1.0}) {
        const auto sol = subspace::solve_coefficient_system(CoeffFamily{1.0, 0.0, 1.0},
                                                            FracOrders{alpha, 1.0}, 1.0, 0.8, 0.2);
        worst = std::max(worst, subspace::validate_coefficient_system(sol, times).chainRuleMaxAbs);
    }
    return {"subspace.chain-rule-odes", 9, worst <= 1e-10,
            fmt("coefficient ODEs under chain-rule semantics: max %.3e (tol 1e-10, alpha in {0.5,1})", worst)};
}

CheckResult check_subspace_numeric()
{
    std::vector<double> times;
    for (int i = 0; i < 12; ++i)
        times.push_back(0.5 + 1.5 * i / 11.0);
    double worst1 = 0.0, worstHalf = 0.0;
    for (double alpha : {0.5, 1.0}) {
        const auto sol = subspace::solve_coefficient_system(CoeffFamily{1.0, 0.0, 1.0},
                                                            FracOrders{alpha, 1.0}, 1.0, 0.0, 0.0);
        const double v = subspace::validate_coefficient_system(sol, times).numericMaxAbs;
        (alpha == 1.0 ? worst1 : worstHalf) = v;
    }
    const bool pass = worst1 <= 1e-3 && worstHalf <= 1e-3;
    return {"subspace.numeric-odes", 9, pass,
            fmt("numeric operator vs coefficient ODEs: alpha=1 max %.3e, alpha=0.5 max %.3e (tol 1e-3; "
                "the alpha=0.5 gap is the chain-rule defect of the true operator)",
                worst1, worstHalf)};
}

CheckResult check_subspace_beta1_residual()
{
    const auto sol = subspace::solve_coefficient_system(CoeffFamily{1.0, 0.0, 1.0}, FracOrders{1.0, 1.0},
                                                        1.0, 0.0, 0.0);
    const auto assembled = subspace::assemble_subspace_solution(sol);
    const auto r = verify::pde_residual(assembled, SemanticsMode::canonical,
                                        GridSpec{0.5, 2.0, 0.5, 2.0, 30, 30});
    return {"subspace.beta1-residual", 9, r.maxAbs <= 1e-10,
            fmt("assembled beta=1 canonical residual %.6g (tol 1e-10; the catalogued coefficient system "
                "drops the factor 2 on the quadratic equation, defect = g c^2 X^2 / 2)",
                r.maxAbs)};
}

CheckResult check_subspace_remainder()
{
    const auto witness =
        subspace::check_w3_invariance(0.0, 0.0, 1.0, CoeffFamily{1.0, 0.0, 1.0}, FracOrders{1.0, 0.5});
    double coef = 0.0;
    for (const auto& term : witness.offBasisRemainder.terms())
        if (std::fabs(term.xExp - 1.0) <= 1e-9 && std::fabs(term.tExp) <= 1e-9)
            coef = term.coef;
    const double expected = 4.0 / kPi - 1.0;
    const bool pass = std::fabs(coef - expected) <= 1e-9;
    return {"subspace.off-basis-remainder", 9, pass,
            fmt("beta=0.5 x^(2 beta) coefficient defect %.12g vs 4/pi-1 = %.12g (tol 1e-9)", coef,
                expected)};
}

CheckResult check_determinism()
{
    const CoeffFamily unit{1.0, 0.0, 1.0};
    const FracOrders ord{0.5, 0.5};
    const auto sol =
        solutions::make_solution(SolutionId::thm43, {{"m", 1.0}, {"n", 1.0}, {"k4", 0.0}}, unit, ord);
    const GridSpec grid{0.5, 2.0, 0.5, 2.0, 8, 8};
    const auto r1 = verify::pde_residual(sol, SemanticsMode::canonical, grid);
    const auto r2 = verify::pde_residual(sol, SemanticsMode::canonical, grid);
    const bool jsonSame = report::render(r1, report::Format::json) == report::render(r2, report::Format::json);
    const bool csvSame = report::render(r1, report::Format::csv) == report::render(r2, report::Format::csv);

    const auto gens = lie::standard_generators(unit, FracOrders{1.0, 1.0});
    const auto a1 = lie::bracket_table_audit(gens, FracOrders{1.0, 1.0});
    const auto a2 = lie::bracket_table_audit(gens, FracOrders{1.0, 1.0});
    const bool auditSame =
        report::render(a1, report::Format::csv) == report::render(a2, report::Format::csv);

    const bool pass = jsonSame && csvSame && auditSame;
    return {"verify.determinism", 10, pass, "repeated renders byte-identical (json, csv, bracket audit)"};
}

} // namespace

std::vector<CheckResult> run_selfcheck(const std::string& filter)
{
    using Maker = std::function<CheckResult()>;
    const std::vector<Maker> checks = {
        check_gamma,          check_operators,         check_rules,
        check_determining,    check_bracket_table,     check_flows,
        check_reduced_odes,   check_canonical_residuals, check_numeric_residuals,
        check_subspace_chain, check_subspace_numeric,  check_subspace_beta1_residual,
        check_subspace_remainder, check_determinism,
    };
    // Names, in order, for filtering without running everything first.
    const char* names[] = {
        "fracpoly.gamma",        "numfrac.operators",       "fracpoly.rules",
        "lie.determining",       "lie.bracket-table",       "lie.flows",
        "solutions.reduced-odes", "verify.canonical-residuals", "verify.numeric-residuals",
        "subspace.chain-rule-odes", "subspace.numeric-odes", "subspace.beta1-residual",
        "subspace.off-basis-remainder", "verify.determinism",
    };
    std::vector<CheckResult> results;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (!filter.empty() && std::string(names[i]).find(filter) == std::string::npos)
            continue;
        try {
            results.push_back(checks[i]());
        } catch (const std::exception& e) {
            results.push_back({names[i], 0, false, std::string("exception: ") + e.what()});
        }
    }
    return results;
}

} // namespace selfcheck
} // namespace fracburgers
