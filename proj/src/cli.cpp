#include "fracburgers/cli.hpp"

#include "fracburgers/lie.hpp"
#include "fracburgers/parser.hpp"
#include "fracburgers/report.hpp"
#include "fracburgers/rules.hpp"
#include "fracburgers/selfcheck.hpp"
#include "fracburgers/special.hpp"
#include "fracburgers/subspace.hpp"
#include "fracburgers/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

namespace fracburgers {
namespace cli {

namespace {

using report::format_double;
using report::Format;

struct CommonOpts {
    double alpha = 1.0, beta = 1.0;
    double cf = 1.0, nu = 0.0, k = 1.0;
    std::string format = "json";
    std::string out;

    FracOrders orders() const { return {alpha, beta}; }
    CoeffFamily family() const { return {cf, nu, k}; }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool withFamily = true)
{
    cmd->add_option("--alpha", o.alpha, "time-derivative order in (0,1]");
    cmd->add_option("--beta", o.beta, "space-derivative order in (0,1]");
    if (withFamily) {
        cmd->add_option("--cf", o.cf, "amplitude of f(t) = cf t^nu");
        cmd->add_option("--nu", o.nu, "power-law exponent of f");
        cmd->add_option("--k", o.k, "ratio g/f");
    }
    cmd->add_option("--format", o.format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "output path (default standard output)");
}

void emit(const CommonOpts& o, const std::string& text)
{
    if (o.out.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file)
        throw CLI::ValidationError("--out", "cannot open '" + o.out + "' for writing");
    file << text;
}

verify::GridSpec parse_grid(const std::string& text)
{
    verify::GridSpec g;
    double x0, x1, t0, t1;
    int nx, nt;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d,%lf:%lf:%d", &x0, &x1, &nx, &t0, &t1, &nt) != 6)
        throw CLI::ValidationError("--grid", "expected x0:x1:nx,t0:t1:nt");
    g.x0 = x0;
    g.x1 = x1;
    g.nx = nx;
    g.t0 = t0;
    g.t1 = t1;
    g.nt = nt;
    g.validate();
    return g;
}

// Default parameters per catalog solution; explicit flags override.
std::map<std::string, double> solution_params(const std::string& id,
                                              const std::map<std::string, std::optional<double>>& flags,
                                              double alpha)
{
    (void)alpha;
    std::map<std::string, double> params;
    auto put = [&](const std::string& name, double fallback) {
        auto it = flags.find(name);
        params[name] = (it != flags.end() && it->second) ? *it->second : fallback;
    };
    if (id == "thm41") {
        put("k1", 0.0);
    } else if (id == "thm42") {
        put("k2", 1.0);
        put("K", 1.0);
        put("k3", 0.0);
    } else if (id == "thm43") {
        put("m", 1.0);
        put("n", 1.0);
        put("k4", 0.0);
    } else if (id == "thm44") {
        put("r", 1.0);
        put("c1", -2.0);
        put("c2", 0.0);
    } else if (id == "thm45") {
        put("c3", 0.0);
        put("c4", 0.0);
        auto s = flags.find("s");
        if (s != flags.end() && s->second)
            params["s"] = *s->second;
    } else if (id == "constant") {
        put("c", 1.0);
    } else {
        throw CLI::ValidationError("--solution", "unknown solution id '" + id + "'");
    }
    return params;
}

struct SolutionFlags {
    std::map<std::string, std::optional<double>> values;

    void add_to(CLI::App* cmd)
    {
        for (const char* name : {"k1", "k2", "K", "k3", "m", "n", "k4", "r", "c1", "c2", "c3", "c4",
                                 "s", "c"}) {
            values[name] = std::nullopt;
            auto* opt = cmd->add_option("--" + std::string(name));
            opt->description("solution parameter " + std::string(name));
            opt->each([this, name](const std::string& v) { values[name] = std::stod(v); });
        }
    }
};

std::string strip_newline(std::string s)
{
    while (!s.empty() && s.back() == '\n')
        s.pop_back();
    return s;
}

int run_impl(int argc, const char* const* argv)
{
    CLI::App app{"symbolic-numeric toolkit for the variable-coefficient space-time "
                 "fractional potential Burgers equation"};
    app.set_config("--config", "", "key=value configuration file (flags override)");
    app.require_subcommand(1);

    int exitCode = 0;

    // ---- derivative -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("derivative", "fractional derivative of an expression");
        auto opts = std::make_shared<CommonOpts>();
        auto expr = std::make_shared<std::string>();
        auto var = std::make_shared<std::string>("x");
        auto order = std::make_shared<double>(0.5);
        auto atX = std::make_shared<double>(1.0);
        auto atT = std::make_shared<double>(1.0);
        auto numeric = std::make_shared<bool>(false);
        cmd->add_option("--expr", *expr, "expression")->required();
        cmd->add_option("--var", *var, "variable: x, t, X or T")
            ->check(CLI::IsMember({"x", "t", "X", "T"}));
        cmd->add_option("--order", *order, "derivative order");
        cmd->add_option("--x", *atX, "evaluation point x");
        cmd->add_option("--t", *atT, "evaluation point t");
        cmd->add_flag("--numeric", *numeric, "also evaluate the quadrature operator at the point");
        add_common(cmd, *opts, false);
        cmd->callback([=]() {
            std::string resultText;
            double value = 0.0;
            std::optional<double> numericValue;
            ParsedExpr parsed = parse_expr(*expr);
            if (*var == "X" || *var == "T") {
                CanonicalExpr c = parse_canonical(*expr);
                CanonicalExpr d = c.diff(*var == "X" ? CanonVar::X : CanonVar::T);
                resultText = d.to_string();
                value = d.eval(*atX, *atT);
            } else {
                GenPowerSum p = std::get<GenPowerSum>(parsed);
                GenPowerSum d = mrl_derivative_power(p, *order, *var == "x" ? Var::x : Var::t);
                resultText = d.to_string();
                value = d.eval(*atX, *atT);
                if (*numeric) {
                    const double point = *var == "x" ? *atX : *atT;
                    const double other = *var == "x" ? *atT : *atX;
                    auto fn = [&](double s) {
                        return *var == "x" ? p.eval(s, other) : p.eval(other, s);
                    };
                    numericValue = *order == 1.0 ? detail::central_derivative1(fn, point)
                                                 : mrl_derivative_num(fn, *order, point, {});
                }
            }
            std::string outText = "{\"input\":\"" + *expr + "\",\"order\":" + format_double(*order);
            if (numericValue)
                outText += ",\"quadratureValue\":" + format_double(*numericValue);
            outText += ",\"result\":\"" + resultText + "\",\"valueAtPoint\":" + format_double(value)
                       + ",\"var\":\"" + *var + "\"}\n";
            emit(*opts, outText);
        });
    }

    // ---- integral ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("integral", "fractional primitive of a power sum");
        auto opts = std::make_shared<CommonOpts>();
        auto expr = std::make_shared<std::string>();
        auto var = std::make_shared<std::string>("x");
        auto order = std::make_shared<double>(0.5);
        auto atX = std::make_shared<double>(1.0);
        auto atT = std::make_shared<double>(1.0);
        auto numeric = std::make_shared<bool>(false);
        cmd->add_option("--expr", *expr, "power-sum expression in x and t")->required();
        cmd->add_option("--var", *var, "variable: x or t")->check(CLI::IsMember({"x", "t"}));
        cmd->add_option("--order", *order, "integral order in (0,1]");
        cmd->add_option("--x", *atX, "evaluation point x");
        cmd->add_option("--t", *atT, "evaluation point t");
        cmd->add_flag("--numeric", *numeric, "also evaluate the quadrature integral at the point");
        add_common(cmd, *opts, false);
        cmd->callback([=]() {
            GenPowerSum p = parse_power_sum(*expr);
            GenPowerSum prim = frac_primitive_power(p, *order, *var == "x" ? Var::x : Var::t);
            std::string outText = "{\"input\":\"" + *expr + "\",\"order\":" + format_double(*order);
            if (*numeric) {
                const double point = *var == "x" ? *atX : *atT;
                const double other = *var == "x" ? *atT : *atX;
                auto fn = [&](double s) { return *var == "x" ? p.eval(s, other) : p.eval(other, s); };
                outText += ",\"quadratureValue\":" + format_double(rl_integral_num(fn, *order, point, {}));
            }
            outText += ",\"result\":\"" + prim.to_string() + "\",\"valueAtPoint\":"
                       + format_double(prim.eval(*atX, *atT)) + ",\"var\":\"" + *var + "\"}\n";
            emit(*opts, outText);
        });
    }

    // ---- rules-audit ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("rules-audit", "audit the fractional calculus rules");
        auto opts = std::make_shared<CommonOpts>();
        add_common(cmd, *opts, false);
        cmd->callback([=]() {
            const std::vector<GenPowerSum> samples = {
                GenPowerSum::monomial(1.0, 0.5, 0.0),
                GenPowerSum::monomial(1.0, 1.5, 0.0),
                GenPowerSum::monomial(2.0, 1.0, 0.0) + GenPowerSum::constant(0.7),
                GenPowerSum::monomial(1.0, 2.0, 0.0),
            };
            const auto audit = audit_jumarie_rules(opts->orders(), samples, {0.5, 1.0, 2.0});
            emit(*opts, report::render(audit, report::format_from_string(opts->format)));
        });
    }

    // ---- bracket-table ----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("bracket-table", "commutator table audit (f = g = 1)");
        auto opts = std::make_shared<CommonOpts>();
        add_common(cmd, *opts, false);
        cmd->callback([=]() {
            const auto gens = lie::standard_generators(CoeffFamily{1.0, 0.0, 1.0}, opts->orders());
            const auto audit = lie::bracket_table_audit(gens, opts->orders());
            emit(*opts, report::render(audit, report::format_from_string(opts->format)));
        });
    }

    // ---- determining ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("determining", "determining-equation residuals");
        auto opts = std::make_shared<CommonOpts>();
        auto a = std::make_shared<std::array<double, 6>>(std::array<double, 6>{1, 1, 1, 1, 1, 1});
        auto count = std::make_shared<int>(100);
        cmd->add_option("--a1", (*a)[0], "infinitesimal parameter a1");
        cmd->add_option("--a2", (*a)[1], "infinitesimal parameter a2");
        cmd->add_option("--a3", (*a)[2], "infinitesimal parameter a3");
        cmd->add_option("--a4", (*a)[3], "infinitesimal parameter a4");
        cmd->add_option("--a5", (*a)[4], "infinitesimal parameter a5");
        cmd->add_option("--a6", (*a)[5], "infinitesimal parameter a6");
        cmd->add_option("--points", *count, "number of sample points")->check(CLI::PositiveNumber);
        add_common(cmd, *opts);
        cmd->callback([=]() {
            std::vector<lie::SamplePoint> pts;
            std::uint64_t state = 0x2545F4914F6CDD1Dull;
            auto next = [&state]() {
                state += 0x9E3779B97f4A7C15ull;
                std::uint64_t z = state;
                z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
                z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
                return static_cast<double>((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
            };
            for (int i = 0; i < *count; ++i)
                pts.push_back({0.5 + 1.5 * next(), 0.5 + 1.5 * next(), -1.0 + 2.0 * next()});
            const lie::InfinitesimalFamily fam{(*a)[0], (*a)[1], (*a)[2], (*a)[3], (*a)[4], (*a)[5]};
            const auto rep = lie::check_determining(fam, opts->family(), opts->orders(), pts);
            emit(*opts, report::render(rep, report::format_from_string(opts->format)));
        });
    }

    // ---- flows ------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("flows", "exponentiated flows versus the catalogued maps");
        auto opts = std::make_shared<CommonOpts>();
        auto gen = std::make_shared<int>(1);
        auto eps = std::make_shared<double>(0.1);
        cmd->add_option("--generator", *gen, "generator index 1..6")->check(CLI::Range(1, 6));
        cmd->add_option("--epsilon", *eps, "group parameter");
        add_common(cmd, *opts);
        cmd->callback([=]() {
            const auto cmp =
                lie::compare_flow_with_reference(*gen, *eps, opts->family(), opts->orders());
            // group-law and generator-consistency defects at 20 points
            const auto F1 = lie::exponentiate_flow(*gen, *eps, opts->family(), opts->orders());
            const auto F2 = lie::exponentiate_flow(*gen, 0.37 * *eps, opts->family(), opts->orders());
            const auto F12 =
                lie::exponentiate_flow(*gen, 1.37 * *eps, opts->family(), opts->orders());
            const auto gens = lie::standard_generators(opts->family(), opts->orders());
            const double h = 1e-5;
            const auto Fp = lie::exponentiate_flow(*gen, h, opts->family(), opts->orders());
            const auto Fm = lie::exponentiate_flow(*gen, -h, opts->family(), opts->orders());
            double groupDefect = 0.0, derivDefect = 0.0;
            for (int p = 0; p < 20; ++p) {
                const double X = 0.55 + 0.07 * p, T = 1.95 - 0.07 * p;
                const auto inner = F2.apply(X, T, 0.2);
                const auto chained = F1.apply(inner[0], inner[1], inner[2]);
                const auto direct = F12.apply(X, T, 0.2);
                const auto plus = Fp.apply(X, T, 0.2);
                const auto minus = Fm.apply(X, T, 0.2);
                const double genVal[3] = {gens[*gen - 1].xi.eval(X, T), gens[*gen - 1].tau.eval(X, T),
                                          gens[*gen - 1].eta.eval(X, T)};
                for (int kk = 0; kk < 3; ++kk) {
                    groupDefect = std::max(groupDefect, std::fabs(chained[kk] - direct[kk]));
                    derivDefect = std::max(
                        derivDefect, std::fabs((plus[kk] - minus[kk]) / (2.0 * h) - genVal[kk]));
                }
            }
            std::string outText = "{\"epsDerivativeDefect\":" + format_double(derivDefect)
                                  + ",\"epsilon\":" + format_double(*eps)
                                  + ",\"generator\":" + std::to_string(*gen)
                                  + ",\"groupLawDefect\":" + format_double(groupDefect)
                                  + ",\"referenceComparison\":"
                                  + strip_newline(report::render(cmp, Format::json)) + "}\n";
            if (opts->format == "csv") {
                outText = "generator,epsilon,groupLawDefect,epsDerivativeDefect,maxDevX,maxDevT,maxDevU\n"
                          + std::to_string(*gen) + "," + format_double(*eps) + ","
                          + format_double(groupDefect) + "," + format_double(derivDefect) + ","
                          + format_double(cmp.maxDevX) + "," + format_double(cmp.maxDevT) + ","
                          + format_double(cmp.maxDevU) + "\n";
            }
            emit(*opts, outText);
        });
    }

    // ---- transform --------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("transform", "transform a solution along a flow");
        auto opts = std::make_shared<CommonOpts>();
        auto gen = std::make_shared<int>(3);
        auto eps = std::make_shared<double>(0.1);
        auto exprText = std::make_shared<std::string>("1");
        cmd->add_option("--generator", *gen, "generator index 1..6")->check(CLI::Range(1, 6));
        cmd->add_option("--epsilon", *eps, "group parameter");
        cmd->add_option("--expr", *exprText, "solution expression in X and T");
        add_common(cmd, *opts);
        cmd->callback([=]() {
            const CanonicalExpr u = parse_canonical(*exprText);
            const auto flow = lie::exponentiate_flow(*gen, *eps, opts->family(), opts->orders());
            const CanonicalExpr transformed =
                lie::transform_solution(u, flow, opts->family(), opts->orders());
            const CanonicalExpr pushAtMinus = lie::transform_solution(
                u, lie::exponentiate_flow(*gen, -*eps, opts->family(), opts->orders()), opts->family(),
                opts->orders());
            const CanonicalExpr reference =
                lie::reference_transform(u, *gen, *eps, opts->family(), opts->orders());
            double refDev = 0.0;
            for (int p = 0; p < 25; ++p) {
                const double X = 0.55 + 0.055 * p, T = 1.9 - 0.055 * p;
                refDev = std::max(refDev, std::fabs(pushAtMinus.eval(X, T) - reference.eval(X, T)));
            }
            const auto residual = verify::expr_canonical_residual(
                transformed, opts->family(), opts->orders(), verify::GridSpec{0.5, 2.0, 0.5, 2.0, 12, 12});
            std::string outText =
                "{\"generator\":" + std::to_string(*gen) + ",\"input\":\"" + *exprText
                + "\",\"referenceDeviationAtInverseParameter\":" + format_double(refDev)
                + ",\"residualMaxAbs\":" + format_double(residual.maxAbs) + ",\"transformed\":\""
                + transformed.to_string() + "\"}\n";
            emit(*opts, outText);
        });
    }

    // ---- verify -----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("verify", "PDE residual of a catalog solution");
        auto opts = std::make_shared<CommonOpts>();
        auto solutionId = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("canonical");
        auto gridText = std::make_shared<std::string>("0.5:2:16,0.5:2:16");
        auto assertZero = std::make_shared<bool>(false);
        auto tol = std::make_shared<double>(-1.0);
        auto nodes = std::make_shared<int>(256);
        auto grading = std::make_shared<double>(2.0);
        auto singleOp = std::make_shared<bool>(false);
        auto discrepancy = std::make_shared<bool>(false);
        auto flags = std::make_shared<SolutionFlags>();
        auto s1 = std::make_shared<double>(1.0);
        auto B0 = std::make_shared<double>(0.0);
        auto s3 = std::make_shared<double>(0.0);
        cmd->add_option("--solution", *solutionId, "thm41..thm45, subspace or constant")->required();
        cmd->add_option("--mode", *mode, "canonical, powerRule or numeric")
            ->check(CLI::IsMember({"canonical", "powerRule", "power-rule", "numeric", "numericMRL"}));
        cmd->add_option("--grid", *gridText, "grid x0:x1:nx,t0:t1:nt");
        cmd->add_flag("--assert-zero", *assertZero, "exit 1 if maxAbs exceeds the tolerance");
        cmd->add_option("--tol", *tol, "assertion tolerance (default 1e-8 canonical, 1e-3 numeric)");
        cmd->add_option("--nodes", *nodes, "quadrature panels per unit interval");
        cmd->add_option("--grading", *grading, "quadrature mesh grading");
        cmd->add_flag("--single-op", *singleOp, "use a single D^(2 beta) instead of D^beta twice");
        cmd->add_flag("--discrepancy", *discrepancy, "run every applicable mode and compare");
        cmd->add_option("--s1", *s1, "subspace parameter s1");
        cmd->add_option("--B0", *B0, "subspace amplitude B0");
        cmd->add_option("--s3", *s3, "subspace parameter s3");
        flags->add_to(cmd);
        add_common(cmd, *opts);
        cmd->callback([=, &exitCode]() {
            solutions::SolutionFamily sol;
            if (*solutionId == "subspace") {
                sol = subspace::assemble_subspace_solution(subspace::solve_coefficient_system(
                    opts->family(), opts->orders(), *s1, *B0, *s3));
            } else {
                sol = solutions::make_solution(
                    solutions::solution_id_from_string(*solutionId),
                    solution_params(*solutionId, flags->values, opts->alpha), opts->family(),
                    opts->orders());
            }
            verify::ResidualOptions ropts;
            ropts.quadrature = QuadratureSpec{*nodes, *grading};
            ropts.composedSecondDerivative = !*singleOp;
            const auto grid = parse_grid(*gridText);
            if (*discrepancy) {
                const auto rep = verify::semantics_discrepancy(sol, grid, ropts);
                emit(*opts, report::render(rep, report::format_from_string(opts->format)));
                return;
            }
            const auto m = verify::mode_from_string(*mode);
            const auto rep = verify::pde_residual(sol, m, grid, ropts);
            emit(*opts, report::render(rep, report::format_from_string(opts->format)));
            if (*assertZero) {
                const double threshold =
                    *tol > 0.0 ? *tol : (m == verify::SemanticsMode::numericMRL ? 1e-3 : 1e-8);
                if (rep.maxAbs > threshold)
                    exitCode = 1;
            }
        });
    }

    // ---- subspace ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("subspace", "invariant-subspace system and assembled solution");
        auto opts = std::make_shared<CommonOpts>();
        auto s1 = std::make_shared<double>(1.0);
        auto B0 = std::make_shared<double>(0.0);
        auto s3 = std::make_shared<double>(0.0);
        auto bq = std::make_shared<double>(1.0);
        auto cq = std::make_shared<double>(1.0);
        auto gridText = std::make_shared<std::string>("0.5:2:16,0.5:2:16");
        cmd->add_option("--s1", *s1, "quadrature constant s1 (> 0)");
        cmd->add_option("--B0", *B0, "signed amplitude replacing e^{s2}");
        cmd->add_option("--s3", *s3, "additive constant s3");
        cmd->add_option("--witness-b", *bq, "linear coefficient for the span witness");
        cmd->add_option("--witness-c", *cq, "quadratic coefficient for the span witness");
        cmd->add_option("--grid", *gridText, "residual grid");
        add_common(cmd, *opts);
        cmd->callback([=]() {
            const auto witness =
                subspace::check_w3_invariance(0.0, *bq, *cq, opts->family(), opts->orders());
            const auto system =
                subspace::solve_coefficient_system(opts->family(), opts->orders(), *s1, *B0, *s3);
            std::vector<double> times;
            for (int i = 0; i < 25; ++i)
                times.push_back(0.5 + 1.5 * i / 24.0);
            const auto validation = subspace::validate_coefficient_system(system, times);
            const auto assembled = subspace::assemble_subspace_solution(system);
            const auto residual = verify::pde_residual(assembled, verify::SemanticsMode::canonical,
                                                       parse_grid(*gridText));
            const Format f = report::format_from_string(opts->format);
            if (f == Format::json) {
                std::string outText = "{\"coefficients\":{\"a\":\"" + system.a.to_string() + "\",\"b\":\""
                                      + system.b.to_string() + "\",\"c\":\"" + system.c.to_string()
                                      + "\"},\"odeValidation\":{\"chainRuleMaxAbs\":"
                                      + format_double(validation.chainRuleMaxAbs)
                                      + ",\"numericMaxAbs\":" + format_double(validation.numericMaxAbs)
                                      + "},\"residual\":"
                                      + strip_newline(report::render(residual, Format::json))
                                      + ",\"witness\":"
                                      + strip_newline(report::render(witness, Format::json)) + "}\n";
                emit(*opts, outText);
            } else {
                std::string outText = report::render(witness, Format::csv);
                outText += "odeValidation.chainRuleMaxAbs," + format_double(validation.chainRuleMaxAbs) + "\n";
                outText += "odeValidation.numericMaxAbs," + format_double(validation.numericMaxAbs) + "\n";
                outText += report::render(residual, Format::csv);
                emit(*opts, outText);
            }
        });
    }

    // ---- selftest ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("selftest", "run the embedded acceptance checks");
        auto filter = std::make_shared<std::string>();
        auto faultGamma = std::make_shared<bool>(false);
        cmd->add_option("--filter", *filter, "run only checks whose name contains this substring");
        cmd->add_flag("--fault-gamma", *faultGamma)->group(""); // hidden test hook
        cmd->callback([=, &exitCode]() {
            if (*faultGamma)
                testhook::set_gamma_fault(1e-6);
            const auto results = selfcheck::run_selfcheck(*filter);
            bool allPass = true;
            for (const auto& r : results) {
                std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
                allPass = allPass && r.pass;
            }
            if (results.empty()) {
                std::printf("no checks matched filter '%s'\n", filter->c_str());
                allPass = false;
            }
            if (*faultGamma)
                testhook::set_gamma_fault(0.0);
            exitCode = allPass ? 0 : 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    return exitCode;
}

} // namespace

int run(int argc, const char* const* argv)
{
    try {
        return run_impl(argc, argv);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

} // namespace cli
} // namespace fracburgers
