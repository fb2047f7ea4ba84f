#include "fracburgers/verify.hpp"

#include "fracburgers/special.hpp"

#include <algorithm>
#include <cmath>

namespace fracburgers {
namespace verify {

namespace {

using CE = CanonicalExpr;
using solutions::SolutionFamily;

std::pair<double, double> canonical_point(const SolutionFamily& s, double x, double t)
{
    const double ga = gamma_eval(1.0 + s.orders.alpha);
    const double gb = gamma_eval(1.0 + s.orders.beta);
    return {std::pow(x, s.orders.beta) / gb, std::pow(t, s.orders.alpha) / ga};
}

void accumulate(ResidualReport& report, double x, double t, double r, bool keep)
{
    if (keep)
        report.perPoint.push_back(r);
    const double a = std::fabs(r);
    if (a > report.maxAbs) {
        report.maxAbs = a;
        report.worstX = x;
        report.worstT = t;
    }
    report.l2 += r * r;
}

ResidualReport canonical_residual(const SolutionFamily& s, const GridSpec& grid, bool keepPerPoint)
{
    const double a = s.orders.alpha;
    const CE fT = s.family.f_in_T(a).expr();
    const CE gT = s.family.g_in_T(a).expr();
    const CE uX = s.expr.diff(CanonVar::X);
    const CE residualExpr =
        s.expr.diff(CanonVar::T) - fT * uX.diff(CanonVar::X) - gT * uX * uX;

    ResidualReport report;
    for (int j = 0; j < grid.nt; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x_at(i), t = grid.t_at(j);
            const auto [X, T] = canonical_point(s, x, t);
            const double r = residualExpr.eval(X, T);
            if (!std::isfinite(r))
                throw ModeIncompatible("canonical residual undefined at (x,t) = (" + std::to_string(x)
                                       + ", " + std::to_string(t) + ")");
            accumulate(report, x, t, r, keepPerPoint);
        }
    }
    return report;
}

ResidualReport power_rule_residual(const SolutionFamily& s, const GridSpec& grid, bool keepPerPoint)
{
    GenPowerSum u;
    try {
        u = from_canonical(s.expr, s.orders);
    } catch (const std::exception& e) {
        throw ModeIncompatible(std::string("powerRule mode needs a generalized power sum: ") + e.what());
    }
    const double a = s.orders.alpha, b = s.orders.beta;
    const GenPowerSum f = s.family.f_powersum();
    const GenPowerSum g = s.family.g_powersum();

    GenPowerSum ut, ux, uxx;
    try {
        ut = mrl_derivative_power(u, a, Var::t);
        ux = mrl_derivative_power(u, b, Var::x);
        uxx = mrl_derivative_power(ux, b, Var::x);
    } catch (const ExponentBelowOrder& e) {
        throw ModeIncompatible(std::string("powerRule mode outside operator domain: ") + e.what());
    }
    const GenPowerSum residual = ut - f * uxx - g * (ux * ux);

    ResidualReport report;
    for (int j = 0; j < grid.nt; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x_at(i), t = grid.t_at(j);
            accumulate(report, x, t, residual.eval(x, t), keepPerPoint);
        }
    return report;
}

// Piecewise-linear cache of the inner beta-derivative along one t-line,
// used by the composed second derivative.
class InnerDerivativeCache {
  public:
    InnerDerivativeCache(const RealFn& fx, double beta, double xMax, const QuadratureSpec& spec)
    {
        const int count = std::max(64, static_cast<int>(std::ceil(spec.nodes * xMax)));
        xs_.resize(count + 1);
        hs_.resize(count + 1);
        const double lo = 1e-6 * xMax;
        for (int i = 0; i <= count; ++i) {
            const double sRaw = static_cast<double>(i) / count;
            const double sg = std::pow(sRaw, spec.grading);
            const double cg = std::pow(1.0 - sRaw, spec.grading);
            const double frac = sg / (sg + cg);
            xs_[i] = lo + (xMax - lo) * frac;
            hs_[i] = mrl_derivative_num(fx, beta, xs_[i], spec);
        }
    }

    double operator()(double x) const
    {
        if (x <= xs_.front())
            return hs_.front();
        if (x >= xs_.back())
            return hs_.back();
        auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        const std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
        const std::size_t lo = hi - 1;
        const double w = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
        return hs_[lo] * (1.0 - w) + hs_[hi] * w;
    }

  private:
    std::vector<double> xs_, hs_;
};

ResidualReport numeric_residual(const SolutionFamily& s, const GridSpec& grid,
                                const ResidualOptions& options, bool keepPerPoint)
{
    const double a = s.orders.alpha, b = s.orders.beta;
    const double ga = gamma_eval(1.0 + a), gb = gamma_eval(1.0 + b);
    const QuadratureSpec& spec = options.quadrature;

    auto u = [&](double x, double t) {
        return s.expr.eval(std::pow(x, b) / gb, std::pow(t, a) / ga);
    };

    // Probe evaluability (the operators integrate from 0).
    for (double px : {0.0, grid.x0, grid.x1})
        for (double pt : {0.0, grid.t0, grid.t1})
            if (!std::isfinite(u(px, pt)))
                throw ModeIncompatible("numericMRL mode: solution undefined on the integration domain");

    ResidualReport report;
    report.composedSecondDerivative = options.composedSecondDerivative;
    const double margin = 1.0 + 2.5e-3;

    for (int j = 0; j < grid.nt; ++j) {
        const double t = grid.t_at(j);
        auto ux_line = [&](double x) { return u(x, t); };

        // Spatial second derivative along this t-line.
        std::optional<InnerDerivativeCache> cache;
        if (b < 1.0 && options.composedSecondDerivative)
            cache.emplace(ux_line, b, grid.x1 * margin, spec);

        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x_at(i);
            auto ut_line = [&](double tt) { return u(x, tt); };

            const double dtA = a == 1.0 ? detail::central_derivative1(ut_line, t)
                                        : mrl_derivative_num(ut_line, a, t, spec);
            const double dxB = b == 1.0 ? detail::central_derivative1(ux_line, x)
                                        : mrl_derivative_num(ux_line, b, x, spec);
            double dxx;
            if (b == 1.0) {
                dxx = detail::central_derivative2(ux_line, x);
            } else if (options.composedSecondDerivative) {
                dxx = mrl_derivative_num([&](double y) { return (*cache)(y); }, b, x, spec);
            } else if (b == 0.5) {
                dxx = detail::central_derivative1(ux_line, x); // D^(2b) = classical at 2b = 1
            } else {
                dxx = detail::mrl_derivative2_num(ux_line, 2.0 * b, x, spec);
            }

            const double fv = s.family.cf * std::pow(t, s.family.nu);
            const double gv = s.family.k * fv;
            const double r = dtA - fv * dxx - gv * dxB * dxB;
            if (!std::isfinite(r))
                throw ModeIncompatible("numericMRL residual undefined at a grid point");
            accumulate(report, x, t, r, keepPerPoint);
        }
    }
    return report;
}

} // namespace

std::string to_string(SemanticsMode m)
{
    switch (m) {
    case SemanticsMode::canonical: return "canonical";
    case SemanticsMode::powerRule: return "powerRule";
    case SemanticsMode::numericMRL: return "numericMRL";
    }
    return "?";
}

SemanticsMode mode_from_string(const std::string& name)
{
    if (name == "canonical") return SemanticsMode::canonical;
    if (name == "powerRule" || name == "power-rule" || name == "power") return SemanticsMode::powerRule;
    if (name == "numericMRL" || name == "numeric") return SemanticsMode::numericMRL;
    throw std::invalid_argument("unknown semantics mode '" + name + "'");
}

ResidualReport expr_canonical_residual(const CanonicalExpr& u, const CoeffFamily& family,
                                       const FracOrders& orders, const GridSpec& grid)
{
    grid.validate();
    solutions::SolutionFamily wrapper;
    wrapper.id = solutions::SolutionId::constant;
    wrapper.family = family;
    wrapper.orders = orders;
    wrapper.expr = u;
    ResidualReport report = canonical_residual(wrapper, grid, false);
    report.solutionId = "expression";
    report.mode = SemanticsMode::canonical;
    report.grid = grid;
    report.l2 = std::sqrt(report.l2);
    return report;
}

ResidualReport pde_residual(const solutions::SolutionFamily& s, SemanticsMode mode, const GridSpec& grid,
                            const ResidualOptions& options)
{
    grid.validate();
    options.quadrature.validate();

    ResidualReport report;
    switch (mode) {
    case SemanticsMode::canonical:
        report = canonical_residual(s, grid, options.keepPerPoint);
        break;
    case SemanticsMode::powerRule:
        report = power_rule_residual(s, grid, options.keepPerPoint);
        break;
    case SemanticsMode::numericMRL:
        report = numeric_residual(s, grid, options, options.keepPerPoint);
        break;
    }
    report.solutionId = solutions::to_string(s.id);
    report.mode = mode;
    report.grid = grid;
    report.composedSecondDerivative = options.composedSecondDerivative;
    report.l2 = std::sqrt(report.l2);
    if (report.maxAbs == 0.0) {
        report.worstX = grid.x_at(0);
        report.worstT = grid.t_at(0);
    }
    return report;
}

DiscrepancyReport semantics_discrepancy(const solutions::SolutionFamily& s, const GridSpec& grid,
                                        const ResidualOptions& options, double numericTol)
{
    grid.validate();
    DiscrepancyReport report;
    report.solutionId = solutions::to_string(s.id);
    report.grid = grid;
    report.threshold = 10.0 * numericTol;

    report.modes.push_back({SemanticsMode::canonical,
                            pde_residual(s, SemanticsMode::canonical, grid, options).maxAbs, false});

    bool powerRuleFull = false;
    try {
        const double m = pde_residual(s, SemanticsMode::powerRule, grid, options).maxAbs;
        report.modes.push_back({SemanticsMode::powerRule, m, false});
        powerRuleFull = true;
    } catch (const ModeIncompatible&) {
    }

    try {
        const double m = pde_residual(s, SemanticsMode::numericMRL, grid, options).maxAbs;
        report.modes.push_back({SemanticsMode::numericMRL, m, false});
    } catch (const ModeIncompatible&) {
    }

    // Spatial second-derivative ratio for solutions polynomial in X:
    // power-rule value sum_m coef_m(T) over the canonical d^2/dX^2.
    if (!s.spatialPowers.empty()) {
        const double a = s.orders.alpha, b = s.orders.beta;
        const double ga = gamma_eval(1.0 + a);
        const CE uXX = s.expr.diff(CanonVar::X).diff(CanonVar::X);
        std::vector<double> ratios;
        for (int j = 0; j < grid.nt; ++j) {
            for (int i = 0; i < grid.nx; ++i) {
                const double x = grid.x_at(i), t = grid.t_at(j);
                const double T = std::pow(t, a) / ga;
                const double X = std::pow(x, b) / gamma_eval(1.0 + b);
                double powerRuleXX = 0.0;
                for (const auto& sp : s.spatialPowers) {
                    if (sp.power < 2)
                        continue; // the second beta-derivative removes lower powers
                    // D^b D^b [x^(pb)/Gamma(1+pb)] = x^((p-2)b)/Gamma(1+(p-2)b)
                    const double pb = (sp.power - 2) * b;
                    powerRuleXX +=
                        sp.coefficient.eval(X, T) * std::pow(x, pb) / gamma_eval(1.0 + pb);
                }
                const double canonicalXX = uXX.eval(X, T);
                if (std::fabs(canonicalXX) > 1e-12)
                    ratios.push_back(powerRuleXX / canonicalXX);
            }
        }
        if (!ratios.empty()) {
            std::sort(ratios.begin(), ratios.end());
            report.hasSpatialRatio = true;
            report.ratioMin = ratios.front();
            report.ratioMax = ratios.back();
            report.ratioMedian = ratios[ratios.size() / 2];
            if (!powerRuleFull)
                report.modes.push_back({SemanticsMode::powerRule, 0.0, true});
        }
    }

    if (report.modes.size() < 2 && !report.hasSpatialRatio)
        throw ModeIncompatible("semantics_discrepancy: fewer than two applicable modes");

    bool consistent = true;
    for (std::size_t i = 0; i < report.modes.size(); ++i)
        for (std::size_t j = i + 1; j < report.modes.size(); ++j) {
            if (report.modes[i].spatialOnly || report.modes[j].spatialOnly)
                continue;
            if (std::fabs(report.modes[i].maxAbs - report.modes[j].maxAbs) > report.threshold)
                consistent = false;
        }
    if (report.hasSpatialRatio && std::fabs(report.ratioMedian - 1.0) > report.threshold)
        consistent = false;
    report.consistent = consistent;
    return report;
}

} // namespace verify
} // namespace fracburgers
