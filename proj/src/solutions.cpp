#include "fracburgers/solutions.hpp"

#include "fracburgers/special.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace fracburgers {
namespace solutions {

namespace {

using CE = CanonicalExpr;

CE c(double v) { return CE::constant(v); }

double require_param(const std::map<std::string, double>& params, const std::string& key)
{
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("make_solution: missing parameter '" + key + "'");
    return it->second;
}

void reject_unknown(const std::map<std::string, double>& params, const std::set<std::string>& known)
{
    for (const auto& [key, value] : params) {
        (void)value;
        if (!known.count(key))
            throw std::invalid_argument("make_solution: unknown parameter '" + key + "'");
    }
}

double param_or(const std::map<std::string, double>& params, const std::string& key, double fallback)
{
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

} // namespace

std::string to_string(SolutionId id)
{
    switch (id) {
    case SolutionId::thm41: return "thm41";
    case SolutionId::thm42: return "thm42";
    case SolutionId::thm43: return "thm43";
    case SolutionId::thm44: return "thm44";
    case SolutionId::thm45: return "thm45";
    case SolutionId::subspace: return "subspace";
    case SolutionId::constant: return "constant";
    }
    return "?";
}

SolutionId solution_id_from_string(const std::string& name)
{
    if (name == "thm41") return SolutionId::thm41;
    if (name == "thm42") return SolutionId::thm42;
    if (name == "thm43") return SolutionId::thm43;
    if (name == "thm44") return SolutionId::thm44;
    if (name == "thm45") return SolutionId::thm45;
    if (name == "subspace") return SolutionId::subspace;
    if (name == "constant") return SolutionId::constant;
    throw std::invalid_argument("unknown solution id '" + name + "'");
}

SolutionFamily make_solution(SolutionId id, const std::map<std::string, double>& params,
                             const CoeffFamily& family, const FracOrders& orders)
{
    family.validate();
    orders.validate();
    const double a = orders.alpha;
    const double db = squared_power_constant(orders.beta);
    const double ga = gamma_eval(1.0 + a);
    const double k = family.k;

    const PowerOfT fT = family.f_in_T(a);
    const PowerOfT gT = family.g_in_T(a);
    const PowerOfT Gc = family.G_canonical_primitive(a);
    const PowerOfT Fc = family.F_canonical_primitive(a);
    const double q = fT.exponent;

    const CE X = CE::X(), T = CE::T();

    SolutionFamily s;
    s.id = id;
    s.params = params;
    s.family = family;
    s.orders = orders;

    switch (id) {
    case SolutionId::thm41: {
        reject_unknown(params, {"k1"});
        const double k1 = require_param(params, "k1");
        // phi(T) = T^(q+1) (k1 - Cf ln T); u = (phi - db X^2) / (2 G)
        const CE phi = pow(T, q + 1.0) * (c(k1) - c(fT.coef) * log(T));
        const CE twoG = c(2.0) * Gc.expr();
        s.expr = (phi - c(db) * X * X) / twoG;
        s.reducedOde = "phi'(T) - H1(T) phi(T) + H2(T) = 0, H1 = g/G, H2 = f (functions of T)";
        s.spatialPowers.push_back({0, phi / twoG});
        s.spatialPowers.push_back({2, c(-1.0) / twoG});
        break;
    }
    case SolutionId::thm42: {
        reject_unknown(params, {"k2", "K", "k3"});
        const double k2 = require_param(params, "k2");
        const double K = require_param(params, "K");
        const double k3 = require_param(params, "k3");
        // similarity variable Xp = X^2 / F(T); u = (1/k) log(k2 + K erf(sqrt(Xp)/2)) + k3
        const CE argument = X / (c(2.0) * sqrt(Fc.expr()));
        s.expr = log(c(k2) + c(K) * erf(argument)) / c(k) + c(k3);
        s.reducedOde = "psi''(Y) + k psi'(Y)^2 + psi'(Y)/4 + psi'(Y)/(2Y) = 0, Y = X^2/F(T)";
        break;
    }
    case SolutionId::thm43: {
        reject_unknown(params, {"m", "n", "k4"});
        const double m = require_param(params, "m");
        const double n = require_param(params, "n");
        const double k4 = require_param(params, "k4");
        if (n == 0.0 || m == 0.0)
            throw std::invalid_argument("make_solution: thm43 requires m, n nonzero");
        const double ratio = m / n;
        s.expr = c(ratio) * (X + c(ratio) * Gc.expr() - c(k4));
        s.reducedOde = "phi'(Z) + (m/n) g(Z) = 0, Z = T";
        s.spatialPowers.push_back({0, c(ratio) * (c(ratio) * Gc.expr() - c(k4))});
        s.spatialPowers.push_back({1, c(ratio)});
        break;
    }
    case SolutionId::thm44: {
        reject_unknown(params, {"r", "c1", "c2"});
        const double r = require_param(params, "r");
        const double c1 = require_param(params, "c1");
        const double c2 = require_param(params, "c2");
        if (r == 0.0)
            throw std::invalid_argument("make_solution: thm44 requires r nonzero");
        const double lambda = r * r / ga;
        const CE zeta = X / c(r) - Fc.expr() / c(ga);
        const CE inner = exp(c(lambda) * zeta) - c(k * std::exp(lambda * c1));
        s.expr = log(inner) / c(k) - c(lambda / k) * zeta + c(c2);
        s.reducedOde = "omega''(z) + k omega'(z)^2 + (r^2/Gamma(1+alpha)) omega'(z) = 0";
        break;
    }
    case SolutionId::thm45: {
        reject_unknown(params, {"c3", "c4", "s"});
        const double c3 = require_param(params, "c3");
        const double c4 = require_param(params, "c4");
        const double sParam = param_or(params, "s", ga);
        const double sigma = k * sParam / ga;
        if (!(sigma > 0.0))
            throw std::invalid_argument("make_solution: thm45 requires k*s > 0");
        s.expr = c(sParam / ga) * Fc.expr()
                 + log(cosh(c(std::sqrt(sigma)) * (X + c(c3)))) / c(k) - c(c4);
        s.reducedOde = "rho''(y) - (k s/Gamma(1+alpha)) rho'(y)^2 + 1 = 0, y = X";
        break;
    }
    case SolutionId::constant: {
        reject_unknown(params, {"c"});
        const double value = require_param(params, "c");
        s.expr = c(value);
        s.spatialPowers.push_back({0, c(value)});
        break;
    }
    case SolutionId::subspace:
        throw std::invalid_argument("make_solution: subspace solutions are assembled by the subspace module");
    }
    (void)gT;
    return s;
}

GeneratorInvariants invariants_for_generator(int i, const CoeffFamily& family, const FracOrders& orders,
                                             const std::map<std::string, double>& params)
{
    family.validate();
    orders.validate();
    const double a = orders.alpha;
    const double ga = gamma_eval(1.0 + a);
    const PowerOfT Fc = family.F_canonical_primitive(a);
    const CE X = CE::X(), T = CE::T();

    GeneratorInvariants inv;
    inv.caseIndex = i;
    switch (i) {
    case 1:
        inv.similarityVariable = T;
        inv.solutionForm = "nu = x^(2 beta)/Gamma(1+2 beta) + 2 G(t) u = phi(T)";
        break;
    case 2:
        inv.similarityVariable = X * X / Fc.expr();
        inv.solutionForm = "u = psi(Y), Y = x^(2 beta)/(Gamma(1+beta)^2 F_alpha(t))";
        break;
    case 3:
        inv.similarityVariable = T;
        inv.solutionForm = "phi = x^beta/Gamma(1+beta) - (n/m) u = phi(Z), Z = t^alpha/Gamma(1+alpha)";
        break;
    case 4: {
        const double r = param_or(params, "r", 1.0);
        if (r == 0.0)
            throw std::invalid_argument("invariants_for_generator: r must be nonzero");
        inv.similarityVariable = X / c(r) - Fc.expr() / c(ga);
        inv.solutionForm = "omega(z) = u, z = (1/r) x^beta/Gamma(1+beta) - F_alpha(t)/Gamma(1+alpha)";
        break;
    }
    case 5:
        inv.similarityVariable = X;
        inv.solutionForm = "rho(y) = -(Gamma(1+alpha)/s) u + F_alpha(t), y = x^beta/Gamma(1+beta)";
        break;
    default:
        throw std::invalid_argument("invariants_for_generator: case index must be in 1..5");
    }
    return inv;
}

namespace {

ReducedOdeResidual residual_of_profile(const std::string& odeId, const CE& residualExpr,
                                       const std::vector<double>& points)
{
    ReducedOdeResidual out;
    out.odeId = odeId;
    out.samplePoints = points;
    for (double p : points) {
        const double v = residualExpr.eval(p, p);
        if (!std::isfinite(v))
            throw std::domain_error("reduced_ode_residual: profile undefined at sample point "
                                    + std::to_string(p));
        out.maxAbs = std::max(out.maxAbs, std::fabs(v));
    }
    return out;
}

} // namespace

ReducedOdeResidual reduced_ode_residual(const SolutionFamily& s, const std::vector<double>& points)
{
    if (points.empty())
        throw std::invalid_argument("reduced_ode_residual: points must be nonempty");
    const double a = s.orders.alpha;
    const double ga = gamma_eval(1.0 + a);
    const double k = s.family.k;
    const PowerOfT fT = s.family.f_in_T(a);
    const PowerOfT gT = s.family.g_in_T(a);
    const PowerOfT Gc = s.family.G_canonical_primitive(a);
    const double q = fT.exponent;
    const CE X = CE::X();

    switch (s.id) {
    case SolutionId::thm41: {
        // profile in T (use the X slot as the ODE variable for uniformity)
        const double k1 = s.params.at("k1");
        const CE phi = pow(X, q + 1.0) * (c(k1) - c(fT.coef) * log(X));
        const CE H1 = c(q + 1.0) / X;
        const CE H2 = c(fT.coef) * pow(X, q);
        const CE residual = phi.diff(CanonVar::X) - H1 * phi + H2;
        return residual_of_profile("thm41-linear-first-order", residual, points);
    }
    case SolutionId::thm42: {
        const double k2 = s.params.at("k2");
        const double K = s.params.at("K");
        for (double p : points)
            if (!(p > 0.0))
                throw std::domain_error("reduced_ode_residual: the second-reduction ODE is singular at Y <= 0");
        const CE psi = log(c(k2) + c(K) * erf(sqrt(X) / c(2.0))) / c(k);
        const CE dpsi = psi.diff(CanonVar::X);
        const CE residual = dpsi.diff(CanonVar::X) + c(k) * dpsi * dpsi + dpsi / c(4.0)
                            + dpsi / (c(2.0) * X);
        return residual_of_profile("thm42-nonlinear-second-order", residual, points);
    }
    case SolutionId::thm43: {
        const double m = s.params.at("m");
        const double n = s.params.at("n");
        const double k4 = s.params.at("k4");
        const CE phi = c(k4) - c(m / n) * c(Gc.coef) * pow(X, Gc.exponent);
        const CE residual = phi.diff(CanonVar::X) + c(m / n) * c(gT.coef) * pow(X, gT.exponent);
        return residual_of_profile("thm43-linear-fractional", residual, points);
    }
    case SolutionId::thm44: {
        const double r = s.params.at("r");
        const double c1 = s.params.at("c1");
        const double lambda = r * r / ga;
        const CE omega = log(exp(c(lambda) * X) - c(k * std::exp(lambda * c1))) / c(k)
                         - c(lambda / k) * X;
        const CE d1 = omega.diff(CanonVar::X);
        const CE residual = d1.diff(CanonVar::X) + c(k) * d1 * d1 + c(lambda) * d1;
        return residual_of_profile("thm44-theorem-ode", residual, points);
    }
    case SolutionId::thm45: {
        const double c3 = s.params.at("c3");
        const double sParam = s.params.count("s") ? s.params.at("s") : ga;
        const double sigma = k * sParam / ga;
        const CE rho = c(-ga / (sParam * k)) * log(cosh(c(std::sqrt(sigma)) * (X + c(c3))));
        const CE d1 = rho.diff(CanonVar::X);
        const CE residual = d1.diff(CanonVar::X) - c(sigma) * d1 * d1 + c(1.0);
        return residual_of_profile("thm45-nonlinear-second-order", residual, points);
    }
    default:
        throw std::invalid_argument("reduced_ode_residual: no reduced ODE for this solution id");
    }
}

ReducedOdeResidual thm44_reference_form_residual(const std::map<std::string, double>& params,
                                                 const CoeffFamily& family, const FracOrders& orders,
                                                 const std::vector<double>& points)
{
    family.validate();
    orders.validate();
    const double ga = gamma_eval(1.0 + orders.alpha);
    const double k = family.k;
    const double r = params.at("r");
    const double c1 = params.at("c1");
    const double lambda = r * r / ga;
    const CE X = CE::X();
    // catalogued closed form: linear term -lambda z (without the 1/k factor)
    const CE omega = log(exp(c(lambda) * X) - c(k * std::exp(lambda * c1))) / c(k) - c(lambda) * X;
    const CE d1 = omega.diff(CanonVar::X);
    const CE residual = d1.diff(CanonVar::X) + c(k) * d1 * d1 + c(lambda) * d1;
    return residual_of_profile("thm44-reference-form", residual, points);
}

} // namespace solutions
} // namespace fracburgers
