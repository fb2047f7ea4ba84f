#include "fracburgers/subspace.hpp"

#include "fracburgers/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fracburgers {
namespace subspace {

namespace {
using CE = CanonicalExpr;
CE c(double v) { return CE::constant(v); }
} // namespace

SpanWitness check_w3_invariance(double aCoef, double bCoef, double cCoef, const CoeffFamily& family,
                                const FracOrders& orders)
{
    family.validate();
    orders.validate();
    (void)aCoef; // F[u] does not involve the constant part of u
    const double b = orders.beta;
    const double gb = gamma_eval(1.0 + b);
    const double g2b = gamma_eval(1.0 + 2.0 * b);

    const GenPowerSum f = family.f_powersum();
    const GenPowerSum g = family.g_powersum();

    SpanWitness w;
    // u_x^b = bCoef + cCoef x^b/Gamma(1+b), u_x^(2b) = cCoef
    w.constantComponent = f * cCoef + g * (bCoef * bCoef);
    w.linearComponent = 2.0 * bCoef * cCoef * g;
    // exact x^(2b) part: g c^2 x^(2b)/Gamma(1+b)^2 = [g c^2 Gamma(1+2b)/Gamma(1+b)^2] * basis
    w.quadraticComponent = (cCoef * cCoef * g2b / (gb * gb)) * g;
    w.claimedQuadratic = (cCoef * cCoef) * g;
    w.offBasisRemainder =
        (cCoef * cCoef * (1.0 / (gb * gb) - 1.0 / g2b)) * (g * GenPowerSum::monomial(1.0, 2.0 * b, 0.0));
    return w;
}

SubspaceSolution solve_coefficient_system(const CoeffFamily& family, const FracOrders& orders, double s1,
                                          double B0, double s3)
{
    family.validate();
    orders.validate();
    if (!(s1 > 0.0))
        throw std::invalid_argument("solve_coefficient_system: s1 must be positive so G + s1 > 0");

    const double a = orders.alpha;
    const double k = family.k;
    const PowerOfT Gc = family.G_canonical_primitive(a);

    SubspaceSolution s;
    s.s1 = s1;
    s.B0 = B0;
    s.s3 = s3;
    s.family = family;
    s.orders = orders;

    const CE Gs = Gc.expr() + c(s1);
    s.c = c(-1.0) / Gs;
    s.b = c(B0) / (Gs * Gs);
    // a0 = s3 - (1/k)[ln(G+s1) - ln(s1)] + (B0^2/3)[s1^-3 - (G+s1)^-3]
    s.a = c(s3) - (log(Gs) - c(std::log(s1))) / c(k)
          + c(B0 * B0 / 3.0) * (c(1.0 / (s1 * s1 * s1)) - pow(Gs, -3.0));
    return s;
}

OdeValidation validate_coefficient_system(const SubspaceSolution& s, const std::vector<double>& times,
                                          const QuadratureSpec& spec)
{
    if (times.empty())
        throw std::invalid_argument("validate_coefficient_system: times must be nonempty");
    const double alpha = s.orders.alpha;
    const double ga = gamma_eval(1.0 + alpha);
    const PowerOfT fT = s.family.f_in_T(alpha);
    const PowerOfT gT = s.family.g_in_T(alpha);

    auto rhs_c = [&](double T) { return gT.eval(T) * s.c.eval(0.0, T) * s.c.eval(0.0, T); };
    auto rhs_b = [&](double T) { return 2.0 * gT.eval(T) * s.b.eval(0.0, T) * s.c.eval(0.0, T); };
    auto rhs_a = [&](double T) {
        const double bb = s.b.eval(0.0, T);
        return fT.eval(T) * s.c.eval(0.0, T) + gT.eval(T) * bb * bb;
    };

    OdeValidation v;
    const CE dc = s.c.diff(CanonVar::T);
    const CE dbb = s.b.diff(CanonVar::T);
    const CE da = s.a.diff(CanonVar::T);
    for (double t : times) {
        const double T = std::pow(t, alpha) / ga;
        v.chainRuleMaxAbs = std::max(v.chainRuleMaxAbs, std::fabs(dc.eval(0.0, T) - rhs_c(T)));
        v.chainRuleMaxAbs = std::max(v.chainRuleMaxAbs, std::fabs(dbb.eval(0.0, T) - rhs_b(T)));
        v.chainRuleMaxAbs = std::max(v.chainRuleMaxAbs, std::fabs(da.eval(0.0, T) - rhs_a(T)));
    }

    auto as_time_fn = [&](const CE& h) {
        return [&h, ga, alpha](double t) { return h.eval(0.0, std::pow(t, alpha) / ga); };
    };
    for (double t : times) {
        const double T = std::pow(t, alpha) / ga;
        double numC, numB, numA;
        if (alpha == 1.0) {
            numC = detail::central_derivative1(as_time_fn(s.c), t);
            numB = detail::central_derivative1(as_time_fn(s.b), t);
            numA = detail::central_derivative1(as_time_fn(s.a), t);
        } else {
            numC = mrl_derivative_num(as_time_fn(s.c), alpha, t, spec);
            numB = mrl_derivative_num(as_time_fn(s.b), alpha, t, spec);
            numA = mrl_derivative_num(as_time_fn(s.a), alpha, t, spec);
        }
        v.numericMaxAbs = std::max(v.numericMaxAbs, std::fabs(numC - rhs_c(T)));
        v.numericMaxAbs = std::max(v.numericMaxAbs, std::fabs(numB - rhs_b(T)));
        v.numericMaxAbs = std::max(v.numericMaxAbs, std::fabs(numA - rhs_a(T)));
    }
    return v;
}

solutions::SolutionFamily assemble_subspace_solution(const SubspaceSolution& s)
{
    const double db = squared_power_constant(s.orders.beta);
    const CE X = CE::X();

    solutions::SolutionFamily out;
    out.id = solutions::SolutionId::subspace;
    out.params = {{"s1", s.s1}, {"B0", s.B0}, {"s3", s.s3}};
    out.family = s.family;
    out.orders = s.orders;
    out.expr = s.a + s.b * X + s.c * c(db) * X * X;
    out.reducedOde = "D^a c = g c^2, D^a b = 2 g b c, D^a a0 = f c + g b^2";
    out.spatialPowers.push_back({0, s.a});
    out.spatialPowers.push_back({1, s.b});
    out.spatialPowers.push_back({2, s.c});
    return out;
}

} // namespace subspace
} // namespace fracburgers
