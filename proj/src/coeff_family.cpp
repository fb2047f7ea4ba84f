#include "fracburgers/coeff_family.hpp"

#include "fracburgers/special.hpp"

#include <cmath>

namespace fracburgers {

double PowerOfT::eval(double T) const
{
    if (exponent == 0.0)
        return coef;
    return coef * std::pow(T, exponent);
}

CanonicalExpr PowerOfT::expr() const
{
    if (coef == 0.0)
        return CanonicalExpr::constant(0.0);
    if (exponent == 0.0)
        return CanonicalExpr::constant(coef);
    return CanonicalExpr::constant(coef) * pow(CanonicalExpr::T(), exponent);
}

double squared_power_constant(double order)
{
    const double g = gamma_eval(1.0 + order);
    return g * g / gamma_eval(1.0 + 2.0 * order);
}

PowerOfT t_power_in_T(double coef, double p, double alpha)
{
    // t^p = (Gamma(1+a) T)^(p/a)
    const double e = p / alpha;
    return {coef * std::pow(gamma_eval(1.0 + alpha), e), e};
}

GenPowerSum CoeffFamily::F_alpha_powersum(double alpha) const
{
    validate();
    return frac_primitive_power(f_powersum(), alpha, Var::t);
}

GenPowerSum CoeffFamily::G_powersum(double alpha) const
{
    validate();
    return frac_primitive_power(g_powersum(), alpha, Var::t);
}

GenPowerSum CoeffFamily::H_powersum(double alpha) const
{
    validate();
    return frac_primitive_power(f_powersum() * G_powersum(alpha), alpha, Var::t);
}

PowerOfT CoeffFamily::f_in_T(double alpha) const
{
    validate();
    return t_power_in_T(cf, nu, alpha);
}

PowerOfT CoeffFamily::g_in_T(double alpha) const
{
    validate();
    return t_power_in_T(k * cf, nu, alpha);
}

namespace {
PowerOfT powersum_in_T(const GenPowerSum& p, double alpha)
{
    if (p.empty())
        return {0.0, 0.0};
    const auto& t = p.terms()[0];
    return t_power_in_T(t.coef, t.tExp, alpha);
}
}

PowerOfT CoeffFamily::F_alpha_in_T(double alpha) const { return powersum_in_T(F_alpha_powersum(alpha), alpha); }
PowerOfT CoeffFamily::G_in_T(double alpha) const { return powersum_in_T(G_powersum(alpha), alpha); }
PowerOfT CoeffFamily::H_in_T(double alpha) const { return powersum_in_T(H_powersum(alpha), alpha); }

PowerOfT CoeffFamily::F_canonical_primitive(double alpha) const
{
    const PowerOfT fT = f_in_T(alpha);
    return {fT.coef / (fT.exponent + 1.0), fT.exponent + 1.0};
}

PowerOfT CoeffFamily::G_canonical_primitive(double alpha) const
{
    const PowerOfT gT = g_in_T(alpha);
    return {gT.coef / (gT.exponent + 1.0), gT.exponent + 1.0};
}

} // namespace fracburgers
