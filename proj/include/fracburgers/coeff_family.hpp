#ifndef FRACBURGERS_COEFF_FAMILY_HPP
#define FRACBURGERS_COEFF_FAMILY_HPP

#include "fracburgers/expr.hpp"
#include "fracburgers/power_sum.hpp"

#include <stdexcept>

namespace fracburgers {

// c * T^p as an explicit coefficient/exponent pair (all the time-dependent
// quantities derived from a power-law family have this shape in T).
struct PowerOfT {
    double coef = 0.0;
    double exponent = 0.0;

    double eval(double T) const;
    CanonicalExpr expr() const;
};

// Power-law coefficient pair f(t) = cf t^nu, g(t) = k f(t).
struct CoeffFamily {
    double cf = 1.0;
    double nu = 0.0;
    double k = 1.0;

    void validate() const
    {
        if (!(cf > 0.0))
            throw std::invalid_argument("CoeffFamily: cf must be positive");
        if (!(nu >= 0.0))
            throw std::invalid_argument("CoeffFamily: nu must be nonnegative");
        if (k == 0.0)
            throw std::invalid_argument("CoeffFamily: k must be nonzero");
    }

    GenPowerSum f_powersum() const { return GenPowerSum::monomial(cf, 0.0, nu); }
    GenPowerSum g_powersum() const { return GenPowerSum::monomial(k * cf, 0.0, nu); }

    // Power-rule primitives in raw t (term-wise inverse of the power rule):
    // F_alpha with D^a F_alpha = f, G with D^a G = g, H with D^a H = f*G.
    GenPowerSum F_alpha_powersum(double alpha) const;
    GenPowerSum G_powersum(double alpha) const;
    GenPowerSum H_powersum(double alpha) const;

    // The same functions of t rewritten in T = t^a/Gamma(1+a).
    PowerOfT f_in_T(double alpha) const;
    PowerOfT g_in_T(double alpha) const;
    PowerOfT F_alpha_in_T(double alpha) const;
    PowerOfT G_in_T(double alpha) const;
    PowerOfT H_in_T(double alpha) const;

    // Classical primitives in the canonical time variable:
    // d/dT of the result equals f_in_T (resp. g_in_T).
    PowerOfT F_canonical_primitive(double alpha) const;
    PowerOfT G_canonical_primitive(double alpha) const;
};

// Gamma(1+a)^2/Gamma(1+2a): the constant relating x^{2b}/Gamma(1+2b) to X^2
// (equals 1/2 in the classical limit).
double squared_power_constant(double order);

// Rewrites c * t^p as a PowerOfT (p must be nonnegative).
PowerOfT t_power_in_T(double coef, double p, double alpha);

} // namespace fracburgers

#endif
