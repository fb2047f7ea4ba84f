#ifndef FRACBURGERS_SPECIAL_HPP
#define FRACBURGERS_SPECIAL_HPP

namespace fracburgers {

// Gamma function for z > 0 (Lanczos, g = 7, 9 coefficients).
// Relative error <= 1e-12 on (0, 30]. Throws std::domain_error for z <= 0.
double gamma_eval(double z);

// Gamma on the full real axis except the poles 0, -1, -2, ...
// (reflection formula for z < 0.5).
double gamma_signed(double z);

// 1/Gamma(z); returns exactly 0 at the poles z = 0, -1, -2, ...
double reciprocal_gamma(double z);

// Error function, |absolute error| <= 1e-12.  Power series for |z| <= 3,
// continued fraction for the complement beyond.
double erf_eval(double z);

namespace testhook {
// Multiplies every gamma_eval result by (1 + rel).  Used by the CLI
// self-test to demonstrate fault detection; keep at 0 otherwise.
void set_gamma_fault(double rel);
}

} // namespace fracburgers

#endif
