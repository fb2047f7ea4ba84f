#include "fracburgers/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fracburgers {

namespace {

double g_gamma_fault = 0.0;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtTwoPi = 2.506628274631000502415765284811045253;

double lanczos_gamma(double z)
{
    // Valid for z >= 0.5.
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        a += kLanczos[i] / (z - 1.0 + i);
    const double t = z - 1.0 + kLanczosG + 0.5;
    return kSqrtTwoPi * std::pow(t, z - 0.5) * std::exp(-t) * a;
}

} // namespace

double gamma_signed(double z)
{
    if (z >= 0.5)
        return lanczos_gamma(z) * (1.0 + g_gamma_fault);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    const double s = std::sin(kPi * z);
    if (s == 0.0)
        throw std::domain_error("gamma: pole at non-positive integer");
    return kPi / (s * lanczos_gamma(1.0 - z)) * (1.0 + g_gamma_fault);
}

double gamma_eval(double z)
{
    if (!(z > 0.0))
        throw std::domain_error("gamma: argument must be positive");
    return gamma_signed(z);
}

double reciprocal_gamma(double z)
{
    if (z >= 0.5)
        return 1.0 / (lanczos_gamma(z) * (1.0 + g_gamma_fault));
    const double s = std::sin(kPi * z);
    if (s == 0.0)
        return 0.0;
    return s * lanczos_gamma(1.0 - z) / kPi / (1.0 + g_gamma_fault);
}

double erf_eval(double z)
{
    const double az = std::fabs(z);
    if (az == 0.0)
        return 0.0;
    if (az > 6.0)
        return z > 0.0 ? 1.0 : -1.0;

    double result;
    if (az <= 3.0) {
        // erf(z) = 2/sqrt(pi) * exp(-z^2) * sum_{n>=0} 2^n z^(2n+1) / (1*3*...*(2n+1))
        const double z2 = az * az;
        double term = az;
        double sum = az;
        for (int n = 1; n < 200; ++n) {
            term *= 2.0 * z2 / (2.0 * n + 1.0);
            sum += term;
            if (term < 1e-17 * sum)
                break;
        }
        result = 2.0 / std::sqrt(kPi) * std::exp(-z2) * sum;
    } else {
        // erfc(z) = exp(-z^2)/sqrt(pi) * 1/(z + 1/2/(z + 2/2/(z + 3/2/(z + ...))))
        // evaluated bottom-up with a fixed depth; converges fast for z > 3.
        double cf = 0.0;
        for (int n = 60; n >= 1; --n)
            cf = 0.5 * n / (az + cf);
        const double erfc = std::exp(-az * az) / std::sqrt(kPi) / (az + cf);
        result = 1.0 - erfc;
    }
    return z > 0.0 ? result : -result;
}

namespace testhook {
void set_gamma_fault(double rel) { g_gamma_fault = rel; }
}

} // namespace fracburgers
