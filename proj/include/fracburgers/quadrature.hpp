#ifndef FRACBURGERS_QUADRATURE_HPP
#define FRACBURGERS_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace fracburgers {

// Product-integration parameters: `nodes` panels per unit interval, mesh
// graded toward both interval endpoints with exponent `grading`.
struct QuadratureSpec {
    int nodes = 256;
    double grading = 2.0;

    void validate() const
    {
        if (nodes < 16)
            throw std::invalid_argument("QuadratureSpec: nodes must be >= 16");
        if (!(grading >= 1.0 && grading <= 4.0))
            throw std::invalid_argument("QuadratureSpec: grading must lie in [1, 4]");
    }
};

using RealFn = std::function<double(double)>;

// (1/Gamma(a)) int_0^x (x-s)^(a-1) f(s) ds; the kernel is integrated exactly
// against a piecewise-linear interpolant of f on a graded mesh.
double rl_integral_num(const RealFn& f, double order, double x, const QuadratureSpec& spec = {});

// (1/Gamma(1-a)) d/dx int_0^x (x-s)^(-a) (f(s) - f(0)) ds for a in (0,1);
// the outer derivative is a 5-point central difference with step x*1e-3.
// Order 1 is rejected (use a classical difference instead).
double mrl_derivative_num(const RealFn& f, double order, double x, const QuadratureSpec& spec = {});

namespace detail {
// Same inner integral with an explicit panel count (the derivative stencil
// must reuse one mesh topology across its five evaluation points).
double rl_integral_fixed_panels(const RealFn& f, double order, double x, int panels, double grading);

// Order in (1, 2): second-derivative form of the modified derivative,
// used by the single-operator x-spatial variant.
double mrl_derivative2_num(const RealFn& f, double order, double x, const QuadratureSpec& spec);

// Classical 5-point first/second derivatives with step x*1e-3 (the order-1
// limits of the operators above).
double central_derivative1(const RealFn& f, double x);
double central_derivative2(const RealFn& f, double x);
}

} // namespace fracburgers

#endif
