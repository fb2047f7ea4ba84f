#include "fracburgers/quadrature.hpp"

#include "fracburgers/special.hpp"

#include <cmath>
#include <vector>

namespace fracburgers {

namespace {

// Difference u^a - v^a for u > v >= 0 without cancellation when v/u -> 1.
double pow_diff(double u, double v, double a)
{
    if (v <= 0.0)
        return std::pow(u, a);
    return -std::pow(u, a) * std::expm1(a * std::log(v / u));
}

// Graded mesh on [0, x]: s in [0,1] -> x * s^g / (s^g + (1-s)^g), clustering
// panels at both endpoints.
void graded_mesh(double x, int panels, double g, std::vector<double>& mesh)
{
    mesh.resize(panels + 1);
    for (int i = 0; i <= panels; ++i) {
        const double s = static_cast<double>(i) / panels;
        const double sg = std::pow(s, g);
        const double cg = std::pow(1.0 - s, g);
        mesh[i] = x * sg / (sg + cg);
    }
    mesh[0] = 0.0;
    mesh[panels] = x;
}

int panel_count(double x, int nodesPerUnit)
{
    const double n = std::ceil(nodesPerUnit * x);
    return n < 16.0 ? 16 : static_cast<int>(n);
}

} // namespace

namespace detail {

double rl_integral_fixed_panels(const RealFn& f, double order, double x, int panels, double grading)
{
    const double a = order;
    std::vector<double> mesh;
    graded_mesh(x, panels, grading, mesh);

    double sum = 0.0;
    double fLeft = f(mesh[0]);
    for (int i = 0; i < panels; ++i) {
        const double lo = mesh[i], hi = mesh[i + 1];
        const double fRight = f(hi);
        const double da = x - lo, db = x - hi;
        // m0 = int (x-s)^(a-1) ds, m1 = int (s-lo)(x-s)^(a-1) ds over the panel
        const double m0 = pow_diff(da, db, a) / a;
        const double m1 = da * m0 - pow_diff(da, db, a + 1.0) / (a + 1.0);
        const double slope = (fRight - fLeft) / (hi - lo);
        sum += fLeft * m0 + slope * m1;
        fLeft = fRight;
    }
    return sum / gamma_eval(a);
}

double central_derivative1(const RealFn& f, double x)
{
    const double h = x * 1e-3;
    return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

double central_derivative2(const RealFn& f, double x)
{
    const double h = x * 1e-3;
    return (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2.0 * h))
           / (12.0 * h * h);
}

double mrl_derivative2_num(const RealFn& f, double order, double x, const QuadratureSpec& spec)
{
    spec.validate();
    if (!(order > 1.0 && order < 2.0))
        throw std::invalid_argument("mrl_derivative2_num: order must lie in (1, 2)");
    if (!(x > 0.0))
        throw std::invalid_argument("mrl_derivative2_num: x must be positive");
    const double f0 = f(0.0);
    auto shifted = [&](double s) { return f(s) - f0; };
    const int panels = panel_count(x, spec.nodes);
    auto inner = [&](double y) {
        return rl_integral_fixed_panels(shifted, 2.0 - order, y, panels, spec.grading);
    };
    return central_derivative2(inner, x);
}

} // namespace detail

double rl_integral_num(const RealFn& f, double order, double x, const QuadratureSpec& spec)
{
    spec.validate();
    if (!(order > 0.0 && order <= 1.0))
        throw std::invalid_argument("rl_integral_num: order must lie in (0, 1]");
    if (!(x > 0.0))
        throw std::invalid_argument("rl_integral_num: x must be positive");
    return detail::rl_integral_fixed_panels(f, order, x, panel_count(x, spec.nodes), spec.grading);
}

double mrl_derivative_num(const RealFn& f, double order, double x, const QuadratureSpec& spec)
{
    spec.validate();
    if (order == 1.0)
        throw std::invalid_argument("mrl_derivative_num: order 1 rejected; use a classical difference");
    if (!(order > 0.0 && order < 1.0))
        throw std::invalid_argument("mrl_derivative_num: order must lie in (0, 1)");
    if (!(x > 0.0))
        throw std::invalid_argument("mrl_derivative_num: x must be positive");

    const double f0 = f(0.0);
    auto shifted = [&](double s) { return f(s) - f0; };
    const int panels = panel_count(x, spec.nodes);
    auto inner = [&](double y) {
        return detail::rl_integral_fixed_panels(shifted, 1.0 - order, y, panels, spec.grading);
    };
    return detail::central_derivative1(inner, x);
}

} // namespace fracburgers
