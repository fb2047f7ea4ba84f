#ifndef FRACBURGERS_SUBSPACE_HPP
#define FRACBURGERS_SUBSPACE_HPP

#include "fracburgers/coeff_family.hpp"
#include "fracburgers/quadrature.hpp"
#include "fracburgers/solutions.hpp"

#include <vector>

namespace fracburgers {
namespace subspace {

// Decomposition of F[u] = f u_x^(2b) + g (u_x^b)^2 over the basis
// {1, x^b/Gamma(1+b), x^(2b)/Gamma(1+2b)} for the quadratic ansatz.
// The components are the exact decomposition (power sums in t); the
// remainder is the x^(2b) term the catalogued coefficient system drops by
// identifying x^(2b)/Gamma(1+b)^2 with the third basis element:
//   g c^2 (1/Gamma(1+b)^2 - 1/Gamma(1+2b)) x^(2b).
struct SpanWitness {
    GenPowerSum constantComponent;
    GenPowerSum linearComponent;
    GenPowerSum quadraticComponent;
    GenPowerSum claimedQuadratic; // g c^2, the coefficient the quadratures integrate
    GenPowerSum offBasisRemainder;
};

SpanWitness check_w3_invariance(double aCoef, double bCoef, double cCoef, const CoeffFamily& family,
                                const FracOrders& orders);

// Quadrature solutions of the coefficient system
//   D^a c = g c^2,  D^a b = 2 g b c,  D^a a0 = f c + g b^2
// under chain-rule time semantics: c = -1/(G+s1), b = B0/(G+s1)^2,
// a0 = s3 + primitive of (f c + g b^2), with G the classical primitive of
// g in T and zero primitives at T = 0.
struct SubspaceSolution {
    double s1 = 1.0, B0 = 0.0, s3 = 0.0;
    CoeffFamily family;
    FracOrders orders;
    CanonicalExpr a, b, c; // functions of T
};

SubspaceSolution solve_coefficient_system(const CoeffFamily& family, const FracOrders& orders, double s1,
                                          double B0, double s3);

struct OdeValidation {
    double chainRuleMaxAbs = 0.0; // symbolic d/dT versus the right-hand sides
    double numericMaxAbs = 0.0;   // quadrature MRL derivative versus the right-hand sides
};

// Validates the three coefficient ODEs at the given raw times, both under
// chain-rule semantics and with the numerical operator.
OdeValidation validate_coefficient_system(const SubspaceSolution& s, const std::vector<double>& times,
                                          const QuadratureSpec& spec = {});

// u = a(T) + b(T) x^b/Gamma(1+b) + c(T) x^(2b)/Gamma(1+2b) as a catalog
// solution (id "subspace") with its spatial power structure attached.
solutions::SolutionFamily assemble_subspace_solution(const SubspaceSolution& s);

} // namespace subspace
} // namespace fracburgers

#endif
