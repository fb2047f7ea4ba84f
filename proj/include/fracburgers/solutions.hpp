#ifndef FRACBURGERS_SOLUTIONS_HPP
#define FRACBURGERS_SOLUTIONS_HPP

#include "fracburgers/coeff_family.hpp"
#include "fracburgers/expr.hpp"

#include <map>
#include <string>
#include <vector>

namespace fracburgers {
namespace solutions {

enum class SolutionId { thm41, thm42, thm43, thm44, thm45, subspace, constant };

std::string to_string(SolutionId id);
SolutionId solution_id_from_string(const std::string& name);

// Term coefficient(T) * x^{power*beta} / Gamma(1 + power*beta); solutions
// polynomial in the spatial variable carry this decomposition so that the
// raw power-rule spatial derivatives stay available even when the time
// dependence is not a power sum.
struct SpatialPower {
    int power = 0;
    CanonicalExpr coefficient;
};

struct SolutionFamily {
    SolutionId id = SolutionId::constant;
    std::map<std::string, double> params;
    CoeffFamily family;
    FracOrders orders;
    CanonicalExpr expr; // u as a function of (X, T)
    std::string reducedOde;
    std::vector<SpatialPower> spatialPowers; // empty when not polynomial in X
};

// Closed-form catalog.  Required params: thm41 {k1}; thm42 {k2, K, k3};
// thm43 {m, n, k4}; thm44 {r, c1, c2}; thm45 {c3, c4} (optional s, default
// Gamma(1+alpha)); constant {c}.  Unknown keys are rejected.  Time
// primitives are the classical primitives in T, matching the chain-rule
// reductions the closed forms come from.
SolutionFamily make_solution(SolutionId id, const std::map<std::string, double>& params,
                             const CoeffFamily& family, const FracOrders& orders);

struct GeneratorInvariants {
    int caseIndex = 0;
    CanonicalExpr similarityVariable;
    std::string solutionForm;
};

// The similarity variable and invariant combination for the five reduction
// cases (1: V1, 2: V4, 3: nV5+mV3, 4: rV5+V6, 5: sV3+V6).  The params map
// may supply m, n, r, s (defaults 1, 1, 1, Gamma(1+alpha)).
GeneratorInvariants invariants_for_generator(int i, const CoeffFamily& family, const FracOrders& orders,
                                             const std::map<std::string, double>& params = {});

struct ReducedOdeResidual {
    std::string odeId;
    std::vector<double> samplePoints;
    double maxAbs = 0.0;
};

// Substitutes the closed-form reduced profile into its scalar ODE using
// exact symbolic derivatives; points live in the reduced variable's domain.
ReducedOdeResidual reduced_ode_residual(const SolutionFamily& s, const std::vector<double>& points);

// Residual of the catalogued closed form of the fourth reduction (whose
// linear term lacks the 1/k factor) in the theorem-statement ODE; nonzero
// unless k = 1, reported as data.
ReducedOdeResidual thm44_reference_form_residual(const std::map<std::string, double>& params,
                                                 const CoeffFamily& family, const FracOrders& orders,
                                                 const std::vector<double>& points);

} // namespace solutions
} // namespace fracburgers

#endif
