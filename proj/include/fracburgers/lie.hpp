#ifndef FRACBURGERS_LIE_HPP
#define FRACBURGERS_LIE_HPP

#include "fracburgers/coeff_family.hpp"
#include "fracburgers/expr.hpp"
#include "fracburgers/power_sum.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracburgers {
namespace lie {

// Infinitesimal generator xi d^b/dx^b + tau d^a/dt^a + eta d/du, written in
// canonical variables where the fractional directions act as d/dX and d/dT.
struct VectorField {
    CanonicalExpr xi, tau, eta;
};

// The six standard generators of the potential Burgers symmetry algebra for
// a power-law coefficient family; the time primitives G, F_alpha, H are the
// power-rule primitives of the family.
std::array<VectorField, 6> standard_generators(const CoeffFamily& family, const FracOrders& orders);

VectorField lie_bracket(const VectorField& A, const VectorField& B);

// Reference commutator table (the catalogued coefficients, rows [Vi,Vj] as
// combinations of V1..V6).  Several entries are known to disagree with the
// directly computed table; the audit reports them, never reconciles them.
const std::array<std::array<std::array<double, 6>, 6>, 6>& reference_commutator_table();

struct BracketEntry {
    int i = 0, j = 0;                 // 1-based
    std::array<double, 6> computed{}; // decomposition of [Vi,Vj] in span{V1..V6}
    std::array<double, 6> reference{};
    double fitResidual = 0.0;
    bool match = false;
};

struct BracketAudit {
    FracOrders orders;
    std::vector<BracketEntry> entries; // 36, row-major
    double maxFitResidual = 0.0;
    double maxAntisymmetryDefect = 0.0;
    double jacobiMaxResidual = 0.0;
    std::vector<std::pair<int, int>> mismatches;
};

// Decomposes every pairwise bracket in span{V1..V6} by least squares over 12
// generic sample points (fit residual gate 1e-9) and compares against the
// reference table.  Intended for the f = g = 1 generators.
BracketAudit bracket_table_audit(const std::array<VectorField, 6>& gens, const FracOrders& orders);

struct InfinitesimalFamily {
    double a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0, a6 = 0;
};

struct DeterminingReport {
    struct Entry {
        std::string id;
        double maxAbs = 0.0;
    };
    std::vector<Entry> equations; // seven entries
    // The two scaling-balance equations with the time derivative applied to
    // each product factor separately (the identity the derivation used in
    // grouped form is exact; the separated form quantifies the product-rule
    // defect and is reported, not asserted).
    double separatedScalingG = 0.0;
    double separatedScalingF = 0.0;
};

struct SamplePoint {
    double x = 1.0, t = 1.0, u = 0.0;
};

// Evaluates the seven determining equations for the six-parameter
// infinitesimal family under power-rule semantics at the given points.
DeterminingReport check_determining(const InfinitesimalFamily& fam, const CoeffFamily& coeffs,
                                    const FracOrders& orders, const std::vector<SamplePoint>& points);

// Exact one-parameter flow map (X,T,u) -> (xMap, tMap, u + uShift).
struct FlowMap {
    int index = 0;
    double epsilon = 0.0;
    CanonicalExpr xMap, tMap, uShift;

    std::array<double, 3> apply(double X, double T, double u) const
    {
        const std::array<double, 3> out{xMap.eval(X, T), tMap.eval(X, T), u + uShift.eval(X, T)};
        if (!(std::isfinite(out[0]) && std::isfinite(out[1]) && std::isfinite(out[2])))
            throw std::domain_error("flow map undefined at this point");
        return out;
    }
};

// Integrates the flow ODEs of generator i in closed form.
FlowMap exponentiate_flow(int i, double epsilon, const CoeffFamily& family, const FracOrders& orders);

// The catalogued exponentiated maps, stored verbatim for comparison.
FlowMap reference_flow(int i, double epsilon, const CoeffFamily& family, const FracOrders& orders);

struct FlowComparison {
    int index = 0;
    double epsilon = 0.0;
    double maxDevX = 0.0, maxDevT = 0.0, maxDevU = 0.0;
};

// Deviation of the integrated flow from the catalogued map over sample
// points in (X,T) in [lo,hi]^2 with u = 0.
FlowComparison compare_flow_with_reference(int i, double epsilon, const CoeffFamily& family,
                                           const FracOrders& orders, double lo = 0.5, double hi = 2.0,
                                           int samplesPerAxis = 5);

// Pushforward of a solution u(X,T) along the flow: the graph of the result
// is the flow image of the graph of u.
CanonicalExpr transform_solution(const CanonicalExpr& u, const FlowMap& flow, const CoeffFamily& family,
                                 const FracOrders& orders);

// The catalogued transformed-solution formulas (inverse-parameter
// convention): u_i = u(reference map args) - reference shift.
CanonicalExpr reference_transform(const CanonicalExpr& u, int i, double epsilon,
                                  const CoeffFamily& family, const FracOrders& orders);

} // namespace lie
} // namespace fracburgers

#endif
