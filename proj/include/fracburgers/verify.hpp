#ifndef FRACBURGERS_VERIFY_HPP
#define FRACBURGERS_VERIFY_HPP

#include "fracburgers/quadrature.hpp"
#include "fracburgers/solutions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fracburgers {
namespace verify {

enum class SemanticsMode { canonical, powerRule, numericMRL };

std::string to_string(SemanticsMode m);
SemanticsMode mode_from_string(const std::string& name);

struct ModeIncompatible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    double x0 = 0.5, x1 = 2.0;
    double t0 = 0.5, t1 = 2.0;
    int nx = 16, nt = 16;

    void validate() const
    {
        if (!(x0 > 0.0 && t0 > 0.0))
            throw std::invalid_argument("GridSpec: grids exclude x = 0 and t = 0");
        if (!(x1 > x0 && t1 > t0))
            throw std::invalid_argument("GridSpec: ranges must have positive length");
        if (nx < 8 || nt < 8)
            throw std::invalid_argument("GridSpec: nx and nt must be >= 8");
    }

    double x_at(int i) const { return x0 + (x1 - x0) * i / (nx - 1); }
    double t_at(int j) const { return t0 + (t1 - t0) * j / (nt - 1); }
};

struct ResidualReport {
    std::string solutionId;
    SemanticsMode mode = SemanticsMode::canonical;
    GridSpec grid;
    double maxAbs = 0.0;
    double l2 = 0.0; // Euclidean norm over the grid
    double worstX = 0.0, worstT = 0.0;
    bool composedSecondDerivative = true; // numericMRL: D^b applied twice vs single D^(2b)
    std::vector<double> perPoint;         // row-major over t-rows, optional
};

struct ResidualOptions {
    QuadratureSpec quadrature{};
    bool composedSecondDerivative = true;
    bool keepPerPoint = false;
};

// Residual of u_t^(a) - f(t) u_x^(2b) - g(t) (u_x^(b))^2 on the grid under
// the requested semantics.  Throws ModeIncompatible when the solution does
// not support the mode (non-power-sum expression in powerRule mode,
// undefined evaluations in numericMRL mode).
ResidualReport pde_residual(const solutions::SolutionFamily& s, SemanticsMode mode, const GridSpec& grid,
                            const ResidualOptions& options = {});

// Canonical-semantics residual of an arbitrary expression u(X,T) under the
// given family (used for transformed solutions).
ResidualReport expr_canonical_residual(const CanonicalExpr& u, const CoeffFamily& family,
                                       const FracOrders& orders, const GridSpec& grid);

struct ModeResult {
    SemanticsMode mode = SemanticsMode::canonical;
    double maxAbs = 0.0;
    bool spatialOnly = false; // powerRule applied to the spatial structure only
};

struct DiscrepancyReport {
    std::string solutionId;
    GridSpec grid;
    std::vector<ModeResult> modes;
    bool hasSpatialRatio = false;
    // power-rule second spatial derivative over the canonical one:
    // Gamma(1+2b)/(2 Gamma(1+b)^2) on quadratic-in-X solutions.
    double ratioMin = 0.0, ratioMedian = 0.0, ratioMax = 0.0;
    double threshold = 0.0;
    bool consistent = false;
};

// Runs every applicable mode, compares them, and reports the pairwise
// spatial-second-derivative ratio for solutions with polynomial spatial
// structure.  "Consistent" means all applicable full modes agree within
// 10x the numeric tolerance and the spatial ratio (when defined) is 1
// within the same threshold.
DiscrepancyReport semantics_discrepancy(const solutions::SolutionFamily& s, const GridSpec& grid,
                                        const ResidualOptions& options = {}, double numericTol = 1e-3);

} // namespace verify
} // namespace fracburgers

#endif
