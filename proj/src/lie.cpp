#include "fracburgers/lie.hpp"

#include "fracburgers/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fracburgers {
namespace lie {

namespace {

using CE = CanonicalExpr;

CE c(double v) { return CE::constant(v); }

// Fixed generic sample points for span decompositions.
constexpr int kDecompPoints = 12;
constexpr double kDecompXT[kDecompPoints][2] = {
    {0.7, 0.9},  {1.3, 0.6},  {0.9, 1.7},  {1.8, 1.1}, {0.6, 0.7},   {1.1, 1.4},
    {1.6, 0.8},  {0.8, 1.2},  {1.4, 1.6},  {1.2, 0.75}, {0.95, 1.05}, {1.7, 1.9},
};

// Solves the 6x6 normal equations by Gaussian elimination with partial
// pivoting; the design matrix rows are the generator components at the
// sample points.
std::array<double, 6> least_squares_decompose(const std::array<VectorField, 6>& gens,
                                              const VectorField& target, double* fitResidual)
{
    constexpr int rows = kDecompPoints * 3;
    double A[rows][6];
    double b[rows];
    for (int p = 0; p < kDecompPoints; ++p) {
        const double X = kDecompXT[p][0], T = kDecompXT[p][1];
        for (int j = 0; j < 6; ++j) {
            A[3 * p + 0][j] = gens[j].xi.eval(X, T);
            A[3 * p + 1][j] = gens[j].tau.eval(X, T);
            A[3 * p + 2][j] = gens[j].eta.eval(X, T);
        }
        b[3 * p + 0] = target.xi.eval(X, T);
        b[3 * p + 1] = target.tau.eval(X, T);
        b[3 * p + 2] = target.eta.eval(X, T);
    }

    double N[6][7];
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            double s = 0.0;
            for (int r = 0; r < rows; ++r)
                s += A[r][i] * A[r][j];
            N[i][j] = s;
        }
        double s = 0.0;
        for (int r = 0; r < rows; ++r)
            s += A[r][i] * b[r];
        N[i][6] = s;
    }

    for (int col = 0; col < 6; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 6; ++r)
            if (std::fabs(N[r][col]) > std::fabs(N[pivot][col]))
                pivot = r;
        if (std::fabs(N[pivot][col]) < 1e-14)
            throw std::runtime_error("bracket decomposition: singular normal equations");
        if (pivot != col)
            for (int k = 0; k <= 6; ++k)
                std::swap(N[pivot][k], N[col][k]);
        for (int r = 0; r < 6; ++r) {
            if (r == col)
                continue;
            const double factor = N[r][col] / N[col][col];
            for (int k = col; k <= 6; ++k)
                N[r][k] -= factor * N[col][k];
        }
    }
    std::array<double, 6> coeffs{};
    for (int i = 0; i < 6; ++i)
        coeffs[i] = N[i][6] / N[i][i];

    double res = 0.0;
    for (int r = 0; r < rows; ++r) {
        double v = -b[r];
        for (int j = 0; j < 6; ++j)
            v += A[r][j] * coeffs[j];
        res = std::max(res, std::fabs(v));
    }
    if (fitResidual)
        *fitResidual = res;
    return coeffs;
}

} // namespace

std::array<VectorField, 6> standard_generators(const CoeffFamily& family, const FracOrders& orders)
{
    family.validate();
    orders.validate();
    const double a = orders.alpha, b = orders.beta;
    const double db = squared_power_constant(b);

    const CE X = CE::X();
    const CE Ghat = family.G_in_T(a).expr();
    const CE Fa = family.F_alpha_in_T(a).expr();
    const CE H = family.H_in_T(a).expr();
    const CE f = family.f_in_T(a).expr();

    std::array<VectorField, 6> V;
    V[0] = {c(-2) * Ghat, c(0), X};
    V[1] = {c(-2) * Ghat * X, c(-4) * H / f, Fa + c(db) * X * X};
    V[2] = {c(0), c(0), c(1)};
    V[3] = {X, c(2) * Fa / f, c(0)};
    V[4] = {c(1), c(0), c(0)};
    V[5] = {c(0), c(1) / f, c(0)};
    return V;
}

VectorField lie_bracket(const VectorField& A, const VectorField& B)
{
    // Coefficients depend on (X,T) only, so A acts as xi_A d/dX + tau_A d/dT.
    auto act = [](const VectorField& V, const CanonicalExpr& h) {
        return V.xi * h.diff(CanonVar::X) + V.tau * h.diff(CanonVar::T);
    };
    return {act(A, B.xi) - act(B, A.xi), act(A, B.tau) - act(B, A.tau), act(A, B.eta) - act(B, A.eta)};
}

const std::array<std::array<std::array<double, 6>, 6>, 6>& reference_commutator_table()
{
    auto combo = [](int idx, double coef, int idx2 = -1, double coef2 = 0.0) {
        std::array<double, 6> v{};
        if (idx >= 0)
            v[idx] = coef;
        if (idx2 >= 0)
            v[idx2] = coef2;
        return v;
    };
    static const std::array<std::array<std::array<double, 6>, 6>, 6> table = [&] {
        std::array<std::array<std::array<double, 6>, 6>, 6> t{};
        // row V1
        t[0][3] = combo(0, 1.0);             // V1
        t[0][4] = combo(2, -1.0);            // -V3
        t[0][5] = combo(4, 2.0);             // 2V5
        // row V2
        t[1][3] = combo(1, 2.0);             // 2V2
        t[1][4] = combo(0, 2.0);             // 2V1
        t[1][5] = combo(3, 4.0, 2, -2.0);    // 4V4 - 2V3
        // row V3: zeros
        // row V4
        t[3][0] = combo(0, -1.0);            // -V1
        t[3][1] = combo(1, -2.0);            // -2V2
        t[3][4] = combo(0, 1.0);             // V1
        t[3][5] = combo(5, 2.0);             // 2V6
        // row V5
        t[4][0] = combo(2, 1.0);             // V3
        t[4][1] = combo(0, -2.0);            // -2V1
        t[4][3] = combo(4, -1.0);            // -V5
        // row V6
        t[5][0] = combo(4, -2.0);            // -2V5
        t[5][1] = combo(2, 2.0, 3, -4.0);    // 2V3 - 4V4
        t[5][3] = combo(5, -2.0);            // -2V6
        return t;
    }();
    return table;
}

BracketAudit bracket_table_audit(const std::array<VectorField, 6>& gens, const FracOrders& orders)
{
    BracketAudit audit;
    audit.orders = orders;
    const auto& ref = reference_commutator_table();

    std::array<std::array<std::array<double, 6>, 6>, 6> computed{};
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            const VectorField br = lie_bracket(gens[i], gens[j]);
            BracketEntry entry;
            entry.i = i + 1;
            entry.j = j + 1;
            entry.computed = least_squares_decompose(gens, br, &entry.fitResidual);
            if (entry.fitResidual > 1e-9)
                throw std::runtime_error("bracket_table_audit: bracket not in span (fit residual "
                                         + std::to_string(entry.fitResidual) + ")");
            entry.reference = ref[i][j];
            entry.match = true;
            for (int k = 0; k < 6; ++k)
                if (std::fabs(entry.computed[k] - entry.reference[k]) > 1e-9)
                    entry.match = false;
            computed[i][j] = entry.computed;
            audit.maxFitResidual = std::max(audit.maxFitResidual, entry.fitResidual);
            if (!entry.match)
                audit.mismatches.emplace_back(i + 1, j + 1);
            audit.entries.push_back(entry);
        }
    }

    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int k = 0; k < 6; ++k)
                audit.maxAntisymmetryDefect =
                    std::max(audit.maxAntisymmetryDefect, std::fabs(computed[i][j][k] + computed[j][i][k]));

    // Jacobi identity sampled at 50 points.
    double jac = 0.0;
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            for (int k = j + 1; k < 6; ++k) {
                const VectorField s1 = lie_bracket(gens[i], lie_bracket(gens[j], gens[k]));
                const VectorField s2 = lie_bracket(gens[j], lie_bracket(gens[k], gens[i]));
                const VectorField s3 = lie_bracket(gens[k], lie_bracket(gens[i], gens[j]));
                for (int p = 0; p < 50; ++p) {
                    const double X = 0.5 + 0.03 * p;
                    const double T = 2.0 - 0.028 * p;
                    jac = std::max(jac, std::fabs(s1.xi.eval(X, T) + s2.xi.eval(X, T) + s3.xi.eval(X, T)));
                    jac = std::max(jac, std::fabs(s1.tau.eval(X, T) + s2.tau.eval(X, T) + s3.tau.eval(X, T)));
                    jac = std::max(jac, std::fabs(s1.eta.eval(X, T) + s2.eta.eval(X, T) + s3.eta.eval(X, T)));
                }
            }
        }
    }
    audit.jacobiMaxResidual = jac;
    return audit;
}

DeterminingReport check_determining(const InfinitesimalFamily& fam, const CoeffFamily& coeffs,
                                    const FracOrders& orders, const std::vector<SamplePoint>& points)
{
    coeffs.validate();
    orders.validate();
    if (points.empty())
        throw std::invalid_argument("check_determining: points must be nonempty");
    const double a = orders.alpha, b = orders.beta;

    const GenPowerSum Xh = GenPowerSum::monomial(1.0 / gamma_eval(1.0 + b), b, 0.0);
    const GenPowerSum Xh2 = GenPowerSum::monomial(1.0 / gamma_eval(1.0 + 2.0 * b), 2.0 * b, 0.0);
    const GenPowerSum f = coeffs.f_powersum();
    const GenPowerSum g = coeffs.g_powersum();
    const GenPowerSum G = coeffs.G_powersum(a);
    const GenPowerSum Fa = coeffs.F_alpha_powersum(a);
    const GenPowerSum H = coeffs.H_powersum(a);

    const GenPowerSum xi =
        -2.0 * fam.a1 * G + (-2.0 * fam.a2) * (G * Xh) + fam.a4 * Xh + GenPowerSum::constant(fam.a5);
    const GenPowerSum fTau = -4.0 * fam.a2 * H + 2.0 * fam.a4 * Fa + GenPowerSum::constant(fam.a6);
    const GenPowerSum eta = fam.a1 * Xh + fam.a2 * Fa + fam.a2 * Xh2 + GenPowerSum::constant(fam.a3);

    const GenPowerSum xi_xb = mrl_derivative_power(xi, b, Var::x);
    const GenPowerSum xi_x2b = mrl_derivative_power(xi_xb, b, Var::x);
    const GenPowerSum xi_ta = mrl_derivative_power(xi, a, Var::t);
    const GenPowerSum eta_xb = mrl_derivative_power(eta, b, Var::x);
    const GenPowerSum eta_x2b = mrl_derivative_power(eta_xb, b, Var::x);
    const GenPowerSum eta_ta = mrl_derivative_power(eta, a, Var::t);
    const GenPowerSum DfTau = mrl_derivative_power(fTau, a, Var::t);

    // (d,e): the derivation writes g tau_t + tau g_t as D^a(g tau); with
    // g = k f the grouped derivative is k D^a(f tau).
    const GenPowerSum resScalingG = 2.0 * (g * xi_xb) - coeffs.k * DfTau;
    const GenPowerSum resScalingF = 2.0 * (f * xi_xb) - DfTau;
    const GenPowerSum resXiBalance = f * xi_x2b - xi_ta - 2.0 * (g * eta_xb);
    const GenPowerSum resEtaBalance = eta_ta - f * eta_x2b;

    auto max_at_points = [&](const GenPowerSum& p) {
        double m = 0.0;
        for (const auto& pt : points)
            m = std::max(m, std::fabs(p.eval(pt.x, pt.t)));
        return m;
    };

    DeterminingReport report;
    report.equations.push_back({"tau_u", 0.0});  // tau has no u dependence by construction
    report.equations.push_back({"tau_x", max_at_points(mrl_derivative_power(fTau, b, Var::x))});
    report.equations.push_back({"xi_u", 0.0});   // xi has no u dependence by construction
    report.equations.push_back({"scaling_g", max_at_points(resScalingG)});
    report.equations.push_back({"scaling_f", max_at_points(resScalingF)});
    report.equations.push_back({"xi_balance", max_at_points(resXiBalance)});
    report.equations.push_back({"eta_balance", max_at_points(resEtaBalance)});

    // Separated diagnostic: differentiate tau and the coefficient functions
    // individually (extended power rule; negative exponents allowed).
    {
        std::vector<PowerTerm> tauTerms;
        for (const auto& t : fTau.terms())
            tauTerms.push_back({t.coef / coeffs.cf, t.xExp, t.tExp - coeffs.nu});
        const GenPowerSum tau(tauTerms, true);
        const GenPowerSum tau_ta = detail::mrl_derivative_power_relaxed(tau, a, Var::t);
        const GenPowerSum f_ta = detail::mrl_derivative_power_relaxed(
            GenPowerSum({{coeffs.cf, 0.0, coeffs.nu}}, true), a, Var::t);
        const GenPowerSum g_ta = coeffs.k * f_ta;
        const GenPowerSum sepG = 2.0 * (g * xi_xb) - g * tau_ta - tau * g_ta;
        const GenPowerSum sepF = 2.0 * (f * xi_xb) - f * tau_ta - tau * f_ta;
        report.separatedScalingG = max_at_points(sepG);
        report.separatedScalingF = max_at_points(sepF);
    }
    return report;
}

FlowMap exponentiate_flow(int i, double epsilon, const CoeffFamily& family, const FracOrders& orders)
{
    family.validate();
    orders.validate();
    if (i < 1 || i > 6)
        throw std::invalid_argument("exponentiate_flow: generator index must be in 1..6");
    const double a = orders.alpha;
    const double db = squared_power_constant(orders.beta);
    const double eps = epsilon;

    const CE X = CE::X(), T = CE::T();
    const PowerOfT fT = family.f_in_T(a);
    const PowerOfT GT = family.G_in_T(a);
    const PowerOfT FT = family.F_alpha_in_T(a);
    const PowerOfT HT = family.H_in_T(a);
    const double m = fT.exponent;

    FlowMap flow;
    flow.index = i;
    flow.epsilon = eps;

    switch (i) {
    case 1: {
        const CE G = GT.expr();
        flow.xMap = X - c(2.0 * eps) * G;
        flow.tMap = T;
        flow.uShift = c(eps) * X - c(eps * eps) * G;
        break;
    }
    case 2: {
        // dT/de = -A T^(2+m), dX/de = -2 G(T) X, du/de = F(T) + db X^2
        const double A = 4.0 * HT.coef / fT.coef;
        const double onePlusM = 1.0 + m;
        const CE Tm1 = pow(T, onePlusM);
        const CE D = c(1.0) + c(onePlusM * A * eps) * Tm1;
        flow.tMap = T * pow(D, -1.0 / onePlusM);
        flow.xMap = X * pow(D, -2.0 * GT.coef / (onePlusM * A));
        const double B = 4.0 * GT.coef / (onePlusM * A);
        CE quad;
        if (std::fabs(B - 1.0) > 1e-12) {
            quad = (pow(D, 1.0 - B) - c(1.0)) / (c(onePlusM * A * (1.0 - B)) * Tm1);
        } else {
            quad = log(D) / (c(onePlusM * A) * Tm1);
        }
        flow.uShift = c(FT.coef / (onePlusM * A)) * log(D) + c(db) * X * X * quad;
        break;
    }
    case 3:
        flow.xMap = X;
        flow.tMap = T;
        flow.uShift = c(eps);
        break;
    case 4: {
        const double c4 = 2.0 * FT.coef / fT.coef;
        flow.xMap = c(std::exp(eps)) * X;
        flow.tMap = c(std::exp(c4 * eps)) * T;
        flow.uShift = c(0.0);
        break;
    }
    case 5:
        flow.xMap = X + c(eps);
        flow.tMap = T;
        flow.uShift = c(0.0);
        break;
    case 6: {
        const double onePlusM = 1.0 + m;
        if (m == 0.0) {
            flow.tMap = T + c(eps / fT.coef);
        } else {
            flow.tMap = pow(pow(T, onePlusM) + c(onePlusM * eps / fT.coef), 1.0 / onePlusM);
        }
        flow.xMap = X;
        flow.uShift = c(0.0);
        break;
    }
    }
    return flow;
}

FlowMap reference_flow(int i, double epsilon, const CoeffFamily& family, const FracOrders& orders)
{
    family.validate();
    orders.validate();
    const double a = orders.alpha;
    const double db = squared_power_constant(orders.beta);
    const double eps = epsilon;
    const CE X = CE::X(), T = CE::T();
    const CE G = family.G_in_T(a).expr();
    const CE Fa = family.F_alpha_in_T(a).expr();

    FlowMap flow;
    flow.index = i;
    flow.epsilon = eps;
    switch (i) {
    case 1:
        flow.xMap = X - c(2.0 * eps / gamma_eval(1.0 + a)) * G;
        flow.tMap = T;
        flow.uShift = c(eps) * X;
        break;
    case 2: {
        const CE denom = c(1.0) + c(2.0 * eps) * G;
        flow.xMap = X * exp(c(-2.0 * eps) * G);
        flow.tMap = G / denom;
        flow.uShift = c(eps) * Fa / denom + c(eps * db) * X * X * exp(c(-4.0 * eps) * G / denom);
        break;
    }
    case 3:
        flow.xMap = X;
        flow.tMap = T;
        flow.uShift = c(eps);
        break;
    case 4:
        flow.xMap = c(std::exp(eps)) * X;
        flow.tMap = c(std::exp(2.0 * eps)) * T;
        flow.uShift = c(0.0);
        break;
    case 5:
        flow.xMap = X + c(eps);
        flow.tMap = T;
        flow.uShift = c(0.0);
        break;
    case 6:
        flow.xMap = X;
        flow.tMap = T + c(eps);
        flow.uShift = c(0.0);
        break;
    default:
        throw std::invalid_argument("reference_flow: generator index must be in 1..6");
    }
    return flow;
}

FlowComparison compare_flow_with_reference(int i, double epsilon, const CoeffFamily& family,
                                           const FracOrders& orders, double lo, double hi,
                                           int samplesPerAxis)
{
    const FlowMap ours = exponentiate_flow(i, epsilon, family, orders);
    const FlowMap ref = reference_flow(i, epsilon, family, orders);
    FlowComparison cmp;
    cmp.index = i;
    cmp.epsilon = epsilon;
    for (int p = 0; p < samplesPerAxis; ++p) {
        for (int q = 0; q < samplesPerAxis; ++q) {
            const double X = lo + (hi - lo) * p / (samplesPerAxis - 1);
            const double T = lo + (hi - lo) * q / (samplesPerAxis - 1);
            const auto A = ours.apply(X, T, 0.0);
            const auto B = ref.apply(X, T, 0.0);
            cmp.maxDevX = std::max(cmp.maxDevX, std::fabs(A[0] - B[0]));
            cmp.maxDevT = std::max(cmp.maxDevT, std::fabs(A[1] - B[1]));
            cmp.maxDevU = std::max(cmp.maxDevU, std::fabs(A[2] - B[2]));
        }
    }
    return cmp;
}

CanonicalExpr transform_solution(const CanonicalExpr& u, const FlowMap& flow, const CoeffFamily& family,
                                 const FracOrders& orders)
{
    const FlowMap inverse = exponentiate_flow(flow.index, -flow.epsilon, family, orders);
    const CanonicalExpr backX = inverse.xMap;
    const CanonicalExpr backT = inverse.tMap;
    return u.substitute(backX, backT) + flow.uShift.substitute(backX, backT);
}

CanonicalExpr reference_transform(const CanonicalExpr& u, int i, double epsilon,
                                  const CoeffFamily& family, const FracOrders& orders)
{
    const FlowMap ref = reference_flow(i, epsilon, family, orders);
    return u.substitute(ref.xMap, ref.tMap) - ref.uShift;
}

} // namespace lie
} // namespace fracburgers
