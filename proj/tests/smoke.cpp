#include "fracburgers/lie.hpp"
#include "fracburgers/rules.hpp"
#include "fracburgers/special.hpp"
#include <cstdio>
#include <cmath>
using namespace fracburgers;
using namespace fracburgers::lie;

int main() {
    CoeffFamily unit{1.0, 0.0, 1.0};
    FracOrders classical{1.0, 1.0};
    auto gens = standard_generators(unit, classical);
    std::printf("V2 = (%s | %s | %s)\n", gens[1].xi.to_string().c_str(),
                gens[1].tau.to_string().c_str(), gens[1].eta.to_string().c_str());
    auto audit = bracket_table_audit(gens, classical);
    std::printf("antisym defect %.2e, jacobi %.2e, fit %.2e, mismatches %zu:",
                audit.maxAntisymmetryDefect, audit.jacobiMaxResidual, audit.maxFitResidual,
                audit.mismatches.size());
    for (auto& m : audit.mismatches) std::printf(" (%d,%d)", m.first, m.second);
    std::printf("\n");

    // determining equations: f=g=t^0.5, (0.5,0.5), random-ish coefficients
    CoeffFamily half{1.0, 0.5, 1.0};
    FracOrders frac{0.5, 0.5};
    InfinitesimalFamily fam{0.3, -0.7, 1.1, 0.9, -0.2, 0.5};
    std::vector<SamplePoint> pts;
    for (int i = 0; i < 100; ++i) pts.push_back({0.5 + 0.015*i, 2.0 - 0.015*i, -1.0 + 0.02*i});
    auto rep = check_determining(fam, half, frac, pts);
    for (auto& e : rep.equations) std::printf("%s: %.3e  ", e.id.c_str(), e.maxAbs);
    std::printf("\nseparated: g %.3e  f %.3e\n", rep.separatedScalingG, rep.separatedScalingF);

    // flows: group law + eps-derivative for all 6, f=g=1, (0.5,0.5)
    for (int i = 1; i <= 6; ++i) {
        double e1 = 0.12, e2 = -0.07;
        auto F1 = exponentiate_flow(i, e1, unit, frac);
        auto F2 = exponentiate_flow(i, e2, unit, frac);
        auto F12 = exponentiate_flow(i, e1 + e2, unit, frac);
        double dev = 0;
        for (double X = 0.6; X <= 1.8; X += 0.3) for (double T = 0.6; T <= 1.8; T += 0.3) {
            auto a = F2.apply(X, T, 0.4);
            auto ab = F1.apply(a[0], a[1], a[2]);
            auto d = F12.apply(X, T, 0.4);
            for (int k = 0; k < 3; ++k) dev = std::max(dev, std::fabs(ab[k]-d[k]));
        }
        // eps-derivative vs generator
        auto gensf = standard_generators(unit, frac);
        double h = 1e-5, devD = 0;
        auto Fp = exponentiate_flow(i, h, unit, frac);
        auto Fm = exponentiate_flow(i, -h, unit, frac);
        for (double X = 0.6; X <= 1.8; X += 0.4) for (double T = 0.6; T <= 1.8; T += 0.4) {
            auto p = Fp.apply(X,T,0.0); auto m0 = Fm.apply(X,T,0.0);
            double dX = (p[0]-m0[0])/(2*h), dT = (p[1]-m0[1])/(2*h), dU = (p[2]-m0[2])/(2*h);
            devD = std::max({devD, std::fabs(dX - gensf[i-1].xi.eval(X,T)),
                             std::fabs(dT - gensf[i-1].tau.eval(X,T)),
                             std::fabs(dU - gensf[i-1].eta.eval(X,T))});
        }
        auto cmpR = compare_flow_with_reference(i, 0.12, unit, frac);
        std::printf("flow %d: group-law dev %.2e, eps-deriv dev %.2e, vs-ref (%.2e, %.2e, %.2e)\n",
                    i, dev, devD, cmpR.maxDevX, cmpR.maxDevT, cmpR.maxDevU);
    }

    // transform: u == c under g1 (classical) -> c + eps X + eps^2 T
    auto flow1 = exponentiate_flow(1, 0.25, unit, classical);
    auto tr = transform_solution(CanonicalExpr::constant(2.0), flow1, unit, classical);
    std::printf("transform const under g1: %s  (at X=1,T=1: %.6f, expect %.6f)\n",
                tr.to_string().c_str(), tr.eval(1,1), 2.0 + 0.25 + 0.0625);

    // rules audit criterion-2 pair
    auto sample = GenPowerSum::monomial(1.0, 0.5, 0.0);
    auto ra = audit_jumarie_rules({1.0, 0.5}, {sample}, {1.0});
    for (auto& r : ra.rules) std::printf("rule %s: %.10g%s\n", r.id.c_str(), r.maxViolation,
                                         r.asserted ? " (asserted)" : "");
    std::printf("chain ratio: %.10g (expect pi/2 = 1.570796327)\n", ra.chainOverDirectRatio);
    return 0;
}
