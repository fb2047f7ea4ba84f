#include "fracburgers/rules.hpp"

#include "fracburgers/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fracburgers {

namespace {

double max_abs_at(const GenPowerSum& p, const std::vector<double>& pts)
{
    double m = 0.0;
    for (double x : pts)
        m = std::max(m, std::fabs(p.eval(x, 1.0)));
    return m;
}

} // namespace

RuleAuditReport audit_jumarie_rules(const FracOrders& orders, const std::vector<GenPowerSum>& samples,
                                    const std::vector<double>& evalPoints)
{
    orders.validate();
    if (samples.empty())
        throw std::invalid_argument("audit_jumarie_rules: samples must be nonempty");
    const double b = orders.beta;

    RuleAuditReport report;
    report.orders = orders;

    // (i) differential normalization, realized as the derivative/primitive
    // round trip D^b (I^b f) = f.
    {
        RuleCheck check{"i", "d f = D^b f (dx)^b / Gamma(1+b): derivative of the primitive recovers f", 0.0, true, 0};
        for (const auto& s : samples) {
            const GenPowerSum rt = mrl_derivative_power(frac_primitive_power(s, b, Var::x), b, Var::x) - s;
            check.maxViolation = std::max(check.maxViolation, max_abs_at(rt, evalPoints));
        }
        report.rules.push_back(check);
    }

    // (ii) product rule D(uv) = (Du)v + u(Dv), quantified over sample pairs.
    {
        RuleCheck check{"ii", "product rule D^b(uv) = (D^b u) v + u (D^b v)", 0.0, false, 0};
        for (std::size_t i = 0; i < samples.size(); ++i) {
            for (std::size_t j = i; j < samples.size(); ++j) {
                try {
                    const GenPowerSum lhs = mrl_derivative_power(samples[i] * samples[j], b, Var::x);
                    const GenPowerSum rhs = mrl_derivative_power(samples[i], b, Var::x) * samples[j]
                                            + samples[i] * mrl_derivative_power(samples[j], b, Var::x);
                    check.maxViolation = std::max(check.maxViolation, max_abs_at(lhs - rhs, evalPoints));
                } catch (const ExponentBelowOrder&) {
                    ++check.pairsSkipped;
                }
            }
        }
        report.rules.push_back(check);
    }

    // (iii) chain rule probe on h(u) = u^2 with u = x^b/Gamma(1+b):
    // chain value 2u D^b u versus the direct power rule on u^2.
    {
        RuleCheck check{"iii", "chain rule D^b h(u) = h'(u) D^b u on h(u)=u^2, u=x^b/Gamma(1+b)", 0.0, false, 0};
        const double gb = gamma_eval(1.0 + b);
        const GenPowerSum u = GenPowerSum::monomial(1.0 / gb, b, 0.0);
        const GenPowerSum chain = 2.0 * u * mrl_derivative_power(u, b, Var::x);
        const GenPowerSum direct = mrl_derivative_power(u * u, b, Var::x);
        check.maxViolation = max_abs_at(chain - direct, evalPoints);
        report.rules.push_back(check);
        report.chainOverDirectRatio = 2.0 * gb * gb / gamma_eval(1.0 + 2.0 * b);
    }

    // (iv) power rule against the closed form.
    {
        RuleCheck check{"iv", "power rule D^b x^p = Gamma(1+p)/Gamma(1+p-b) x^(p-b)", 0.0, true, 0};
        for (const auto& s : samples) {
            try {
                const GenPowerSum d = mrl_derivative_power(s, b, Var::x);
                std::vector<PowerTerm> direct;
                for (const auto& t : s.terms()) {
                    if (std::fabs(t.xExp) <= GenPowerSum::kExpTol)
                        continue;
                    direct.push_back({t.coef * gamma_eval(1.0 + t.xExp) / gamma_eval(1.0 + t.xExp - b),
                                      t.xExp - b, t.tExp});
                }
                check.maxViolation =
                    std::max(check.maxViolation, max_abs_at(d - GenPowerSum(std::move(direct)), evalPoints));
            } catch (const ExponentBelowOrder&) {
                ++check.pairsSkipped;
            }
        }
        report.rules.push_back(check);
    }

    // (v) int (dx)^b = x^b: the primitive of 1 is x^b/Gamma(1+b).
    {
        RuleCheck check{"v", "int (dx)^b = x^b: primitive of 1 equals x^b/Gamma(1+b)", 0.0, true, 0};
        const GenPowerSum prim = frac_primitive_power(GenPowerSum::constant(1.0), b, Var::x);
        const GenPowerSum expect = GenPowerSum::monomial(1.0 / gamma_eval(1.0 + b), b, 0.0);
        check.maxViolation = max_abs_at(prim - expect, evalPoints);
        report.rules.push_back(check);
    }

    // (vi) Gamma(1+b) dx = (dx)^b: scaling consistency of the primitive on
    // every sample (Gamma(1+b) I^b f equals the (dx)^b integral term-wise).
    {
        RuleCheck check{"vi", "Gamma(1+b) dx = (dx)^b: primitive scaling on samples", 0.0, true, 0};
        for (const auto& s : samples) {
            const GenPowerSum prim = frac_primitive_power(s, b, Var::x) * gamma_eval(1.0 + b);
            std::vector<PowerTerm> expect;
            for (const auto& t : s.terms())
                expect.push_back({t.coef * gamma_eval(1.0 + b) * gamma_eval(1.0 + t.xExp)
                                      / gamma_eval(1.0 + t.xExp + b),
                                  t.xExp + b, t.tExp});
            check.maxViolation =
                std::max(check.maxViolation, max_abs_at(prim - GenPowerSum(std::move(expect)), evalPoints));
        }
        report.rules.push_back(check);
    }

    return report;
}

} // namespace fracburgers
