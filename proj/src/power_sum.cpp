#include "fracburgers/power_sum.hpp"

#include "fracburgers/special.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fracburgers {

GenPowerSum::GenPowerSum(std::vector<PowerTerm> terms, bool allowNegative)
    : terms_(std::move(terms)), allowNegative_(allowNegative)
{
    normalize();
}

GenPowerSum GenPowerSum::monomial(double c, double xExp, double tExp)
{
    return GenPowerSum({{c, xExp, tExp}});
}

void GenPowerSum::normalize()
{
    if (!allowNegative_) {
        for (const auto& t : terms_)
            if (t.xExp < -kExpTol || t.tExp < -kExpTol)
                throw std::invalid_argument("GenPowerSum: exponents must be nonnegative");
        for (auto& t : terms_) {
            if (t.xExp < 0.0) t.xExp = 0.0;
            if (t.tExp < 0.0) t.tExp = 0.0;
        }
    }
    std::sort(terms_.begin(), terms_.end(), [](const PowerTerm& a, const PowerTerm& b) {
        if (a.xExp != b.xExp) return a.xExp < b.xExp;
        return a.tExp < b.tExp;
    });
    std::vector<PowerTerm> merged;
    for (const auto& t : terms_) {
        if (!merged.empty() && std::fabs(merged.back().xExp - t.xExp) <= kExpTol
            && std::fabs(merged.back().tExp - t.tExp) <= kExpTol) {
            merged.back().coef += t.coef;
        } else {
            merged.push_back(t);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const PowerTerm& t) { return std::fabs(t.coef) <= kCoefTol; }),
                 merged.end());
    terms_ = std::move(merged);
}

double GenPowerSum::eval(double x, double t) const
{
    double sum = 0.0;
    for (const auto& term : terms_) {
        double v = term.coef;
        if (term.xExp != 0.0) v *= std::pow(x, term.xExp);
        if (term.tExp != 0.0) v *= std::pow(t, term.tExp);
        sum += v;
    }
    return sum;
}

GenPowerSum GenPowerSum::operator+(const GenPowerSum& o) const
{
    std::vector<PowerTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return GenPowerSum(std::move(all), allowNegative_ || o.allowNegative_);
}

GenPowerSum GenPowerSum::operator-(const GenPowerSum& o) const { return *this + (o * -1.0); }

GenPowerSum GenPowerSum::operator*(const GenPowerSum& o) const
{
    std::vector<PowerTerm> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prod.push_back({a.coef * b.coef, a.xExp + b.xExp, a.tExp + b.tExp});
    return GenPowerSum(std::move(prod), allowNegative_ || o.allowNegative_);
}

GenPowerSum GenPowerSum::operator*(double s) const
{
    std::vector<PowerTerm> scaled = terms_;
    for (auto& t : scaled) t.coef *= s;
    return GenPowerSum(std::move(scaled), allowNegative_);
}

std::string GenPowerSum::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    char buf[64];
    bool first = true;
    for (const auto& t : terms_) {
        double c = t.coef;
        if (!first) {
            out += c < 0.0 ? " - " : " + ";
            c = std::fabs(c);
        }
        std::snprintf(buf, sizeof(buf), "%.17g", c);
        out += buf;
        if (t.xExp != 0.0) {
            std::snprintf(buf, sizeof(buf), "*x^%.17g", t.xExp);
            out += buf;
        }
        if (t.tExp != 0.0) {
            std::snprintf(buf, sizeof(buf), "*t^%.17g", t.tExp);
            out += buf;
        }
        first = false;
    }
    return out;
}

namespace {

GenPowerSum power_rule_apply(const GenPowerSum& p, double order, Var var, bool relaxed)
{
    if (!(order > 0.0))
        throw std::invalid_argument("mrl_derivative_power: order must be positive");
    std::vector<PowerTerm> out;
    for (const auto& term : p.terms()) {
        const double e = var == Var::x ? term.xExp : term.tExp;
        if (std::fabs(e) <= GenPowerSum::kExpTol)
            continue; // constant in the active variable: the f - f(0) subtraction kills it
        double factor;
        if (relaxed) {
            factor = gamma_signed(1.0 + e) * reciprocal_gamma(1.0 + e - order);
        } else {
            if (e < order - GenPowerSum::kExpTol)
                throw ExponentBelowOrder("mrl_derivative_power: exponent " + std::to_string(e)
                                         + " below order " + std::to_string(order));
            factor = gamma_eval(1.0 + e) / gamma_eval(1.0 + e - order);
        }
        PowerTerm t = term;
        t.coef *= factor;
        if (var == Var::x)
            t.xExp = e - order;
        else
            t.tExp = e - order;
        out.push_back(t);
    }
    return GenPowerSum(std::move(out), relaxed || p.allows_negative());
}

} // namespace

GenPowerSum mrl_derivative_power(const GenPowerSum& p, double order, Var var)
{
    if (p.allows_negative())
        return detail::mrl_derivative_power_relaxed(p, order, var);
    return power_rule_apply(p, order, var, false);
}

GenPowerSum frac_primitive_power(const GenPowerSum& p, double order, Var var)
{
    if (!(order > 0.0))
        throw std::invalid_argument("frac_primitive_power: order must be positive");
    std::vector<PowerTerm> out;
    out.reserve(p.size());
    for (const auto& term : p.terms()) {
        const double e = var == Var::x ? term.xExp : term.tExp;
        PowerTerm t = term;
        t.coef *= gamma_eval(1.0 + e) / gamma_eval(1.0 + e + order);
        if (var == Var::x)
            t.xExp = e + order;
        else
            t.tExp = e + order;
        out.push_back(t);
    }
    return GenPowerSum(std::move(out), p.allows_negative());
}

namespace detail {
GenPowerSum mrl_derivative_power_relaxed(const GenPowerSum& p, double order, Var var)
{
    return power_rule_apply(p, order, var, true);
}
}

} // namespace fracburgers
