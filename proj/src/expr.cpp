#include "fracburgers/expr.hpp"

#include "fracburgers/special.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fracburgers {

using Kind = CanonicalExpr::Kind;
using NodePtr = CanonicalExpr::NodePtr;

namespace {

NodePtr make_node(Kind k, double value, FunKind f, NodePtr a, NodePtr b)
{
    auto n = std::make_shared<CanonicalExpr::Node>();
    n->kind = k;
    n->value = value;
    n->fun = f;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

bool node_is_const(const NodePtr& n, double* v = nullptr)
{
    if (n->kind != Kind::Constant)
        return false;
    if (v)
        *v = n->value;
    return true;
}

double fun_eval(FunKind f, double x)
{
    switch (f) {
    case FunKind::Log: return std::log(x);
    case FunKind::Exp: return std::exp(x);
    case FunKind::Erf: return erf_eval(x);
    case FunKind::Cosh: return std::cosh(x);
    case FunKind::Sinh: return std::sinh(x);
    case FunKind::Tanh: return std::tanh(x);
    case FunKind::Sqrt: return std::sqrt(x);
    }
    return 0.0;
}

const char* fun_name(FunKind f)
{
    switch (f) {
    case FunKind::Log: return "log";
    case FunKind::Exp: return "exp";
    case FunKind::Erf: return "erf";
    case FunKind::Cosh: return "cosh";
    case FunKind::Sinh: return "sinh";
    case FunKind::Tanh: return "tanh";
    case FunKind::Sqrt: return "sqrt";
    }
    return "?";
}

} // namespace

CanonicalExpr CanonicalExpr::constant(double c)
{
    return CanonicalExpr(make_node(Kind::Constant, c, FunKind::Log, nullptr, nullptr));
}

CanonicalExpr CanonicalExpr::X()
{
    static const NodePtr x = make_node(Kind::VarX, 0.0, FunKind::Log, nullptr, nullptr);
    return CanonicalExpr(x);
}

CanonicalExpr CanonicalExpr::T()
{
    static const NodePtr t = make_node(Kind::VarT, 0.0, FunKind::Log, nullptr, nullptr);
    return CanonicalExpr(t);
}

CanonicalExpr operator+(const CanonicalExpr& a, const CanonicalExpr& b)
{
    double ca, cb;
    const bool ka = node_is_const(a.node_, &ca), kb = node_is_const(b.node_, &cb);
    if (ka && kb)
        return CanonicalExpr::constant(ca + cb);
    if (ka && ca == 0.0)
        return b;
    if (kb && cb == 0.0)
        return a;
    return CanonicalExpr(make_node(Kind::Add, 0.0, FunKind::Log, a.node_, b.node_));
}

CanonicalExpr operator-(const CanonicalExpr& a, const CanonicalExpr& b)
{
    double ca, cb;
    const bool ka = node_is_const(a.node_, &ca), kb = node_is_const(b.node_, &cb);
    if (ka && kb)
        return CanonicalExpr::constant(ca - cb);
    if (kb && cb == 0.0)
        return a;
    return CanonicalExpr(make_node(Kind::Sub, 0.0, FunKind::Log, a.node_, b.node_));
}

CanonicalExpr operator*(const CanonicalExpr& a, const CanonicalExpr& b)
{
    double ca, cb;
    const bool ka = node_is_const(a.node_, &ca), kb = node_is_const(b.node_, &cb);
    if (ka && kb)
        return CanonicalExpr::constant(ca * cb);
    if (ka && ca == 0.0)
        return CanonicalExpr::constant(0.0);
    if (kb && cb == 0.0)
        return CanonicalExpr::constant(0.0);
    if (ka && ca == 1.0)
        return b;
    if (kb && cb == 1.0)
        return a;
    return CanonicalExpr(make_node(Kind::Mul, 0.0, FunKind::Log, a.node_, b.node_));
}

CanonicalExpr operator/(const CanonicalExpr& a, const CanonicalExpr& b)
{
    double ca, cb;
    const bool ka = node_is_const(a.node_, &ca), kb = node_is_const(b.node_, &cb);
    if (kb && cb == 0.0)
        throw std::invalid_argument("CanonicalExpr: division by constant zero");
    if (ka && kb)
        return CanonicalExpr::constant(ca / cb);
    if (kb && cb == 1.0)
        return a;
    if (ka && ca == 0.0)
        return CanonicalExpr::constant(0.0);
    return CanonicalExpr(make_node(Kind::Div, 0.0, FunKind::Log, a.node_, b.node_));
}

CanonicalExpr operator-(const CanonicalExpr& a)
{
    return CanonicalExpr::constant(-1.0) * a;
}

CanonicalExpr pow(const CanonicalExpr& base, const CanonicalExpr& exponent)
{
    double cb, ce;
    const bool kb = node_is_const(base.node_, &cb), ke = node_is_const(exponent.node_, &ce);
    if (ke && ce == 1.0)
        return base;
    if (ke && ce == 0.0)
        return CanonicalExpr::constant(1.0);
    if (kb && ke)
        return CanonicalExpr::constant(std::pow(cb, ce));
    return CanonicalExpr(make_node(Kind::Pow, 0.0, FunKind::Log, base.node_, exponent.node_));
}

CanonicalExpr pow(const CanonicalExpr& base, double exponent)
{
    return pow(base, CanonicalExpr::constant(exponent));
}

CanonicalExpr apply_fun(FunKind f, const CanonicalExpr& arg)
{
    double c;
    if (node_is_const(arg.node_, &c)) {
        const double v = fun_eval(f, c);
        if (std::isfinite(v))
            return CanonicalExpr::constant(v);
    }
    return CanonicalExpr(make_node(Kind::Fun, 0.0, f, arg.node_, nullptr));
}

CanonicalExpr log(const CanonicalExpr& e) { return apply_fun(FunKind::Log, e); }
CanonicalExpr exp(const CanonicalExpr& e) { return apply_fun(FunKind::Exp, e); }
CanonicalExpr erf(const CanonicalExpr& e) { return apply_fun(FunKind::Erf, e); }
CanonicalExpr cosh(const CanonicalExpr& e) { return apply_fun(FunKind::Cosh, e); }
CanonicalExpr sinh(const CanonicalExpr& e) { return apply_fun(FunKind::Sinh, e); }
CanonicalExpr tanh(const CanonicalExpr& e) { return apply_fun(FunKind::Tanh, e); }
CanonicalExpr sqrt(const CanonicalExpr& e) { return apply_fun(FunKind::Sqrt, e); }

namespace {

double eval_node(const CanonicalExpr::Node* n, double Xval, double Tval)
{
    switch (n->kind) {
    case Kind::Constant: return n->value;
    case Kind::VarX: return Xval;
    case Kind::VarT: return Tval;
    case Kind::Add: return eval_node(n->a.get(), Xval, Tval) + eval_node(n->b.get(), Xval, Tval);
    case Kind::Sub: return eval_node(n->a.get(), Xval, Tval) - eval_node(n->b.get(), Xval, Tval);
    case Kind::Mul: return eval_node(n->a.get(), Xval, Tval) * eval_node(n->b.get(), Xval, Tval);
    case Kind::Div: return eval_node(n->a.get(), Xval, Tval) / eval_node(n->b.get(), Xval, Tval);
    case Kind::Pow: return std::pow(eval_node(n->a.get(), Xval, Tval), eval_node(n->b.get(), Xval, Tval));
    case Kind::Fun: return fun_eval(n->fun, eval_node(n->a.get(), Xval, Tval));
    }
    return 0.0;
}

bool depends_node(const CanonicalExpr::Node* n, CanonVar v)
{
    switch (n->kind) {
    case Kind::Constant: return false;
    case Kind::VarX: return v == CanonVar::X;
    case Kind::VarT: return v == CanonVar::T;
    case Kind::Fun: return depends_node(n->a.get(), v);
    default:
        return depends_node(n->a.get(), v) || depends_node(n->b.get(), v);
    }
}

} // namespace

double CanonicalExpr::eval(double Xval, double Tval) const
{
    return eval_node(node_.get(), Xval, Tval);
}

bool CanonicalExpr::depends_on(CanonVar v) const
{
    return depends_node(node_.get(), v);
}

bool CanonicalExpr::is_constant(double* value) const
{
    return node_is_const(node_, value);
}

CanonicalExpr CanonicalExpr::diff(CanonVar v) const
{
    const Node* n = node_.get();
    const CanonicalExpr a = n->a ? CanonicalExpr(n->a) : CanonicalExpr();
    const CanonicalExpr b = n->b ? CanonicalExpr(n->b) : CanonicalExpr();
    switch (n->kind) {
    case Kind::Constant:
        return constant(0.0);
    case Kind::VarX:
        return constant(v == CanonVar::X ? 1.0 : 0.0);
    case Kind::VarT:
        return constant(v == CanonVar::T ? 1.0 : 0.0);
    case Kind::Add:
        return a.diff(v) + b.diff(v);
    case Kind::Sub:
        return a.diff(v) - b.diff(v);
    case Kind::Mul:
        return a.diff(v) * b + a * b.diff(v);
    case Kind::Div:
        return (a.diff(v) * b - a * b.diff(v)) / (b * b);
    case Kind::Pow: {
        double e;
        if (node_is_const(n->b, &e)) {
            // d(a^e) = e a^(e-1) a'
            return constant(e) * pow(a, e - 1.0) * a.diff(v);
        }
        // general: a^b (b' log a + b a'/a)
        return pow(a, b) * (b.diff(v) * log(a) + b * a.diff(v) / a);
    }
    case Kind::Fun: {
        const CanonicalExpr da = a.diff(v);
        switch (n->fun) {
        case FunKind::Log: return da / a;
        case FunKind::Exp: return exp(a) * da;
        case FunKind::Erf:
            // 2/sqrt(pi) e^{-a^2}
            return constant(1.1283791670955126) * exp(constant(0.0) - a * a) * da;
        case FunKind::Cosh: return sinh(a) * da;
        case FunKind::Sinh: return cosh(a) * da;
        case FunKind::Tanh: {
            const CanonicalExpr th = tanh(a);
            return (constant(1.0) - th * th) * da;
        }
        case FunKind::Sqrt: return da / (constant(2.0) * sqrt(a));
        }
        return constant(0.0);
    }
    }
    return constant(0.0);
}

CanonicalExpr CanonicalExpr::substitute(const CanonicalExpr& forX, const CanonicalExpr& forT) const
{
    const Node* n = node_.get();
    switch (n->kind) {
    case Kind::Constant: return *this;
    case Kind::VarX: return forX;
    case Kind::VarT: return forT;
    case Kind::Add: return CanonicalExpr(n->a).substitute(forX, forT) + CanonicalExpr(n->b).substitute(forX, forT);
    case Kind::Sub: return CanonicalExpr(n->a).substitute(forX, forT) - CanonicalExpr(n->b).substitute(forX, forT);
    case Kind::Mul: return CanonicalExpr(n->a).substitute(forX, forT) * CanonicalExpr(n->b).substitute(forX, forT);
    case Kind::Div: return CanonicalExpr(n->a).substitute(forX, forT) / CanonicalExpr(n->b).substitute(forX, forT);
    case Kind::Pow:
        return pow(CanonicalExpr(n->a).substitute(forX, forT), CanonicalExpr(n->b).substitute(forX, forT));
    case Kind::Fun: return apply_fun(n->fun, CanonicalExpr(n->a).substitute(forX, forT));
    }
    return *this;
}

namespace {

// Precedence levels: 0 sum, 1 product, 2 power/unary, 3 atom.
void print_node(const NodePtr& n, std::string& out, int parentPrec)
{
    char buf[40];
    switch (n->kind) {
    case Kind::Constant: {
        if (n->value < 0.0) {
            std::snprintf(buf, sizeof(buf), "(%.17g)", n->value);
        } else {
            std::snprintf(buf, sizeof(buf), "%.17g", n->value);
        }
        out += buf;
        return;
    }
    case Kind::VarX: out += "X"; return;
    case Kind::VarT: out += "T"; return;
    case Kind::Add:
    case Kind::Sub: {
        const bool parens = parentPrec > 0;
        if (parens) out += "(";
        print_node(n->a, out, 0);
        out += n->kind == Kind::Add ? " + " : " - ";
        print_node(n->b, out, 1);
        if (parens) out += ")";
        return;
    }
    case Kind::Mul:
    case Kind::Div: {
        const bool parens = parentPrec > 1;
        if (parens) out += "(";
        print_node(n->a, out, 1);
        out += n->kind == Kind::Mul ? "*" : "/";
        print_node(n->b, out, 2);
        if (parens) out += ")";
        return;
    }
    case Kind::Pow: {
        const bool parens = parentPrec > 2;
        if (parens) out += "(";
        print_node(n->a, out, 3);
        out += "^";
        print_node(n->b, out, 3);
        if (parens) out += ")";
        return;
    }
    case Kind::Fun:
        out += fun_name(n->fun);
        out += "(";
        print_node(n->a, out, 0);
        out += ")";
        return;
    }
}

} // namespace

std::string CanonicalExpr::to_string() const
{
    std::string out;
    print_node(node_, out, 0);
    return out;
}

CanonicalExpr to_canonical(const GenPowerSum& p, const FracOrders& orders)
{
    orders.validate();
    CanonicalExpr sum = CanonicalExpr::constant(0.0);
    for (const auto& term : p.terms()) {
        const double mReal = term.xExp / orders.beta;
        const double nReal = term.tExp / orders.alpha;
        const double m = std::round(mReal);
        const double n = std::round(nReal);
        if (std::fabs(mReal - m) > 1e-10 || std::fabs(nReal - n) > 1e-10 || m < 0 || n < 0)
            throw NonCommensurateExponent("to_canonical: exponent pair (" + std::to_string(term.xExp)
                                          + ", " + std::to_string(term.tExp)
                                          + ") is not an integer multiple of (beta, alpha)");
        double coef = term.coef;
        coef *= std::pow(gamma_eval(1.0 + orders.beta), m);
        coef *= std::pow(gamma_eval(1.0 + orders.alpha), n);
        CanonicalExpr mono = CanonicalExpr::constant(coef);
        if (m > 0)
            mono = mono * pow(CanonicalExpr::X(), m);
        if (n > 0)
            mono = mono * pow(CanonicalExpr::T(), n);
        sum = sum + mono;
    }
    return sum;
}

namespace {

// Polynomial lowering of an expression in (X, T): each node maps to a list
// of monomials coef * X^p * T^q with real nonnegative p, q.
struct CanonMono {
    double coef, p, q;
};

std::vector<CanonMono> lower_polynomial(const NodePtr& n)
{
    using K = Kind;
    switch (n->kind) {
    case K::Constant: return {{n->value, 0.0, 0.0}};
    case K::VarX: return {{1.0, 1.0, 0.0}};
    case K::VarT: return {{1.0, 0.0, 1.0}};
    case K::Add: {
        auto a = lower_polynomial(n->a), b = lower_polynomial(n->b);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    case K::Sub: {
        auto a = lower_polynomial(n->a), b = lower_polynomial(n->b);
        for (auto& m : b) m.coef = -m.coef;
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    case K::Mul: {
        auto a = lower_polynomial(n->a), b = lower_polynomial(n->b);
        std::vector<CanonMono> out;
        for (const auto& x : a)
            for (const auto& y : b)
                out.push_back({x.coef * y.coef, x.p + y.p, x.q + y.q});
        return out;
    }
    case K::Div: {
        if (n->b->kind != K::Constant || n->b->value == 0.0)
            throw std::invalid_argument("from_canonical: only division by a nonzero constant is polynomial");
        auto a = lower_polynomial(n->a);
        for (auto& m : a) m.coef /= n->b->value;
        return a;
    }
    case K::Pow: {
        if (n->b->kind != K::Constant)
            throw std::invalid_argument("from_canonical: exponent must be constant");
        const double e = n->b->value;
        auto base = lower_polynomial(n->a);
        if (base.size() == 1) {
            if (e < 0.0)
                throw std::invalid_argument("from_canonical: negative exponent");
            const auto& m = base[0];
            return {{std::pow(m.coef, e), m.p * e, m.q * e}};
        }
        const double r = std::round(e);
        if (std::fabs(e - r) > 1e-12 || r < 0.0)
            throw std::invalid_argument("from_canonical: compound base needs a nonnegative integer exponent");
        std::vector<CanonMono> out = {{1.0, 0.0, 0.0}};
        for (int i = 0; i < static_cast<int>(r); ++i) {
            std::vector<CanonMono> next;
            for (const auto& x : out)
                for (const auto& y : base)
                    next.push_back({x.coef * y.coef, x.p + y.p, x.q + y.q});
            out = std::move(next);
        }
        return out;
    }
    case K::Fun:
        throw std::invalid_argument("from_canonical: expression contains a non-polynomial function");
    }
    throw std::invalid_argument("from_canonical: unsupported node");
}

} // namespace

GenPowerSum from_canonical(const CanonicalExpr& e, const FracOrders& orders)
{
    orders.validate();
    std::vector<PowerTerm> terms;
    for (const auto& m : lower_polynomial(e.node())) {
        if (m.p < 0.0 || m.q < 0.0)
            throw std::invalid_argument("from_canonical: negative power");
        double coef = m.coef;
        coef /= std::pow(gamma_eval(1.0 + orders.beta), m.p);
        coef /= std::pow(gamma_eval(1.0 + orders.alpha), m.q);
        terms.push_back({coef, m.p * orders.beta, m.q * orders.alpha});
    }
    return GenPowerSum(std::move(terms));
}

} // namespace fracburgers
