#ifndef FRACBURGERS_EXPR_HPP
#define FRACBURGERS_EXPR_HPP

#include "fracburgers/power_sum.hpp"

#include <memory>
#include <string>

namespace fracburgers {

enum class CanonVar { X, T };

enum class FunKind { Log, Exp, Erf, Cosh, Sinh, Tanh, Sqrt };

// Immutable expression tree over the canonical variables X = x^beta/Gamma(1+beta)
// and T = t^alpha/Gamma(1+alpha).  Construction applies local simplification
// only (constant folding, *1, +0, ^1); evaluation is defined wherever every
// sub-expression is defined.
class CanonicalExpr {
  public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    enum class Kind { Constant, VarX, VarT, Add, Sub, Mul, Div, Pow, Fun };

    struct Node {
        Kind kind;
        double value = 0.0; // Constant
        FunKind fun = FunKind::Log;
        NodePtr a, b;
    };

    CanonicalExpr() : CanonicalExpr(constant(0.0)) {}

    static CanonicalExpr constant(double c);
    static CanonicalExpr X();
    static CanonicalExpr T();
    static CanonicalExpr variable(CanonVar v) { return v == CanonVar::X ? X() : T(); }

    double eval(double Xval, double Tval) const;
    CanonicalExpr diff(CanonVar v) const;
    bool depends_on(CanonVar v) const;
    bool is_constant(double* value = nullptr) const;

    // Replaces X and T by the given expressions.
    CanonicalExpr substitute(const CanonicalExpr& forX, const CanonicalExpr& forT) const;

    std::string to_string() const;

    const NodePtr& node() const { return node_; }

    friend CanonicalExpr operator+(const CanonicalExpr&, const CanonicalExpr&);
    friend CanonicalExpr operator-(const CanonicalExpr&, const CanonicalExpr&);
    friend CanonicalExpr operator*(const CanonicalExpr&, const CanonicalExpr&);
    friend CanonicalExpr operator/(const CanonicalExpr&, const CanonicalExpr&);
    friend CanonicalExpr operator-(const CanonicalExpr&);
    friend CanonicalExpr pow(const CanonicalExpr& base, const CanonicalExpr& exponent);
    friend CanonicalExpr pow(const CanonicalExpr& base, double exponent);
    friend CanonicalExpr apply_fun(FunKind f, const CanonicalExpr& arg);

  private:
    explicit CanonicalExpr(NodePtr n) : node_(std::move(n)) {}
    NodePtr node_;
};

CanonicalExpr operator+(const CanonicalExpr&, const CanonicalExpr&);
CanonicalExpr operator-(const CanonicalExpr&, const CanonicalExpr&);
CanonicalExpr operator*(const CanonicalExpr&, const CanonicalExpr&);
CanonicalExpr operator/(const CanonicalExpr&, const CanonicalExpr&);
CanonicalExpr operator-(const CanonicalExpr&);
CanonicalExpr pow(const CanonicalExpr& base, const CanonicalExpr& exponent);
CanonicalExpr pow(const CanonicalExpr& base, double exponent);
CanonicalExpr apply_fun(FunKind f, const CanonicalExpr& arg);

inline CanonicalExpr operator+(const CanonicalExpr& a, double b) { return a + CanonicalExpr::constant(b); }
inline CanonicalExpr operator+(double a, const CanonicalExpr& b) { return CanonicalExpr::constant(a) + b; }
inline CanonicalExpr operator-(const CanonicalExpr& a, double b) { return a - CanonicalExpr::constant(b); }
inline CanonicalExpr operator-(double a, const CanonicalExpr& b) { return CanonicalExpr::constant(a) - b; }
inline CanonicalExpr operator*(const CanonicalExpr& a, double b) { return a * CanonicalExpr::constant(b); }
inline CanonicalExpr operator*(double a, const CanonicalExpr& b) { return CanonicalExpr::constant(a) * b; }
inline CanonicalExpr operator/(const CanonicalExpr& a, double b) { return a / CanonicalExpr::constant(b); }
inline CanonicalExpr operator/(double a, const CanonicalExpr& b) { return CanonicalExpr::constant(a) / b; }

CanonicalExpr log(const CanonicalExpr& e);
CanonicalExpr exp(const CanonicalExpr& e);
CanonicalExpr erf(const CanonicalExpr& e);
CanonicalExpr cosh(const CanonicalExpr& e);
CanonicalExpr sinh(const CanonicalExpr& e);
CanonicalExpr tanh(const CanonicalExpr& e);
CanonicalExpr sqrt(const CanonicalExpr& e);

// x^{m beta} t^{n alpha} -> Gamma(1+beta)^m Gamma(1+alpha)^n X^m T^n; every
// exponent must be a nonnegative integer multiple of the matching order
// (tolerance 1e-10 on the multiple).  Throws NonCommensurateExponent.
CanonicalExpr to_canonical(const GenPowerSum& p, const FracOrders& orders);

// Inverse of to_canonical.  Accepts polynomial expressions in X and T with
// nonnegative real powers; throws std::invalid_argument on anything else.
GenPowerSum from_canonical(const CanonicalExpr& e, const FracOrders& orders);

} // namespace fracburgers

#endif
