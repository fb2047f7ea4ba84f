#include "fracburgers/parser.hpp"

#include "fracburgers/special.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <vector>

namespace fracburgers {

namespace {

// Parse-time AST.  Raw x/t and canonical X/T coexist here; lowering decides
// the output representation afterwards.
struct PNode {
    enum class K { Number, RawX, RawT, CanX, CanT, Add, Sub, Mul, Div, Pow, Fun, Neg } k;
    double value = 0.0;
    std::string fun;
    std::unique_ptr<PNode> a, b;
};

using PPtr = std::unique_ptr<PNode>;

PPtr make(PNode::K k)
{
    auto p = std::make_unique<PNode>();
    p->k = k;
    return p;
}

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    std::size_t column() const { return pos + 1; }
    bool eof()
    {
        skip_ws();
        return pos >= text.size();
    }
    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

struct Parser {
    Lexer lex;

    [[noreturn]] void fail(std::size_t col, const std::string& msg) { throw ParseError(col, msg); }

    double parse_number()
    {
        lex.skip_ws();
        const char* begin = lex.text.data() + lex.pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin)
            fail(lex.column(), "expected number");
        lex.pos += static_cast<std::size_t>(end - begin);
        return v;
    }

    std::string parse_ident()
    {
        lex.skip_ws();
        std::size_t start = lex.pos;
        while (lex.pos < lex.text.size()
               && (std::isalnum(static_cast<unsigned char>(lex.text[lex.pos])) || lex.text[lex.pos] == '_'))
            ++lex.pos;
        return std::string(lex.text.substr(start, lex.pos - start));
    }

    PPtr parse_expr()
    {
        PPtr node = parse_term();
        while (true) {
            if (lex.consume('+')) {
                auto n = make(PNode::K::Add);
                n->a = std::move(node);
                n->b = parse_term();
                node = std::move(n);
            } else if (lex.consume('-')) {
                auto n = make(PNode::K::Sub);
                n->a = std::move(node);
                n->b = parse_term();
                node = std::move(n);
            } else {
                return node;
            }
        }
    }

    PPtr parse_term()
    {
        PPtr node = parse_factor();
        while (true) {
            if (lex.consume('*')) {
                auto n = make(PNode::K::Mul);
                n->a = std::move(node);
                n->b = parse_factor();
                node = std::move(n);
            } else if (lex.consume('/')) {
                auto n = make(PNode::K::Div);
                n->a = std::move(node);
                n->b = parse_factor();
                node = std::move(n);
            } else {
                return node;
            }
        }
    }

    PPtr parse_factor()
    {
        PPtr base = parse_base();
        lex.skip_ws();
        if (lex.pos < lex.text.size() && lex.text[lex.pos] == '^') {
            const std::size_t opCol = lex.column();
            ++lex.pos;
            lex.skip_ws();
            if (lex.pos >= lex.text.size())
                fail(opCol, "missing exponent after '^'");
            // Exponents are (optionally signed) real literals.
            const char c = lex.text[lex.pos];
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+'))
                fail(lex.column(), "exponent must be a real literal");
            auto n = make(PNode::K::Pow);
            n->a = std::move(base);
            auto e = make(PNode::K::Number);
            e->value = parse_number();
            n->b = std::move(e);
            return n;
        }
        return base;
    }

    PPtr parse_base()
    {
        lex.skip_ws();
        if (lex.pos >= lex.text.size())
            fail(lex.column(), "unexpected end of input");
        const char c = lex.text[lex.pos];
        const std::size_t col = lex.column();

        if (c == '(') {
            ++lex.pos;
            PPtr inner = parse_expr();
            if (!lex.consume(')'))
                fail(lex.column(), "expected ')'");
            return inner;
        }
        if (c == '-') {
            ++lex.pos;
            auto n = make(PNode::K::Neg);
            n->a = parse_factor();
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            auto n = make(PNode::K::Number);
            n->value = parse_number();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::string id = parse_ident();
            if (id == "x") return make(PNode::K::RawX);
            if (id == "t") return make(PNode::K::RawT);
            if (id == "X") return make(PNode::K::CanX);
            if (id == "T") return make(PNode::K::CanT);
            static const char* funcs[] = {"log", "exp", "erf", "cosh", "sinh", "tanh", "sqrt", "gamma"};
            for (const char* f : funcs) {
                if (id == f) {
                    if (!lex.consume('('))
                        fail(lex.column(), "expected '(' after function name");
                    auto n = make(PNode::K::Fun);
                    n->fun = id;
                    n->a = parse_expr();
                    if (!lex.consume(')'))
                        fail(lex.column(), "expected ')'");
                    return n;
                }
            }
            fail(col, "unknown identifier '" + id + "'");
        }
        fail(col, std::string("unexpected character '") + c + "'");
    }
};

bool uses_raw(const PNode* n)
{
    if (!n) return false;
    if (n->k == PNode::K::RawX || n->k == PNode::K::RawT) return true;
    return uses_raw(n->a.get()) || uses_raw(n->b.get());
}

bool uses_canonical_var(const PNode* n)
{
    if (!n) return false;
    if (n->k == PNode::K::CanX || n->k == PNode::K::CanT) return true;
    return uses_canonical_var(n->a.get()) || uses_canonical_var(n->b.get());
}

bool uses_nonconst_fun(const PNode* n)
{
    if (!n) return false;
    if (n->k == PNode::K::Fun && (uses_raw(n->a.get()) || uses_canonical_var(n->a.get())))
        return true;
    return uses_nonconst_fun(n->a.get()) || uses_nonconst_fun(n->b.get());
}

FunKind fun_kind(const std::string& name)
{
    if (name == "log") return FunKind::Log;
    if (name == "exp") return FunKind::Exp;
    if (name == "erf") return FunKind::Erf;
    if (name == "cosh") return FunKind::Cosh;
    if (name == "sinh") return FunKind::Sinh;
    if (name == "tanh") return FunKind::Tanh;
    return FunKind::Sqrt;
}

CanonicalExpr lower_canonical(const PNode* n)
{
    switch (n->k) {
    case PNode::K::Number: return CanonicalExpr::constant(n->value);
    case PNode::K::CanX: return CanonicalExpr::X();
    case PNode::K::CanT: return CanonicalExpr::T();
    case PNode::K::RawX:
    case PNode::K::RawT:
        throw ParseError(1, "raw variables x/t cannot be mixed with canonical expressions");
    case PNode::K::Add: return lower_canonical(n->a.get()) + lower_canonical(n->b.get());
    case PNode::K::Sub: return lower_canonical(n->a.get()) - lower_canonical(n->b.get());
    case PNode::K::Mul: return lower_canonical(n->a.get()) * lower_canonical(n->b.get());
    case PNode::K::Div: return lower_canonical(n->a.get()) / lower_canonical(n->b.get());
    case PNode::K::Neg: return -lower_canonical(n->a.get());
    case PNode::K::Pow: return pow(lower_canonical(n->a.get()), lower_canonical(n->b.get()));
    case PNode::K::Fun: {
        CanonicalExpr arg = lower_canonical(n->a.get());
        if (n->fun == "gamma") {
            double c;
            if (!arg.is_constant(&c))
                throw ParseError(1, "gamma requires a constant argument");
            return CanonicalExpr::constant(gamma_eval(c));
        }
        return apply_fun(fun_kind(n->fun), arg);
    }
    }
    throw ParseError(1, "internal parser error");
}

GenPowerSum lower_power_sum(const PNode* n)
{
    switch (n->k) {
    case PNode::K::Number: return GenPowerSum::constant(n->value);
    case PNode::K::RawX: return GenPowerSum::monomial(1.0, 1.0, 0.0);
    case PNode::K::RawT: return GenPowerSum::monomial(1.0, 0.0, 1.0);
    case PNode::K::Add: return lower_power_sum(n->a.get()) + lower_power_sum(n->b.get());
    case PNode::K::Sub: return lower_power_sum(n->a.get()) - lower_power_sum(n->b.get());
    case PNode::K::Mul: return lower_power_sum(n->a.get()) * lower_power_sum(n->b.get());
    case PNode::K::Neg: return -lower_power_sum(n->a.get());
    case PNode::K::Div: {
        GenPowerSum denom = lower_power_sum(n->b.get());
        if (denom.size() != 1 || denom.terms()[0].xExp != 0.0 || denom.terms()[0].tExp != 0.0)
            throw ParseError(1, "power sums support division by constants only");
        return lower_power_sum(n->a.get()) * (1.0 / denom.terms()[0].coef);
    }
    case PNode::K::Pow: {
        const double e = n->b->value;
        GenPowerSum base = lower_power_sum(n->a.get());
        if (base.size() == 1) {
            const auto& t = base.terms()[0];
            return GenPowerSum::monomial(std::pow(t.coef, e), t.xExp * e, t.tExp * e);
        }
        const double r = std::round(e);
        if (std::fabs(e - r) > 1e-12 || r < 0.0)
            throw ParseError(1, "compound base requires a nonnegative integer exponent");
        GenPowerSum out = GenPowerSum::constant(1.0);
        for (int i = 0; i < static_cast<int>(r); ++i)
            out = out * base;
        return out;
    }
    case PNode::K::Fun: {
        if (n->fun == "gamma") {
            GenPowerSum arg = lower_power_sum(n->a.get());
            if (arg.size() > 1 || (arg.size() == 1 && (arg.terms()[0].xExp != 0.0 || arg.terms()[0].tExp != 0.0)))
                throw ParseError(1, "gamma requires a constant argument");
            return GenPowerSum::constant(gamma_eval(arg.empty() ? 0.0 : arg.terms()[0].coef));
        }
        throw ParseError(1, "functions of raw variables are not power sums");
    }
    case PNode::K::CanX:
    case PNode::K::CanT:
        throw ParseError(1, "canonical variables X/T cannot be mixed with raw power sums");
    }
    throw ParseError(1, "internal parser error");
}

} // namespace

ParsedExpr parse_expr(std::string_view text)
{
    Parser parser{Lexer{text, 0}};
    PPtr ast = parser.parse_expr();
    parser.lex.skip_ws();
    if (parser.lex.pos != text.size())
        throw ParseError(parser.lex.column(), "unexpected trailing input");

    const bool raw = uses_raw(ast.get());
    const bool canonical = uses_canonical_var(ast.get()) || uses_nonconst_fun(ast.get());
    if (raw && canonical)
        throw ParseError(1, "cannot mix raw variables x/t with canonical X/T or functions");
    if (raw)
        return lower_power_sum(ast.get());
    if (canonical)
        return lower_canonical(ast.get());
    // Pure constant: keep the power-sum form (it works in either world).
    return lower_power_sum(ast.get());
}

GenPowerSum parse_power_sum(std::string_view text)
{
    ParsedExpr e = parse_expr(text);
    if (auto* p = std::get_if<GenPowerSum>(&e))
        return *p;
    throw ParseError(1, "expected a generalized power sum in x and t");
}

CanonicalExpr parse_canonical(std::string_view text)
{
    ParsedExpr e = parse_expr(text);
    if (auto* c = std::get_if<CanonicalExpr>(&e))
        return *c;
    // A raw power sum that is actually constant converts trivially.
    const auto& p = std::get<GenPowerSum>(e);
    bool onlyConst = true;
    for (const auto& t : p.terms())
        if (t.xExp != 0.0 || t.tExp != 0.0)
            onlyConst = false;
    if (onlyConst)
        return CanonicalExpr::constant(p.eval(0.0, 0.0));
    throw ParseError(1, "expected a canonical expression in X and T");
}

} // namespace fracburgers
