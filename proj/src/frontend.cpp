#include "galois/frontend.hpp"

#include "galois/kovacic.hpp"
#include "galois/special.hpp"
#include "galois/spectrum.hpp"
#include "galois/susy.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace galois {

using Kind = Expr::Kind;

// ---------------------------------------------------------------- AST

namespace {
std::shared_ptr<Expr> node(Kind k, size_t pos = 0)
{
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->pos = pos;
    return e;
}
}  // namespace

ExprPtr make_number(const QRat& v)
{
    auto e = node(Kind::Number);
    e->value = v;
    return e;
}
ExprPtr make_imag() { return node(Kind::ImagUnit); }
ExprPtr make_symbol(const std::string& name)
{
    auto e = node(Kind::Symbol);
    e->name = name;
    return e;
}
ExprPtr make_unary(Kind k, ExprPtr a)
{
    auto e = node(k);
    e->args = {std::move(a)};
    return e;
}
ExprPtr make_binary(Kind k, ExprPtr a, ExprPtr b)
{
    auto e = node(k);
    e->args = {std::move(a), std::move(b)};
    return e;
}
ExprPtr make_pow(ExprPtr base, long ex)
{
    auto e = node(Kind::Pow);
    e->exponent = ex;
    e->args = {std::move(base)};
    return e;
}
ExprPtr make_call(const std::string& fn, ExprPtr arg)
{
    auto e = node(Kind::Call);
    e->name = fn;
    e->args = {std::move(arg)};
    return e;
}

ParseError::ParseError(ErrorKind kind, size_t pos, const std::string& what)
    : Error(kind, "at position " + std::to_string(pos) + ": " + what), pos_(pos)
{
}

const std::vector<std::string>& supported_functions()
{
    static const std::vector<std::string> f = {"exp", "sin", "cos", "tan", "sinh", "cosh", "tanh", "coth", "sqrt"};
    return f;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(const std::string& s, const ParseOptions& o) : s_(s), opt_(o) {}

    ExprPtr run()
    {
        skip();
        if (at_end()) fail(ErrorKind::SyntaxError, "empty expression");
        ExprPtr e = expr();
        skip();
        if (!at_end()) fail(ErrorKind::SyntaxError, std::string("unexpected '") + s_[i_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(ErrorKind k, const std::string& m, std::optional<size_t> at = std::nullopt) const
    {
        throw ParseError(k, at.value_or(i_), m);
    }
    bool at_end() const { return i_ >= s_.size(); }
    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (!at_end() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    ExprPtr expr()
    {
        ExprPtr a = term();
        while (true) {
            skip();
            size_t p = i_;
            if (eat('+'))
                a = bin(Kind::Add, a, term(), p);
            else if (eat('-'))
                a = bin(Kind::Sub, a, term(), p);
            else
                return a;
        }
    }
    ExprPtr term()
    {
        ExprPtr a = unary();
        while (true) {
            skip();
            size_t p = i_;
            if (eat('*'))
                a = bin(Kind::Mul, a, unary(), p);
            else if (eat('/'))
                a = bin(Kind::Div, a, unary(), p);
            else
                return a;
        }
    }
    ExprPtr unary()
    {
        skip();
        size_t p = i_;
        if (eat('-')) {
            auto e = node(Kind::Neg, p);
            e->args = {unary()};
            return e;
        }
        if (eat('+')) return unary();
        return power();
    }
    ExprPtr power()
    {
        ExprPtr b = primary();
        skip();
        size_t p = i_;
        if (!eat('^')) return b;
        long ex = exponent();
        auto e = node(Kind::Pow, p);
        e->exponent = ex;
        e->args = {b};
        skip();
        if (!at_end() && s_[i_] == '^') fail(ErrorKind::SyntaxError, "chained powers need parentheses");
        return e;
    }
    long exponent()
    {
        skip();
        bool paren = eat('(');
        skip();
        long sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        skip();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            fail(ErrorKind::SyntaxError, "exponent must be an integer literal");
        size_t st = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::string digits = s_.substr(st, i_ - st);
        if (digits.size() > 6) fail(ErrorKind::SyntaxError, "exponent too large", st);
        if (paren && !eat(')')) fail(ErrorKind::SyntaxError, "expected ')'");
        return sign * std::stol(digits);
    }
    ExprPtr primary()
    {
        skip();
        if (at_end()) fail(ErrorKind::SyntaxError, "unexpected end of input");
        size_t p = i_;
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (!at_end() && (s_[i_] == '.' || s_[i_] == 'e' || s_[i_] == 'E'))
                fail(ErrorKind::SyntaxError, "only integer and p/q literals are allowed");
            auto e = node(Kind::Number, p);
            e->value = QRat(s_.substr(p, i_ - p));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string id = s_.substr(p, i_ - p);
            skip();
            if (!at_end() && s_[i_] == '(') {
                const auto& fs = supported_functions();
                if (std::find(fs.begin(), fs.end(), id) == fs.end())
                    fail(ErrorKind::UnsupportedFunction, "unsupported function '" + id + "'", p);
                ++i_;
                ExprPtr arg = expr();
                if (!eat(')')) fail(ErrorKind::SyntaxError, "expected ')'");
                auto e = node(Kind::Call, p);
                e->name = id;
                e->args = {arg};
                return e;
            }
            if (id == "i") return node(Kind::ImagUnit, p);
            if (id == opt_.var || std::find(opt_.params.begin(), opt_.params.end(), id) != opt_.params.end()) {
                auto e = node(Kind::Symbol, p);
                e->name = id;
                return e;
            }
            const auto& fs = supported_functions();
            if (std::find(fs.begin(), fs.end(), id) != fs.end())
                fail(ErrorKind::SyntaxError, "function '" + id + "' needs an argument", p);
            fail(ErrorKind::SyntaxError, "unknown identifier '" + id + "' (variable is " + opt_.var + ")", p);
        }
        if (c == '(') {
            ++i_;
            ExprPtr e = expr();
            if (!eat(')')) fail(ErrorKind::SyntaxError, "expected ')'");
            return e;
        }
        fail(ErrorKind::SyntaxError, std::string("unexpected '") + c + "'");
    }
    static ExprPtr bin(Kind k, ExprPtr a, ExprPtr b, size_t p)
    {
        auto e = node(k, p);
        e->args = {std::move(a), std::move(b)};
        return e;
    }

    const std::string& s_;
    const ParseOptions& opt_;
    size_t i_ = 0;
};

bool atomic(const Expr& e)
{
    return (e.kind == Kind::Number && e.value.get_den() == 1 && sgn(e.value) >= 0) || e.kind == Kind::ImagUnit ||
           e.kind == Kind::Symbol || e.kind == Kind::Call;
}

void print_to(const Expr& e, std::string& out);

void print_wrapped(const Expr& e, bool wrap, std::string& out)
{
    if (wrap) out += "(";
    print_to(e, out);
    if (wrap) out += ")";
}

void print_to(const Expr& e, std::string& out)
{
    auto is = [](const Expr& x, std::initializer_list<Kind> ks) {
        return std::find(ks.begin(), ks.end(), x.kind) != ks.end();
    };
    switch (e.kind) {
    case Kind::Number:
        if (e.value.get_den() == 1 && sgn(e.value) >= 0)
            out += e.value.get_str();
        else
            out += "(" + e.value.get_str() + ")";
        return;
    case Kind::ImagUnit: out += "i"; return;
    case Kind::Symbol: out += e.name; return;
    case Kind::Call:
        out += e.name + "(";
        print_to(*e.args[0], out);
        out += ")";
        return;
    case Kind::Neg:
        out += "-";
        print_wrapped(*e.args[0], is(*e.args[0], {Kind::Add, Kind::Sub, Kind::Mul, Kind::Div}), out);
        return;
    case Kind::Add:
    case Kind::Sub:
        print_to(*e.args[0], out);
        out += e.kind == Kind::Add ? "+" : "-";
        print_wrapped(*e.args[1], is(*e.args[1], {Kind::Add, Kind::Sub}), out);
        return;
    case Kind::Mul:
    case Kind::Div:
        print_wrapped(*e.args[0], is(*e.args[0], {Kind::Add, Kind::Sub}), out);
        out += e.kind == Kind::Mul ? "*" : "/";
        print_wrapped(*e.args[1], is(*e.args[1], {Kind::Add, Kind::Sub, Kind::Mul, Kind::Div}), out);
        return;
    case Kind::Pow:
        print_wrapped(*e.args[0], !atomic(*e.args[0]), out);
        out += "^";
        out += e.exponent < 0 ? "(" + std::to_string(e.exponent) + ")" : std::to_string(e.exponent);
        return;
    }
}

}  // namespace

ExprPtr parse(const std::string& text, const ParseOptions& opt) { return Parser(text, opt).run(); }

std::string print(const ExprPtr& e)
{
    std::string out;
    print_to(*e, out);
    return out;
}

bool same_tree(const ExprPtr& a, const ExprPtr& b)
{
    if (a->kind != b->kind || a->args.size() != b->args.size()) return false;
    switch (a->kind) {
    case Kind::Number:
        if (a->value != b->value) return false;
        break;
    case Kind::Symbol:
    case Kind::Call:
        if (a->name != b->name) return false;
        break;
    case Kind::Pow:
        if (a->exponent != b->exponent) return false;
        break;
    default: break;
    }
    for (size_t i = 0; i < a->args.size(); ++i)
        if (!same_tree(a->args[i], b->args[i])) return false;
    return true;
}

// ---------------------------------------------------------------- normalization

namespace {

const RatFunc kX = RatFunc::x();

template <class F>
void visit(const Expr& e, F&& f)
{
    f(e);
    for (auto& a : e.args) visit(*a, f);
}

// rational value of an atom-free expression in the variable
RatFunc rational_value(const Expr& e)
{
    switch (e.kind) {
    case Kind::Number: return RatFunc(Constant(e.value));
    case Kind::ImagUnit: return RatFunc(Constant::I());
    case Kind::Symbol: return kX;
    case Kind::Neg: return -rational_value(*e.args[0]);
    case Kind::Add: return rational_value(*e.args[0]) + rational_value(*e.args[1]);
    case Kind::Sub: return rational_value(*e.args[0]) - rational_value(*e.args[1]);
    case Kind::Mul: return rational_value(*e.args[0]) * rational_value(*e.args[1]);
    case Kind::Div: {
        RatFunc d = rational_value(*e.args[1]);
        if (d.is_zero()) throw ParseError(ErrorKind::DivisionByZero, e.pos, "division by zero");
        return rational_value(*e.args[0]) / d;
    }
    case Kind::Pow: {
        RatFunc b = rational_value(*e.args[0]);
        if (e.exponent < 0) {
            if (b.is_zero()) throw ParseError(ErrorKind::DivisionByZero, e.pos, "zero to a negative power");
            return RatFunc(1) / pow(b, static_cast<int>(-e.exponent));
        }
        return pow(b, static_cast<int>(e.exponent));
    }
    case Kind::Call: throw ParseError(ErrorKind::MixedAtoms, e.pos, "function call inside an atom argument");
    }
    return RatFunc();
}

enum class Family { None, Exp, Circular, Hyperbolic, Sqrt };

struct AtomScan {
    Family family = Family::None;
    std::set<std::string> fns;
    std::vector<Constant> rates;  // distinct exp rates in first-seen order
    std::optional<Poly> sqrt_arg;
    bool bare_symbol = false;     // the variable appears outside atom arguments
};

Family family_of_fn(const std::string& f)
{
    if (f == "exp") return Family::Exp;
    if (f == "sin" || f == "cos" || f == "tan") return Family::Circular;
    if (f == "sqrt") return Family::Sqrt;
    return Family::Hyperbolic;
}

void scan(const Expr& e, AtomScan& s)
{
    if (e.kind == Kind::Symbol) {
        s.bare_symbol = true;
        return;
    }
    if (e.kind != Kind::Call) {
        for (auto& a : e.args) scan(*a, s);
        return;
    }
    Family f = family_of_fn(e.name);
    if (s.family != Family::None && s.family != f)
        throw ParseError(ErrorKind::MixedAtoms, e.pos, "atoms from different families: " + *s.fns.begin() + " and " + e.name);
    s.family = f;
    s.fns.insert(e.name);
    const Expr& arg = *e.args[0];
    bool nested = false;
    visit(arg, [&](const Expr& n) { nested |= n.kind == Kind::Call; });
    if (nested) throw ParseError(ErrorKind::UnsupportedFunction, arg.pos, "nested function calls are not supported");
    RatFunc a = rational_value(arg);
    if (f == Family::Exp) {
        if (!a.is_polynomial() || a.num().degree() != 1 || !a.num().coeff(0).is_zero())
            throw ParseError(ErrorKind::UnsupportedFunction, arg.pos, "exp argument must be c*x with c rational");
        Constant c = a.num().coeff(1);
        if (std::find(s.rates.begin(), s.rates.end(), c) == s.rates.end()) s.rates.push_back(c);
    } else if (f == Family::Sqrt) {
        Poly p = a.is_polynomial() ? a.num() : Poly();
        static const Poly pats[] = {Poly(std::vector<Constant>{1, 0, 1}), Poly(std::vector<Constant>{-1, 0, 1}),
                                    Poly(std::vector<Constant>{1, 0, -1})};
        bool ok = std::find(std::begin(pats), std::end(pats), p) != std::end(pats);
        if (!ok)
            throw ParseError(ErrorKind::UnsupportedSqrtPattern, arg.pos,
                             "sqrt argument must be 1+x^2, x^2-1 or 1-x^2, got " + a.to_string());
        if (s.sqrt_arg && *s.sqrt_arg != p)
            throw ParseError(ErrorKind::MixedAtoms, e.pos, "two different sqrt patterns");
        s.sqrt_arg = p;
    } else {
        if (a != kX) throw ParseError(ErrorKind::UnsupportedFunction, arg.pos, e.name + " argument must be x");
    }
}

// value of an expression in C(z, s) with a leaf rule for the variable and for calls
struct HatEval {
    const HatField& F;
    std::function<HatElem(const Expr&)> leaf;

    HatElem operator()(const Expr& e) const
    {
        switch (e.kind) {
        case Kind::Number: return HatElem(RatFunc(Constant(e.value)));
        case Kind::ImagUnit: return HatElem(RatFunc(Constant::I()));
        case Kind::Symbol:
        case Kind::Call: return leaf(e);
        case Kind::Neg: return F.sub(HatElem(), (*this)(*e.args[0]));
        case Kind::Add: return F.add((*this)(*e.args[0]), (*this)(*e.args[1]));
        case Kind::Sub: return F.sub((*this)(*e.args[0]), (*this)(*e.args[1]));
        case Kind::Mul: return F.mul((*this)(*e.args[0]), (*this)(*e.args[1]));
        case Kind::Div: {
            HatElem d = (*this)(*e.args[1]);
            if (F.normalize(d).is_zero()) throw ParseError(ErrorKind::DivisionByZero, e.pos, "division by zero");
            return F.div((*this)(*e.args[0]), d);
        }
        case Kind::Pow: {
            HatElem b = (*this)(*e.args[0]);
            long n = e.exponent < 0 ? -e.exponent : e.exponent;
            HatElem acc(RatFunc(1));
            for (long k = 0; k < n; ++k) acc = F.mul(acc, b);
            if (e.exponent < 0) {
                if (F.normalize(acc).is_zero())
                    throw ParseError(ErrorKind::DivisionByZero, e.pos, "zero to a negative power");
                acc = F.div(HatElem(RatFunc(1)), acc);
            }
            return acc;
        }
        }
        return HatElem();
    }
};

}  // namespace

NormalizedInput normalize(const ExprPtr& e, const std::string& var)
{
    NormalizedInput out;
    out.variable = var;
    AtomScan s;
    scan(*e, s);
    if (s.family == Family::None) {
        out.f = rational_value(*e);
        return out;
    }
    if (var != "x") throw ParseError(ErrorKind::UnsupportedFunction, e->pos, "atoms are only accepted in x input");
    RatFunc Z = RatFunc::x();
    HamiltonianChange ch;
    std::map<std::string, HatElem> value;  // atom name -> element of C(z, s)
    HatElem xval;
    bool x_allowed = false;
    const HatElem S(RatFunc(), RatFunc(1));
    switch (s.family) {
    case Family::Exp: {
        ExponentialAlgebrization ea = exponential_change(s.rates);
        ch = ea.change;
        out.exp_powers = ea.m;
        break;
    }
    case Family::Circular:
        if (s.fns.count("sin")) {
            ch = change_for_atom(Atom::Sin);
            value["sin"] = HatElem(Z);
            value["cos"] = S;
        } else if (s.fns.count("cos")) {
            ch = change_for_atom(Atom::Cos);
            value["cos"] = HatElem(Z);
            value["sin"] = HatElem(RatFunc(), RatFunc(-1));  // dz/dx = -sin x
        } else {
            ch = change_for_atom(Atom::Tan);
            value["tan"] = HatElem(Z);
        }
        break;
    case Family::Hyperbolic:
        if (s.fns.count("sinh")) {
            ch = change_for_atom(Atom::Sinh);
            value["sinh"] = HatElem(Z);
            value["cosh"] = S;
        } else if (s.fns.count("cosh")) {
            ch = change_for_atom(Atom::Cosh);
            value["cosh"] = HatElem(Z);
            value["sinh"] = S;
        } else if (s.fns.count("tanh")) {
            ch = change_for_atom(Atom::Tanh);
            value["tanh"] = HatElem(Z);
            value["coth"] = HatElem(RatFunc(1) / Z);
        } else {
            ch = change_for_atom(Atom::Coth);
            value["coth"] = HatElem(Z);
        }
        break;
    case Family::Sqrt: {
        // z = sqrt(q(x)), z dz/dx = q'(x)/2 so x = +-z s
        const Poly& q = *s.sqrt_arg;
        Constant c2 = q.coeff(2), c0 = q.coeff(0);
        RatFunc x2 = (Z * Z - RatFunc(c0)) / RatFunc(c2);
        std::string desc = c2 == Constant(1) ? (c0 == Constant(1) ? "sqrt(1+x^2)" : "sqrt(x^2-1)") : "sqrt(1-x^2)";
        ch = custom_change(RatFunc(c2) * RatFunc(c2) * x2 / (Z * Z), std::nullopt, {}, desc);
        value["sqrt"] = HatElem(Z);
        xval = HatElem(RatFunc(), RatFunc(c2) * Z);
        x_allowed = true;
        break;
    }
    case Family::None: break;
    }
    if (s.bare_symbol && !x_allowed)
        throw ParseError(ErrorKind::MixedAtoms, e->pos, "the variable x appears outside the atom " + *s.fns.begin());
    HatField F(ch);
    if (ch.atom == Atom::Sin) value["tan"] = F.div(HatElem(Z), S);
    if (ch.atom == Atom::Cos) value["tan"] = F.div(value["sin"], HatElem(Z));
    if (ch.atom == Atom::Sinh) {
        value["tanh"] = F.div(HatElem(Z), S);
        value["coth"] = F.div(S, HatElem(Z));
    }
    if (ch.atom == Atom::Cosh) {
        value["tanh"] = F.div(S, HatElem(Z));
        value["coth"] = F.div(HatElem(Z), S);
    }
    std::vector<Constant> rates = s.rates;
    HatEval ev{F, [&](const Expr& n) -> HatElem {
                   if (n.kind == Kind::Symbol) return xval;
                   if (n.name == "exp") {
                       Constant c = rational_value(*n.args[0]).num().coeff(1);
                       size_t k = std::find(rates.begin(), rates.end(), c) - rates.begin();
                       long m = out.exp_powers[k];
                       return HatElem(m >= 0 ? pow(Z, static_cast<int>(m)) : RatFunc(1) / pow(Z, static_cast<int>(-m)));
                   }
                   auto it = value.find(n.name);
                   if (it == value.end())
                       throw ParseError(ErrorKind::MixedAtoms, n.pos, n.name + " is not rational over " + ch.z_of_x());
                   return it->second;
               }};
    HatElem v = F.normalize(ev(*e));
    if (!v.b.is_zero())
        throw ParseError(ErrorKind::UnsupportedSqrtPattern, e->pos,
                         "expression is not rational in z = " + ch.z_of_x() + " (odd in dz/dx)");
    out.f = v.a;
    out.change = ch;
    out.variable = "z";
    return out;
}

std::vector<RatFunc> evaluate_with_parameter(const ExprPtr& e, const std::string& var, const std::string& param)
{
    using PV = std::vector<RatFunc>;
    auto trim = [](PV v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        return v;
    };
    auto add = [&](const PV& a, const PV& b, int sg) {
        PV r(std::max(a.size(), b.size()));
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] += RatFunc(sg) * b[i];
        return trim(r);
    };
    auto mul = [&](const PV& a, const PV& b) {
        if (a.empty() || b.empty()) return PV{};
        PV r(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return trim(r);
    };
    std::function<PV(const Expr&)> go = [&](const Expr& n) -> PV {
        switch (n.kind) {
        case Kind::Number: return trim({RatFunc(Constant(n.value))});
        case Kind::ImagUnit: return {RatFunc(Constant::I())};
        case Kind::Symbol:
            if (n.name == param) return {RatFunc(), RatFunc(1)};
            if (n.name == var) return {RatFunc::x()};
            throw ParseError(ErrorKind::SyntaxError, n.pos, "unknown symbol " + n.name);
        case Kind::Neg: return add({}, go(*n.args[0]), -1);
        case Kind::Add: return add(go(*n.args[0]), go(*n.args[1]), 1);
        case Kind::Sub: return add(go(*n.args[0]), go(*n.args[1]), -1);
        case Kind::Mul: return mul(go(*n.args[0]), go(*n.args[1]));
        case Kind::Div: {
            PV d = go(*n.args[1]);
            if (d.size() != 1)
                throw ParseError(ErrorKind::InvalidArgument, n.pos, "division by an expression in the parameter");
            PV a = go(*n.args[0]);
            for (auto& t : a) t /= d[0];
            return a;
        }
        case Kind::Pow: {
            PV b = go(*n.args[0]);
            if (n.exponent < 0) {
                if (b.size() != 1)
                    throw ParseError(ErrorKind::InvalidArgument, n.pos, "negative power of the parameter");
                return {RatFunc(1) / pow(b[0], static_cast<int>(-n.exponent))};
            }
            PV acc{RatFunc(1)};
            for (long k = 0; k < n.exponent; ++k) acc = mul(acc, b);
            return acc;
        }
        case Kind::Call: throw ParseError(ErrorKind::UnsupportedFunction, n.pos, "atoms are not accepted here");
        }
        return {};
    };
    PV v = go(*e);
    if (v.empty()) v.push_back(RatFunc());
    return v;
}


Constant parse_constant(const std::string& text)
{
    NormalizedInput n = normalize(parse(text, ParseOptions{"x", {}}), "x");
    if (n.change || n.f.num().degree() > 0 || n.f.den().degree() > 0)
        raise(ErrorKind::InvalidArgument, "expected a constant: " + text);
    return n.f.num().coeff(0) / n.f.den().coeff(0);
}

// ---------------------------------------------------------------- commands

namespace {

using ojson = nlohmann::ordered_json;

std::string paren_constant(const Constant& c)
{
    std::string s = to_string(c);
    bool simple = s.find_first_of("+-*/", 1) == std::string::npos;
    return simple ? s : "(" + s + ")";
}

std::string integral_string(const RatFunc& omega, const std::string& var)
{
    PartialFractions pf = partial_fractions(omega);
    RatFunc rational(pf.poly_part.integral());
    std::string logs;
    for (auto& t : pf.terms) {
        RatFunc lin(Poly::linear(t.root));
        for (size_t j = 1; j < t.coeffs.size(); ++j)
            rational -= RatFunc(t.coeffs[j] / Constant(static_cast<long>(j))) / pow(lin, static_cast<int>(j));
        if (t.coeffs.empty() || t.coeffs[0].is_zero()) continue;
        std::string term = (t.coeffs[0].is_one() ? "" : paren_constant(t.coeffs[0]) + "*") + "log(" +
                           Poly::linear(t.root).to_string(var) + ")";
        logs += (logs.empty() ? "" : " + ") + term;
    }
    if (logs.empty()) return rational.to_string(var);
    if (rational.is_zero()) return logs;
    return rational.to_string(var) + " + " + logs;
}

SolutionView solution_view(const HyperexpSolution& s, const std::string& var, std::vector<std::string>& warnings)
{
    SolutionView v;
    v.multiplier = s.multiplier.to_string(var);
    v.omega = s.omega.to_string(var);
    v.algebraic_degree = s.algebraic_degree;
    try {
        v.omega_partial_fractions = partial_fractions(s.omega).to_string(var);
        v.omega_integral = integral_string(s.omega, var);
    } catch (const Error& e) {
        if (!e.unsupported()) throw;
        v.omega_partial_fractions = v.omega;
        warnings.push_back(std::string("partial fractions unavailable: ") + e.what());
    }
    for (auto& c : s.minpoly) v.minimal_polynomial.push_back(c.to_string(var));
    return v;
}

struct Equation {
    ReducedODE eq;
    std::string var = "x";
    std::optional<HamiltonianChange> change;
    std::optional<ReducedAlgebrizedSchrodinger> ras;
    NormalizedInput input;
    bool from_potential = false;
    Constant lambda;
};

NormalizedInput read_expression(const std::string& text, const std::string& var)
{
    if (var != "x" && var != "z") raise(ErrorKind::InvalidArgument, "variable must be x or z");
    return normalize(parse(text, ParseOptions{var, {}}), var);
}

ojson change_json(const HamiltonianChange& ch)
{
    ojson j;
    j["atom"] = atom_name(ch.atom);
    j["z"] = ch.z_of_x();
    j["alpha"] = ch.alpha.to_string("z");
    if (ch.sqrt_alpha) j["sqrt_alpha"] = ch.sqrt_alpha->to_string("z");
    return j;
}

Equation build_equation(const AnalysisRequest& req, Report& rep)
{
    if (req.potential.has_value() == req.r.has_value())
        raise(ErrorKind::InvalidArgument, "give exactly one of --potential and --r");
    Equation E;
    E.lambda = req.lambda.value_or(Constant(0));
    const std::string& text = req.potential ? *req.potential : *req.r;
    ExprPtr ast = parse(text, ParseOptions{req.var, {}});
    E.input = normalize(ast, req.var);
    E.var = E.input.variable;
    rep.input[req.potential ? "potential" : "r"] = print(ast);
    rep.input["variable"] = req.var;
    if (req.lambda) rep.input["lambda"] = constant_json(*req.lambda);
    if (E.input.change) {
        E.change = E.input.change;
        rep.input["change"] = change_json(*E.change);
        rep.input["normalized"] = E.input.f.to_string("z");
    }
    if (req.potential) {
        E.from_potential = true;
        if (E.change) {
            E.ras = reduced_algebrized_schrodinger(E.input.f, *E.change);
            E.eq = E.ras->reduced(E.lambda);
        } else {
            E.eq = ReducedODE{E.input.f - RatFunc(E.lambda)};
        }
    } else {
        if (req.lambda) rep.warnings.push_back("--lambda is ignored with --r");
        if (E.change) {
            AlgebrizedODE a = algebrize_reduced(E.input.f, *E.change);
            if (a.field_extension) rep.warnings.push_back("coefficients lie in C(z, sqrt(alpha)); analysis over C(z)");
            E.eq = reduce_to_normal(a.eq).first;
        } else {
            E.eq = ReducedODE{E.input.f};
        }
    }
    rep.input["reduced_r"] = E.eq.r.to_string(E.var);
    return E;
}

void fill_kovacic(const KovacicReport& kr, const std::string& var, Report& rep, bool with_solutions)
{
    rep.case_reached = kr.case_reached;
    rep.galois_group = kr.group.to_string();
    rep.certainty = kr.group.certainty == Certainty::Exact ? "exact" : "upper_bound";
    if (with_solutions)
        for (auto& s : kr.solutions) rep.solutions.push_back(solution_view(s, var, rep.warnings));
    if (kr.second_solution_formula) rep.second_solution = *kr.second_solution_formula;
    for (auto& t : kr.trace)
        rep.trace.push_back("case " + std::to_string(t.kcase) + " " + t.step + ": " + t.detail);
}

RatFunc seed_from_kovacic(const RatFunc& V, const Constant& lambda)
{
    KovacicReport kr = run_full(ReducedODE{V - RatFunc(lambda)});
    for (auto& s : kr.solutions)
        if (s.algebraic_degree == 1) return s.logderiv();
    raise(ErrorKind::SeedNotASolution, "no hyperexponential seed at lambda = " + to_string(lambda));
}

RatFunc rational_input(const AnalysisRequest& req, Report& rep, const char* what)
{
    if (!req.potential) raise(ErrorKind::InvalidArgument, std::string(what) + " needs --potential");
    ExprPtr ast = parse(*req.potential, ParseOptions{req.var, {}});
    NormalizedInput n = normalize(ast, req.var);
    if (n.change) raise(ErrorKind::InvalidArgument, std::string(what) + " needs a rational potential");
    rep.input["potential"] = print(ast);
    rep.input["variable"] = req.var;
    return n.f;
}

void cmd_solve(const AnalysisRequest& req, Report& rep, bool with_solutions)
{
    Equation E = build_equation(req, rep);
    fill_kovacic(run_full(E.eq), E.var, rep, with_solutions);
}

void cmd_eigenring(const AnalysisRequest& req, Report& rep)
{
    Equation E = build_equation(req, rep);
    EigenringBasis B = eigenring_of_reduced(E.eq, req.bounds);
    rep.eigenring_dimension = B.dimension;
    for (auto& el : B.elements) rep.eigenring_basis.push_back(el.to_string(E.var));
    rep.details["verdict"] = dimension_verdict_name(classify_by_dimension(B));
    rep.details["bounds"] = {{"boost", req.bounds.max_pole_order_boost}, {"deg", req.bounds.max_numerator_degree}};
    if (B.ansatz_exhausted) rep.warnings.push_back("ansatz bound reached: dimension is a lower bound");
    fill_kovacic(run_full(E.eq), E.var, rep, false);
}

void cmd_darboux(const AnalysisRequest& req, Report& rep)
{
    RatFunc V = rational_input(req, rep, "darboux");
    Constant l1 = !req.seed_lambdas.empty() ? req.seed_lambdas[0] : Constant(0);
    RatFunc u;
    if (!req.seeds.empty()) {
        u = read_expression(req.seeds[0], req.var).f;
        rep.input["seed"] = req.seeds[0];
    } else {
        u = seed_from_kovacic(V, l1);
        rep.warnings.push_back("seed taken from the algorithm at the seed eigenvalue");
    }
    rep.input["seed_lambda"] = constant_json(l1);
    DarbouxResult d = darboux_schrodinger(V, l1, u);
    rep.details["seed_logderiv"] = d.seed_logderiv.to_string(req.var);
    rep.details["superpotential"] = d.W.W.to_string(req.var);
    rep.details["v_minus"] = d.v_minus.to_string(req.var);
    rep.details["v_plus"] = d.v_plus.to_string(req.var);
    if (req.lambda) {
        KovacicReport a = run_full(ReducedODE{d.v_minus - RatFunc(*req.lambda)});
        KovacicReport b = run_full(ReducedODE{d.v_plus - RatFunc(*req.lambda)});
        rep.details["group_v_minus"] = a.group.to_string();
        rep.details["group_v_plus"] = b.group.to_string();
        rep.input["lambda"] = constant_json(*req.lambda);
        fill_kovacic(b, req.var, rep, true);
    }
}

void cmd_crum(const AnalysisRequest& req, Report& rep)
{
    RatFunc V = rational_input(req, rep, "crum");
    std::vector<CrumSeed> seeds;
    if (!req.seeds.empty()) {
        if (req.seeds.size() != req.seed_lambdas.size())
            raise(ErrorKind::InvalidArgument, "each --seed needs a matching --seed-lambda");
        for (size_t i = 0; i < req.seeds.size(); ++i)
            seeds.push_back({req.seed_lambdas[i], HyperexpFunction{RatFunc(1), read_expression(req.seeds[i], req.var).f}});
    } else {
        if (req.seed_lambdas.empty()) raise(ErrorKind::InvalidArgument, "crum needs --seed-lambda");
        for (auto& l : req.seed_lambdas) seeds.push_back({l, HyperexpFunction{RatFunc(1), seed_from_kovacic(V, l)}});
    }
    ojson sj = ojson::array();
    for (auto& s : seeds) sj.push_back({{"lambda", constant_json(s.lambda)}, {"logderiv", s.psi.logderiv().to_string(req.var)}});
    rep.input["seeds"] = sj;
    CrumResult c = crum_iteration(V, seeds);
    rep.details["new_potential"] = c.new_potential.to_string(req.var);
    rep.details["wronskian_factor"] = c.wronskian_factor.to_string(req.var);
    rep.details["wronskian_omega"] = c.wronskian_omega.to_string(req.var);
    rep.details["solution_map"] = c.solution_map();
}

void cmd_shape(const AnalysisRequest& req, Report& rep)
{
    if (!req.potential) raise(ErrorKind::InvalidArgument, "shape needs --potential W(x; a)");
    ExprPtr ast = parse(*req.potential, ParseOptions{req.var, {"a"}});
    rep.input["superpotential"] = print(ast);
    rep.input["parameter"] = "a";
    ParamSuperpotential W{evaluate_with_parameter(ast, req.var, "a"), {}};
    ShapeInvarianceResult res;
    try {
        res = shape_invariance_check(W);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotShapeInvariant && e.kind() != ErrorKind::NonConstantRemainder) throw;
        rep.details["shape_invariant"] = false;
        rep.details["reason"] = e.what();
        return;
    }
    rep.details["shape_invariant"] = res.holds;
    if (!res.holds) return;
    rep.details["map"] = res.f_map.to_string();
    rep.details["free_shift"] = res.free_shift;
    rep.details["remainder"] = res.remainder.to_string("a0");
    rep.details["energy_formula"] = res.energy_formula;
    ojson en = ojson::array();
    for (auto& [n, E] : gendenshtein_spectrum(res, static_cast<int>(req.n_max)))
        en.push_back({{"n", n}, {"E", E.to_string("a0")}});
    rep.details["energies"] = en;
}

void cmd_algebrize(const AnalysisRequest& req, Report& rep)
{
    Equation E = build_equation(req, rep);
    if (!E.change) {
        rep.warnings.push_back("no transcendental atom: the input is already rational");
        return;
    }
    if (E.ras) {
        rep.details["V_hat"] = E.ras->V_hat.to_string("z");
        rep.details["script_W"] = E.ras->script_W.to_string("z");
        rep.details["script_V"] = E.ras->script_V.to_string("z");
        rep.details["V_bold"] = E.ras->V_bold.to_string("z");
        rep.details["coherent"] = E.ras->coherent();
    }
    rep.details["z_of_x"] = E.change->z_of_x();
    rep.details["exp_powers"] = E.input.exp_powers;
    rep.details["reduced_r"] = E.eq.r.to_string("z");
}

// a x^2 + 2 b x + c, A + B/x + C/x^2 recognition
void cmd_special(const AnalysisRequest& req, Report& rep)
{
    Equation E = build_equation(req, rep);
    const RatFunc& r = E.eq.r;
    auto rational = [](const Constant& c) { return c.is_rational(); };
    ojson sp;
    sp["family"] = "none";
    if (r.is_polynomial() && r.num().degree() == 2 && rational(r.num().coeff(0)) && rational(r.num().coeff(1)) &&
        rational(r.num().coeff(2))) {
        QRat a = r.num().coeff(2).to_qrat(), b = r.num().coeff(1).to_qrat() / 2, c = r.num().coeff(0).to_qrat();
        sp["family"] = "weber";
        sp["a"] = a.get_str();
        sp["b"] = b.get_str();
        sp["c"] = c.get_str();
        sp["criterion"] = weber_check(a, b, c);
    } else if (!r.is_polynomial()) {
        Poly d = r.den();
        bool monomial_den = d.degree() >= 1 && d.degree() <= 2 && d.low_degree() == d.degree();
        Poly n = r.num() * d.lc().inv();
        if (monomial_den && n.degree() <= 2) {
            // put over x^2
            if (d.degree() == 1) n = n * Poly::x();
            Constant A = n.coeff(2), B = n.coeff(1), C = n.coeff(0);
            std::optional<Constant> mu = try_sqrt(C + Constant(qrat(1, 4)));
            if (A.is_rational() && B.is_rational() && mu && mu->is_rational()) {
                if (A == Constant(qrat(1, 4))) {
                    sp["family"] = "whittaker";
                    sp["kappa"] = (-B).to_qrat().get_str();
                    sp["mu"] = mu->to_qrat().get_str();
                    sp["criterion"] = whittaker_check(-B.to_qrat(), mu->to_qrat());
                } else if (A == Constant(-1) && B.is_zero()) {
                    sp["family"] = "bessel";
                    sp["n"] = mu->to_qrat().get_str();
                    sp["criterion"] = bessel_check(mu->to_qrat());
                }
            }
        }
    }
    rep.details["special"] = sp;
    fill_kovacic(run_full(E.eq), E.var, rep, true);
}

void cmd_spectrum(const AnalysisRequest& req, Report& rep)
{
    if (!req.potential) raise(ErrorKind::InvalidArgument, "spectrum needs --potential");
    AnalysisRequest q = req;
    q.lambda.reset();
    Equation E = build_equation(q, rep);
    AlgebraicSpectrumReport sr;
    if (!E.change && E.input.f.is_polynomial() && E.input.f.num().degree() > 0 && !req.lambda) {
        sr = polynomial_spectrum(E.input.f.num(), req.n_max);
    } else {
        LambdaFamily fam = E.ras ? family_of(*E.ras) : schrodinger_family(E.input.f);
        SpectrumScanConfig cfg;
        cfg.n_max = req.n_max;
        if (req.lambda) cfg.lambda_window = std::vector<Constant>{*req.lambda};
        sr = scan_spectrum(fam, cfg);
    }
    rep.input["n_max"] = req.n_max;
    for (auto& e : sr.verified)
        rep.spectrum.push_back({e.lambda, e.n, e.branch, e.report.group.to_string(),
                                e.multiplier ? e.multiplier->to_string(E.var) : ""});
    rep.details["classification"] = solvability_name(sr.classification);
    rep.details["completeness"] = sr.case1_only ? "case-1 candidates only" : "complete for polynomial multipliers";
    if (sr.elimination_polynomials) {
        ojson ep = ojson::array();
        for (auto& p : *sr.elimination_polynomials) ep.push_back(p.to_string("lambda"));
        rep.details["elimination_polynomials"] = ep;
    }
    ojson rj = ojson::array();
    for (auto& r : sr.rejected) rj.push_back({{"lambda", constant_json(r.lambda)}, {"reason", r.reason}});
    rep.details["rejected"] = rj;
    for (auto& n : sr.notes) rep.warnings.push_back(n);
}

}  // namespace

const char* command_name(Command c)
{
    switch (c) {
    case Command::Solve: return "solve";
    case Command::Group: return "group";
    case Command::Eigenring: return "eigenring";
    case Command::Darboux: return "darboux";
    case Command::Crum: return "crum";
    case Command::Shape: return "shape";
    case Command::Algebrize: return "algebrize";
    case Command::Special: return "special";
    case Command::Spectrum: return "spectrum";
    }
    return "?";
}

Command command_from_name(const std::string& s)
{
    for (Command c : {Command::Solve, Command::Group, Command::Eigenring, Command::Darboux, Command::Crum,
                      Command::Shape, Command::Algebrize, Command::Special, Command::Spectrum})
        if (s == command_name(c)) return c;
    raise(ErrorKind::InvalidArgument, "unknown command " + s);
}

nlohmann::ordered_json constant_json(const Constant& c)
{
    ojson j;
    if (auto s = c.to_surd()) {
        j["rational"] = s->rational_part.get_str();
        j["radical_coeff"] = s->radical_coeff.get_str();
        j["radicand"] = s->radicand;
    } else {
        j["exact"] = to_string(c);
    }
    return j;
}

Report run_command(const AnalysisRequest& req)
{
    Report rep;
    rep.command = command_name(req.command);
    switch (req.command) {
    case Command::Solve: cmd_solve(req, rep, true); break;
    case Command::Group: cmd_solve(req, rep, false); break;
    case Command::Eigenring: cmd_eigenring(req, rep); break;
    case Command::Darboux: cmd_darboux(req, rep); break;
    case Command::Crum: cmd_crum(req, rep); break;
    case Command::Shape: cmd_shape(req, rep); break;
    case Command::Algebrize: cmd_algebrize(req, rep); break;
    case Command::Special: cmd_special(req, rep); break;
    case Command::Spectrum: cmd_spectrum(req, rep); break;
    }
    return rep;
}

namespace {

ojson report_json(const Report& rep)
{
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = rep.command;
    j["input"] = rep.input;
    j["case_reached"] = rep.case_reached ? ojson(*rep.case_reached) : ojson(nullptr);
    ojson sols = ojson::array();
    for (auto& s : rep.solutions) {
        ojson o;
        o["multiplier"] = s.multiplier;
        o["omega"] = s.omega;
        o["omega_partial_fractions"] = s.omega_partial_fractions;
        o["omega_integral"] = s.omega_integral;
        o["algebraic_degree"] = s.algebraic_degree;
        if (!s.minimal_polynomial.empty()) o["minimal_polynomial"] = s.minimal_polynomial;
        sols.push_back(o);
    }
    j["solutions"] = sols;
    if (rep.second_solution) j["second_solution"] = *rep.second_solution;
    j["galois_group"] = rep.galois_group ? ojson(*rep.galois_group) : ojson(nullptr);
    if (rep.certainty) j["group_certainty"] = *rep.certainty;
    ojson er;
    er["dimension"] = rep.eigenring_dimension ? ojson(*rep.eigenring_dimension) : ojson(nullptr);
    er["basis"] = rep.eigenring_basis;
    j["eigenring"] = er;
    ojson sp = ojson::array();
    for (auto& row : rep.spectrum) {
        ojson o;
        o["lambda"] = constant_json(row.lambda);
        o["n"] = row.n;
        o["branch"] = row.branch;
        o["group"] = row.group;
        o["multiplier"] = row.multiplier;
        sp.push_back(o);
    }
    j["spectrum"] = sp;
    j["details"] = rep.details;
    j["trace"] = rep.trace;
    j["warnings"] = rep.warnings;
    return j;
}

void text_value(std::ostringstream& os, const std::string& indent, const std::string& key, const ojson& v)
{
    if (v.is_object()) {
        os << indent << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it) text_value(os, indent + "  ", it.key(), it.value());
    } else if (v.is_array()) {
        os << indent << key << ":" << (v.empty() ? " (none)" : "") << "\n";
        for (size_t i = 0; i < v.size(); ++i) text_value(os, indent + "  ", "[" + std::to_string(i) + "]", v[i]);
    } else if (v.is_string()) {
        os << indent << key << ": " << v.get<std::string>() << "\n";
    } else {
        os << indent << key << ": " << v.dump() << "\n";
    }
}

}  // namespace

std::string emit_report(const Report& rep, OutputFormat fmt)
{
    ojson j = report_json(rep);
    if (fmt == OutputFormat::Json) return j.dump(2) + "\n";
    std::ostringstream os;
    os << "galois " << rep.command << " (schema " << kSchemaVersion << ")\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "schema_version" || it.key() == "command") continue;
        if (it.key() == "spectrum" && !rep.spectrum.empty()) {
            os << "spectrum:\n";
            for (auto& row : rep.spectrum)
                os << "  lambda = " << to_string(row.lambda) << "  n = " << row.n << "  branch " << row.branch
                   << "  group " << row.group << (row.multiplier.empty() ? "" : "  P = " + row.multiplier) << "\n";
            continue;
        }
        text_value(os, "", it.key(), it.value());
    }
    return os.str();
}

}  // namespace galois
