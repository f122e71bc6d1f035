#include "galois/algebrize.hpp"

#include <numeric>

namespace galois {

namespace {

RatFunc z() { return RatFunc::x(); }

std::string exp_string(const Constant& c)
{
    if (c.is_one()) return "exp(x)";
    if (c == Constant(-1)) return "exp(-x)";
    std::string s = to_string(c);
    if (!c.is_rational()) s = "(" + s + ")";
    return "exp(" + s + "*x)";
}

std::string paren(const std::string& s)
{
    for (char ch : s)
        if (ch == '+' || ch == '-' || ch == '*' || ch == '/') return "(" + s + ")";
    return s;
}

}  // namespace

const char* atom_name(Atom a)
{
    switch (a) {
    case Atom::Exp: return "exp";
    case Atom::Tan: return "tan";
    case Atom::Tanh: return "tanh";
    case Atom::Coth: return "coth";
    case Atom::Sin: return "sin";
    case Atom::Cos: return "cos";
    case Atom::Sinh: return "sinh";
    case Atom::Cosh: return "cosh";
    case Atom::Power: return "power";
    case Atom::Identity: return "identity";
    case Atom::Custom: return "custom";
    }
    return "?";
}

std::string HamiltonianChange::z_of_x() const
{
    switch (atom) {
    case Atom::Exp: return exp_string(rate);
    case Atom::Tan: return "tan(x)";
    case Atom::Tanh: return "tanh(x)";
    case Atom::Coth: return "coth(x)";
    case Atom::Sin: return "sin(x)";
    case Atom::Cos: return "cos(x)";
    case Atom::Sinh: return "sinh(x)";
    case Atom::Cosh: return "cosh(x)";
    case Atom::Power: return "x^" + paren(to_string(rate));
    case Atom::Identity: return "x";
    case Atom::Custom: return inverse_description;
    }
    return "?";
}

HamiltonianChange change_for_atom(Atom a, const Constant& rate)
{
    HamiltonianChange ch;
    ch.atom = a;
    RatFunc Z = z();
    switch (a) {
    case Atom::Exp:
        if (rate.is_zero()) raise(ErrorKind::InvalidArgument, "exponential rate must be nonzero");
        ch.rate = rate;
        ch.alpha = RatFunc(rate * rate) * Z * Z;
        ch.sqrt_alpha = RatFunc(rate) * Z;
        break;
    case Atom::Tan:
        ch.alpha = pow(RatFunc(1) + Z * Z, 2);
        ch.sqrt_alpha = RatFunc(1) + Z * Z;
        break;
    case Atom::Tanh:
    case Atom::Coth:
        ch.alpha = pow(RatFunc(1) - Z * Z, 2);
        ch.sqrt_alpha = RatFunc(1) - Z * Z;
        break;
    case Atom::Sin:
        ch.alpha = RatFunc(1) - Z * Z;
        break;
    case Atom::Cos:
        ch.alpha = RatFunc(1) - Z * Z;
        ch.sqrt_sign = -1;
        break;
    case Atom::Sinh:
        ch.alpha = RatFunc(1) + Z * Z;
        break;
    case Atom::Cosh:
        ch.alpha = Z * Z - RatFunc(1);
        break;
    case Atom::Power: {
        // z = x^k: dz/dx = k z^{(k-1)/k}
        if (!rate.is_integer() || rate.is_zero())
            raise(ErrorKind::UnsupportedAlpha, "power change needs a nonzero integer exponent");
        long k = rate.to_long();
        ch.rate = rate;
        if (2 % k != 0) raise(ErrorKind::UnsupportedAlpha, "alpha = k^2 z^(2-2/k) is not rational for k = " + std::to_string(k));
        long e = 2 - 2 / k;
        RatFunc zk = e >= 0 ? pow(Z, static_cast<int>(e)) : RatFunc(1) / pow(Z, static_cast<int>(-e));
        ch.alpha = RatFunc(Constant(k * k)) * zk;
        if (e % 2 == 0) {
            RatFunc h = e >= 0 ? pow(Z, static_cast<int>(e / 2)) : RatFunc(1) / pow(Z, static_cast<int>(-e / 2));
            ch.sqrt_alpha = RatFunc(Constant(k)) * h;
        } else {
            ch.sqrt_sign = k > 0 ? 1 : -1;
        }
        break;
    }
    case Atom::Identity:
        ch.alpha = RatFunc(1);
        ch.sqrt_alpha = RatFunc(1);
        break;
    case Atom::Custom:
        raise(ErrorKind::InvalidArgument, "use custom_change for custom atoms");
    }
    ch.inverse_description = "z = " + ch.z_of_x();
    return ch;
}

HamiltonianChange custom_change(const RatFunc& alpha, const std::optional<RatFunc>& sqrt_alpha,
                                const Derivation& zdiff, const std::string& description)
{
    HamiltonianChange ch;
    ch.atom = Atom::Custom;
    ch.alpha = alpha;
    ch.sqrt_alpha = sqrt_alpha;
    ch.zdiff = zdiff;
    ch.inverse_description = description;
    if (sqrt_alpha && *sqrt_alpha * *sqrt_alpha != alpha)
        raise(ErrorKind::InvalidArgument, "sqrt_alpha does not square to alpha");
    return ch;
}

// ---- hat calculus ----

HatElem HatField::sqrt_alpha() const { return normalize(HatElem(RatFunc(), RatFunc(1))); }

HatElem HatField::normalize(const HatElem& e) const
{
    if (ch_.sqrt_alpha && !e.b.is_zero()) return HatElem(e.a + e.b * *ch_.sqrt_alpha);
    return e;
}

HatElem HatField::add(const HatElem& x, const HatElem& y) const { return normalize(HatElem(x.a + y.a, x.b + y.b)); }
HatElem HatField::sub(const HatElem& x, const HatElem& y) const { return normalize(HatElem(x.a - y.a, x.b - y.b)); }

HatElem HatField::mul(const HatElem& x, const HatElem& y) const
{
    HatElem X = normalize(x), Y = normalize(y);
    return normalize(HatElem(X.a * Y.a + ch_.alpha * X.b * Y.b, X.a * Y.b + X.b * Y.a));
}

HatElem HatField::div(const HatElem& x, const HatElem& y) const
{
    HatElem Y = normalize(y);
    RatFunc nrm = Y.a * Y.a - ch_.alpha * Y.b * Y.b;
    if (nrm.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero in C(z, sqrt alpha)");
    HatElem conj(Y.a / nrm, -Y.b / nrm);
    return mul(x, conj);
}

HatElem HatField::d(const HatElem& x) const
{
    HatElem X = normalize(x);
    const Derivation& D = ch_.zdiff;
    // s * d(a + b s) = alpha db + b dalpha / 2 + da s
    return normalize(HatElem(ch_.alpha * D(X.b) + X.b * D(ch_.alpha) / RatFunc(2), D(X.a)));
}

HatElem HatField::dn(const HatElem& x, int n) const
{
    HatElem r = normalize(x);
    for (int i = 0; i < n; ++i) r = d(r);
    return r;
}

bool HatField::equal(const HatElem& x, const HatElem& y) const { return normalize(x) == normalize(y); }

// ---- reduced algebrization ----

AlgebrizedODE algebrize_reduced(const RatFunc& f, const HamiltonianChange& change)
{
    if (change.alpha.is_zero()) raise(ErrorKind::UnsupportedAlpha, "alpha must be nonzero");
    AlgebrizedODE out;
    out.change = change;
    // dalpha/alpha and f/alpha are rational for rational inputs
    out.eq.a = change.dalpha() / (RatFunc(2) * change.alpha);
    out.eq.b = -f / change.alpha;
    out.field_extension = !change.sqrt_alpha_rational();
    return out;
}

ExponentialAlgebrization exponential_change(const std::vector<Constant>& exponents)
{
    if (exponents.empty()) raise(ErrorKind::InvalidArgument, "no exponents");
    for (const auto& e : exponents)
        if (e.is_zero()) raise(ErrorKind::InvalidArgument, "zero exponent");
    const Constant& l1 = exponents.front();
    std::vector<QRat> ratios;
    for (const auto& e : exponents) {
        Constant r = e / l1;
        if (!r.is_rational())
            raise(ErrorKind::NonCommensurable, to_string(e) + " / " + to_string(l1) + " is not rational");
        ratios.push_back(r.to_qrat());
    }
    ZInt D = 1;
    for (const auto& r : ratios) D = lcm(D, r.get_den());
    std::vector<ZInt> N;
    ZInt G = 0;
    for (const auto& r : ratios) {
        QRat v = r * QRat(D);
        N.push_back(v.get_num());
        G = gcd(G, v.get_num());
    }
    if (G < 0) G = -G;
    QRat gd(G, D);
    gd.canonicalize();
    Constant g = l1 * Constant(gd);
    ExponentialAlgebrization out;
    for (const auto& n : N) out.m.push_back(ZInt(n / G).get_si());
    if (g.is_rational()) {
        QRat c = g.to_qrat();
        out.lambda = Constant(QRat(c.get_num()));
        out.q = c.get_den().get_si();
    } else if (g.a().is_zero() && g.b().is_real()) {
        QRat c = g.b().re;
        out.lambda = Constant(GaussRat(), GaussRat(QRat(c.get_num())), g.radicand());
        out.q = c.get_den().get_si();
    } else {
        out.lambda = g;
        out.q = 1;
    }
    out.change = change_for_atom(Atom::Exp, g);
    return out;
}

ExponentialAlgebrization algebrize_exponential(const std::vector<Constant>& exponents,
                                               const std::function<RatFunc(const std::vector<RatFunc>&)>& g)
{
    ExponentialAlgebrization out = exponential_change(exponents);
    std::vector<RatFunc> atoms;
    for (long mi : out.m) atoms.push_back(mi >= 0 ? pow(z(), static_cast<int>(mi)) : RatFunc(1) / pow(z(), static_cast<int>(-mi)));
    out.ode = algebrize_reduced(g(atoms), out.change);
    return out;
}

AlgebrizedODE algebrize_general(const HatElem& a, const HatElem& b, const HamiltonianChange& change)
{
    HatField F(change);
    HatElem a_s = F.div(a, F.sqrt_alpha());
    HatElem bn = F.normalize(b);
    if (!a_s.is_rational()) raise(ErrorKind::IrrationalResidue, "sqrt(alpha) * a is not rational in z");
    if (!bn.is_rational()) raise(ErrorKind::IrrationalResidue, "b is not rational in z");
    AlgebrizedODE out;
    out.change = change;
    out.eq.a = change.dalpha() / (RatFunc(2) * change.alpha) + a_s.a;
    out.eq.b = bn.a / change.alpha;
    out.field_extension = !change.sqrt_alpha_rational();
    return out;
}

// ---- z = exp(int f) ----

namespace {

Constant avoid_poles_point(const std::vector<RatFunc>& fs, long start)
{
    for (long v = start;; ++v) {
        bool ok = true;
        for (const auto& f : fs)
            if (f.den().eval(Constant(v)).is_zero()) {
                ok = false;
                break;
            }
        if (ok) return Constant(v);
    }
}

// sum x_k(x) z_k(z) as a function of z alone; throws when it depends on x
RatFunc separable_x_free(const Separable& S)
{
    if (S.empty()) return RatFunc();
    std::vector<RatFunc> zs, xs;
    int bound = 1;
    for (const auto& t : S) {
        zs.push_back(t.z_part);
        xs.push_back(t.x_part);
        bound += std::max(0, t.z_part.num().degree()) + std::max(0, t.z_part.den().degree());
    }
    // d/dx of the sum vanishes at bound distinct z points
    long next = 1;
    for (int k = 0; k < bound; ++k) {
        Constant z0 = avoid_poles_point(zs, next);
        next = z0.to_long() + 1;
        RatFunc acc;
        for (const auto& t : S) acc += t.x_part.derivative() * RatFunc(t.z_part.eval(z0));
        if (!acc.is_zero()) raise(ErrorKind::IrrationalResidue, "coefficient still depends on x after the change");
    }
    Constant x0 = avoid_poles_point(xs, 1);
    RatFunc out;
    for (const auto& t : S) out += RatFunc(t.x_part.eval(x0)) * t.z_part;
    return out;
}

}  // namespace

std::pair<Separable, Separable> exp_integral_equation(const RatFunc& f, const RatFunc& a, const RatFunc& b)
{
    if (f.is_zero()) raise(ErrorKind::InvalidArgument, "f must be nonzero");
    Separable A{{-(f + f.derivative() / f), RatFunc(1)}, {f, z() * a}};
    Separable B{{f * f, z() * z() * b}};
    return {A, B};
}

LinODE2 algebrize_exp_integral(const RatFunc& f, const Separable& A, const Separable& B)
{
    if (f.is_zero()) raise(ErrorKind::InvalidArgument, "f must be nonzero");
    // dz/dx = f z: a = (A + f'/f + f) / (f z), b = B / (f z)^2
    Separable sa;
    for (const auto& t : A) sa.push_back({t.x_part / f, t.z_part / z()});
    sa.push_back({f.derivative() / (f * f), RatFunc(1) / z()});
    sa.push_back({RatFunc(1), RatFunc(1) / z()});
    Separable sb;
    for (const auto& t : B) sb.push_back({t.x_part / (f * f), t.z_part / (z() * z())});
    LinODE2 out;
    out.a = separable_x_free(sa);
    out.b = separable_x_free(sb);
    return out;
}

RiccatiEq algebrize_riccati(const HatElem& a, const HatElem& b, const HatElem& c, const HamiltonianChange& change)
{
    HatField F(change);
    HatElem s = F.sqrt_alpha();
    RiccatiEq out;
    RatFunc* dst[3] = {&out.c0, &out.c1, &out.c2};
    const HatElem* src[3] = {&a, &b, &c};
    for (int k = 0; k < 3; ++k) {
        HatElem q = F.div(*src[k], s);
        if (!q.is_rational()) raise(ErrorKind::IrrationalResidue, "Riccati coefficient over sqrt(alpha) is not rational");
        *dst[k] = q.a;
    }
    return out;
}

// ---- reduced algebrized Schrodinger ----

ReducedAlgebrizedSchrodinger reduced_algebrized_schrodinger(const RatFunc& V_hat, const HamiltonianChange& change)
{
    if (change.alpha.is_zero()) raise(ErrorKind::UnsupportedAlpha, "alpha must be nonzero");
    const Derivation& D = change.zdiff;
    ReducedAlgebrizedSchrodinger out;
    out.change = change;
    out.V_hat = V_hat;
    out.alpha = change.alpha;
    out.script_W = D(change.alpha) / (RatFunc(4) * change.alpha);
    out.script_V = D(out.script_W) + out.script_W * out.script_W;
    out.V_bold = out.script_V + V_hat / change.alpha;
    return out;
}

ReducedAlgebrizedSchrodinger reduced_algebrized_schrodinger(const RatFunc& V_hat, const RatFunc& alpha)
{
    return reduced_algebrized_schrodinger(V_hat, custom_change(alpha, std::nullopt));
}

LinODE2 ReducedAlgebrizedSchrodinger::hat_operator(const Constant& lambda) const
{
    const Derivation& D = change.zdiff;
    return LinODE2{D(alpha) / (RatFunc(2) * alpha), -(V_hat - RatFunc(lambda)) / alpha};
}

bool ReducedAlgebrizedSchrodinger::coherent() const
{
    const Derivation& D = change.zdiff;
    return script_W == D(alpha) / (RatFunc(4) * alpha) && script_V == D(script_W) + script_W * script_W &&
           V_bold * alpha - V_hat == alpha * script_V;
}

// ---- systems ----

AlgebrizedSystem algebrize_system(const HatMatrix& A, const HamiltonianChange& change)
{
    HatField F(change);
    HatElem s = F.sqrt_alpha();
    AlgebrizedSystem out;
    out.change = change;
    for (const auto& row : A) {
        std::vector<RatFunc> rh, rz;
        for (const auto& e : row) {
            HatElem n = F.normalize(e);
            HatElem q = F.div(n, s);
            if (!q.is_rational()) raise(ErrorKind::IrrationalResidue, "entry over sqrt(alpha) is not rational");
            rh.push_back(n.is_rational() ? n.a : RatFunc());
            rz.push_back(q.a);
        }
        out.A_hat.push_back(rh);
        out.A_z.push_back(rz);
    }
    return out;
}

std::vector<RatFunc> AlgebrizedSystem::residual(const std::vector<RatFunc>& Y) const
{
    std::vector<RatFunc> out;
    for (size_t i = 0; i < A_z.size(); ++i) {
        RatFunc acc = change.zdiff(Y[i]);
        for (size_t j = 0; j < Y.size(); ++j) acc += A_z[i][j] * Y[j];
        out.push_back(acc);
    }
    return out;
}

// ---- sqrt(alpha) parametrisation ----

std::optional<SqrtParametrization> sqrt_parametrization(const HamiltonianChange& change)
{
    RatFunc t = z();
    RatFunc one(1), two(2);
    SqrtParametrization p;
    if (change.sqrt_alpha) {
        p.z = t;
        p.s = *change.sqrt_alpha;
        p.t_of_x = change.z_of_x();
    } else if (change.alpha == one - z() * z()) {
        p.z = two * t / (one + t * t);
        p.s = (one - t * t) / (one + t * t);
        p.t_of_x = "tan(x/2)";
    } else if (change.alpha == one + z() * z()) {
        p.z = (t - one / t) / two;
        p.s = (t + one / t) / two;
        p.t_of_x = "exp(x)";
    } else if (change.alpha == z() * z() - one) {
        p.z = (t + one / t) / two;
        p.s = (t - one / t) / two;
        p.t_of_x = "exp(x)";
    } else if (change.alpha.is_polynomial() && change.alpha.num().degree() == 1 &&
               change.alpha.num().coeff(0).is_zero()) {
        // s^2 = c z with z = t^2 / c, s = t
        Constant c = change.alpha.num().coeff(1);
        p.z = t * t / RatFunc(c);
        p.s = t;
        p.t_of_x = paren(to_string(c / Constant(2))) + "*x";
    } else {
        return std::nullopt;
    }
    if (!change.sqrt_alpha) p.s = RatFunc(Constant(change.sqrt_sign)) * p.s;
    p.rho = p.s / p.z.derivative();
    return p;
}

LinODE2 hat_equation_over_extension(const HatElem& p, const HatElem& q, const HamiltonianChange& change,
                                    const SqrtParametrization& par)
{
    HatField F(change);
    auto to_t = [&](const HatElem& e) {
        HatElem n = F.normalize(e);
        return n.a.compose(par.z) + (n.b.is_zero() ? RatFunc() : n.b.compose(par.z) * par.s);
    };
    RatFunc P = to_t(p), Q = to_t(q);
    // hat d = rho d/dt: rho^2 y'' + (rho rho' + P rho) y' + Q y
    return LinODE2{par.rho.derivative() / par.rho + P / par.rho, Q / (par.rho * par.rho)};
}

// ---- quarter-power bookkeeping ----

RatFunc PowerProduct::logderiv() const
{
    RatFunc acc = omega;
    for (const auto& [f, e] : factors) acc += RatFunc(Constant(e)) * f.derivative() / f;
    return acc;
}

bool eigenfunction_correspondence(const RatFunc& alpha, const PowerProduct& Phi, const PowerProduct& Psi_hat)
{
    if (Phi.logderiv() - Psi_hat.logderiv() != alpha.derivative() / (RatFunc(4) * alpha)) return false;
    if (Phi.omega != Psi_hat.omega) return true;
    // fourth powers: Phi^4 / (alpha Psi^4) must be constant
    RatFunc ratio = RatFunc(1) / alpha;
    auto accum = [&](const PowerProduct& P, int sgn) {
        for (const auto& [f, e] : P.factors) {
            QRat k = e * 4;
            if (!is_integer(k)) return false;
            long n = k.get_num().get_si() * sgn;
            ratio *= n >= 0 ? pow(f, static_cast<int>(n)) : RatFunc(1) / pow(f, static_cast<int>(-n));
        }
        return true;
    };
    if (!accum(Phi, 1) || !accum(Psi_hat, -1)) return true;
    return ratio.is_constant();
}

// ---- inverse potential search ----

std::string render_over_atom(const RatFunc& f, const HamiltonianChange& change)
{
    if (change.atom == Atom::Exp && f.den().degree() >= 0 && f.den().coeffs().size() >= 1 &&
        f.den().low_degree() == f.den().degree()) {
        // Laurent polynomial in z = exp(rate x)
        int shift = f.den().degree();
        Constant dlc = f.den().lc();
        std::string out;
        const auto& c = f.num().coeffs();
        for (size_t i = c.size(); i-- > 0;) {
            if (c[i].is_zero()) continue;
            long k = static_cast<long>(i) - shift;
            Constant coef = c[i] / dlc;
            std::string mono = k == 0 ? "" : exp_string(change.rate * Constant(k));
            std::string term;
            if (mono.empty())
                term = constant_factor_string(coef);
            else if (coef.is_one())
                term = mono;
            else if (coef == Constant(-1))
                term = "-" + mono;
            else
                term = constant_factor_string(coef) + "*" + mono;
            if (out.empty())
                out = term;
            else if (term[0] == '-')
                out += term;
            else
                out += "+" + term;
        }
        return out.empty() ? "0" : out;
    }
    return f.to_string(change.z_of_x());
}

PotentialSearchResult inverse_potential_search(const RatFunc& V_bold, const RatFunc& alpha)
{
    if (alpha.is_zero()) raise(ErrorKind::UnsupportedAlpha, "alpha must be nonzero");
    PotentialSearchResult out;
    RatFunc Z = z();
    out.script_W = alpha.derivative() / (RatFunc(4) * alpha);
    out.V_hat = alpha * (V_bold - out.script_W.derivative() - out.script_W * out.script_W);
    std::vector<HamiltonianChange> changes;
    if (alpha.is_constant()) {
        Constant c = alpha.constant_value();
        auto s = try_sqrt(c);
        if (!s) raise(ErrorKind::UnsupportedAlpha, "sqrt of the constant alpha leaves the tower");
        for (int sg : {1, -1}) {
            Constant k = *s * Constant(sg);
            HamiltonianChange ch = custom_change(alpha, RatFunc(k));
            ch.inverse_description = k.is_one() ? "x" : paren(to_string(k)) + "*x";
            changes.push_back(ch);
            if (c.is_one()) break;
        }
    } else if (alpha.is_polynomial() && alpha.num().degree() == 2 && alpha.num().coeff(0).is_zero() &&
               alpha.num().coeff(1).is_zero()) {
        auto k = try_sqrt(alpha.num().coeff(2));
        if (!k) raise(ErrorKind::UnsupportedAlpha, "sqrt of the leading coefficient leaves the tower");
        changes.push_back(change_for_atom(Atom::Exp, *k));
        changes.push_back(change_for_atom(Atom::Exp, -*k));
    } else if (alpha == pow(RatFunc(1) + Z * Z, 2)) {
        changes.push_back(change_for_atom(Atom::Tan));
    } else if (alpha == pow(RatFunc(1) - Z * Z, 2)) {
        changes.push_back(change_for_atom(Atom::Tanh));
        changes.push_back(change_for_atom(Atom::Coth));
    } else if (alpha.is_polynomial() && alpha.num().degree() == 1 && alpha.num().coeff(0).is_zero()) {
        Constant c = alpha.num().coeff(1);
        // z = c x^2 / 4
        HamiltonianChange ch = custom_change(alpha, std::nullopt);
        ch.inverse_description = paren(to_string(c / Constant(4))) + "*x^2";
        changes.push_back(ch);
    } else {
        raise(ErrorKind::UnsupportedAlpha, "alpha = " + alpha.to_string("z") + " is not in the atom table");
    }
    for (const auto& ch : changes) {
        std::string zx = ch.atom == Atom::Custom ? ch.inverse_description : ch.z_of_x();
        out.z_of_x.push_back(zx);
        if (ch.atom == Atom::Custom)
            out.potentials.push_back(out.V_hat.to_string(zx == "x" ? "x" : "(" + zx + ")"));
        else
            out.potentials.push_back(render_over_atom(out.V_hat, ch));
    }
    return out;
}

}  // namespace galois
