#include "galois/ratfun.hpp"

#include <algorithm>
#include <set>

namespace galois {

// ---------------- Poly

Poly::Poly(const Constant& c)
{
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Constant> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<Constant>{Constant(0), Constant(1)}); }

Poly Poly::monomial(const Constant& c, int deg)
{
    if (c.is_zero()) return Poly();
    std::vector<Constant> v(deg + 1);
    v[deg] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Constant& root) { return Poly(std::vector<Constant>{-root, Constant(1)}); }

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Constant& Poly::lc() const
{
    if (c_.empty()) raise(ErrorKind::InvalidArgument, "leading coefficient of zero polynomial");
    return c_.back();
}

Constant Poly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return Constant(0);
    return c_[i];
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Constant> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Constant& k)
{
    if (k.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= k;
    return *this;
}

void Poly::divmod(const Poly& d, Poly& q, Poly& r) const
{
    if (d.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
    r = *this;
    int dd = d.degree();
    if (degree() < dd) {
        q = Poly();
        return;
    }
    std::vector<Constant> qc(degree() - dd + 1);
    Constant inv = d.lc().inv();
    while (!r.is_zero() && r.degree() >= dd) {
        int k = r.degree() - dd;
        Constant t = r.lc() * inv;
        qc[k] = t;
        for (int j = 0; j <= dd; ++j)
            if (!d.c_[j].is_zero()) r.c_[j + k] -= t * d.c_[j];
        r.c_.pop_back();
        r.trim();
    }
    q = Poly(std::move(qc));
}

Poly Poly::operator/(const Poly& d) const
{
    Poly q, r;
    divmod(d, q, r);
    return q;
}

Poly Poly::operator%(const Poly& d) const
{
    Poly q, r;
    divmod(d, q, r);
    return r;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) return Poly();
    std::vector<Constant> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Constant(static_cast<long>(i));
    return Poly(std::move(r));
}

Poly Poly::integral() const
{
    if (c_.empty()) return Poly();
    std::vector<Constant> r(c_.size() + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / Constant(static_cast<long>(i + 1));
    return Poly(std::move(r));
}

Constant Poly::eval(const Constant& v) const
{
    Constant r;
    for (size_t i = c_.size(); i-- > 0;) {
        r *= v;
        r += c_[i];
    }
    return r;
}

Poly Poly::compose(const Poly& inner) const
{
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) {
        r *= inner;
        r += Poly(c_[i]);
    }
    return r;
}

Poly Poly::shift(const Constant& c) const
{
    if (c.is_zero()) return *this;
    std::vector<Constant> a = c_;
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j) a[j] += c * a[j + 1];
    return Poly(std::move(a));
}

Poly Poly::monic() const
{
    if (is_zero()) return *this;
    if (lc().is_one()) return *this;
    return *this * lc().inv();
}

Poly Poly::conj() const
{
    Poly r = *this;
    for (auto& v : r.c_) v = v.conj();
    return r;
}

Poly Poly::surd_conj() const
{
    Poly r = *this;
    for (auto& v : r.c_) v = v.surd_conj();
    return r;
}

bool Poly::is_rational() const
{
    for (auto& v : c_)
        if (!v.is_rational()) return false;
    return true;
}

bool Poly::is_gauss() const
{
    for (auto& v : c_)
        if (!v.is_gauss()) return false;
    return true;
}

long Poly::radicand() const
{
    for (auto& v : c_)
        if (!v.is_gauss()) return v.radicand();
    return 1;
}

int Poly::low_degree() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

namespace {

bool composite(const Constant& c)
{
    if (!c.is_gauss()) return !c.a().is_zero();
    return sgn(c.a().re) != 0 && sgn(c.a().im) != 0;
}

}  // namespace

std::string constant_factor_string(const Constant& c)
{
    std::string s = galois::to_string(c);
    if (composite(c)) return "(" + s + ")";
    return s;
}

std::string Poly::to_string(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Constant& k = c_[i];
        if (k.is_zero()) continue;
        std::string mono;
        if (i == 1)
            mono = var;
        else if (i > 1)
            mono = var + "^" + std::to_string(i);
        std::string term;
        if (mono.empty()) {
            term = constant_factor_string(k);
        } else if (k.is_one()) {
            term = mono;
        } else if (k == Constant(-1)) {
            term = "-" + mono;
        } else {
            term = constant_factor_string(k) + "*" + mono;
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += term;
        else
            out += "+" + term;
    }
    return out;
}

Poly pow(const Poly& p, int e)
{
    Poly r(1), b = p;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t)
{
    Poly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        Poly q, r;
        r0.divmod(r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = Poly();
        t = Poly();
        return r0;
    }
    Constant inv = r0.lc().inv();
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a)
{
    std::vector<std::pair<Poly, int>> out;
    if (a.degree() <= 0) return out;
    Poly f = a.monic();
    Poly fp = f.derivative();
    Poly g = gcd(f, fp);
    Poly c = f / g, d = fp / g - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        Poly y = gcd(c, d);
        if (y.degree() > 0) out.push_back({y, i});
        c = c / y;
        d = d / y - c.derivative();
        ++i;
    }
    return out;
}

// ---------------- root finding

namespace {

std::vector<QRat> rational_coeffs(const Poly& p)
{
    std::vector<QRat> v;
    for (auto& c : p.coeffs()) v.push_back(c.to_qrat());
    return v;
}

QRat eval_q(const std::vector<QRat>& a, const QRat& x)
{
    QRat r = 0;
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

std::vector<ZInt> integer_coeffs(const std::vector<QRat>& a)
{
    ZInt l = 1;
    for (auto& q : a) l = lcm(l, q.get_den());
    std::vector<ZInt> z;
    for (auto& q : a) {
        QRat t = q * QRat(l);
        z.push_back(t.get_num());
    }
    ZInt g = 0;
    for (auto& v : z) g = gcd(g, v);
    if (g > 1)
        for (auto& v : z) v /= g;
    return z;
}

// rational roots of a rational polynomial with nonzero constant term
std::vector<QRat> rational_roots_q(const std::vector<QRat>& a)
{
    std::vector<QRat> out;
    std::vector<ZInt> z = integer_coeffs(a);
    ZInt a0 = abs(z.front()), an = abs(z.back());
    if (a0 == 0) return out;
    std::vector<ZInt> dp = divisors(a0), dq = divisors(an);
    std::set<QRat> seen;
    for (auto& p : dp)
        for (auto& q : dq)
            for (int s : {1, -1}) {
                QRat x(p * s, q);
                x.canonicalize();
                if (seen.count(x)) continue;
                seen.insert(x);
                if (eval_q(a, x) == 0) out.push_back(x);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Constant> quadratic_roots(const Poly& q)
{
    Poly m = q.monic();
    Constant p = m.coeff(1), c = m.coeff(0);
    Constant disc = p * p - Constant(4) * c;
    auto s = try_sqrt(disc);
    if (!s) raise(ErrorKind::UnsupportedSplitting, "quadratic " + q.to_string() + " needs a second radicand");
    Constant half = Constant(qrat(1, 2));
    try {
        return {(-p + *s) * half, (-p - *s) * half};
    } catch (const Error&) {
        raise(ErrorKind::UnsupportedSplitting, "quadratic " + q.to_string() + " needs a second radicand");
    }
}

// quadratic factor of a primitive integer polynomial without rational roots (Kronecker)
std::optional<Poly> kronecker_quadratic(const std::vector<QRat>& a)
{
    QRat v0 = eval_q(a, 0), v1 = eval_q(a, 1), vm = eval_q(a, -1);
    std::vector<ZInt> z = integer_coeffs(a);
    std::vector<QRat> zq(z.begin(), z.end());
    v0 = eval_q(zq, 0);
    v1 = eval_q(zq, 1);
    vm = eval_q(zq, -1);
    if (v0 == 0 || v1 == 0 || vm == 0) return std::nullopt;
    auto d0s = divisors(abs(v0.get_num()));
    auto d1s = divisors(abs(v1.get_num()));
    auto dms = divisors(abs(vm.get_num()));
    Poly P;
    {
        std::vector<Constant> pc;
        for (auto& q : zq) pc.push_back(Constant(q));
        P = Poly(pc);
    }
    ZInt lead = abs(z.back());
    for (auto& d0 : d0s)
        for (auto& d1a : d1s)
            for (int s1 : {1, -1})
                for (auto& dma : dms)
                    for (int sm : {1, -1}) {
                        ZInt d1 = d1a * s1, dm = dma * sm;
                        ZInt sum = d1 + dm;
                        if (mpz_odd_p(sum.get_mpz_t())) continue;
                        ZInt A = sum / 2 - d0, B = (d1 - dm) / 2, C = d0;
                        if (A == 0) continue;
                        if (!mpz_divisible_p(lead.get_mpz_t(), ZInt(abs(A)).get_mpz_t())) continue;
                        Poly cand(std::vector<Constant>{Constant(QRat(C)), Constant(QRat(B)), Constant(QRat(A))});
                        Poly q, r;
                        P.divmod(cand, q, r);
                        if (r.is_zero()) return cand;
                    }
    return std::nullopt;
}

std::vector<Constant> simple_roots(const Poly& q);

// h(x) = g(x^2): roots are square roots of the roots of g
std::optional<std::vector<Constant>> even_roots(const Poly& h)
{
    for (int i = 1; i <= h.degree(); i += 2)
        if (!h.coeff(i).is_zero()) return std::nullopt;
    std::vector<Constant> g;
    for (int i = 0; i <= h.degree(); i += 2) g.push_back(h.coeff(i));
    std::vector<Constant> out;
    try {
        for (auto& y : simple_roots(Poly(g))) {
            auto s = try_sqrt(y);
            if (!s) return std::nullopt;
            out.push_back(*s);
            out.push_back(-*s);
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    return out;
}

std::vector<Constant> simple_roots_rational(Poly h)
{
    std::vector<Constant> out;
    if (h.degree() <= 0) return out;
    if (h.coeff(0).is_zero()) {
        out.push_back(Constant(0));
        h = h / Poly::x();
    }
    if (h.degree() <= 0) return out;
    for (auto& r : rational_roots_q(rational_coeffs(h))) {
        out.push_back(Constant(r));
        h = h / Poly::linear(Constant(r));
    }
    while (h.degree() > 0) {
        if (h.degree() <= 2) {
            if (h.degree() == 1)
                out.push_back(-h.coeff(0) / h.coeff(1));
            else
                for (auto& r : quadratic_roots(h)) out.push_back(r);
            break;
        }
        if (h.degree() == 3)
            raise(ErrorKind::UnsupportedSplitting, "irreducible cubic factor " + h.to_string());
        auto f = kronecker_quadratic(rational_coeffs(h));
        if (!f) {
            if (auto ev = even_roots(h)) {
                for (auto& r : *ev) out.push_back(r);
                break;
            }
            raise(ErrorKind::UnsupportedSplitting, "irreducible factor of degree " + std::to_string(h.degree()) +
                                                             ": " + h.to_string());
        }
        for (auto& r : quadratic_roots(*f)) out.push_back(r);
        h = h / *f;
    }
    return out;
}

std::vector<Constant> roots_via_norm(Poly h, const Poly& norm)
{
    std::vector<Constant> out;
    std::vector<Constant> cands;
    for (auto& r : roots(norm)) cands.push_back(r.value);
    for (auto& c : cands) {
        if (h.degree() <= 0) break;
        try {
            if (h.eval(c).is_zero()) {
                out.push_back(c);
                h = h / Poly::linear(c);
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::MixedRadicands) throw;
        }
    }
    if (h.degree() > 0) {
        if (h.degree() == 2)
            for (auto& r : quadratic_roots(h)) out.push_back(r);
        else if (h.degree() == 1)
            out.push_back(-h.coeff(0) / h.coeff(1));
        else
            raise(ErrorKind::UnsupportedSplitting, "factor " + h.to_string() + " does not split in the supported tower");
    }
    return out;
}

std::vector<Constant> simple_roots(const Poly& q)
{
    Poly h = q.monic();
    if (h.degree() <= 0) return {};
    if (h.degree() == 1) return {-h.coeff(0)};
    if (h.is_rational()) return simple_roots_rational(h);
    if (h.degree() == 2) {
        try {
            return quadratic_roots(h);
        } catch (const Error&) {
        }
    }
    if (h.is_gauss()) return roots_via_norm(h, h * h.conj());
    return roots_via_norm(h, h * h.surd_conj());
}

}  // namespace

std::vector<Root> roots(const Poly& p)
{
    std::vector<Root> out;
    if (p.degree() <= 0) return out;
    for (auto& [f, m] : squarefree_decomposition(p))
        for (auto& r : simple_roots(f)) out.push_back({r, m});
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
    return out;
}

std::vector<long> integer_roots(const Poly& p)
{
    std::vector<long> out;
    if (p.degree() <= 0) return out;
    // use the first nonzero rational component (1, i, sqrt d, i sqrt d)
    std::vector<QRat> comp;
    for (int part = 0; part < 4 && comp.empty(); ++part) {
        std::vector<QRat> v;
        bool nz = false;
        for (auto& c : p.coeffs()) {
            QRat q = part == 0 ? c.a().re : part == 1 ? c.a().im : part == 2 ? c.b().re : c.b().im;
            if (sgn(q) != 0) nz = true;
            v.push_back(q);
        }
        if (nz) comp = v;
    }
    while (!comp.empty() && sgn(comp.back()) == 0) comp.pop_back();
    if (comp.size() <= 1) return out;
    size_t low = 0;
    while (sgn(comp[low]) == 0) ++low;
    std::vector<QRat> red(comp.begin() + low, comp.end());
    std::vector<long> cands;
    if (low > 0) cands.push_back(0);
    if (red.size() > 1)
        for (auto& r : rational_roots_q(red))
            if (is_integer(r) && r.get_num().fits_slong_p()) cands.push_back(r.get_num().get_si());
    for (long c : cands)
        if (p.eval(Constant(c)).is_zero()) out.push_back(c);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------- RatFunc

RatFunc::RatFunc(const Poly& n, const Poly& d) : num_(n), den_(d)
{
    if (d.is_zero()) raise(ErrorKind::DivisionByZero, "rational function with zero denominator");
    normalize();
}

void RatFunc::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    if (!den_.lc().is_one()) {
        Constant inv = den_.lc().inv();
        num_ *= inv;
        den_ *= inv;
    }
}

bool RatFunc::canonical() const
{
    if (den_.is_zero() || !den_.lc().is_one()) return false;
    if (num_.is_zero()) return den_ == Poly(1);
    return gcd(num_, den_).degree() == 0;
}

Constant RatFunc::constant_value() const
{
    if (!is_constant()) raise(ErrorKind::InvalidArgument, "rational function " + to_string() + " is not constant");
    return num_.coeff(0);
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o)
{
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero rational function");
    Poly n = num_ * o.den_;
    Poly d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

RatFunc RatFunc::derivative() const
{
    if (is_polynomial()) return RatFunc(num_.derivative());
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Constant RatFunc::eval(const Constant& v) const
{
    Constant d = den_.eval(v);
    if (d.is_zero()) raise(ErrorKind::DivisionByZero, "evaluation at a pole");
    return num_.eval(v) / d;
}

RatFunc RatFunc::compose(const RatFunc& inner) const
{
    RatFunc n, d;
    for (int i = num_.degree(); i >= 0; --i) n = n * inner + RatFunc(num_.coeff(i));
    for (int i = den_.degree(); i >= 0; --i) d = d * inner + RatFunc(den_.coeff(i));
    return n / d;
}

RatFunc RatFunc::conj() const { return RatFunc(num_.conj(), den_.conj()); }

int RatFunc::order_at_infinity() const
{
    if (is_zero()) return 1 << 20;
    return den_.degree() - num_.degree();
}

namespace {

bool simple_token(const std::string& s)
{
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-' || s[i] == '*' || s[i] == '/') return false;
    return true;
}

}  // namespace

std::string RatFunc::to_string(const std::string& var) const
{
    std::string n = num_.to_string(var);
    if (is_polynomial()) return n;
    std::string d = den_.to_string(var);
    if (!simple_token(n)) n = "(" + n + ")";
    if (!simple_token(d) || d.find('^') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

RatFunc pow(const RatFunc& f, int e)
{
    if (e < 0) return pow(RatFunc(1) / f, -e);
    return RatFunc(pow(f.num(), e), pow(f.den(), e));
}

// ---------------- Laurent data

namespace {

// power series quotient a/b (b[0] != 0), nterms coefficients
std::vector<Constant> series_div(const std::vector<Constant>& a, const std::vector<Constant>& b, int nterms)
{
    std::vector<Constant> q(nterms);
    Constant inv = b[0].inv();
    for (int k = 0; k < nterms; ++k) {
        Constant s = k < static_cast<int>(a.size()) ? a[k] : Constant(0);
        for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j)
            if (!b[j].is_zero() && !q[k - j].is_zero()) s -= b[j] * q[k - j];
        q[k] = s * inv;
    }
    return q;
}

}  // namespace

std::vector<Constant> laurent_at(const RatFunc& f, const Constant& c, int& val, int nterms)
{
    if (f.is_zero()) {
        val = 0;
        return std::vector<Constant>(nterms);
    }
    Poly n = f.num().shift(c), d = f.den().shift(c);
    int vn = n.low_degree(), vd = d.low_degree();
    std::vector<Constant> a(n.coeffs().begin() + vn, n.coeffs().end());
    std::vector<Constant> b(d.coeffs().begin() + vd, d.coeffs().end());
    val = vn - vd;
    return series_div(a, b, nterms);
}

std::vector<Constant> laurent_at_infinity(const RatFunc& f, int& top, int nterms)
{
    if (f.is_zero()) {
        top = 0;
        return std::vector<Constant>(nterms);
    }
    std::vector<Constant> a(f.num().coeffs().rbegin(), f.num().coeffs().rend());
    std::vector<Constant> b(f.den().coeffs().rbegin(), f.den().coeffs().rend());
    top = f.num().degree() - f.den().degree();
    return series_div(a, b, nterms);
}

std::vector<Constant> series_sqrt(const std::vector<Constant>& rho, int count)
{
    std::vector<Constant> s(count);
    if (count == 0) return s;
    s[0] = csqrt(rho[0]);
    Constant inv2 = (Constant(2) * s[0]).inv();
    for (int j = 1; j < count; ++j) {
        Constant acc = j < static_cast<int>(rho.size()) ? rho[j] : Constant(0);
        for (int a = 1; a < j; ++a) acc -= s[a] * s[j - a];
        s[j] = acc * inv2;
    }
    return s;
}

std::vector<Root> factor_denominator(const RatFunc& f) { return roots(f.den()); }

PoleData pole_expansion(const RatFunc& f, const Constant& c)
{
    int val = 0;
    Poly d = f.den().shift(c);
    if (d.low_degree() <= 0) raise(ErrorKind::NotAPole, galois::to_string(c) + " is not a pole of " + f.to_string());
    int order = d.low_degree();
    auto co = laurent_at(f, c, val, order + 1);
    PoleData p;
    p.location = c;
    p.order = -val;
    p.principal_coeffs.assign(co.begin(), co.begin() + p.order);
    p.next_coeff = co[p.order];
    return p;
}

InfinityData infinity_expansion(const RatFunc& f)
{
    InfinityData out;
    out.order_at_infinity = f.order_at_infinity();
    if (f.is_zero()) return out;
    int o = out.order_at_infinity;
    int top = 0;
    if (o >= 1) {
        auto co = laurent_at_infinity(f, top, 3);
        out.leading = co[0];
        if (o == 2) out.sub_coeff = co[0];
        return out;
    }
    if (o % 2 != 0) {
        auto co = laurent_at_infinity(f, top, 1);
        out.leading = co[0];
        return out;
    }
    int v = -o / 2;
    auto rho = laurent_at_infinity(f, top, v + 2);
    out.leading = rho[0];
    auto lead_root = try_sqrt(rho[0]);
    if (!lead_root)
        raise(ErrorKind::NoPolynomialSqrtPart, "leading coefficient " + galois::to_string(rho[0]) + " has no square root");
    auto sig = series_sqrt(rho, v + 1);
    std::vector<Constant> pc(v + 1);
    for (int j = 0; j <= v; ++j) pc[v - j] = sig[j];
    out.sqrt_part = Poly(pc);
    Constant b = rho[v + 1];
    for (int a = 0; a <= v; ++a) {
        int bb = v + 1 - a;
        if (bb >= 0 && bb <= v) b -= sig[a] * sig[bb];
    }
    out.sub_coeff = b;
    return out;
}

// ---------------- partial fractions

PartialFractions partial_fractions(const RatFunc& f)
{
    PartialFractions pf;
    Poly q, r;
    f.num().divmod(f.den(), q, r);
    pf.poly_part = q;
    if (f.den().degree() == 0) return pf;
    for (auto& rt : roots(f.den())) {
        int val = 0;
        auto co = laurent_at(RatFunc(r, f.den()), rt.value, val, rt.multiplicity);
        PartialFractions::Term t;
        t.root = rt.value;
        t.coeffs.resize(rt.multiplicity);
        // val == -multiplicity unless r vanishes at root (impossible: gcd = 1)
        for (int j = 0; j < rt.multiplicity; ++j) {
            int pw = val + j;  // exponent
            if (pw < 0) t.coeffs[-pw - 1] = co[j];
        }
        pf.terms.push_back(t);
    }
    return pf;
}

RatFunc PartialFractions::recombine() const
{
    RatFunc s(poly_part);
    for (auto& t : terms)
        for (size_t j = 0; j < t.coeffs.size(); ++j)
            if (!t.coeffs[j].is_zero())
                s += RatFunc(Poly(t.coeffs[j]), pow(Poly::linear(t.root), static_cast<int>(j + 1)));
    return s;
}

std::string PartialFractions::to_string(const std::string& var) const
{
    std::vector<std::string> parts;
    for (auto& t : terms) {
        std::string base = Poly::linear(t.root).to_string(var);
        for (size_t j = t.coeffs.size(); j-- > 0;) {
            if (t.coeffs[j].is_zero()) continue;
            std::string den = "(" + base + ")";
            if (j > 0) den += "^" + std::to_string(j + 1);
            parts.push_back(constant_factor_string(t.coeffs[j]) + "/" + den);
        }
    }
    if (!poly_part.is_zero()) parts.insert(parts.begin(), poly_part.to_string(var));
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i][0] == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

// ---------------- Hermite reduction

HermiteResult hermite_reduce(const RatFunc& f)
{
    HermiteResult res;
    Poly q, A;
    f.num().divmod(f.den(), q, A);
    res.rational_part = RatFunc(q.integral());
    Poly D = f.den();
    if (A.is_zero()) return res;
    RatFunc g;
    Poly Dm = gcd(D, D.derivative());
    Poly Ds = D / Dm;
    while (Dm.degree() > 0) {
        Poly Dm2 = gcd(Dm, Dm.derivative());
        Poly Dms = Dm / Dm2;
        // B*(-Ds*Dm'/Dm) + C*Dms = A
        Poly a = -(Ds * Dm.derivative()) / Dm;
        Poly s, t;
        Poly gg = xgcd(a, Dms, s, t);
        Poly sc = s * (A / gg);
        Poly B, C;
        {
            Poly qq, rr;
            sc.divmod(Dms, qq, rr);
            B = rr;
            C = (A - B * a) / Dms;
        }
        A = C - B.derivative() * (Ds / Dms);
        g += RatFunc(B, Dm);
        Dm = Dm2;
    }
    res.rational_part += g;
    res.log_integrand = RatFunc(A, Ds);
    return res;
}

}  // namespace galois
