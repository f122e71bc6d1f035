#include "galois/exactnum.hpp"

#include <algorithm>
#include <map>

namespace galois {

QRat qrat(long num, long den)
{
    if (den == 0) raise(ErrorKind::DivisionByZero, "zero denominator");
    QRat q(num, den);
    q.canonicalize();
    return q;
}

QRat qrat(const std::string& s)
{
    QRat q;
    if (q.set_str(s, 10) != 0) raise(ErrorKind::InvalidArgument, "bad rational literal '" + s + "'");
    if (sgn(q.get_den()) == 0) raise(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const QRat& q) { return q.get_str(); }

bool is_integer(const QRat& q) { return q.get_den() == 1; }

ZInt gcd(const ZInt& a, const ZInt& b)
{
    ZInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

ZInt lcm(const ZInt& a, const ZInt& b)
{
    ZInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

namespace {

ZInt pollard_rho(const ZInt& n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        ZInt x = 2, y = 2, d = 1;
        auto f = [&](const ZInt& v) {
            ZInt r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            ZInt diff = x - y;
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            d = gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(const ZInt& n, std::map<ZInt, int>& out)
{
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        out[n]++;
        return;
    }
    ZInt d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<ZInt, int>> factor_integer(ZInt n)
{
    mpz_abs(n.get_mpz_t(), n.get_mpz_t());
    std::map<ZInt, int> out;
    if (n == 0) return {};
    for (unsigned long p = 2; p < 2000 && n > 1; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[ZInt(p)]++;
            n /= p;
        }
    }
    factor_rec(n, out);
    return {out.begin(), out.end()};
}

std::vector<ZInt> divisors(const ZInt& n)
{
    std::vector<ZInt> ds{1};
    for (auto& [p, e] : factor_integer(n)) {
        size_t k = ds.size();
        ZInt pw = 1;
        for (int j = 1; j <= e; ++j) {
            pw *= p;
            for (size_t t = 0; t < k; ++t) ds.push_back(ds[t] * pw);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

void squarefree_split(const ZInt& n, ZInt& s, ZInt& d)
{
    s = 1;
    d = sgn(n) < 0 ? -1 : 1;
    if (n == 0) {
        s = 0;
        d = 1;
        return;
    }
    ZInt a = abs(n);
    if (mpz_perfect_square_p(a.get_mpz_t())) {
        mpz_sqrt(s.get_mpz_t(), a.get_mpz_t());
        return;
    }
    for (auto& [p, e] : factor_integer(a)) {
        for (int j = 0; j < e / 2; ++j) s *= p;
        if (e % 2) d *= p;
    }
}

// ---------------- GaussRat

GaussRat GaussRat::inv() const
{
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
    QRat n = norm();
    return GaussRat(re / n, -im / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o)
{
    re += o.re;
    if (sgn(o.im) != 0) im += o.im;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o)
{
    re -= o.re;
    if (sgn(o.im) != 0) im -= o.im;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o)
{
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    QRat r = re * o.re - im * o.im;
    QRat i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o)
{
    if (o.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero");
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re /= o.re;
        return *this;
    }
    return *this *= o.inv();
}

bool operator<(const GaussRat& a, const GaussRat& b)
{
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

std::string to_string(const GaussRat& g)
{
    if (sgn(g.im) == 0) return to_string(g.re);
    std::string ims;
    if (g.im == 1)
        ims = "i";
    else if (g.im == -1)
        ims = "-i";
    else
        ims = to_string(g.im) + "*i";
    if (sgn(g.re) == 0) return ims;
    std::string s = to_string(g.re);
    if (ims[0] == '-') return s + ims;
    return s + "+" + ims;
}

namespace {

std::optional<QRat> rat_sqrt(const QRat& q)
{
    if (sgn(q) < 0) return std::nullopt;
    const ZInt& n = q.get_num();
    const ZInt& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    ZInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    QRat r(sn, sd);
    r.canonicalize();
    return r;
}

}  // namespace

std::optional<GaussRat> gauss_sqrt(const GaussRat& g)
{
    if (sgn(g.im) == 0) {
        if (sgn(g.re) >= 0) {
            auto r = rat_sqrt(g.re);
            if (r) return GaussRat(*r);
            return std::nullopt;
        }
        auto r = rat_sqrt(-g.re);
        if (r) return GaussRat(QRat(0), *r);
        return std::nullopt;
    }
    auto n = rat_sqrt(g.norm());
    if (!n) return std::nullopt;
    auto u = rat_sqrt((g.re + *n) / 2);
    if (!u || sgn(*u) == 0) return std::nullopt;
    return GaussRat(*u, g.im / (2 * *u));
}

// ---------------- Surd

Surd::Surd(const QRat& r, const QRat& c, long d) : rational_part(r), radical_coeff(c), radicand(d)
{
    if (d <= 0) raise(ErrorKind::InvalidArgument, "Surd radicand must be positive; use Constant for imaginary values");
    ZInt s, e;
    squarefree_split(ZInt(d), s, e);
    radical_coeff *= QRat(s);
    radicand = e.get_si();
    if (radicand == 1) {
        rational_part += radical_coeff;
        radical_coeff = 0;
    }
    if (sgn(radical_coeff) == 0) radicand = 1;
}

bool Surd::is_integer() const { return sgn(radical_coeff) == 0 && galois::is_integer(rational_part); }

std::string to_string(const Surd& s)
{
    if (s.is_rational()) return to_string(s.rational_part);
    std::string rad = to_string(s.radical_coeff) + "*sqrt(" + std::to_string(s.radicand) + ")";
    if (sgn(s.rational_part) == 0) return rad;
    if (sgn(s.radical_coeff) < 0) return to_string(s.rational_part) + rad;
    return to_string(s.rational_part) + "+" + rad;
}

Surd sqrt_exact(const QRat& x)
{
    if (sgn(x) == 0) return Surd(QRat(0));
    ZInt sn, dn, sd, dd;
    // sqrt(n/m) = sqrt(n*m)/m
    ZInt nm = abs(x.get_num()) * x.get_den();
    squarefree_split(nm, sn, dn);
    QRat coeff(sn, x.get_den());
    coeff.canonicalize();
    Surd s;
    long d = dn.get_si();
    if (!dn.fits_slong_p()) raise(ErrorKind::MixedRadicands, "radicand too large");
    if (sgn(x) < 0) d = -d;
    if (d == 1) return Surd(coeff);
    s.rational_part = 0;
    s.radical_coeff = coeff;
    s.radicand = d;  // negative radicand: caller pairs with i
    return s;
}

Surd surd_combine(const std::vector<std::pair<int, Surd>>& terms)
{
    Surd out;
    for (auto& [sign, s] : terms) {
        QRat sg(sign >= 0 ? 1 : -1);
        out.rational_part += sg * s.rational_part;
        if (sgn(s.radical_coeff) != 0) {
            if (out.radicand != 1 && out.radicand != s.radicand && sgn(out.radical_coeff) != 0)
                raise(ErrorKind::MixedRadicands,
                      "radicands " + std::to_string(out.radicand) + " and " + std::to_string(s.radicand));
            if (sgn(out.radical_coeff) == 0) out.radicand = s.radicand;
            out.radical_coeff += sg * s.radical_coeff;
        }
    }
    if (sgn(out.radical_coeff) == 0) out.radicand = 1;
    return out;
}

// ---------------- Constant

Constant::Constant(const GaussRat& a, const GaussRat& b, long d) : a_(a), b_(b), d_(d)
{
    if (d == 0) raise(ErrorKind::InvalidArgument, "zero radicand");
    if (!b_.is_zero()) {
        ZInt s, e;
        squarefree_split(ZInt(d), s, e);
        b_ *= GaussRat(QRat(s));
        if (sgn(e) < 0) {
            b_ *= GaussRat::I();
            e = -e;
        }
        if (!e.fits_slong_p()) raise(ErrorKind::MixedRadicands, "radicand too large");
        d_ = e.get_si();
    }
    normalize();
}

void Constant::normalize()
{
    if (b_.is_zero()) {
        d_ = 1;
        return;
    }
    if (d_ == 1) {
        a_ += b_;
        b_ = GaussRat();
    }
}

Constant Constant::from_surd(const Surd& s)
{
    if (s.is_rational()) return Constant(s.rational_part);
    return Constant(GaussRat(s.rational_part), GaussRat(s.radical_coeff), s.radicand);
}

long Constant::join(long d1, const GaussRat& b1, long d2, const GaussRat& b2)
{
    if (b1.is_zero()) return d2;
    if (b2.is_zero()) return d1;
    if (d1 == d2) return d1;
    raise(ErrorKind::MixedRadicands, "sqrt(" + std::to_string(d1) + ") and sqrt(" + std::to_string(d2) + ")");
}

bool Constant::is_integer() const { return b_.is_zero() && a_.is_real() && galois::is_integer(a_.re); }

bool Constant::is_nonneg_integer() const { return is_integer() && sgn(a_.re) >= 0; }

QRat Constant::to_qrat() const
{
    if (!is_rational()) raise(ErrorKind::InvalidArgument, "constant " + to_string(*this) + " is not rational");
    return a_.re;
}

long Constant::to_long() const
{
    if (!is_integer()) raise(ErrorKind::InvalidArgument, "constant " + to_string(*this) + " is not an integer");
    return a_.re.get_num().get_si();
}

std::optional<Surd> Constant::to_surd() const
{
    if (!is_real()) return std::nullopt;
    if (b_.is_zero()) return Surd(a_.re);
    return Surd(a_.re, b_.re, d_);
}

Constant Constant::conj() const { return Constant(a_.conj(), b_.conj(), d_); }

Constant Constant::surd_conj() const { return Constant(a_, -b_, d_); }

Constant Constant::inv() const
{
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero constant");
    if (b_.is_zero()) return Constant(a_.inv());
    GaussRat n = a_ * a_ - b_ * b_ * GaussRat(d_);
    GaussRat ni = n.inv();
    return Constant(a_ * ni, -b_ * ni, d_);
}

Constant& Constant::operator+=(const Constant& o)
{
    long d = join(d_, b_, o.d_, o.b_);
    a_ += o.a_;
    if (!o.b_.is_zero()) b_ += o.b_;
    d_ = d;
    normalize();
    return *this;
}

Constant& Constant::operator-=(const Constant& o)
{
    long d = join(d_, b_, o.d_, o.b_);
    a_ -= o.a_;
    if (!o.b_.is_zero()) b_ -= o.b_;
    d_ = d;
    normalize();
    return *this;
}

Constant& Constant::operator*=(const Constant& o)
{
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    long d = join(d_, b_, o.d_, o.b_);
    GaussRat na = a_ * o.a_ + b_ * o.b_ * GaussRat(d);
    GaussRat nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    d_ = d;
    normalize();
    return *this;
}

Constant& Constant::operator/=(const Constant& o)
{
    if (o.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero constant");
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ /= o.a_;
        return *this;
    }
    return *this *= o.inv();
}

bool operator<(const Constant& x, const Constant& y)
{
    if (x.d_ != y.d_) return x.d_ < y.d_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

std::string to_string(const Constant& c)
{
    if (c.is_gauss()) return to_string(c.a());
    std::string bs;
    const GaussRat& b = c.b();
    std::string rad = "sqrt(" + std::to_string(c.radicand()) + ")";
    if (b.is_real()) {
        if (b.re == 1)
            bs = rad;
        else if (b.re == -1)
            bs = "-" + rad;
        else
            bs = to_string(b.re) + "*" + rad;
    } else if (sgn(b.re) == 0) {
        bs = to_string(b) + "*" + rad;
    } else {
        bs = "(" + to_string(b) + ")*" + rad;
    }
    if (c.a().is_zero()) return bs;
    std::string as = c.a().is_real() || sgn(c.a().re) == 0 ? to_string(c.a()) : "(" + to_string(c.a()) + ")";
    if (bs[0] == '-') return as + bs;
    return as + "+" + bs;
}

Constant pow(const Constant& c, long e)
{
    if (e < 0) return pow(c.inv(), -e);
    Constant r(1), b = c;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Constant sqrt_of_integer(const ZInt& n)
{
    ZInt s, d;
    squarefree_split(n, s, d);
    if (!d.fits_slong_p()) raise(ErrorKind::MixedRadicands, "radicand too large");
    return Constant(GaussRat(), GaussRat(QRat(s)), d.get_si());
}

std::optional<Constant> try_sqrt(const Constant& c)
{
    if (c.is_zero()) return Constant(0);
    if (c.is_gauss()) {
        const GaussRat& g = c.a();
        if (auto r = gauss_sqrt(g)) return Constant(*r);
        if (g.is_real()) {
            Surd s = sqrt_exact(g.re);
            long d = s.radicand;
            QRat co = s.radical_coeff;
            if (d < 0) return Constant(GaussRat(), GaussRat(QRat(0), co), -d);
            return Constant(GaussRat(), GaussRat(co), d);
        }
        // g = e * h^2 with h in Q(i)
        auto n = rat_sqrt(g.norm());
        if (!n) return std::nullopt;
        QRat u2 = (g.re + *n) / 2;
        Surd u = sqrt_exact(u2);
        if (u.is_rational()) return std::nullopt;
        long e = u.radicand;
        QRat s = u.radical_coeff;
        // u = s*sqrt(e), v = im/(2u) = im*sqrt(e)/(2 s e)
        GaussRat h(s, g.im / (2 * s * e));
        Constant y(GaussRat(), h, e);
        if (y * y == c) return y;
        return std::nullopt;
    }
    const GaussRat& a = c.a();
    const GaussRat& b = c.b();
    long d = c.radicand();
    GaussRat M = a * a - b * b * GaussRat(d);
    auto m = gauss_sqrt(M);
    if (!m) return std::nullopt;
    for (int sg : {1, -1}) {
        GaussRat p2 = (a + GaussRat(sg) * *m) / GaussRat(2);
        auto p = gauss_sqrt(p2);
        if (!p || p->is_zero()) continue;
        GaussRat q = b / (GaussRat(2) * *p);
        Constant y(*p, q, d);
        if (y * y == c) return y;
    }
    return std::nullopt;
}

Constant csqrt(const Constant& c)
{
    auto r = try_sqrt(c);
    if (!r) raise(ErrorKind::MixedRadicands, "square root of " + to_string(c) + " needs a second radicand");
    return *r;
}

// ---------------- RadicalSum

void RadicalSum::add(const Constant& c, int sign)
{
    GaussRat s(sign >= 0 ? 1 : -1);
    base_ += s * c.a();
    if (c.b().is_zero()) return;
    for (auto& [d, co] : rad_)
        if (d == c.radicand()) {
            co += s * c.b();
            return;
        }
    rad_.push_back({c.radicand(), s * c.b()});
}

bool RadicalSum::single_field() const
{
    int n = 0;
    for (auto& [d, co] : rad_)
        if (!co.is_zero()) ++n;
    return n <= 1;
}

bool RadicalSum::is_integer() const
{
    for (auto& [d, co] : rad_)
        if (!co.is_zero()) return false;
    return base_.is_real() && galois::is_integer(base_.re);
}

bool RadicalSum::is_rational() const
{
    for (auto& [d, co] : rad_)
        if (!co.is_zero()) return false;
    return base_.is_real();
}

bool RadicalSum::is_nonneg_integer() const { return is_integer() && sgn(base_.re) >= 0; }

Constant RadicalSum::value() const
{
    Constant v(base_);
    for (auto& [d, co] : rad_)
        if (!co.is_zero()) v += Constant(GaussRat(), co, d);
    return v;
}

}  // namespace galois
