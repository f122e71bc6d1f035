#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois/errors.hpp"

namespace galois {

using QRat = mpq_class;
using ZInt = mpz_class;

QRat qrat(long num, long den = 1);
QRat qrat(const std::string& s);  // "p", "p/q", "-p/q"
std::string to_string(const QRat& q);
bool is_integer(const QRat& q);
ZInt lcm(const ZInt& a, const ZInt& b);
ZInt gcd(const ZInt& a, const ZInt& b);

// prime factorisation (trial division, then Pollard rho on the cofactor)
std::vector<std::pair<ZInt, int>> factor_integer(ZInt n);
// all positive divisors, sorted
std::vector<ZInt> divisors(const ZInt& n);
// n = s^2 * d with d squarefree (sign kept on d)
void squarefree_split(const ZInt& n, ZInt& s, ZInt& d);

// Gaussian rationals Q(i)
struct GaussRat {
    QRat re, im;

    GaussRat() = default;
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(const QRat& r) : re(r), im(0) {}
    GaussRat(const QRat& r, const QRat& i) : re(r), im(i) {}

    static GaussRat I() { return GaussRat(QRat(0), QRat(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    GaussRat conj() const { return GaussRat(re, -im); }
    QRat norm() const { return re * re + im * im; }
    GaussRat inv() const;

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);
    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
    friend bool operator<(const GaussRat& a, const GaussRat& b);
};

std::string to_string(const GaussRat& g);
// exact square root inside Q(i), if one exists
std::optional<GaussRat> gauss_sqrt(const GaussRat& g);

// Real quadratic surd: rational_part + radical_coeff * sqrt(radicand)
struct Surd {
    QRat rational_part;
    QRat radical_coeff;
    long radicand = 1;

    Surd() = default;
    Surd(const QRat& r) : rational_part(r), radical_coeff(0), radicand(1) {}
    Surd(const QRat& r, const QRat& c, long d);

    bool is_integer() const;
    bool is_rational() const { return sgn(radical_coeff) == 0; }
    friend bool operator==(const Surd& a, const Surd& b)
    {
        return a.rational_part == b.rational_part && a.radical_coeff == b.radical_coeff && a.radicand == b.radicand;
    }
};

std::string to_string(const Surd& s);
Surd sqrt_exact(const QRat& x);
// signed sum of surds sharing one radicand; throws MixedRadicands otherwise
Surd surd_combine(const std::vector<std::pair<int, Surd>>& terms);

// Element of Q(i)(sqrt d): a + b*sqrt(d), d > 1 squarefree, or d = 1 with b = 0.
// Mixing two different radicands raises MixedRadicands.
class Constant {
public:
    Constant() : a_(), b_(), d_(1) {}
    Constant(long v) : a_(v), b_(), d_(1) {}
    Constant(const QRat& q) : a_(q), b_(), d_(1) {}
    Constant(const GaussRat& g) : a_(g), b_(), d_(1) {}
    Constant(const GaussRat& a, const GaussRat& b, long d);

    static Constant I() { return Constant(GaussRat::I()); }
    static Constant from_surd(const Surd& s);

    const GaussRat& a() const { return a_; }
    const GaussRat& b() const { return b_; }
    long radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_.im == 0 && a_.re == 1; }
    bool is_gauss() const { return b_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && a_.is_real(); }
    bool is_integer() const;
    bool is_nonneg_integer() const;
    // real = every component real, i.e. the value lies in Q(sqrt d)
    bool is_real() const { return a_.is_real() && b_.is_real(); }
    QRat to_qrat() const;
    long to_long() const;
    std::optional<Surd> to_surd() const;

    Constant conj() const;       // i -> -i
    Constant surd_conj() const;  // sqrt d -> -sqrt d
    Constant inv() const;

    Constant operator-() const { return Constant(-a_, -b_, d_); }
    Constant& operator+=(const Constant& o);
    Constant& operator-=(const Constant& o);
    Constant& operator*=(const Constant& o);
    Constant& operator/=(const Constant& o);
    friend Constant operator+(Constant a, const Constant& b) { return a += b; }
    friend Constant operator-(Constant a, const Constant& b) { return a -= b; }
    friend Constant operator*(Constant a, const Constant& b) { return a *= b; }
    friend Constant operator/(Constant a, const Constant& b) { return a /= b; }
    friend bool operator==(const Constant& a, const Constant& b)
    {
        return a.d_ == b.d_ && a.a_ == b.a_ && a.b_ == b.b_;
    }
    friend bool operator!=(const Constant& a, const Constant& b) { return !(a == b); }
    // total order used for deterministic sorting only
    friend bool operator<(const Constant& a, const Constant& b);

private:
    void normalize();
    static long join(long d1, const GaussRat& b1, long d2, const GaussRat& b2);

    GaussRat a_, b_;
    long d_;
};

std::string to_string(const Constant& c);
Constant pow(const Constant& c, long e);
std::optional<Constant> try_sqrt(const Constant& c);
// throws MixedRadicands when the root leaves the supported tower
Constant csqrt(const Constant& c);
// sqrt(d) for a squarefree integer (negative folds into i)
Constant sqrt_of_integer(const ZInt& n);

// Accumulates sums whose terms may carry different radicands.
class RadicalSum {
public:
    void add(const Constant& c, int sign = 1);
    bool is_integer() const;
    bool is_nonneg_integer() const;
    bool is_rational() const;
    // valid only when every radical part cancelled
    GaussRat rational_value() const { return base_; }
    bool single_field() const;
    Constant value() const;

private:
    GaussRat base_;
    std::vector<std::pair<long, GaussRat>> rad_;
};

}  // namespace galois
