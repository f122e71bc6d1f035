#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois/exactnum.hpp"

namespace galois {

// Dense univariate polynomial, lowest degree first.
class Poly {
public:
    Poly() = default;
    Poly(long v) : Poly(Constant(v)) {}
    Poly(const Constant& c);
    explicit Poly(std::vector<Constant> coeffs);

    static Poly x();
    static Poly monomial(const Constant& c, int deg);
    static Poly linear(const Constant& root);  // x - root

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Constant& lc() const;
    Constant coeff(int i) const;
    const std::vector<Constant>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Constant& k);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Constant& k) { return a *= k; }
    friend Poly operator*(const Constant& k, Poly a) { return a *= k; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division: *this = q*d + r
    void divmod(const Poly& d, Poly& q, Poly& r) const;
    Poly operator/(const Poly& d) const;  // exact quotient (remainder discarded)
    Poly operator%(const Poly& d) const;

    Poly derivative() const;
    Poly integral() const;
    Constant eval(const Constant& v) const;
    Poly compose(const Poly& inner) const;
    Poly shift(const Constant& c) const;  // p(x + c)
    Poly monic() const;
    Poly conj() const;
    Poly surd_conj() const;
    bool is_rational() const;
    bool is_gauss() const;
    long radicand() const;  // 1 when no surd coefficient
    // valuation at 0 (lowest nonzero index), -1 for zero
    int low_degree() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Constant> c_;
};

Poly pow(const Poly& p, int e);
Poly gcd(const Poly& a, const Poly& b);  // monic
// s*a + t*b = g (monic gcd)
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
// a = prod f_i^i, returns (f_i, i) with deg f_i > 0
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a);

struct Root {
    Constant value;
    int multiplicity;
};

// complete root list over the supported tower; throws UnsupportedSplitting
std::vector<Root> roots(const Poly& p);
// integer roots only (no splitting requirement)
std::vector<long> integer_roots(const Poly& p);

class RatFunc {
public:
    RatFunc() : num_(), den_(Poly(1)) {}
    RatFunc(long v) : RatFunc(Poly(v)) {}
    RatFunc(const Constant& c) : RatFunc(Poly(c)) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly(1)) {}
    RatFunc(const Poly& n, const Poly& d);

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    Constant constant_value() const;  // requires is_constant()

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const;
    Constant eval(const Constant& v) const;
    RatFunc compose(const RatFunc& inner) const;
    RatFunc conj() const;
    // deg den - deg num (order of zero at infinity); large for zero
    int order_at_infinity() const;
    bool canonical() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    Poly num_, den_;
};

RatFunc pow(const RatFunc& f, int e);

// Laurent coefficients of f at c: returns coefficients of (x-c)^val, (x-c)^(val+1), ...
std::vector<Constant> laurent_at(const RatFunc& f, const Constant& c, int& val, int nterms);
// expansion in 1/x: coefficients of x^top, x^(top-1), ...
std::vector<Constant> laurent_at_infinity(const RatFunc& f, int& top, int nterms);
// sigma with (sum sigma_j t^j)^2 = sum rho_j t^j through index count-1
std::vector<Constant> series_sqrt(const std::vector<Constant>& rho, int count);

struct PoleData {
    Constant location;
    int order = 0;
    std::vector<Constant> principal_coeffs;  // (x-c)^-order ... (x-c)^-1
    Constant next_coeff;                      // (x-c)^0
};

struct InfinityData {
    int order_at_infinity = 0;
    std::optional<Poly> sqrt_part;
    Constant sub_coeff;  // b of (inf3) or coefficient of x^-2 when order is 2
    Constant leading;    // leading coefficient of the expansion
};

std::vector<Root> factor_denominator(const RatFunc& f);
PoleData pole_expansion(const RatFunc& f, const Constant& c);
InfinityData infinity_expansion(const RatFunc& f);

struct PartialFractions {
    struct Term {
        Constant root;
        std::vector<Constant> coeffs;  // coeffs[j] multiplies (x-root)^-(j+1)
    };
    Poly poly_part;
    std::vector<Term> terms;

    RatFunc recombine() const;
    std::string to_string(const std::string& var = "x") const;
};

PartialFractions partial_fractions(const RatFunc& f);

// integral f = rational_part + integral(log_integrand), log_integrand with squarefree denominator
struct HermiteResult {
    RatFunc rational_part;
    RatFunc log_integrand;
};
HermiteResult hermite_reduce(const RatFunc& f);

std::string constant_factor_string(const Constant& c);

}  // namespace galois
