#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "galois/diffop.hpp"
#include "galois/susy.hpp"

namespace galois {

enum class Atom { Exp, Tan, Tanh, Coth, Sin, Cos, Sinh, Cosh, Power, Identity, Custom };
const char* atom_name(Atom a);

// z = z(x) with (dz/dx)^2 = alpha(z)
struct HamiltonianChange {
    Atom atom = Atom::Identity;
    Constant rate = Constant(1);  // Exp: z = e^{rate x};  Power: z = x^rate
    RatFunc alpha = RatFunc(1);
    std::optional<RatFunc> sqrt_alpha;  // dz/dx as a rational function of z, when it is one
    int sqrt_sign = 1;                  // dz/dx = sqrt_sign * sqrt(alpha) otherwise
    // d/dz acting on the coefficient variable (z itself unless a custom coordinate is used)
    Derivation zdiff;
    std::string inverse_description;

    bool sqrt_alpha_rational() const { return sqrt_alpha.has_value(); }
    // x-form of the atom, e.g. "tanh(x)", "exp(-x)"
    std::string z_of_x() const;
    RatFunc dalpha() const { return zdiff(alpha); }
};

HamiltonianChange change_for_atom(Atom a, const Constant& rate = Constant(1));
// user-supplied alpha and optional rational sqrt
HamiltonianChange custom_change(const RatFunc& alpha, const std::optional<RatFunc>& sqrt_alpha,
                                const Derivation& zdiff = {}, const std::string& description = "custom");

// Element a + b*s of C(z, s), s^2 = alpha, s = dz/dx.
struct HatElem {
    RatFunc a, b;
    HatElem() = default;
    HatElem(const RatFunc& r) : a(r) {}
    HatElem(const RatFunc& r, const RatFunc& s) : a(r), b(s) {}
    bool is_rational() const { return b.is_zero(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    friend bool operator==(const HatElem& x, const HatElem& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const HatElem& x, const HatElem& y) { return !(x == y); }
};

// C(z, sqrt alpha) with the hat derivation sqrt(alpha) d/dz
class HatField {
public:
    explicit HatField(const HamiltonianChange& ch) : ch_(ch) {}
    const HamiltonianChange& change() const { return ch_; }

    HatElem sqrt_alpha() const;
    HatElem normalize(const HatElem& e) const;  // folds s into a when sqrt(alpha) is rational
    HatElem add(const HatElem& x, const HatElem& y) const;
    HatElem sub(const HatElem& x, const HatElem& y) const;
    HatElem mul(const HatElem& x, const HatElem& y) const;
    HatElem div(const HatElem& x, const HatElem& y) const;
    HatElem d(const HatElem& x) const;  // hat derivative
    HatElem dn(const HatElem& x, int n) const;
    bool equal(const HatElem& x, const HatElem& y) const;

private:
    HamiltonianChange ch_;
};

// d^2 y + (alpha'/(2 alpha)) dy - (f/alpha) y = 0
struct AlgebrizedODE {
    LinODE2 eq;
    HamiltonianChange change;
    bool field_extension = false;  // analysis field is C(z, sqrt alpha)
};

AlgebrizedODE algebrize_reduced(const RatFunc& f, const HamiltonianChange& change);

struct ExponentialAlgebrization {
    Constant lambda;
    long q = 1;
    std::vector<long> m;  // e^{lambda_i x} = z^{m_i}
    HamiltonianChange change;
    AlgebrizedODE ode;
};

// z = e^{lambda x / q};  g receives z^{m_i} for the atoms e^{lambda_i x}
ExponentialAlgebrization exponential_change(const std::vector<Constant>& exponents);
ExponentialAlgebrization algebrize_exponential(
    const std::vector<Constant>& exponents, const std::function<RatFunc(const std::vector<RatFunc>&)>& g);

// d^2 y + a dy + b y = 0 with a, b given over the change's field
AlgebrizedODE algebrize_general(const HatElem& a, const HatElem& b, const HamiltonianChange& change);

// sum of products x_part(x) * z_part(z)
struct BiTerm {
    RatFunc x_part, z_part;
};
using Separable = std::vector<BiTerm>;

// z = e^{int f}: d^2 r + A dr + B r = 0 with A, B separable in (x, z) -> LinODE2 in z
LinODE2 algebrize_exp_integral(const RatFunc& f, const Separable& A, const Separable& B);
// the x-equation produced from the algebraic form (a, b)
std::pair<Separable, Separable> exp_integral_equation(const RatFunc& f, const RatFunc& a, const RatFunc& b);

// dv = c0 + c1 v + c2 v^2
struct RiccatiEq {
    RatFunc c0, c1, c2;
    RatFunc residual(const RatFunc& v) const { return v.derivative() - c0 - c1 * v - c2 * v * v; }
};
RiccatiEq algebrize_riccati(const HatElem& a, const HatElem& b, const HatElem& c, const HamiltonianChange& change);

struct ReducedAlgebrizedSchrodinger {
    RatFunc V_hat, alpha, script_W, script_V, V_bold;
    HamiltonianChange change;
    // d^2 Phi = r Phi at eigenvalue lambda
    RatFunc r(const Constant& lambda) const { return V_bold - RatFunc(lambda) / alpha; }
    ReducedODE reduced(const Constant& lambda) const { return ReducedODE{r(lambda)}; }
    // -hat d^2 + V_hat - lambda as a monic operator in z (coefficient field C(z))
    LinODE2 hat_operator(const Constant& lambda) const;
    bool coherent() const;
};

ReducedAlgebrizedSchrodinger reduced_algebrized_schrodinger(const RatFunc& V_hat, const RatFunc& alpha);
ReducedAlgebrizedSchrodinger reduced_algebrized_schrodinger(const RatFunc& V_hat, const HamiltonianChange& change);

using RatMatrix = std::vector<std::vector<RatFunc>>;
using HatMatrix = std::vector<std::vector<HatElem>>;

// hat d Y = -A Y  ->  d_z Y = -(A / sqrt alpha) Y
struct AlgebrizedSystem {
    RatMatrix A_hat;  // entries of A over z
    RatMatrix A_z;    // A_hat / sqrt(alpha)
    HamiltonianChange change;
    // d_z Y + A_z Y for a vector of rational functions
    std::vector<RatFunc> residual(const std::vector<RatFunc>& Y) const;
};
AlgebrizedSystem algebrize_system(const HatMatrix& A, const HamiltonianChange& change);

// rational parametrisation of s^2 = alpha for quadratic/linear alpha:
// z = z(t), s = s(t), hat d = rho(t) d/dt
struct SqrtParametrization {
    RatFunc z, s, rho;
    std::string t_of_x;
};
std::optional<SqrtParametrization> sqrt_parametrization(const HamiltonianChange& change);
// hat_d^2 y + p hat_d y + q y = 0 with p, q in C(z, s) = C(t), as a monic t-equation
LinODE2 hat_equation_over_extension(const HatElem& p, const HatElem& q, const HamiltonianChange& change,
                                    const SqrtParametrization& par);

// Phi = alpha^{1/4} Psi_hat: quarter powers kept as exponent ledgers
struct PowerProduct {
    std::vector<std::pair<RatFunc, QRat>> factors;
    RatFunc omega;  // exp(int omega)
    RatFunc logderiv() const;
};
bool eigenfunction_correspondence(const RatFunc& alpha, const PowerProduct& Phi, const PowerProduct& Psi_hat);

struct PotentialSearchResult {
    RatFunc script_W, V_hat;
    std::vector<std::string> z_of_x;     // admissible solutions of (dz/dx)^2 = alpha
    std::vector<std::string> potentials;  // V(x) = V_hat(z(x)) for each
};
PotentialSearchResult inverse_potential_search(const RatFunc& V_bold, const RatFunc& alpha);

// rendering of a rational function of z over a table atom
std::string render_over_atom(const RatFunc& f, const HamiltonianChange& change);

}  // namespace galois
