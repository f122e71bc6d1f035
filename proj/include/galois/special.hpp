#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "galois/diffop.hpp"

namespace galois {

// exponent differences at the three singular points
struct RiemannExponents {
    Surd lambda_t, mu_t, nu_t;
};

struct KimuraWitness {
    enum class Kind { OddSum, Family };
    Kind kind = Kind::OddSum;
    int sum_index = -1;           // 0: l+m+n, 1: -l+m+n, 2: l-m+n, 3: l+m-n
    Surd sum;                     // the odd integer
    int family = 0;               // 1..15
    std::array<int, 3> order{};   // position of each difference in the family row
    std::array<int, 3> signs{};   // sign applied to each difference
    std::array<long, 3> lmq{};    // integer shifts (family 1: third unused)
    std::string describe() const;
};

struct KimuraVerdict {
    bool integrable = false;
    std::optional<KimuraWitness> reason;
};

KimuraVerdict kimura_check(const RiemannExponents& e);

// row of the fifteen-family table
struct KimuraFamily {
    int index;
    std::array<QRat, 3> base;
    bool third_arbitrary;
    bool parity_even;
};
const std::vector<KimuraFamily>& kimura_families();

struct RiemannSymbol {
    Surd rho, rho_p, sigma, sigma_p, tau, tau_p;  // exponents at 0, 1, infinity
};

struct HypergeometricReduction {
    Surd kappa, beta, gamma;
    RiemannExponents differences;  // 1-gamma, gamma-kappa-beta, beta-kappa
};

HypergeometricReduction riemann_to_hypergeometric(const RiemannSymbol& s);
// singularities at 0, 1, infinity
LinODE2 riemann_equation(const RiemannSymbol& s);
// x(1-x) y'' + (gamma - (kappa+beta+1) x) y' - kappa beta y = 0, monic
LinODE2 hypergeometric_equation(const Surd& kappa, const Surd& beta, const Surd& gamma);

// d^2 y = (1/4 - kappa/x + (4 mu^2 - 1)/(4x^2)) y
bool whittaker_check(const QRat& kappa, const QRat& mu);
ReducedODE whittaker_equation(const QRat& kappa, const QRat& mu);

bool bessel_check(const QRat& n);
LinODE2 bessel_equation(const QRat& n);

// Rehm form d^2 y = (a x^2 + 2 b x + c) y
bool weber_check(const QRat& a, const QRat& b, const QRat& c);
ReducedODE rehm_equation(const QRat& a, const QRat& b, const QRat& c);
// d^2 y = (x^2/4 - 1/2 - n) y
ReducedODE weber_equation(const QRat& n);

enum class OrthoFamily { Hermite, ChebyshevT, ChebyshevU, Legendre, Laguerre, AssocLaguerre, Gegenbauer, Jacobi, Bessel };
const char* ortho_family_name(OrthoFamily f);
OrthoFamily ortho_family_from_name(const std::string& name);  // UnknownFamily

struct OrthoData {
    Poly Q, L;
    Constant lambda;
};
// params: AssocLaguerre/Gegenbauer {m}, Jacobi {m, nu}
OrthoData orthogonal_data(OrthoFamily f, long n, const std::vector<QRat>& params = {});
// d^2 y + (L/Q) dy + (lambda/Q) y = 0
LinODE2 orthogonal_equation(OrthoFamily f, long n, const std::vector<QRat>& params = {});
LinODE2 orthogonal_equation(const std::string& family, long n, const std::vector<QRat>& params = {});

}  // namespace galois
