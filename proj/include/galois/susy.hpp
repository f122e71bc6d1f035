#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galois/diffop.hpp"

namespace galois {

// d = sqrt_alpha * d/dz; sqrt_alpha = 1 is the plain derivation
struct Derivation {
    RatFunc sqrt_alpha = RatFunc(1);
    RatFunc operator()(const RatFunc& f) const { return sqrt_alpha * f.derivative(); }
    bool is_plain() const { return sqrt_alpha == RatFunc(1); }
};

struct Superpotential {
    RatFunc W;
    Derivation d;
};

struct PartnerPair {
    RatFunc v_minus, v_plus;
    Superpotential W;
    bool identities_hold() const;
};

PartnerPair partner_from_superpotential(const Superpotential& W);
Superpotential superpotential_from_solution(const RatFunc& psi_logderiv, const Derivation& d = {});

// d^2 u + P du + (Q - m R) u = 0
struct DarbouxGeneralResult {
    RatFunc P, Q, R;
    // logarithmic derivative of theta * sqrt(R)
    RatFunc gauge_logderiv;
};

// theta solves d^2 theta + P d theta + Q theta = 0, given through its log-derivative
DarbouxGeneralResult darboux_general(const RatFunc& P, const RatFunc& Q, const RatFunc& R,
                                     const RatFunc& theta_logderiv);
// log-derivative of u = (dy - (dtheta/theta) y)/sqrt(R) from that of y
RatFunc darboux_general_image(const DarbouxGeneralResult& res, const RatFunc& theta_logderiv,
                              const RatFunc& y_logderiv);

struct DarbouxResult {
    RatFunc v_minus, v_plus;
    Constant lambda1;
    RatFunc seed_logderiv;
    Derivation d;
    Superpotential W;
    // log-derivative of Psi+ = d Psi - seed_logderiv Psi
    RatFunc transform_logderiv(const RatFunc& psi_logderiv) const;
};

// seed_logderiv u satisfies d u + u^2 = V- - lambda1
DarbouxResult darboux_schrodinger(const RatFunc& v_minus, const Constant& lambda1, const RatFunc& seed_logderiv,
                                  const Derivation& d = {});

// Psi = multiplier * exp(int omega)
struct HyperexpFunction {
    RatFunc multiplier = RatFunc(1);
    RatFunc omega;
    RatFunc logderiv() const;
};

struct CrumSeed {
    Constant lambda;
    HyperexpFunction psi;
};

struct CrumResult {
    RatFunc new_potential;
    // Wronskian = wronskian_factor * exp(int wronskian_omega)
    RatFunc wronskian_factor;
    RatFunc wronskian_omega;
    std::vector<CrumSeed> seeds;
    RatFunc wronskian_logderiv() const { return wronskian_factor.derivative() / wronskian_factor + wronskian_omega; }
    // W(Psi_1..Psi_n, Psi) / W(Psi_1..Psi_n)
    HyperexpFunction transform(const HyperexpFunction& psi) const;
    std::string solution_map() const;
};

// residual of d^2 Psi - (V - lambda) Psi divided by exp(int omega)
RatFunc schrodinger_residual(const RatFunc& V, const Constant& lambda, const HyperexpFunction& psi);
CrumResult crum_iteration(const RatFunc& V, const std::vector<CrumSeed>& seeds);

// W(x; mu) = sum_k mu^k coeffs[k]
struct ParamSuperpotential {
    std::vector<RatFunc> coeffs;
    Derivation d;
};

struct AffineMap {
    Constant kappa = Constant(1), shift;
    Constant apply(const Constant& a) const { return kappa * a + shift; }
    Poly as_poly() const { return Poly(std::vector<Constant>{shift, kappa}); }
    std::string to_string() const;
};

struct ShapeInvarianceResult {
    bool holds = false;
    AffineMap f_map;
    bool free_shift = false;        // every shift c solves the identity; c = 1 is reported
    Poly remainder;                 // R(a1) = V+(x;a0) - V-(x;a1) as a polynomial in a0
    Poly remainder_in_a1;           // the same in terms of a1
    std::optional<Poly> potential;  // G with R(a0) = G(f(a0)) - G(a0), so E_n = G(a_n) - G(a_0)
    std::vector<RatFunc> v_minus, v_plus;  // coefficients in mu
    std::string energy_formula;
    Poly energy(int n) const;  // E_n as a polynomial in a0
};

// V_{+/-}(x; mu) coefficient lists
std::vector<RatFunc> param_partner(const ParamSuperpotential& W, int sign);
ShapeInvarianceResult shape_invariance_check(const ParamSuperpotential& W);
std::vector<std::pair<int, Poly>> gendenshtein_spectrum(const ShapeInvarianceResult& res, int n_max);

enum class Domain { RealLine, HalfLine };
// decay heuristic: the exponential part tends to zero at both ends of the domain
bool normalizable_candidate(const HyperexpFunction& psi, Domain dom);

}  // namespace galois
