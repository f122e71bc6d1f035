#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "galois/linalg.hpp"
#include "galois/ratfun.hpp"

namespace galois {

// d^2 y + a dy + b y = 0
struct LinODE2 {
    RatFunc a, b;
};

// d^2 zeta = r zeta
struct ReducedODE {
    RatFunc r;
};

enum class GaugeKind { StrongIsogaloisian, VirtuallyStrongIsogaloisian, Unknown };

struct GaugeClass {
    GaugeKind kind = GaugeKind::Unknown;
    std::optional<QRat> witness_kappa;
    std::optional<RatFunc> f;  // a = 2 kappa dlog f
};

const char* gauge_kind_name(GaugeKind k);

// dX = -A X
struct FirstOrderSystem {
    std::array<std::array<RatFunc, 2>, 2> A;
};

// zeta = multiplier * exp(int omega)
struct HyperexpSolution {
    RatFunc omega;
    Poly multiplier = Poly(1);
    int algebraic_degree = 1;
    // cases 2-3: coefficients of the minimal polynomial of omega, lowest first
    std::vector<RatFunc> minpoly;
    // log-derivative of zeta itself
    RatFunc logderiv() const;
};

// d^3 u + p2 d^2 u + p1 du + p0 u = 0
struct ThirdOrderOp {
    RatFunc p2, p1, p0;
    RatFunc apply(const RatFunc& u) const;
};

// dv = r - v^2
struct RiccatiForm {
    RatFunc r;
    bool is_solution(const RatFunc& v) const { return v.derivative() == r - v * v; }
};

// sum c[i] d^i
struct LinOp {
    std::vector<RatFunc> c;
    int order() const { return static_cast<int>(c.size()) - 1; }
    RatFunc apply(const RatFunc& y) const;
    // composition helpers: d o L, f L, L + M
    LinOp derive() const;
    LinOp scaled(const RatFunc& f) const;
    LinOp operator+(const LinOp& o) const;
};

// Nullspace of the unknowns u[b][j] (block b, j = 0..N) with
//   sum_b ops[b][k] (sum_j u[b][j] x^j / D) = 0   for every component k.
// Vectors are laid out block after block.
std::vector<Vec> polynomial_ansatz(const std::vector<std::vector<LinOp>>& ops, const Poly& D, int N);
// single block, single component: the solutions as rational functions
std::vector<RatFunc> ansatz_solutions(const LinOp& L, const Poly& D, int N);

std::pair<ReducedODE, GaugeClass> reduce_to_normal(const LinODE2& eq);
GaugeClass gauge_class(const RatFunc& a);
FirstOrderSystem op_to_system(const LinODE2& eq);
LinODE2 system_to_op(const FirstOrderSystem& sys);
ThirdOrderOp second_symmetric_power(const ReducedODE& eq);
RiccatiForm riccati_form(const ReducedODE& eq);
bool verify_solution(const ReducedODE& eq, const HyperexpSolution& sol);
// d^2 P + 2 omega dP + (d omega + omega^2 - r) P
RatFunc recu1_residual(const RatFunc& r, const RatFunc& omega, const RatFunc& P);

LinOp as_linop(const LinODE2& eq);
LinOp as_linop(const ReducedODE& eq);
LinOp as_linop(const ThirdOrderOp& op);

// Rational solutions of L y = 0 have the form num / D with deg num <= top.
struct RationalSolutionBounds {
    Poly D = Poly(1);
    std::vector<std::pair<Constant, int>> poles;
    long top = 0;
};
// nullopt when no nonzero rational solution can exist
std::optional<RationalSolutionBounds> rational_solution_bounds(const LinOp& L);

// Basis of rational solutions of L y = 0 from the indicial equations at the
// finite singular points and at infinity. Throws UnsupportedSplitting when the
// leading coefficient does not split.
std::vector<RatFunc> rational_solutions(const LinOp& L);

}  // namespace galois
