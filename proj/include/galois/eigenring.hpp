#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "galois/diffop.hpp"

namespace galois {

using Mat2 = std::array<std::array<RatFunc, 2>, 2>;

// search space for rational solutions: poles of the input with order raised by the
// boost, numerator degree up to the bound (negative = deg of the denominator + 8).
// In operator form a negative degree also widens the space to the indicial bounds
// of the b-equation; an explicit degree is kept and the shortfall reported as exhausted.
struct AnsatzBounds {
    int max_pole_order_boost = 4;
    int max_numerator_degree = -1;
};

enum class Formalism { System, Operator };

// a + b d
struct OperatorElement {
    RatFunc a, b;
    std::string to_string(const std::string& var = "x") const;
};

struct EigenringBasis {
    Formalism formalism = Formalism::Operator;
    LinODE2 eq;                           // d^2 + p d + q
    FirstOrderSystem system;
    std::vector<OperatorElement> elements;  // identity first
    std::vector<Mat2> matrices;           // parallel to elements
    int dimension = 0;
    bool ansatz_exhausted = false;
};

enum class DimensionVerdict { IrreducibleOrIndecomposable, AdditiveOrInMultiplicative, IdentityGroup, AnsatzSuspect };
const char* dimension_verdict_name(DimensionVerdict v);

// P = [[a, b], [a' - b q, a + b' - b p]]
Mat2 element_matrix(const LinODE2& eq, const OperatorElement& e);
// dP - P A + A P
Mat2 eigen_residual(const FirstOrderSystem& sys, const Mat2& P);

EigenringBasis eigenring_of_system(const FirstOrderSystem& A, const AnsatzBounds& bounds = {});
EigenringBasis eigenring_of_operator(const LinODE2& L, const AnsatzBounds& bounds = {});
EigenringBasis eigenring_of_reduced(const ReducedODE& eq, const AnsatzBounds& bounds = {});
// b-equation whose rational solutions give the non-scalar elements
LinOp eigenring_b_operator(const LinODE2& L);
// basis from a list of b's: {1} and (b p - b')/2 + b d
EigenringBasis basis_from_b(const LinODE2& L, const std::vector<RatFunc>& bs, Formalism f);

// T^2 + c1 T + c0 with constant coefficients (c0, c1, 1)
std::array<Constant, 3> element_charpoly(const EigenringBasis& E, const OperatorElement& e);
std::array<Constant, 3> matrix_charpoly(const Mat2& P, const std::string& name = "element");
// first-order right factor d + s of L
std::optional<RatFunc> right_factor(const LinODE2& L, const EigenringBasis& E);
DimensionVerdict classify_by_dimension(const EigenringBasis& E);

// invariants used by the property suites
bool commutator_holds(const EigenringBasis& E);
bool closure_holds(const EigenringBasis& E);
bool constant_eigenvalues(const EigenringBasis& E);

}  // namespace galois
