#include "galois/eigenring.hpp"

#include <algorithm>
#include <map>

namespace galois {

namespace {

const Constant kHalf(qrat(1, 2));

struct Support {
    Poly D = Poly(1);
    std::vector<std::pair<Constant, int>> poles;  // with the allowed order
    int N = 0;
};

Support make_support(const std::vector<RatFunc>& entries, const AnsatzBounds& bounds)
{
    std::vector<std::pair<Constant, int>> acc;
    for (auto& e : entries)
        for (auto& rt : factor_denominator(e)) {
            bool found = false;
            for (auto& [c, o] : acc)
                if (c == rt.value) {
                    o = std::max(o, rt.multiplicity);
                    found = true;
                }
            if (!found) acc.push_back({rt.value, rt.multiplicity});
        }
    Support s;
    for (auto& [c, o] : acc) {
        s.poles.push_back({c, o + bounds.max_pole_order_boost});
        s.D *= pow(Poly::linear(c), o + bounds.max_pole_order_boost);
    }
    s.N = bounds.max_numerator_degree < 0 ? s.D.degree() + 8 : std::max(bounds.max_numerator_degree, s.D.degree());
    return s;
}

// a solution touching the top numerator degree or the full pole order may be cut off
bool binds(const Support& s, const RatFunc& f)
{
    if (f.is_zero()) return false;
    Poly num = f.num() * (s.D / f.den());
    if (num.degree() >= s.N) return true;
    for (auto& [c, o] : s.poles) {
        int val = 0;
        laurent_at(f, c, val, 1);
        if (-val >= o) return true;
    }
    return false;
}

bool in_matrix_span(const std::vector<Mat2>& ms, const Mat2& t)
{
    std::vector<std::vector<RatFunc>> images;
    for (auto& m : ms) images.push_back({m[0][0], m[0][1], m[1][0], m[1][1]});
    images.push_back({t[0][0], t[0][1], t[1][0], t[1][1]});
    for (auto& v : linear_ansatz_images(images))
        if (!v.back().is_zero()) return true;
    return false;
}

Mat2 mul(const Mat2& a, const Mat2& b)
{
    Mat2 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

}  // namespace

const char* dimension_verdict_name(DimensionVerdict v)
{
    switch (v) {
    case DimensionVerdict::IrreducibleOrIndecomposable: return "irreducible_or_indecomposable";
    case DimensionVerdict::AdditiveOrInMultiplicative: return "additive_or_in_multiplicative";
    case DimensionVerdict::IdentityGroup: return "identity";
    default: return "ansatz_suspect";
    }
}

std::string OperatorElement::to_string(const std::string& var) const
{
    std::string s;
    if (!b.is_zero()) s = b == RatFunc(1) ? std::string("d") : "(" + b.to_string(var) + ")*d";
    if (!a.is_zero() || s.empty()) {
        std::string as = a.to_string(var);
        if (s.empty())
            s = as;
        else if (as[0] == '-')
            s += as;
        else
            s += "+" + as;
    }
    return s;
}

Mat2 element_matrix(const LinODE2& eq, const OperatorElement& e)
{
    const RatFunc &p = eq.a, &q = eq.b;
    Mat2 P;
    P[0][0] = e.a;
    P[0][1] = e.b;
    P[1][0] = e.a.derivative() - e.b * q;
    P[1][1] = e.a + e.b.derivative() - e.b * p;
    return P;
}

Mat2 eigen_residual(const FirstOrderSystem& sys, const Mat2& P)
{
    Mat2 PA = mul(P, sys.A), AP = mul(sys.A, P), R;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) R[i][j] = P[i][j].derivative() - PA[i][j] + AP[i][j];
    return R;
}

LinOp eigenring_b_operator(const LinODE2& L)
{
    const RatFunc &p = L.a, &q = L.b;
    RatFunc dp = p.derivative();
    return LinOp{{-dp.derivative() - p * dp + RatFunc(2) * q.derivative(), RatFunc(-2) * dp - p * p + RatFunc(4) * q,
                  RatFunc(0), RatFunc(1)}};
}

EigenringBasis basis_from_b(const LinODE2& L, const std::vector<RatFunc>& bs, Formalism f)
{
    EigenringBasis E;
    E.formalism = f;
    E.eq = L;
    E.elements.push_back({RatFunc(1), RatFunc(0)});
    for (auto& b : echelon_span(bs)) E.elements.push_back({(b * L.a - b.derivative()) * RatFunc(kHalf), b});
    for (auto& e : E.elements) E.matrices.push_back(element_matrix(L, e));
    E.dimension = static_cast<int>(E.elements.size());
    E.system = op_to_system(L);
    return E;
}

EigenringBasis eigenring_of_system(const FirstOrderSystem& sys, const AnsatzBounds& bounds)
{
    Support s = make_support({sys.A[0][0], sys.A[0][1], sys.A[1][0], sys.A[1][1]}, bounds);
    const auto& A = sys.A;
    // component (i,j) of dP - PA + AP as an operator on the entry (e1,e2)
    std::vector<std::vector<LinOp>> ops(4);
    for (int e = 0; e < 4; ++e) {
        int e1 = e / 2, e2 = e % 2;
        for (int k = 0; k < 4; ++k) {
            int i = k / 2, j = k % 2;
            RatFunc c0(0);
            if (i == e1) c0 -= A[e2][j];
            if (j == e2) c0 += A[i][e1];
            ops[e].push_back(LinOp{{c0, RatFunc(k == e ? 1 : 0)}});
        }
    }
    auto ns = polynomial_ansatz(ops, s.D, s.N);
    auto to_matrix = [&](const Vec& v) {
        Mat2 P;
        for (int e = 0; e < 4; ++e) {
            auto first = v.begin() + e * (s.N + 1);
            P[e / 2][e % 2] = RatFunc(Poly(std::vector<Constant>(first, first + s.N + 1)), s.D);
        }
        return P;
    };
    std::vector<Mat2> found;
    std::vector<RatFunc> bs;
    bool exhausted = false;
    for (auto& v : ns) {
        Mat2 P = to_matrix(v);
        for (int i = 0; i < 4; ++i)
            if (binds(s, P[i / 2][i % 2])) exhausted = true;
        if (!P[0][1].is_zero()) bs.push_back(P[0][1]);
        found.push_back(P);
    }
    // the companion dictionary: A = [[0,-1],[q,p]]
    LinODE2 L{A[1][1], A[1][0]};
    bool companion = A[0][0].is_zero() && A[0][1] == RatFunc(-1);
    EigenringBasis E = basis_from_b(L, bs, Formalism::System);
    if (!companion) {
        // general system: keep the matrices found
        Mat2 I;
        I[0][0] = I[1][1] = RatFunc(1);
        E.matrices = {I};
        E.elements = {{RatFunc(1), RatFunc(0)}};
        for (auto& P : found) {
            if (in_matrix_span(E.matrices, P)) continue;
            E.matrices.push_back(P);
            E.elements.push_back({P[0][0], P[0][1]});
        }
        E.dimension = static_cast<int>(E.matrices.size());
        E.system = sys;
    }
    E.ansatz_exhausted = exhausted;
    return E;
}

enum class Coverage { Unknown, Complete, Short };

// widen (automatic degree) or compare (explicit degree) against the indicial bounds of the b-equation
static Coverage apply_exact_bounds(Support& s, const LinOp& B, bool widen)
{
    std::optional<RationalSolutionBounds> ex;
    try {
        ex = rational_solution_bounds(B);
    } catch (const Error& e) {
        if (!e.unsupported()) throw;
        return Coverage::Unknown;
    }
    if (!ex) return Coverage::Complete;
    bool short_of = false;
    for (auto& [c, k] : ex->poles) {
        auto it = std::find_if(s.poles.begin(), s.poles.end(), [&](auto& pc) { return pc.first == c; });
        int have = it == s.poles.end() ? 0 : it->second;
        if (have >= k) continue;
        short_of = true;
        if (!widen) continue;
        s.D *= pow(Poly::linear(c), k - have);
        if (it == s.poles.end()) s.poles.push_back({c, k});
        else it->second = k;
    }
    long need = ex->top + s.D.degree() - ex->D.degree();
    if (need > s.N) {
        short_of = true;
        if (widen) s.N = static_cast<int>(need);
    }
    return short_of && !widen ? Coverage::Short : Coverage::Complete;
}

EigenringBasis eigenring_of_operator(const LinODE2& L, const AnsatzBounds& bounds)
{
    Support s = make_support({L.a, L.b}, bounds);
    std::vector<RatFunc> bs;
    Coverage cov = apply_exact_bounds(s, eigenring_b_operator(L), bounds.max_numerator_degree < 0);
    bool exhausted = cov == Coverage::Short;
    for (auto& b : ansatz_solutions(eigenring_b_operator(L), s.D, s.N)) {
        if (cov == Coverage::Unknown && binds(s, b)) exhausted = true;
        bs.push_back(b);
    }
    EigenringBasis E = basis_from_b(L, bs, Formalism::Operator);
    E.ansatz_exhausted = exhausted;
    return E;
}

EigenringBasis eigenring_of_reduced(const ReducedODE& eq, const AnsatzBounds& bounds)
{
    return eigenring_of_operator(LinODE2{RatFunc(0), -eq.r}, bounds);
}

std::array<Constant, 3> element_charpoly(const EigenringBasis& E, const OperatorElement& e)
{
    return matrix_charpoly(element_matrix(E.eq, e), e.to_string());
}

std::array<Constant, 3> matrix_charpoly(const Mat2& P, const std::string& name)
{
    RatFunc tr = P[0][0] + P[1][1], det = P[0][0] * P[1][1] - P[0][1] * P[1][0];
    if (!tr.is_constant() || !det.is_constant())
        raise(ErrorKind::NonConstantCoefficient, "characteristic polynomial of " + name + " is not constant");
    return {det.is_zero() ? Constant(0) : det.constant_value(), tr.is_zero() ? Constant(0) : -tr.constant_value(),
            Constant(1)};
}

std::optional<RatFunc> right_factor(const LinODE2& L, const EigenringBasis& E)
{
    if (E.dimension < 2) return std::nullopt;
    const RatFunc &p = L.a, &q = L.b;
    for (auto& e : E.elements) {
        if (e.b.is_zero()) continue;
        auto cp = element_charpoly(E, e);
        for (auto& rt : roots(Poly(std::vector<Constant>(cp.begin(), cp.end())))) {
            RatFunc s = (e.a - RatFunc(rt.value)) / e.b;
            if ((q - s.derivative() - (p - s) * s).is_zero()) return s;
        }
    }
    raise(ErrorKind::NoFactor, "no eigenring element yields a right factor");
}

DimensionVerdict classify_by_dimension(const EigenringBasis& E)
{
    switch (E.dimension) {
    case 1: return DimensionVerdict::IrreducibleOrIndecomposable;
    case 2: return DimensionVerdict::AdditiveOrInMultiplicative;
    case 4: return DimensionVerdict::IdentityGroup;
    default: return DimensionVerdict::AnsatzSuspect;
    }
}

bool commutator_holds(const EigenringBasis& E)
{
    for (auto& P : E.matrices) {
        Mat2 R = eigen_residual(E.system, P);
        for (auto& row : R)
            for (auto& f : row)
                if (!f.is_zero()) return false;
    }
    return true;
}

bool closure_holds(const EigenringBasis& E)
{
    for (auto& a : E.matrices)
        for (auto& b : E.matrices)
            if (!in_matrix_span(E.matrices, mul(a, b))) return false;
    return true;
}

bool constant_eigenvalues(const EigenringBasis& E)
{
    try {
        for (auto& P : E.matrices) matrix_charpoly(P, "element");
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::NonConstantCoefficient) return false;
        throw;
    }
    return true;
}

}  // namespace galois
