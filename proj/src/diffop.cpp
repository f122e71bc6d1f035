#include "galois/diffop.hpp"

#include <algorithm>

namespace galois {

namespace {

// s(s-1)...(s-i+1) as a polynomial in s
Poly falling(int i)
{
    Poly p(1);
    for (int k = 0; k < i; ++k) p *= Poly::linear(Constant(k));
    return p;
}

QRat residue_gcd(const std::vector<QRat>& rs)
{
    ZInt num = 0, den = 1;
    for (auto& r : rs) {
        num = gcd(num, r.get_num());
        den = lcm(den, r.get_den());
    }
    QRat g(num, den);
    g.canonicalize();
    return g;
}

}  // namespace

const char* gauge_kind_name(GaugeKind k)
{
    switch (k) {
    case GaugeKind::StrongIsogaloisian: return "strong_isogaloisian";
    case GaugeKind::VirtuallyStrongIsogaloisian: return "virtually_strong_isogaloisian";
    default: return "unknown";
    }
}

RatFunc HyperexpSolution::logderiv() const
{
    return omega + RatFunc(multiplier.derivative(), multiplier);
}

RatFunc ThirdOrderOp::apply(const RatFunc& u) const
{
    RatFunc d1 = u.derivative(), d2 = d1.derivative(), d3 = d2.derivative();
    return d3 + p2 * d2 + p1 * d1 + p0 * u;
}

RatFunc LinOp::apply(const RatFunc& y) const
{
    RatFunc s, d = y;
    for (size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero()) s += c[i] * d;
        if (i + 1 < c.size()) d = d.derivative();
    }
    return s;
}

LinOp LinOp::derive() const
{
    LinOp o;
    o.c.assign(c.size() + 1, RatFunc(0));
    for (size_t i = 0; i < c.size(); ++i) {
        o.c[i] += c[i].derivative();
        o.c[i + 1] += c[i];
    }
    while (o.c.size() > 1 && o.c.back().is_zero()) o.c.pop_back();
    return o;
}

LinOp LinOp::scaled(const RatFunc& f) const
{
    LinOp o = *this;
    for (auto& x : o.c) x *= f;
    return o;
}

LinOp LinOp::operator+(const LinOp& m) const
{
    LinOp o = *this;
    if (o.c.size() < m.c.size()) o.c.resize(m.c.size());
    for (size_t i = 0; i < m.c.size(); ++i) o.c[i] += m.c[i];
    return o;
}

namespace {

ZInt binom(int n, int k)
{
    ZInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

std::vector<Vec> polynomial_ansatz(const std::vector<std::vector<LinOp>>& ops, const Poly& D, int N)
{
    size_t B = ops.size();
    if (B == 0 || N < 0) return {};
    size_t K = ops[0].size();
    int n = 0;
    for (auto& blk : ops)
        for (auto& L : blk) n = std::max(n, L.order());
    // g[m] = (1/D)^(m)
    std::vector<RatFunc> g{RatFunc(Poly(1), D)};
    for (int m = 1; m <= n; ++m) g.push_back(g.back().derivative());
    int cols = static_cast<int>(B) * (N + 1);
    Matrix mat;
    for (size_t k = 0; k < K; ++k) {
        // L(x^j / D) = sum_i falling(j, i) x^(j-i) h_i,  h_i = sum_{t>=i} C(t,i) c_t g_(t-i)
        std::vector<std::vector<RatFunc>> h(B);
        Poly H(1);
        for (size_t b = 0; b < B; ++b) {
            const LinOp& L = ops[b][k];
            int o = L.order();
            h[b].assign(o + 1, RatFunc(0));
            for (int i = 0; i <= o; ++i)
                for (int t = i; t <= o; ++t)
                    if (!L.c[t].is_zero()) h[b][i] += RatFunc(Constant(QRat(binom(t, i)))) * L.c[t] * g[t - i];
            for (auto& f : h[b]) H = H * (f.den() / gcd(H, f.den()));
        }
        std::vector<std::vector<Poly>> nums(B);
        int rows = 0;
        for (size_t b = 0; b < B; ++b)
            for (auto& f : h[b]) {
                nums[b].push_back(f.num() * (H / f.den()));
                rows = std::max(rows, nums[b].back().degree() + N + 1);
            }
        size_t base = mat.size();
        mat.resize(base + rows, Vec(cols));
        for (size_t b = 0; b < B; ++b)
            for (int j = 0; j <= N; ++j) {
                int col = static_cast<int>(b) * (N + 1) + j;
                ZInt fall = 1;
                for (int i = 0; i < static_cast<int>(nums[b].size()) && i <= j; ++i) {
                    if (i > 0) fall *= (j - i + 1);
                    const Poly& nb = nums[b][i];
                    if (nb.is_zero()) continue;
                    Constant f{QRat(fall)};
                    for (int d = 0; d <= nb.degree(); ++d)
                        if (!nb.coeff(d).is_zero()) mat[base + d + j - i][col] += f * nb.coeff(d);
                }
            }
    }
    // drop zero rows
    Matrix m2;
    for (auto& row : mat) {
        bool nz = false;
        for (auto& e : row)
            if (!e.is_zero()) {
                nz = true;
                break;
            }
        if (nz) m2.push_back(std::move(row));
    }
    return nullspace(std::move(m2), cols);
}

std::vector<RatFunc> ansatz_solutions(const LinOp& L, const Poly& D, int N)
{
    std::vector<RatFunc> out;
    for (auto& v : polynomial_ansatz({{L}}, D, N)) {
        std::vector<Constant> c(v.begin(), v.end());
        out.push_back(RatFunc(Poly(c), D));
    }
    return out;
}

GaugeClass gauge_class(const RatFunc& a)
{
    GaugeClass g;
    if (a.is_zero()) {
        g.kind = GaugeKind::StrongIsogaloisian;
        g.witness_kappa = QRat(0);
        g.f = RatFunc(1);
        return g;
    }
    PartialFractions pf;
    try {
        pf = partial_fractions(a);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnsupportedSplitting) return g;
        throw;
    }
    if (!pf.poly_part.is_zero()) return g;
    std::vector<QRat> res;
    for (auto& t : pf.terms) {
        if (t.coeffs.size() != 1 || !t.coeffs[0].is_rational()) return g;
        res.push_back(t.coeffs[0].to_qrat());
    }
    QRat gg = residue_gcd(res);
    RatFunc f(1);
    for (size_t i = 0; i < res.size(); ++i) {
        QRat e = res[i] / gg;
        long k = e.get_num().get_si();
        RatFunc lin(Poly::linear(pf.terms[i].root));
        f *= k >= 0 ? pow(lin, static_cast<int>(k)) : RatFunc(1) / pow(lin, static_cast<int>(-k));
    }
    QRat kappa = gg / 2;
    g.witness_kappa = kappa;
    g.f = f;
    g.kind = is_integer(kappa) ? GaugeKind::StrongIsogaloisian : GaugeKind::VirtuallyStrongIsogaloisian;
    return g;
}

std::pair<ReducedODE, GaugeClass> reduce_to_normal(const LinODE2& eq)
{
    RatFunc r = eq.a * eq.a * RatFunc(Constant(qrat(1, 4))) + eq.a.derivative() * RatFunc(Constant(qrat(1, 2))) - eq.b;
    return {ReducedODE{r}, gauge_class(eq.a)};
}

FirstOrderSystem op_to_system(const LinODE2& eq)
{
    FirstOrderSystem s;
    s.A[0][0] = RatFunc(0);
    s.A[0][1] = RatFunc(-1);
    s.A[1][0] = eq.b;
    s.A[1][1] = eq.a;
    return s;
}

LinODE2 system_to_op(const FirstOrderSystem& sys)
{
    // dX = M X with M = -A
    RatFunc a = -sys.A[0][0], b = -sys.A[0][1], c = -sys.A[1][0], d = -sys.A[1][1];
    if (b.is_zero()) raise(ErrorKind::ZeroCouplingEntry, "coupling entry of the system vanishes identically");
    RatFunc lb = b.derivative() / b;
    LinODE2 eq;
    eq.a = -(a + d + lb);
    eq.b = -a.derivative() + a * lb - b * c + a * d;
    return eq;
}

ThirdOrderOp second_symmetric_power(const ReducedODE& eq)
{
    return ThirdOrderOp{RatFunc(0), RatFunc(-4) * eq.r, RatFunc(-2) * eq.r.derivative()};
}

RiccatiForm riccati_form(const ReducedODE& eq) { return RiccatiForm{eq.r}; }

RatFunc recu1_residual(const RatFunc& r, const RatFunc& omega, const RatFunc& P)
{
    RatFunc dP = P.derivative();
    return dP.derivative() + RatFunc(2) * omega * dP + (omega.derivative() + omega * omega - r) * P;
}

bool verify_solution(const ReducedODE& eq, const HyperexpSolution& sol)
{
    if (sol.algebraic_degree != 1 || sol.multiplier.is_zero()) return false;
    return recu1_residual(eq.r, sol.omega, RatFunc(sol.multiplier)).is_zero();
}

LinOp as_linop(const LinODE2& eq) { return LinOp{{eq.b, eq.a, RatFunc(1)}}; }
LinOp as_linop(const ReducedODE& eq) { return LinOp{{-eq.r, RatFunc(0), RatFunc(1)}}; }
LinOp as_linop(const ThirdOrderOp& op) { return LinOp{{op.p0, op.p1, op.p2, RatFunc(1)}}; }

std::optional<RationalSolutionBounds> rational_solution_bounds(const LinOp& L)
{
    int n = L.order();
    while (n > 0 && L.c[n].is_zero()) --n;
    if (n <= 0) return std::nullopt;
    Poly den(1);
    for (int i = 0; i <= n; ++i) {
        const Poly& d = L.c[i].den();
        den = den * (d / gcd(den, d));
    }
    std::vector<Poly> p;
    for (int i = 0; i <= n; ++i) p.push_back(L.c[i].num() * (den / L.c[i].den()));

    RationalSolutionBounds b;
    for (auto& root : roots(p[n])) {
        int m = 1 << 28;
        std::vector<Poly> sh(n + 1);
        std::vector<int> val(n + 1, -1);
        for (int i = 0; i <= n; ++i) {
            if (p[i].is_zero()) continue;
            sh[i] = p[i].shift(root.value);
            val[i] = sh[i].low_degree();
            m = std::min(m, val[i] - i);
        }
        Poly ind;
        for (int i = 0; i <= n; ++i)
            if (val[i] >= 0 && val[i] - i == m) ind += sh[i].coeff(val[i]) * falling(i);
        int k = 0;
        for (long s : integer_roots(ind)) k = std::max<long>(k, -s);
        b.D *= pow(Poly::linear(root.value), k);
        if (k > 0) b.poles.push_back({root.value, k});
    }

    int M = -(1 << 28);
    for (int i = 0; i <= n; ++i)
        if (!p[i].is_zero()) M = std::max(M, p[i].degree() - i);
    Poly ind;
    for (int i = 0; i <= n; ++i)
        if (!p[i].is_zero() && p[i].degree() - i == M) ind += p[i].lc() * falling(i);
    auto ir = integer_roots(ind);
    if (ir.empty()) return std::nullopt;
    b.top = ir.back() + b.D.degree();
    if (b.top < 0) return std::nullopt;
    return b;
}

std::vector<RatFunc> rational_solutions(const LinOp& L)
{
    auto b = rational_solution_bounds(L);
    if (!b) return {};
    return ansatz_solutions(LinOp{L.c}, b->D, static_cast<int>(b->top));
}

}  // namespace galois
