#include "galois/susy.hpp"

#include <algorithm>

namespace galois {

namespace {

const Constant kHalf(qrat(1, 2));

RatFunc rc(const Constant& c) { return RatFunc(c); }

// d^2 u + P du + C u = 0 with v = du/u
bool riccati_holds(const Derivation& d, const RatFunc& v, const RatFunc& P, const RatFunc& C)
{
    return (d(v) + v * v + P * v + C).is_zero();
}

RatFunc determinant(std::vector<std::vector<RatFunc>> m)
{
    size_t n = m.size();
    RatFunc det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return RatFunc(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            RatFunc f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

// rows j = 0..n-1 of the Wronskian matrix divided by the exponential factors
std::vector<std::vector<RatFunc>> wronskian_matrix(const std::vector<HyperexpFunction>& fs)
{
    size_t n = fs.size();
    std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(n));
    for (size_t k = 0; k < n; ++k) {
        RatFunc cur = fs[k].multiplier;
        for (size_t j = 0; j < n; ++j) {
            m[j][k] = cur;
            cur = cur.derivative() + fs[k].omega * cur;
        }
    }
    return m;
}

ZInt binom(int n, int k)
{
    ZInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// coefficient of a0^i after substituting a1 = kappa a0 + c into sum_j a1^j V_j
RatFunc substituted_coeff(const std::vector<RatFunc>& V, int i, const Constant& kappa, const Constant& c)
{
    RatFunc s(0);
    Constant ki(1);
    for (int t = 0; t < i; ++t) ki *= kappa;
    for (int j = i; j < static_cast<int>(V.size()); ++j) {
        Constant cl(1);
        for (int t = 0; t < j - i; ++t) cl *= c;
        s += rc(Constant(QRat(binom(j, i))) * ki * cl) * V[j];
    }
    return s;
}

// x-dependence test of D(a0) = V+(x;a0) - V-(x;kappa a0 + c); returns the remainder when x-free
std::optional<Poly> remainder_for(const ShapeInvarianceResult& r, const Derivation& d, const AffineMap& f)
{
    size_t deg = std::max(r.v_plus.size(), r.v_minus.size());
    std::vector<Constant> R(deg);
    for (size_t i = 0; i < deg; ++i) {
        RatFunc vp = i < r.v_plus.size() ? r.v_plus[i] : RatFunc(0);
        RatFunc c = vp - substituted_coeff(r.v_minus, static_cast<int>(i), f.kappa, f.shift);
        if (!d(c).is_zero()) return std::nullopt;
        if (!c.is_constant()) raise(ErrorKind::NonConstantRemainder, "remainder depends on the variable");
        R[i] = c.is_zero() ? Constant(0) : c.constant_value();
    }
    return Poly(R);
}

// polynomial equations in the shift c for a1 = kappa a0 + c: numerator coefficients of the derivative per a0^i
std::vector<Poly> shift_equations(const ShapeInvarianceResult& r, const Derivation& d, const Constant& kappa)
{
    std::vector<Poly> eqs;
    size_t deg = std::max(r.v_plus.size(), r.v_minus.size());
    for (size_t i = 0; i < deg; ++i) {
        // sum_l c^l T_l(x) with T_0 including V+_i
        std::vector<RatFunc> T;
        Constant ki(1);
        for (size_t t = 0; t < i; ++t) ki *= kappa;
        for (size_t j = i; j < r.v_minus.size(); ++j) T.push_back(-rc(Constant(QRat(binom(j, i))) * ki) * d(r.v_minus[j]));
        if (T.empty()) T.push_back(RatFunc(0));
        if (i < r.v_plus.size()) T[0] += d(r.v_plus[i]);
        Poly den(1);
        for (auto& t : T) den = den * (t.den() / gcd(den, t.den()));
        std::vector<Poly> nums;
        int top = -1;
        for (auto& t : T) {
            nums.push_back(t.num() * (den / t.den()));
            top = std::max(top, nums.back().degree());
        }
        for (int m = 0; m <= top; ++m) {
            std::vector<Constant> cs;
            for (auto& nm : nums) cs.push_back(nm.coeff(m));
            Poly e(cs);
            if (!e.is_zero()) eqs.push_back(e);
        }
    }
    return eqs;
}

std::vector<Constant> solve_shift(const std::vector<Poly>& eqs, bool& free)
{
    free = eqs.empty();
    if (free) return {};
    Poly g = eqs[0];
    for (size_t i = 1; i < eqs.size(); ++i) g = gcd(g, eqs[i]);
    if (g.degree() <= 0) return {};
    std::vector<Constant> out;
    for (auto& rt : roots(g)) out.push_back(rt.value);
    return out;
}

// G with G(kappa a + c) - G(a) = R(a), G(0) = 0
std::optional<Poly> telescoping_potential(const Poly& R, const AffineMap& f)
{
    int n = std::max(R.degree(), 0) + 1;
    Matrix m(n, Vec(n));
    Poly arg = f.as_poly();
    for (int j = 1; j <= n; ++j) {
        Poly img = pow(arg, j) - Poly::monomial(Constant(1), j);
        for (int i = 0; i < n; ++i) m[i][j - 1] = img.coeff(i);
    }
    Vec rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = R.coeff(i);
    auto sol = solve_linear(m, rhs, n);
    if (!sol) return std::nullopt;
    std::vector<Constant> g{Constant(0)};
    for (auto& c : *sol) g.push_back(c);
    Poly G(g);
    if (G.compose(arg) - G != R) return std::nullopt;
    return G;
}

}  // namespace

bool PartnerPair::identities_hold() const
{
    const RatFunc& w = W.W;
    return v_plus + v_minus == RatFunc(2) * w * w && v_plus - v_minus == RatFunc(2) * W.d(w);
}

PartnerPair partner_from_superpotential(const Superpotential& W)
{
    RatFunc w2 = W.W * W.W, dw = W.d(W.W);
    return PartnerPair{w2 - dw, w2 + dw, W};
}

Superpotential superpotential_from_solution(const RatFunc& psi_logderiv, const Derivation& d)
{
    return Superpotential{-psi_logderiv, d};
}

DarbouxGeneralResult darboux_general(const RatFunc& P, const RatFunc& Q, const RatFunc& R,
                                     const RatFunc& theta_logderiv)
{
    if (R.is_zero()) raise(ErrorKind::InvalidArgument, "R must be nonzero");
    Derivation d;
    if (!riccati_holds(d, theta_logderiv, P, Q)) raise(ErrorKind::SeedNotASolution, "theta does not solve the equation");
    // g = theta sqrt(R): only g'/g enters, so sqrt(R) appears through R'/(2R)
    RatFunc L = theta_logderiv + R.derivative() / R * rc(kHalf);
    // g d(P/g) = P' - P L,  g d^2(1/g) = L^2 - L'
    RatFunc Qn = P.derivative() - P * L - (L * L - L.derivative());
    return DarbouxGeneralResult{P, Qn, R, L};
}

RatFunc darboux_general_image(const DarbouxGeneralResult& res, const RatFunc& theta_logderiv,
                              const RatFunc& y_logderiv)
{
    // u = (v - t) y / sqrt(R)
    RatFunc h = y_logderiv - theta_logderiv;
    if (h.is_zero()) raise(ErrorKind::InvalidArgument, "y is proportional to theta");
    return y_logderiv + h.derivative() / h - res.R.derivative() / res.R * rc(kHalf);
}

RatFunc DarbouxResult::transform_logderiv(const RatFunc& v) const
{
    RatFunc h = v - seed_logderiv;
    if (h.is_zero()) raise(ErrorKind::InvalidArgument, "solution proportional to the seed");
    return v + d(h) / h;
}

DarbouxResult darboux_schrodinger(const RatFunc& v_minus, const Constant& lambda1, const RatFunc& seed_logderiv,
                                  const Derivation& d)
{
    const RatFunc& u = seed_logderiv;
    if (!(d(u) + u * u - v_minus + rc(lambda1)).is_zero())
        raise(ErrorKind::SeedNotASolution, "seed log-derivative does not satisfy the Riccati equation");
    RatFunc vp = v_minus - RatFunc(2) * d(u);
    Superpotential W = superpotential_from_solution(u, d);
    RatFunc alt = RatFunc(2) * W.W * W.W - v_minus + RatFunc(2) * rc(lambda1);
    if (alt != vp) raise(ErrorKind::InvalidArgument, "partner expressions disagree");
    return DarbouxResult{v_minus, vp, lambda1, u, d, W};
}

RatFunc HyperexpFunction::logderiv() const { return multiplier.derivative() / multiplier + omega; }

RatFunc schrodinger_residual(const RatFunc& V, const Constant& lambda, const HyperexpFunction& psi)
{
    const RatFunc &M = psi.multiplier, &w = psi.omega;
    RatFunc dM = M.derivative();
    return dM.derivative() + RatFunc(2) * w * dM + (w.derivative() + w * w - V + rc(lambda)) * M;
}

CrumResult crum_iteration(const RatFunc& V, const std::vector<CrumSeed>& seeds)
{
    if (seeds.empty()) raise(ErrorKind::InvalidArgument, "no seeds");
    std::vector<HyperexpFunction> fs;
    RatFunc om(0);
    for (auto& s : seeds) {
        if (s.psi.multiplier.is_zero() || !schrodinger_residual(V, s.lambda, s.psi).is_zero())
            raise(ErrorKind::SeedNotASolution, "seed at lambda = " + to_string(s.lambda) + " is not a solution");
        fs.push_back(s.psi);
        om += s.psi.omega;
    }
    RatFunc det = determinant(wronskian_matrix(fs));
    if (det.is_zero()) raise(ErrorKind::WronskianIdenticallyZero, "seeds are linearly dependent");
    CrumResult res;
    res.wronskian_factor = det;
    res.wronskian_omega = om;
    res.seeds = seeds;
    res.new_potential = V - RatFunc(2) * res.wronskian_logderiv().derivative();
    return res;
}

HyperexpFunction CrumResult::transform(const HyperexpFunction& psi) const
{
    std::vector<HyperexpFunction> fs;
    for (auto& s : seeds) fs.push_back(s.psi);
    fs.push_back(psi);
    RatFunc num = determinant(wronskian_matrix(fs));
    return HyperexpFunction{num / wronskian_factor, psi.omega};
}

std::string CrumResult::solution_map() const
{
    std::string s = "Psi -> W(";
    for (size_t i = 0; i < seeds.size(); ++i) s += "Psi_" + to_string(seeds[i].lambda) + ", ";
    s += "Psi) / W(";
    for (size_t i = 0; i < seeds.size(); ++i) s += (i ? ", " : "") + std::string("Psi_") + to_string(seeds[i].lambda);
    return s + ")";
}

std::string AffineMap::to_string() const { return "a1 = " + as_poly().to_string("a0"); }

std::vector<RatFunc> param_partner(const ParamSuperpotential& W, int sign)
{
    size_t n = W.coeffs.size();
    std::vector<RatFunc> v(n == 0 ? 1 : 2 * n - 1, RatFunc(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) v[i + j] += W.coeffs[i] * W.coeffs[j];
        v[i] += RatFunc(sign) * W.d(W.coeffs[i]);
    }
    while (v.size() > 1 && v.back().is_zero()) v.pop_back();
    return v;
}

ShapeInvarianceResult shape_invariance_check(const ParamSuperpotential& W)
{
    if (W.coeffs.empty() || W.coeffs.size() > 3)
        raise(ErrorKind::InvalidArgument, "superpotential must be polynomial of degree at most 2 in the parameter");
    ShapeInvarianceResult res;
    res.v_minus = param_partner(W, -1);
    res.v_plus = param_partner(W, +1);

    std::vector<Constant> kappas{Constant(1)};
    // leading parameter degree fixes kappa^d
    for (int d = static_cast<int>(res.v_minus.size()) - 1; d >= 1; --d) {
        RatFunc dm = W.d(res.v_minus[d]);
        if (dm.is_zero()) continue;
        RatFunc dp = d < static_cast<int>(res.v_plus.size()) ? W.d(res.v_plus[d]) : RatFunc(0);
        RatFunc ratio = dp / dm;
        if (!ratio.is_constant() || ratio.is_zero()) break;
        std::vector<Constant> cs(d + 1);
        cs[0] = -ratio.constant_value();
        cs[d] = Constant(1);
        try {
            for (auto& rt : roots(Poly(cs)))
                if (rt.value != Constant(1)) kappas.push_back(rt.value);
        } catch (const Error& e) {
            if (!e.unsupported()) throw;
        }
        break;
    }

    for (auto& kappa : kappas) {
        bool free = false;
        auto eqs = shift_equations(res, W.d, kappa);
        auto shifts = solve_shift(eqs, free);
        if (free) shifts = {Constant(1)};
        for (auto& c : shifts) {
            AffineMap f{kappa, c};
            if (kappa == Constant(1) && c.is_zero()) continue;  // identity map
            auto R = remainder_for(res, W.d, f);
            if (!R || R->is_zero()) continue;  // step 3 needs a nonvanishing remainder
            res.holds = true;
            res.f_map = f;
            res.free_shift = free;
            res.remainder = *R;
            // a0 = (a1 - c)/kappa
            Constant ik = kappa.inv();
            res.remainder_in_a1 = R->compose(Poly(std::vector<Constant>{-c * ik, ik}));
            res.potential = telescoping_potential(*R, f);
            if (res.potential)
                res.energy_formula = "E_n = G(a_n) - G(a_0), G(a) = " + res.potential->to_string("a") +
                                     ", a_n = f^n(a_0), " + f.to_string();
            else
                res.energy_formula = "E_n = sum_{k=0}^{n-1} R(a_k), R(a) = " + R->to_string("a");
            return res;
        }
    }
    raise(ErrorKind::NotShapeInvariant, "no affine parameter map removes the variable dependence");
}

Poly ShapeInvarianceResult::energy(int n) const
{
    Poly a = Poly::x(), E;
    Poly fm = f_map.as_poly();
    for (int k = 0; k < n; ++k) {
        E += remainder.compose(a);
        a = fm.compose(a);
    }
    return E;
}

std::vector<std::pair<int, Poly>> gendenshtein_spectrum(const ShapeInvarianceResult& res, int n_max)
{
    if (!res.holds) raise(ErrorKind::NotShapeInvariant, "spectrum requires a shape invariant potential");
    std::vector<std::pair<int, Poly>> out;
    for (int n = 0; n <= n_max; ++n) out.push_back({n, res.energy(n)});
    return out;
}

namespace {

// leading exponential behaviour: sign of the top term of int(omega) along x -> dir * infinity
std::optional<int> decay_at_infinity(const RatFunc& omega, int dir)
{
    Poly q, rem;
    omega.num().divmod(omega.den(), q, rem);
    if (q.is_zero()) return std::nullopt;
    const Constant& l = q.lc();
    if (!l.is_rational()) return std::nullopt;
    int s = sgn(l.to_qrat());
    int d = q.degree() + 1;
    if (dir < 0 && d % 2) s = -s;
    return s;
}

}  // namespace

bool normalizable_candidate(const HyperexpFunction& psi, Domain dom)
{
    auto plus = decay_at_infinity(psi.omega, +1);
    if (!plus || *plus >= 0) return false;
    if (dom == Domain::RealLine) {
        auto minus = decay_at_infinity(psi.omega, -1);
        return minus && *minus < 0;
    }
    // x -> 0+: exponential part from a higher-order pole, otherwise the power must be square integrable
    int val = 0;
    auto lo = laurent_at(psi.omega, Constant(0), val, 2);
    if (val <= -2) {
        if (!lo[0].is_rational()) return false;
        return sgn(lo[0].to_qrat()) > 0;
    }
    Constant rho = val == -1 ? lo[0] : Constant(0);
    int m = 0;
    laurent_at(psi.multiplier, Constant(0), m, 1);
    Constant e = rho + Constant(m);
    if (!e.is_rational()) return false;
    return 2 * e.to_qrat() > -1;
}

}  // namespace galois
