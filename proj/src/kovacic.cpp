#include "galois/kovacic.hpp"

#include <algorithm>
#include <map>

namespace galois {

namespace {

const Constant kHalf(qrat(1, 2));

void log(Trace* t, int k, const std::string& step, const std::string& detail)
{
    if (t) t->push_back({k, step, detail});
}

std::string join_constants(const std::vector<Constant>& v)
{
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + "}";
}

std::string point_name(const PointData& p) { return p.at_infinity ? std::string("inf") : to_string(p.location); }

RatFunc simple_pole(const Constant& c) { return RatFunc(Poly(1), Poly::linear(c)); }

struct PoleInfo {
    Constant c;
    PoleData data;
};

std::vector<PoleInfo> poles_of(const RatFunc& r)
{
    std::vector<PoleInfo> out;
    for (auto& root : factor_denominator(r)) out.push_back({root.value, pole_expansion(r, root.value)});
    return out;
}

// monic polynomial solutions of degree exactly n (plus lower-degree ones from the nullspace)
std::vector<Poly> monic_solutions(long n, const LinOp& op)
{
    std::vector<Poly> out;
    for (auto& f : ansatz_solutions(op, Poly(1), static_cast<int>(n)))
        if (!f.is_zero()) out.push_back(f.num().monic());
    // degree-n solution first
    std::stable_sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.degree() > b.degree(); });
    return out;
}

long to_long_checked(const RadicalSum& s) { return s.value().to_long(); }

// polynomial in omega with rational-function coefficients
using OmegaPoly = std::vector<RatFunc>;

void trim(OmegaPoly& p)
{
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

const char* group_tag_name(GroupTag t)
{
    switch (t) {
    case GroupTag::Identity: return "Identity";
    case GroupTag::NRoots: return "NRoots";
    case GroupTag::NQuasiRoots: return "NQuasiRoots";
    case GroupTag::Multiplicative: return "Multiplicative";
    case GroupTag::Additive: return "Additive";
    case GroupTag::Borel: return "Borel";
    case GroupTag::BorelSubgroup: return "BorelSubgroup";
    case GroupTag::DihedralInfinite: return "DihedralInfinite";
    case GroupTag::DihedralSubgroupFinite: return "DihedralSubgroupFinite";
    case GroupTag::Tetrahedral: return "Tetrahedral";
    case GroupTag::Octahedral: return "Octahedral";
    case GroupTag::Icosahedral: return "Icosahedral";
    case GroupTag::SL2: return "SL2";
    }
    return "?";
}

std::string GaloisGroup::to_string() const
{
    std::string s = group_tag_name(tag);
    if (tag == GroupTag::NRoots || tag == GroupTag::NQuasiRoots) s += "(" + std::to_string(n) + ")";
    return s;
}

bool lifted_riccati_holds(const std::vector<RatFunc>& F0, const RatFunc& r)
{
    OmegaPoly F = F0;
    trim(F);
    if (F.size() < 2) return false;
    RatFunc lead = F.back();
    for (auto& c : F) c /= lead;
    size_t d = F.size() - 1;
    OmegaPoly G(d + 2);
    for (size_t i = 0; i <= d; ++i) G[i] += F[i].derivative();
    for (size_t i = 1; i <= d; ++i) {
        RatFunc k = RatFunc(static_cast<long>(i)) * F[i];
        G[i - 1] += k * r;
        G[i + 1] -= k;
    }
    trim(G);
    while (G.size() >= F.size()) {
        RatFunc q = G.back();
        size_t shift = G.size() - F.size();
        for (size_t i = 0; i < F.size(); ++i) G[shift + i] -= q * F[i];
        trim(G);
    }
    return G.empty();
}

std::optional<std::vector<QRat>> algebraic_residues(const RatFunc& omega)
{
    if (omega.is_zero()) return std::vector<QRat>{};
    PartialFractions pf = partial_fractions(omega);
    if (!pf.poly_part.is_zero()) return std::nullopt;
    std::vector<QRat> out;
    for (auto& t : pf.terms) {
        for (size_t j = 1; j < t.coeffs.size(); ++j)
            if (!t.coeffs[j].is_zero()) return std::nullopt;
        if (!t.coeffs[0].is_rational()) return std::nullopt;
        out.push_back(t.coeffs[0].to_qrat());
    }
    return out;
}

long algebraic_order(const RatFunc& omega)
{
    auto res = algebraic_residues(omega);
    if (!res) return 0;
    ZInt n = 1;
    for (auto& q : *res) n = lcm(n, q.get_den());
    return n.fits_slong_p() ? n.get_si() : 0;
}

RatFunc recu2_residual(const RatFunc& r, const RatFunc& th, const RatFunc& P)
{
    RatFunc d1 = P.derivative(), d2 = d1.derivative(), d3 = d2.derivative();
    RatFunc t1 = th.derivative(), t2 = t1.derivative();
    RatFunc three(3), four(4);
    return d3 + three * th * d2 + (three * t1 + three * th * th - four * r) * d1 +
           (t2 + three * th * t1 + th * th * th - four * r * th - RatFunc(2) * r.derivative()) * P;
}

namespace {

LinOp recu2_op(const RatFunc& r, const RatFunc& th)
{
    RatFunc t1 = th.derivative(), t2 = t1.derivative();
    RatFunc three(3), four(4);
    return LinOp{{t2 + three * th * t1 + th * th * th - four * r * th - RatFunc(2) * r.derivative(),
                  three * t1 + three * th * th - four * r, three * th, RatFunc(1)}};
}

}  // namespace

// ---------------------------------------------------------------- case 1

namespace {

struct Option {
    int sign;
    Constant alpha;
};

std::vector<Option> options_of(const PointData& p)
{
    if (p.alpha.empty()) return {};
    if (p.sqrt_part.is_zero() && p.alpha[0] == p.alpha[1]) return {{1, p.alpha[0]}};
    return {{1, p.alpha[0]}, {-1, p.alpha[1]}};
}

// iterate over the cartesian product of choices
template <class F>
void for_each_choice(const std::vector<size_t>& sizes, F&& f)
{
    for (size_t s : sizes)
        if (s == 0) return;
    std::vector<size_t> idx(sizes.size(), 0);
    while (true) {
        f(idx);
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == sizes[k]) idx[k++] = 0;
        if (k == idx.size()) break;
    }
}

void mark(Incomplete& inc, ErrorKind k, const std::string& why)
{
    if (inc.flag) return;
    inc.flag = true;
    inc.kind = k;
    inc.reason = why;
}

bool add_solution(std::vector<HyperexpSolution>& sols, const HyperexpSolution& s)
{
    RatFunc ld = s.logderiv();
    for (auto& o : sols)
        if (o.logderiv() == ld) return false;
    sols.push_back(s);
    return true;
}

}  // namespace

CaseOneData case1_points(const ReducedODE& eq)
{
    CaseOneData data;
    const RatFunc& r = eq.r;
    data.possible = true;
    for (auto& pi : poles_of(r)) {
        PointData p;
        p.location = pi.c;
        p.order = pi.data.order;
        int o = p.order;
        if (o == 1) {
            p.alpha = {Constant(1), Constant(1)};
        } else if (o == 2) {
            p.b = pi.data.principal_coeffs[0];
            Constant s = csqrt(Constant(1) + Constant(4) * p.b);
            p.alpha = {(Constant(1) + s) * kHalf, (Constant(1) - s) * kHalf};
        } else if (o % 2 == 0) {
            int v = o / 2;
            int val = 0;
            auto rho = laurent_at(r, pi.c, val, v + 1);
            auto sig = series_sqrt(rho, v);
            RatFunc t = simple_pole(pi.c);
            for (int j = 0; j <= v - 2; ++j) p.sqrt_part += RatFunc(sig[j]) * pow(t, v - j);
            Constant b = rho[v - 1];
            for (int a = 1; a <= v - 2; ++a) b -= sig[a] * sig[v - 1 - a];
            p.b = b;
            Constant q = b / sig[0];
            p.alpha = {(q + Constant(v)) * kHalf, (-q + Constant(v)) * kHalf};
        } else {
            data.possible = false;
        }
        data.points.push_back(p);
    }
    PointData inf;
    inf.at_infinity = true;
    int o = r.order_at_infinity();
    inf.order = o;
    if (o > 2) {
        inf.alpha = {Constant(0), Constant(1)};
    } else if (o == 2) {
        inf.b = infinity_expansion(r).sub_coeff;
        Constant s = csqrt(Constant(1) + Constant(4) * inf.b);
        inf.alpha = {(Constant(1) + s) * kHalf, (Constant(1) - s) * kHalf};
    } else if (o % 2 == 0) {
        int v = -o / 2;
        InfinityData id = infinity_expansion(r);
        inf.sqrt_part = RatFunc(*id.sqrt_part);
        inf.b = id.sub_coeff;
        Constant q = inf.b / id.sqrt_part->lc();
        inf.alpha = {(q - Constant(v)) * kHalf, (-q - Constant(v)) * kHalf};
    } else {
        data.possible = false;
    }
    data.points.push_back(inf);
    return data;
}

CaseOneResult run_case1(const ReducedODE& eq, Trace* trace, const KovacicOptions& opt)
{
    CaseOneResult res;
    res.data = case1_points(eq);
    CaseOneData& data = res.data;
    const RatFunc& r = eq.r;

    std::string summary;
    for (auto& p : data.points)
        summary += point_name(p) + ": order " + (p.at_infinity && p.order > (1 << 20) ? std::string("inf")
                                                                                     : std::to_string(p.order)) +
                   ", alpha " + join_constants(p.alpha) + "; ";
    log(trace, 1, "step1", summary);
    if (!data.possible) {
        log(trace, 1, "step1", "a pole of odd order > 1 or odd order at infinity below 2 excludes case 1");
        return res;
    }

    std::vector<std::vector<Option>> opts;
    std::vector<size_t> sizes;
    for (auto& p : data.points) {
        opts.push_back(options_of(p));
        sizes.push_back(opts.back().size());
    }
    size_t np = data.points.size() - 1;
    for_each_choice(sizes, [&](const std::vector<size_t>& idx) {
        RadicalSum s;
        s.add(opts[np][idx[np]].alpha);
        for (size_t i = 0; i < np; ++i) s.add(opts[i][idx[i]].alpha, -1);
        if (!s.is_nonneg_integer()) return;
        long n = to_long_checked(s);
        CaseOneCandidate cand;
        cand.n = n;
        try {
            RatFunc w = RatFunc(opts[np][idx[np]].sign) * data.points[np].sqrt_part;
            for (size_t i = 0; i < np; ++i) {
                const Option& op = opts[i][idx[i]];
                w += RatFunc(op.sign) * data.points[i].sqrt_part + RatFunc(op.alpha) * simple_pole(data.points[i].location);
            }
            cand.omega = w;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::MixedRadicands) throw;
            mark(data.incomplete, e.kind(), "omega for n = " + std::to_string(n) + " mixes radicands");
            return;
        }
        for (size_t i = 0; i <= np; ++i) cand.signs.push_back(opts[i][idx[i]].sign);
        for (auto& c : data.D)
            if (c.n == cand.n && c.omega == cand.omega) return;
        data.D.push_back(cand);
    });
    std::stable_sort(data.D.begin(), data.D.end(),
                     [](const CaseOneCandidate& a, const CaseOneCandidate& b) { return a.n < b.n; });
    {
        std::string d;
        for (auto& c : data.D) d += std::to_string(c.n) + " ";
        log(trace, 1, "step2", data.D.empty() ? std::string("D is empty") : "D = {" + d + "}");
    }

    for (auto& c : data.D) {
        if (res.solutions.size() >= 2) break;
        if (c.n > opt.max_degree) {
            mark(data.incomplete, ErrorKind::InvalidArgument,
                 "n = " + std::to_string(c.n) + " exceeds the degree limit " + std::to_string(opt.max_degree));
            log(trace, 1, "step3", "n = " + std::to_string(c.n) + " skipped (degree limit)");
            continue;
        }
        auto ps = monic_solutions(c.n, LinOp{{c.omega.derivative() + c.omega * c.omega - r, RatFunc(2) * c.omega, RatFunc(1)}});
        if (ps.empty()) {
            log(trace, 1, "step3", "n = " + std::to_string(c.n) + ", omega = " + c.omega.to_string() + ": no P");
            continue;
        }
        for (auto& P : ps) {
            HyperexpSolution sol{c.omega, P, 1, {}};
            if (res.solutions.size() < 2 && add_solution(res.solutions, sol))
                log(trace, 1, "step3", "n = " + std::to_string(c.n) + ", omega = " + c.omega.to_string() +
                                           ", P = " + P.to_string());
        }
    }
    return res;
}

// ---------------------------------------------------------------- case 2

CaseTwoResult run_case2(const ReducedODE& eq, Trace* trace, const KovacicOptions& opt)
{
    CaseTwoResult res;
    CaseTwoData& data = res.data;
    const RatFunc& r = eq.r;
    auto poles = poles_of(r);
    auto family = [](const Constant& b) {
        Constant s = csqrt(Constant(1) + Constant(4) * b);
        std::vector<Constant> e = {Constant(2)};
        if (!s.is_zero()) {
            e.push_back(Constant(2) + Constant(2) * s);
            e.push_back(Constant(2) - Constant(2) * s);
        }
        return e;
    };
    for (auto& pi : poles) {
        int o = pi.data.order;
        if (o == 1)
            data.E.push_back({Constant(4)});
        else if (o == 2)
            data.E.push_back(family(pi.data.principal_coeffs[0]));
        else
            data.E.push_back({Constant(o)});
    }
    int o = r.order_at_infinity();
    if (o > 2)
        data.E.push_back({Constant(0), Constant(2), Constant(4)});
    else if (o == 2)
        data.E.push_back(family(infinity_expansion(r).sub_coeff));
    else
        data.E.push_back({Constant(o)});
    {
        std::string s;
        for (size_t i = 0; i < data.E.size(); ++i)
            s += (i < poles.size() ? to_string(poles[i].c) : std::string("inf")) + ": " + join_constants(data.E[i]) + "; ";
        log(trace, 2, "step1", s);
    }
    size_t np = poles.size();
    std::vector<size_t> sizes;
    for (auto& e : data.E) sizes.push_back(e.size());
    for_each_choice(sizes, [&](const std::vector<size_t>& idx) {
        RadicalSum s;
        s.add(data.E[np][idx[np]]);
        for (size_t i = 0; i < np; ++i) s.add(data.E[i][idx[i]], -1);
        if (!s.is_nonneg_integer()) return;
        long twice = to_long_checked(s);
        if (twice % 2 != 0) return;
        CaseTwoCandidate cand;
        cand.n = twice / 2;
        try {
            RatFunc th;
            for (size_t i = 0; i < np; ++i) th += RatFunc(data.E[i][idx[i]] * kHalf) * simple_pole(poles[i].c);
            cand.theta = th;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::MixedRadicands) throw;
            mark(data.incomplete, e.kind(), "theta for n = " + std::to_string(cand.n) + " mixes radicands");
            return;
        }
        for (size_t i = 0; i <= np; ++i) cand.e.push_back(data.E[i][idx[i]]);
        data.D.push_back(cand);
    });
    std::stable_sort(data.D.begin(), data.D.end(),
                     [](const CaseTwoCandidate& a, const CaseTwoCandidate& b) { return a.n < b.n; });
    {
        std::string d;
        for (auto& c : data.D) d += std::to_string(c.n) + " ";
        log(trace, 2, "step2", data.D.empty() ? std::string("D is empty") : "D = {" + d + "}");
    }
    for (auto& c : data.D) {
        if (c.n > opt.max_degree) {
            mark(data.incomplete, ErrorKind::InvalidArgument,
                 "n = " + std::to_string(c.n) + " exceeds the degree limit " + std::to_string(opt.max_degree));
            continue;
        }
        auto ps = monic_solutions(c.n, recu2_op(r, c.theta));
        if (ps.empty()) {
            log(trace, 2, "step3", "n = " + std::to_string(c.n) + ", theta = " + c.theta.to_string() + ": no P");
            continue;
        }
        for (auto& P : ps) {
            RatFunc phi = c.theta + RatFunc(P.derivative(), P);
            RatFunc c0 = (phi.derivative() + phi * phi - RatFunc(2) * r) * RatFunc(kHalf);
            std::vector<RatFunc> F = {c0, -phi, RatFunc(1)};
            if (!lifted_riccati_holds(F, r)) {
                log(trace, 2, "step3", "n = " + std::to_string(c.n) + ": P = " + P.to_string() +
                                           " fails the Riccati check");
                continue;
            }
            log(trace, 2, "step3", "n = " + std::to_string(c.n) + ", theta = " + c.theta.to_string() +
                                       ", P = " + P.to_string());
            res.solution = HyperexpSolution{RatFunc(0), P, 2, F};
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------- case 3

namespace {

std::vector<RatFunc> case3_tower(const RatFunc& r, const Poly& S, const RatFunc& theta, int m, int sign,
                                 const RatFunc& P)
{
    // tower[i] = P_i for i = -1..m, stored at offset 1
    std::vector<RatFunc> t(m + 3);
    RatFunc SS(S), dS(S.derivative());
    RatFunc S2r = SS * SS * r;
    t[m + 1] = -P;
    for (int i = m; i >= 0; --i) {
        const RatFunc& Pi = t[i + 1];
        RatFunc nxt = i + 2 <= m + 1 ? t[i + 2] : RatFunc(0);
        RatFunc term = (RatFunc(m - i) * dS - SS * theta) * Pi;
        t[i] = -SS * Pi.derivative() + RatFunc(sign) * term - RatFunc(static_cast<long>(m - i) * (i + 1)) * S2r * nxt;
    }
    t.pop_back();
    return t;
}

// P_{-1} as a differential operator applied to P
LinOp case3_tower_op(const RatFunc& r, const Poly& S, const RatFunc& theta, int m, int sign)
{
    RatFunc SS(S), dS(S.derivative());
    RatFunc S2r = SS * SS * r;
    LinOp nxt{{RatFunc(0)}}, cur{{RatFunc(-1)}};
    for (int i = m; i >= 0; --i) {
        LinOp t = cur.derive().scaled(-SS) + cur.scaled(RatFunc(sign) * (RatFunc(m - i) * dS - SS * theta)) +
                  nxt.scaled(RatFunc(-static_cast<long>(m - i) * (i + 1)) * S2r);
        nxt = cur;
        cur = t;
    }
    return cur;
}

Constant factorial(int k)
{
    ZInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Constant(QRat(f));
}

}  // namespace

CaseThreeResult run_case3(const ReducedODE& eq, Trace* trace, const KovacicOptions& opt)
{
    CaseThreeResult res;
    CaseThreeData& data = res.data;
    const RatFunc& r = eq.r;
    auto poles = poles_of(r);
    int o = r.order_at_infinity();
    data.precondition = o >= 2;
    for (auto& p : poles)
        if (p.data.order > 2) data.precondition = false;
    if (!data.precondition) {
        log(trace, 3, "step1", "pole orders must be at most 2 and the order at infinity at least 2");
        return res;
    }
    size_t np = poles.size();
    std::vector<std::vector<Constant>> Ec;
    for (auto& p : poles) {
        if (p.data.order == 1) {
            Ec.push_back({Constant(12)});
            continue;
        }
        Constant s = csqrt(Constant(1) + Constant(4) * p.data.principal_coeffs[0]);
        std::vector<Constant> e;
        for (int k = -6; k <= 6; ++k) {
            Constant v = Constant(6) + Constant(k) * s;
            if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        Ec.push_back(e);
    }
    Constant binf = o == 2 ? infinity_expansion(r).sub_coeff : Constant(0);
    Constant sinf = csqrt(Constant(1) + Constant(4) * binf);
    data.S = Poly(1);
    for (auto& p : poles) data.S *= Poly::linear(p.c);

    for (int m : {4, 6, 12}) {
        std::vector<Constant> Einf;
        for (int k = -6; k <= 6; ++k) {
            Constant v = Constant(6) + Constant(qrat(12 * k, m)) * sinf;
            if (std::find(Einf.begin(), Einf.end(), v) == Einf.end()) Einf.push_back(v);
        }
        std::vector<std::vector<Constant>> E = Ec;
        E.push_back(Einf);
        std::vector<size_t> sizes;
        for (auto& e : E) sizes.push_back(e.size());
        std::vector<CaseThreeCandidate> D;
        Constant scale(qrat(m, 12));
        for_each_choice(sizes, [&](const std::vector<size_t>& idx) {
            RadicalSum s;
            s.add(E[np][idx[np]]);
            for (size_t i = 0; i < np; ++i) s.add(E[i][idx[i]], -1);
            if (!s.is_rational()) return;
            QRat n = s.rational_value().re * qrat(m, 12);
            if (!is_integer(n) || sgn(n) < 0) return;
            CaseThreeCandidate c;
            c.m = m;
            c.n = n.get_num().get_si();
            try {
                RatFunc th;
                for (size_t i = 0; i < np; ++i) th += RatFunc(scale * E[i][idx[i]]) * simple_pole(poles[i].c);
                c.theta = th;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::MixedRadicands) throw;
                mark(data.incomplete, e.kind(), "theta mixes radicands");
                return;
            }
            for (size_t i = 0; i <= np; ++i) c.e.push_back(E[i][idx[i]]);
            D.push_back(c);
        });
        std::stable_sort(D.begin(), D.end(), [](const CaseThreeCandidate& a, const CaseThreeCandidate& b) {
            return a.n < b.n;
        });
        log(trace, 3, "step2", "m = " + std::to_string(m) + ": " + std::to_string(D.size()) + " candidates");
        for (auto& c : D) {
            data.D.push_back(c);
            if (c.n > opt.max_degree) {
                mark(data.incomplete, ErrorKind::InvalidArgument,
                     "n = " + std::to_string(c.n) + " exceeds the degree limit " + std::to_string(opt.max_degree));
                continue;
            }
            for (int sign : {1, -1}) {
                auto ps = monic_solutions(c.n, case3_tower_op(r, data.S, c.theta, m, sign));
                for (auto& P : ps) {
                    auto tw = case3_tower(r, data.S, c.theta, m, sign, RatFunc(P));
                    std::vector<RatFunc> F(m + 1);
                    RatFunc Si(1);
                    for (int i = 0; i <= m; ++i) {
                        F[i] = Si * tw[i + 1] / RatFunc(factorial(m - i));
                        Si *= RatFunc(data.S);
                    }
                    if (!lifted_riccati_holds(F, r)) continue;
                    data.m = m;
                    data.tower_sign = sign;
                    data.tower.assign(tw.rbegin(), tw.rend() - 1);
                    log(trace, 3, "step3", "m = " + std::to_string(m) + ", n = " + std::to_string(c.n) +
                                               ", theta = " + c.theta.to_string() + ", P = " + P.to_string());
                    res.solution = HyperexpSolution{RatFunc(0), P, m, F};
                    return res;
                }
            }
        }
    }
    log(trace, 3, "step3", "no polynomial P for m in {4, 6, 12}");
    return res;
}

// ---------------------------------------------------------------- full run

namespace {

// second solution zeta1 * int dx / zeta1^2 when 1/zeta1^2 is rational
void second_solution(const ReducedODE& eq, KovacicReport& rep)
{
    const HyperexpSolution& z1 = rep.solutions[0];
    std::string formula = "zeta1*Int(1/zeta1^2)";
    auto res = algebraic_residues(z1.omega);
    bool half = res.has_value();
    if (res)
        for (auto& q : *res)
            if (!is_integer(q * 2)) half = false;
    if (!half) {
        rep.second_solution_formula = formula;
        log(&rep.trace, 1, "second", "1/zeta1^2 is not rational; zeta2 = " + formula);
        return;
    }
    // exp(2 int omega) = prod (x-c)^(2 rho_c)
    PartialFractions pf = partial_fractions(z1.omega);
    RatFunc e2(1);
    for (size_t i = 0; i < pf.terms.size(); ++i) {
        long k = QRat((*res)[i] * 2).get_num().get_si();
        RatFunc lin(Poly::linear(pf.terms[i].root));
        e2 *= k >= 0 ? pow(lin, static_cast<int>(k)) : RatFunc(1) / pow(lin, static_cast<int>(-k));
    }
    RatFunc P(z1.multiplier);
    RatFunc integrand = RatFunc(1) / (P * P * e2);
    HermiteResult h = hermite_reduce(integrand);
    if (!h.log_integrand.is_zero() || h.rational_part.is_zero()) {
        rep.second_solution_formula = formula;
        log(&rep.trace, 1, "second", "int dx/zeta1^2 has a logarithmic part " + h.log_integrand.to_string());
        return;
    }
    const RatFunc& R = h.rational_part;
    HyperexpSolution z2;
    z2.omega = z1.omega - RatFunc(R.den().derivative(), R.den());
    z2.multiplier = (z1.multiplier * R.num()).monic();
    if (verify_solution(eq, z2)) {
        rep.solutions.push_back(z2);
        log(&rep.trace, 1, "second", "zeta2 = zeta1 * (" + R.to_string() + ")");
    } else {
        rep.second_solution_formula = formula;
    }
}

}  // namespace

GaloisGroup classify_group(const KovacicReport& rep)
{
    GaloisGroup g;
    switch (rep.case_reached) {
    case 4: g.tag = GroupTag::SL2; return g;
    case 3:
        g.tag = rep.case3.m == 4 ? GroupTag::Tetrahedral : rep.case3.m == 6 ? GroupTag::Octahedral : GroupTag::Icosahedral;
        return g;
    case 2:
        g.tag = GroupTag::DihedralInfinite;
        g.certainty = Certainty::UpperBound;
        return g;
    default: break;
    }
    if (rep.solutions.size() >= 2) {
        long a = algebraic_order(rep.solutions[0].omega), b = algebraic_order(rep.solutions[1].omega);
        if (a == 1 && b == 1) {
            g.tag = GroupTag::Identity;
        } else if (a > 0 && b > 0) {
            g.tag = GroupTag::NRoots;
            g.n = lcm(ZInt(a), ZInt(b)).get_si();
        } else {
            g.tag = GroupTag::Multiplicative;
        }
        return g;
    }
    long a = algebraic_order(rep.solutions[0].omega);
    if (a == 1) {
        g.tag = GroupTag::Additive;
    } else if (a > 1) {
        g.tag = GroupTag::NQuasiRoots;
        g.n = a;
    } else {
        g.tag = GroupTag::Borel;
    }
    return g;
}

KovacicReport run_full(const ReducedODE& eq, const KovacicOptions& opt)
{
    KovacicReport rep;
    auto check = [&](const Incomplete& inc, int k) {
        if (inc.flag) raise(inc.kind, "case " + std::to_string(k) + " undecided: " + inc.reason);
    };
    auto c1 = run_case1(eq, &rep.trace, opt);
    rep.case1 = c1.data;
    if (!c1.solutions.empty()) {
        rep.case_reached = 1;
        rep.solutions = c1.solutions;
        if (rep.solutions.size() == 1) second_solution(eq, rep);
        rep.group = classify_group(rep);
        return rep;
    }
    check(c1.data.incomplete, 1);
    auto c2 = run_case2(eq, &rep.trace, opt);
    rep.case2 = c2.data;
    if (c2.solution) {
        rep.case_reached = 2;
        rep.solutions = {*c2.solution};
        rep.group = classify_group(rep);
        return rep;
    }
    check(c2.data.incomplete, 2);
    auto c3 = run_case3(eq, &rep.trace, opt);
    rep.case3 = c3.data;
    if (c3.solution) {
        rep.case_reached = 3;
        rep.solutions = {*c3.solution};
        rep.group = classify_group(rep);
        return rep;
    }
    check(c3.data.incomplete, 3);
    rep.case_reached = 4;
    log(&rep.trace, 4, "result", "no Liouvillian solution");
    rep.group = classify_group(rep);
    return rep;
}

}  // namespace galois
