#include "galois/spectrum.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>

namespace galois {

namespace {

const Constant kHalf = Constant(qrat(1, 2));

// coefficients c_k in C[lambda] of P = sum c_k x^k and the leftover equations
struct Elimination {
    std::vector<Poly> c;
    std::vector<Poly> residual;
};

// P'' + 2 eps W P' + (eps W' - B0 + lambda) P = 0 with P monic of degree m.
// symbolic: lambda kept as the indeterminate of the coefficient polynomials;
// otherwise lambda is already folded into B0.
Elimination eliminate(const Poly& W, const Poly& B0, int eps, long m, bool symbolic)
{
    int N = W.degree();
    Poly g = Constant(eps) * W.derivative() - B0;
    std::vector<Poly> c(m + 1);
    c[m] = Poly(1);
    auto cc = [&](long j) -> Poly { return (j < 0 || j > m) ? Poly() : c[j]; };
    auto equation = [&](long d) {
        Poly e = Constant((d + 2) * (d + 1)) * cc(d + 2);
        for (int i = 0; i <= N; ++i)
            e += Constant(2 * eps * (d - i + 1)) * W.coeff(i) * cc(d - i + 1);
        for (int i = 0; i <= g.degree(); ++i) e += g.coeff(i) * cc(d - i);
        if (symbolic) e += Poly::x() * cc(d);
        return e;
    };
    for (long k = m - 1; k >= 0; --k) {
        Constant pivot = Constant(2 * eps * k) + g.coeff(N - 1);
        if (pivot.is_zero()) raise(ErrorKind::InvalidArgument, "zero pivot in elimination");
        c[k] = Poly();
        c[k] = -(equation(N - 1 + k) * pivot.inv());
    }
    if (!equation(N - 1 + m).is_zero()) raise(ErrorKind::InvalidArgument, "branch condition fails");
    Elimination el;
    el.c = c;
    for (long d = 0; d <= N - 2; ++d) el.residual.push_back(equation(d));
    return el;
}

Poly evaluate_multiplier(const std::vector<Poly>& c, const Constant& lambda)
{
    std::vector<Constant> v;
    for (auto& ck : c) v.push_back(ck.eval(lambda));
    return Poly(v);
}

std::vector<Constant> split_roots(const Poly& Q)
{
    try {
        std::vector<Constant> out;
        for (auto& r : roots(Q)) out.push_back(r.value);
        std::sort(out.begin(), out.end());
        return out;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UnsupportedSplitting) raise(ErrorKind::MixedRadicands, e.what());
        throw;
    }
}

struct Candidate {
    Constant lambda;
    long n;
    std::string branch;
    std::optional<Poly> multiplier;
    std::optional<RatFunc> omega;
};

void add_candidate(std::vector<Candidate>& cs, Candidate c)
{
    for (auto& o : cs)
        if (o.lambda == c.lambda) {
            if (c.n >= 0 && (o.n < 0 || c.n < o.n)) o = c;
            return;
        }
    cs.push_back(std::move(c));
}

long sort_key(long n) { return n < 0 ? LONG_MAX : n; }

void verify_all(const std::vector<Candidate>& cs, const std::function<RatFunc(const Constant&)>& r_of,
                AlgebraicSpectrumReport& rep)
{
    for (auto& c : cs) {
        KovacicReport kr;
        try {
            kr = run_full(ReducedODE{r_of(c.lambda)});
        } catch (const Error& e) {
            rep.rejected.push_back({c.lambda, std::string("undecided: ") + e.what()});
            continue;
        }
        if (!kr.group.integrable()) {
            rep.rejected.push_back({c.lambda, "SL2"});
            continue;
        }
        SpectrumEntry en;
        en.lambda = c.lambda;
        en.n = c.n;
        en.branch = c.branch;
        en.multiplier = c.multiplier;
        en.omega = c.omega;
        if (!en.multiplier && !kr.solutions.empty()) {
            en.multiplier = kr.solutions[0].multiplier;
            en.omega = kr.solutions[0].omega;
        }
        en.report = std::move(kr);
        rep.verified.push_back(std::move(en));
    }
    std::stable_sort(rep.verified.begin(), rep.verified.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (sort_key(a.n) != sort_key(b.n)) return sort_key(a.n) < sort_key(b.n);
        return a.lambda < b.lambda;
    });
    for (auto& e : rep.verified)
        if (e.n >= 0 && 2 * e.n > rep.n_max) rep.pattern_grows = true;
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

Poly CompletedSquare::inner() const
{
    std::vector<Constant> v(a);
    v.resize(n);
    v.push_back(Constant(1));
    return Poly(v);
}

Poly CompletedSquare::remainder() const { return Poly(b); }

CompletedSquare complete_square(const Poly& Q)
{
    int d = Q.degree();
    if (d < 0 || d % 2 != 0) raise(ErrorKind::OddDegree, "degree " + std::to_string(d) + " is odd");
    if (!Q.lc().is_one()) raise(ErrorKind::NonMonic, "leading coefficient " + to_string(Q.lc()));
    CompletedSquare cs;
    int n = d / 2;
    cs.n = n;
    cs.a.assign(n, Constant());
    auto a_at = [&](int i) { return i == n ? Constant(1) : cs.a[i]; };
    for (int j = n - 1; j >= 0; --j) {
        Constant s = Q.coeff(n + j);
        for (int i = j + 1; i < n; ++i) {
            int l = n + j - i;
            if (l > j && l < n) s -= a_at(i) * a_at(l);
        }
        cs.a[j] = s * kHalf;
    }
    Poly W = cs.inner();
    Poly B = Q - W * W;
    if (B.degree() >= n) raise(ErrorKind::InvalidArgument, "completing the square left a high remainder");
    cs.b.assign(n, Constant());
    for (int k = 0; k < n; ++k) cs.b[k] = B.coeff(k);
    return cs;
}

const char* solvability_name(Solvability s)
{
    switch (s) {
    case Solvability::AlgebraicallySolvableEvidence: return "algebraically_solvable_evidence";
    case Solvability::QuasiSolvable: return "quasi_solvable";
    case Solvability::TrivialQuasiSolvable: return "trivial_quasi_solvable";
    case Solvability::NonSolvableInWindow: return "non_solvable_in_window";
    }
    return "?";
}

bool AlgebraicSpectrumReport::contains(const Constant& lambda) const { return find(lambda) != nullptr; }

const SpectrumEntry* AlgebraicSpectrumReport::find(const Constant& lambda) const
{
    for (auto& e : verified)
        if (e.lambda == lambda) return &e;
    return nullptr;
}

std::vector<Constant> QuasiSolvableResult::lambdas() const
{
    std::vector<Constant> out;
    for (auto& b : branches)
        for (auto& l : b.lambdas)
            if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
}

QuasiSolvableResult quasi_solvable_eliminate(const Poly& V, long n)
{
    if (n < 0) raise(ErrorKind::InvalidArgument, "negative degree");
    CompletedSquare cs = complete_square(V);
    int N = cs.n;
    Poly W = cs.inner(), B0 = cs.remainder();
    QuasiSolvableResult res;
    res.n = n;
    for (int eps : {1, -1}) {
        QuasiSolvableBranch br;
        br.sign = eps;
        if (N == 1) {
            // b_0 carries lambda: one value per branch
            Constant lam = cs.b[0] - Constant(eps * (2 * n + 1));
            Elimination el = eliminate(W, B0 - Poly(lam), eps, n, false);
            br.Q = Poly::linear(lam);
            br.lambdas = {lam};
            br.P = {evaluate_multiplier(el.c, Constant())};
        } else {
            Constant t = Constant(eps) * cs.b[N - 1] - Constant(N);
            if (t != Constant(2 * n)) continue;
            Elimination el = eliminate(W, B0, eps, n, true);
            Poly Q;
            for (auto& e : el.residual) Q = gcd(Q, e);
            if (Q.is_zero()) raise(ErrorKind::InvalidArgument, "every lambda solves the branch");
            br.Q = Q.monic();
            if (br.Q.degree() > 0) br.lambdas = split_roots(br.Q);
            for (auto& l : br.lambdas) br.P.push_back(evaluate_multiplier(el.c, l));
        }
        res.branches.push_back(std::move(br));
    }
    return res;
}

AlgebraicSpectrumReport polynomial_spectrum(const Poly& V, long n_max)
{
    if (V.degree() <= 0) raise(ErrorKind::InvalidArgument, "potential must have positive degree");
    if (n_max < 0) raise(ErrorKind::InvalidArgument, "n_max must be nonnegative");
    AlgebraicSpectrumReport rep;
    rep.n_max = n_max;
    rep.case1_only = false;
    if (V.degree() % 2 != 0) {
        rep.notes.push_back("odd degree: Galois group SL2 for every lambda");
        rep.classification = Solvability::NonSolvableInWindow;
        return rep;
    }
    if (!V.lc().is_one()) {
        rep.notes.push_back("leading coefficient is not 1: rescale x first");
        return rep;
    }
    const Poly& Vm = V;
    CompletedSquare cs = complete_square(Vm);
    int N = cs.n;
    Poly W = cs.inner();
    std::vector<Candidate> cands;
    std::vector<Poly> Qs;
    std::vector<long> ms;
    if (N == 1) {
        for (long m = 0; m <= n_max; ++m) ms.push_back(m);
    } else {
        for (int eps : {1, -1}) {
            Constant t = Constant(eps) * cs.b[N - 1] - Constant(N);
            if (t.is_nonneg_integer() && t.to_long() % 2 == 0) {
                long m = t.to_long() / 2;
                if (m > n_max)
                    rep.notes.push_back("branch " + sign_char(eps) + " needs degree " + std::to_string(m) +
                                        " beyond the window");
                else if (std::find(ms.begin(), ms.end(), m) == ms.end())
                    ms.push_back(m);
            }
        }
    }
    std::sort(ms.begin(), ms.end());
    for (long m : ms) {
        QuasiSolvableResult q = quasi_solvable_eliminate(Vm, m);
        for (auto& br : q.branches) {
            if (N > 1) Qs.push_back(br.Q);
            for (size_t i = 0; i < br.lambdas.size(); ++i)
                add_candidate(cands, {br.lambdas[i], m, sign_char(br.sign), br.P[i], RatFunc(Constant(br.sign) * W)});
        }
    }
    if (N > 1) rep.elimination_polynomials = Qs;
    RatFunc Vr(V);
    verify_all(cands, [&](const Constant& l) { return Vr - RatFunc(l); }, rep);
    rep.classification = classify_solvability(rep);
    return rep;
}

LambdaFamily schrodinger_family(const RatFunc& V) { return {V, RatFunc(-1)}; }

LambdaFamily family_of(const ReducedAlgebrizedSchrodinger& s) { return {s.V_bold, RatFunc(-1) / s.alpha}; }

namespace {

// dependence of the two exponents of a point on lambda
struct AlphaForm {
    enum Kind { Fixed, Sqrt, Inv, Linear } kind = Fixed;
    std::vector<Constant> fixed;  // distinct fixed values
    Constant u, v;                // radicand u + v lambda
    Constant w;                   // Inv: alpha = +-w / sqrt(u + v lambda)
    Constant A[2], B[2];          // Linear: alpha_s = A_s + B_s lambda
    int options() const { return kind == Fixed ? static_cast<int>(fixed.size()) : 2; }
};

Constant coeff_at(const RatFunc& f, const Constant& c, int e)
{
    int val = 0;
    auto co = laurent_at(f, c, val, std::max(1, e + 8));
    if (e < val || e - val >= static_cast<int>(co.size())) return Constant();
    return co[e - val];
}

int pole_order(const RatFunc& f, const Constant& c)
{
    if (f.is_zero()) return INT_MIN;
    int val = 0;
    laurent_at(f, c, val, 1);
    return -val;
}

Constant coeff_at_infinity(const RatFunc& f, int e)
{
    if (f.is_zero()) return Constant();
    int top = 0;
    auto co = laurent_at_infinity(f, top, 12);
    if (e > top || top - e >= static_cast<int>(co.size())) return Constant();
    return co[top - e];
}

std::vector<std::pair<Constant, int>> signature(const CaseOneData& d)
{
    std::vector<std::pair<Constant, int>> s;
    for (auto& p : d.points) s.push_back({p.at_infinity ? Constant() : p.location, p.order});
    std::sort(s.begin(), s.end(), [](auto& a, auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return s;
}

std::vector<Constant> distinct(const std::vector<Constant>& v)
{
    std::vector<Constant> out;
    for (auto& x : v)
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

}  // namespace

AlgebraicSpectrumReport scan_spectrum(const LambdaFamily& fam, const SpectrumScanConfig& cfg)
{
    if (cfg.n_max < 0) raise(ErrorKind::InvalidArgument, "n_max must be nonnegative");
    if (!cfg.verify) raise(ErrorKind::InvalidArgument, "verification cannot be disabled");
    if (fam.coeff.is_zero()) raise(ErrorKind::InvalidArgument, "lambda does not enter the family");

    if (fam.base.is_polynomial() && fam.coeff == RatFunc(-1) && fam.base.num().degree() >= 3) {
        AlgebraicSpectrumReport rep = polynomial_spectrum(fam.base.num(), cfg.n_max);
        rep.notes.push_back("polynomial potential: completing squares");
        if (cfg.lambda_window) {
            std::vector<Candidate> extra;
            for (auto& l : *cfg.lambda_window)
                if (!rep.contains(l)) add_candidate(extra, {l, -1, "window", std::nullopt, std::nullopt});
            verify_all(extra, [&](const Constant& l) { return fam.at(l); }, rep);
            rep.classification = classify_solvability(rep);
        }
        return rep;
    }

    AlgebraicSpectrumReport rep;
    rep.n_max = cfg.n_max;
    rep.case1_only = true;
    rep.notes.push_back("candidates from case-1 exponent sums; every listed value verified by the full algorithm");

    // generic sample of the local data
    static const QRat samples[] = {qrat(1, 3), qrat(-2, 7), qrat(5, 11), qrat(-7, 13), qrat(11, 17)};
    std::vector<std::pair<Constant, CaseOneData>> data;
    for (auto& s : samples) {
        try {
            data.push_back({Constant(s), case1_points(ReducedODE{fam.at(Constant(s))})});
        } catch (const Error& e) {
            if (!e.unsupported()) throw;
        }
    }
    if (data.empty()) raise(ErrorKind::UnsupportedLambdaPlacement, "no sample value gives supported local data");
    size_t pick = 0;
    int best = -1;
    for (size_t i = 0; i < data.size(); ++i) {
        int cnt = 0;
        for (auto& d : data)
            if (signature(d.second) == signature(data[i].second)) ++cnt;
        if (cnt > best) best = cnt, pick = i;
    }
    const Constant lam0 = data[pick].first;
    const CaseOneData& pts = data[pick].second;
    const RatFunc r0 = fam.at(lam0);

    std::vector<Candidate> cands;
    auto add_exceptional = [&](const Constant& l) { add_candidate(cands, {l, -1, "exceptional", std::nullopt, std::nullopt}); };

    std::vector<AlphaForm> forms;
    for (auto& p : pts.points) {
        AlphaForm f;
        f.fixed = distinct(p.alpha);
        if (!p.at_infinity) {
            int oc = pole_order(fam.coeff, p.location);
            if (oc >= 3) raise(ErrorKind::UnsupportedLambdaPlacement, "lambda multiplies a pole of order " + std::to_string(oc));
            if (oc >= 1 && oc == p.order) {
                Constant k = coeff_at(fam.coeff, p.location, -oc);
                add_exceptional(lam0 - coeff_at(r0, p.location, -oc) / k);
            }
            if (p.order == 2 && oc == 2) {
                Constant k = coeff_at(fam.coeff, p.location, -2);
                f.kind = AlphaForm::Sqrt;
                f.u = Constant(1) + Constant(4) * (p.b - lam0 * k);
                f.v = Constant(4) * k;
            }
        } else {
            int o = p.order;
            int oc = fam.coeff.order_at_infinity();
            if (oc == o && o <= 2) {
                Constant k = coeff_at_infinity(fam.coeff, -o);
                add_exceptional(lam0 - coeff_at_infinity(r0, -o) / k);
            }
            if (o == 2 && oc == 2) {
                Constant k = coeff_at_infinity(fam.coeff, -2);
                f.kind = AlphaForm::Sqrt;
                f.u = Constant(1) + Constant(4) * (p.b - lam0 * k);
                f.v = Constant(4) * k;
            } else if (o <= 0 && o % 2 == 0) {
                int v = -o / 2;
                if (v == 0 && oc == 0) {
                    if (!coeff_at_infinity(fam.coeff, -1).is_zero())
                        raise(ErrorKind::UnsupportedLambdaPlacement, "lambda enters the 1/x term at infinity");
                    Constant c0 = coeff_at_infinity(fam.coeff, 0);
                    f.kind = AlphaForm::Inv;
                    f.u = coeff_at_infinity(r0, 0) - lam0 * c0;
                    f.v = c0;
                    f.w = p.b * kHalf;
                    if (f.w.is_zero()) f.kind = AlphaForm::Fixed;
                } else if (oc >= 1 - v) {
                    Constant k = coeff_at_infinity(fam.coeff, v - 1);
                    if (!k.is_zero()) {
                        Constant a = p.sqrt_part.num().lc() / p.sqrt_part.den().lc();
                        f.kind = AlphaForm::Linear;
                        for (int s = 0; s < 2; ++s) {
                            f.B[s] = Constant(s == 0 ? 1 : -1) * k / (Constant(2) * a);
                            f.A[s] = p.alpha[s] - lam0 * f.B[s];
                        }
                    }
                } else {
                    raise(ErrorKind::UnsupportedLambdaPlacement, "lambda enters the polynomial part at infinity");
                }
            }
        }
        forms.push_back(f);
    }

    if (!pts.possible) {
        rep.notes.push_back("generic local data excludes case 1");
    } else {
        size_t np = forms.size();
        std::vector<int> idx(np, 0);
        bool incomplete = false;
        while (true) {
            Constant K, L;
            std::vector<std::pair<Constant, const AlphaForm*>> rad;
            std::string branch;
            bool ok = true;
            for (size_t i = 0; i < np; ++i) {
                const AlphaForm& f = forms[i];
                if (f.options() == 0) { ok = false; break; }
                Constant sg = Constant(i + 1 == np ? 1 : -1);
                int s = idx[i];
                Constant pm = Constant(s == 0 ? 1 : -1);
                branch += s == 0 ? "+" : "-";
                switch (f.kind) {
                case AlphaForm::Fixed: K += sg * f.fixed[s]; break;
                case AlphaForm::Sqrt:
                    K += sg * kHalf;
                    rad.push_back({sg * pm * kHalf, &f});
                    break;
                case AlphaForm::Inv: rad.push_back({sg * pm * f.w, &f}); break;
                case AlphaForm::Linear:
                    K += sg * f.A[s];
                    L += sg * f.B[s];
                    break;
                }
            }
            if (ok) {
                if (rad.size() > 1)
                    raise(ErrorKind::UnsupportedLambdaPlacement, "lambda enters more than one square root");
                for (long n = 0; n <= cfg.n_max; ++n) {
                    Constant M0 = Constant(n) - K;  // rad = M0 - L lambda
                    Poly M = Poly(M0) - Poly::monomial(L, 1);
                    Poly eq;
                    if (rad.empty()) {
                        eq = M;
                    } else {
                        const Constant& rho = rad[0].first;
                        const AlphaForm& f = *rad[0].second;
                        Poly R = Poly(f.u) + Poly::monomial(f.v, 1);
                        if (f.kind == AlphaForm::Sqrt)
                            eq = M * M - rho * rho * R;
                        else
                            eq = M * M * R - Poly(rho * rho);
                    }
                    if (eq.is_zero()) {
                        rep.notes.push_back("branch " + branch + " gives n = " + std::to_string(n) + " for every lambda");
                        continue;
                    }
                    if (eq.degree() == 0) continue;
                    std::vector<Root> rs;
                    try {
                        rs = roots(eq);
                    } catch (const Error& e) {
                        if (!e.unsupported()) throw;
                        incomplete = true;
                        continue;
                    }
                    for (auto& rt : rs) add_candidate(cands, {rt.value, n, branch, std::nullopt, std::nullopt});
                }
            }
            size_t i = 0;
            while (i < np) {
                if (++idx[i] < std::max(1, forms[i].options())) break;
                idx[i] = 0;
                ++i;
            }
            if (i == np) break;
        }
        if (incomplete) rep.notes.push_back("some candidate equations split outside the supported tower");
    }
    if (cfg.lambda_window)
        for (auto& l : *cfg.lambda_window) add_candidate(cands, {l, -1, "window", std::nullopt, std::nullopt});

    verify_all(cands, [&](const Constant& l) { return fam.at(l); }, rep);
    rep.classification = classify_solvability(rep);
    return rep;
}

Solvability classify_solvability(const AlgebraicSpectrumReport& rep)
{
    size_t cnt = rep.verified.size();
    size_t need = std::max<size_t>(2, static_cast<size_t>((rep.n_max + 1) / 2));
    if (cnt >= need && rep.pattern_grows) return Solvability::AlgebraicallySolvableEvidence;
    if (cnt >= 2) return Solvability::QuasiSolvable;
    if (cnt == 1) return Solvability::TrivialQuasiSolvable;
    return Solvability::NonSolvableInWindow;
}

}  // namespace galois
