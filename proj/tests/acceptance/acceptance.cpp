#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "galois/algebrize.hpp"
#include "galois/eigenring.hpp"
#include "galois/frontend.hpp"
#include "galois/kovacic.hpp"
#include "galois/special.hpp"
#include "galois/spectrum.hpp"
#include "galois/susy.hpp"

#ifndef GALOIS_CLI_PATH
#define GALOIS_CLI_PATH "galois"
#endif

using namespace galois;

namespace {

const RatFunc X = RatFunc::x();
const RatFunc Z = RatFunc::x();
Constant Q(long n, long d = 1) { return Constant(qrat(n, d)); }
RatFunc R(const Constant& c) { return RatFunc(c); }
RatFunc R(long v) { return RatFunc(v); }

// failures collected per criterion
struct Check {
    std::vector<std::string> failures;
    void operator()(bool ok, const std::string& what)
    {
        if (!ok) failures.push_back(what);
    }
};

// material for the property criterion
struct Collected {
    std::vector<std::pair<ReducedODE, HyperexpSolution>> solutions;
    std::vector<EigenringBasis> eigenrings;
    std::vector<DarbouxResult> darboux;
    std::vector<PartnerPair> partners;
};
Collected pool;

KovacicReport solve(const RatFunc& r)
{
    KovacicReport rep = run_full(ReducedODE{r});
    for (auto& s : rep.solutions) pool.solutions.push_back({ReducedODE{r}, s});
    return rep;
}

EigenringBasis eigenring(const RatFunc& r)
{
    EigenringBasis E = eigenring_of_reduced(ReducedODE{r});
    pool.eigenrings.push_back(E);
    return E;
}

bool commutes(const LinODE2& eq, const OperatorElement& e)
{
    Mat2 res = eigen_residual(op_to_system(eq), element_matrix(eq, e));
    for (auto& row : res)
        for (auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

// (P e^{int w})'' = (V - lambda) P e^{int w}
bool eigenfunction_holds(const RatFunc& V, const Constant& lambda, const Poly& P, const RatFunc& w)
{
    RatFunc p(P);
    RatFunc lhs = p.derivative().derivative() + R(2) * w * p.derivative() + (w.derivative() + w * w) * p;
    return lhs == (V - R(lambda)) * p;
}

std::string run_cli(const std::string& args, int& rc)
{
    std::string cmd = std::string("\"") + GALOIS_CLI_PATH + "\" " + args + " 2>&1";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        rc = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    rc = pclose(p);
    return out;
}

// ---------------------------------------------------------------- criteria

void c1(Check& ok)
{
    AnalysisRequest q;
    q.command = Command::Group;
    q.r = "x";
    Report rep = run_command(q);
    ok(rep.galois_group && *rep.galois_group == "SL2", "group --r x is not SL2");
    ok(rep.solutions.empty(), "Airy produced solutions");
    RatFunc V = X * X * X;
    for (long l : {0L, 1L, -2L}) {
        KovacicReport k = solve(V - R(l));
        ok(k.group.tag == GroupTag::SL2 && k.solutions.empty(), "x^3 - lambda integrable at " + std::to_string(l));
    }
    ok(polynomial_spectrum(Poly::monomial(Q(1), 3), 4).verified.empty(), "x^3 spectrum is not empty");
}

void c2(Check& ok)
{
    RatFunc V = X * X;
    auto rep = polynomial_spectrum(V.num(), 5);
    ok(rep.verified.size() == 12, "expected 12 values");
    for (long m = 0; m <= 5; ++m)
        for (int eps : {1, -1}) {
            Constant lam = Q(-eps * (2 * m + 1));
            const SpectrumEntry* e = rep.find(lam);
            if (!e) {
                ok(false, "missing lambda " + to_string(lam));
                continue;
            }
            ok(e->report.case_reached == 1, "not case 1 at " + to_string(lam));
            ok(e->report.group.tag == GroupTag::Borel, "group not Borel at " + to_string(lam));
            ok(e->multiplier && e->multiplier->degree() == m, "degree of P_m at " + to_string(lam));
            ok(e->omega && *e->omega == R(Q(eps)) * X, "exponent at " + to_string(lam));
            if (e->multiplier && e->omega)
                ok(eigenfunction_holds(V, lam, *e->multiplier, *e->omega), "eigenfunction at " + to_string(lam));
            for (auto& s : e->report.solutions) pool.solutions.push_back({ReducedODE{V - R(lam)}, s});
        }
}

void c3(Check& ok)
{
    for (long l = 0; l <= 2; ++l) {
        RatFunc r = R(l * (l + 1)) / (X * X) - R(2 * (l + 1)) / X + R(1);
        auto rep = scan_spectrum(schrodinger_family(r), {4, std::vector<Constant>{Q(1)}, true});
        for (long n = 0; n <= 4; ++n) {
            Constant q = Q(l + 1, l + 1 + n);
            ok(rep.contains(Q(1) - q * q), "Coulomb l=" + std::to_string(l) + " n=" + std::to_string(n));
        }
        for (auto& e : rep.verified) {
            bool expected = false;
            // the same formula, n over the integers (n = -(l+1) excluded)
            for (long n = -64; n <= 64 && !expected; ++n) {
                if (n == -(l + 1)) continue;
                Constant q = Q(l + 1, l + 1 + n);
                expected = e.lambda == Q(1) - q * q;
            }
            ok(expected, "unexpected Coulomb value " + to_string(e.lambda));
            for (auto& s : e.report.solutions) pool.solutions.push_back({ReducedODE{r - R(e.lambda)}, s});
        }
        ok(!rep.contains(Q(1)), "lambda = 1 accepted");
        ok(solve(r - R(1)).group.tag == GroupTag::SL2, "lambda = 1 not SL2");
    }
}

void c4(Check& ok)
{
    DarbouxResult d = darboux_schrodinger(R(0), Q(0), R(1) / X);
    pool.darboux.push_back(d);
    ok(d.v_plus == R(2) / (X * X), "V+ != 2/x^2");
    ok(eigenring(d.v_minus).dimension == 4, "dim E(V-) at 0");
    ok(eigenring(d.v_plus).dimension == 4, "dim E(V+) at 0");
    ok(eigenring(d.v_minus + R(1)).dimension == 2, "dim E(V-) at -1");
    ok(eigenring(d.v_plus + R(1)).dimension == 2, "dim E(V+) at -1");
    // the basis of E(d^2) recomputed
    EigenringBasis E0 = eigenring_of_reduced(ReducedODE{R(0)});
    LinODE2 L0{R(0), R(0)};
    for (auto& e : std::vector<OperatorElement>{{R(1), R(0)}, {R(0), R(1)}, {R(0), X}, {-X, X * X}})
        ok(commutes(L0, e), "element of E(d^2) fails: " + e.to_string());
}

void c5(Check& ok)
{
    RatFunc V = R(2) / (X * X);
    CrumSeed s1{Q(-1), {(X + R(1)) / X, R(-1)}};
    CrumSeed s2{Q(-4), {(R(2) * X + R(1)) / (R(2) * X), R(-2)}};
    ok(schrodinger_residual(V, s1.lambda, s1.psi).is_zero() && schrodinger_residual(V, s2.lambda, s2.psi).is_zero(),
       "seeds do not solve the equation");
    CrumResult c = crum_iteration(V, {s1, s2});
    ok(c.new_potential == R(8) / ((R(2) * X + R(3)) * (R(2) * X + R(3))), "V2 = " + c.new_potential.to_string());
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> v(-4, 4);
    for (int k = 0; k < 10; ++k) {
        RatFunc u = R(v(rng)) * X + R(v(rng));
        u += R(v(rng) == 0 ? 1 : v(rng)) / (X - R(Q(v(rng), 1 + k % 3)));
        Constant l1 = Q(v(rng));
        RatFunc Vk = u.derivative() + u * u + R(l1);
        DarbouxResult d = darboux_schrodinger(Vk, l1, u);
        pool.darboux.push_back(d);
        CrumResult ci = crum_iteration(Vk, {{l1, {R(1), u}}});
        ok(ci.new_potential == d.v_plus, "Crum(1) != Darboux on seed " + u.to_string());
    }
}

void c6(Check& ok)
{
    NormalizedInput n = normalize(parse("exp(-2*x) - exp(-x)"));
    ok(n.change.has_value(), "no change detected");
    if (!n.change) return;
    auto s = reduced_algebrized_schrodinger(n.f, *n.change);
    ok(s.V_bold == (Z * Z - Z - R(Q(1, 4))) / (Z * Z), "V_bold = " + s.V_bold.to_string("z"));
    auto rep = scan_spectrum(family_of(s), {4, std::nullopt, true});
    for (long k = 0; k <= 4; ++k) ok(rep.contains(Q(-k * k)), "missing -" + std::to_string(k * k));
    KovacicReport k0 = solve(s.r(Q(0)));
    bool phi0 = false;
    for (auto& sol : k0.solutions)
        phi0 |= sol.multiplier == Poly(1) && sol.omega == R(Q(1, 2)) / Z - R(1);
    ok(phi0, "Phi0 = sqrt(z) e^{-z} not found");
    ok(k0.group.tag == GroupTag::Borel, "group at 0 not Borel");
    ok(eigenring(s.r(Q(0))).dimension == 1, "eigenring at 0 not 1");
    for (long k = 1; k <= 4; ++k) {
        ok(solve(s.r(Q(-k * k))).group.tag == GroupTag::Multiplicative, "group at -n^2 not Multiplicative");
        ok(eigenring(s.r(Q(-k * k))).dimension == 2, "eigenring at -n^2 not 2");
    }
}

void c7(Check& ok)
{
    NormalizedInput n = normalize(parse("4*coth(x)+5"));
    ok(n.change.has_value(), "no change detected");
    if (!n.change) return;
    auto s = reduced_algebrized_schrodinger(n.f, *n.change);
    ok(s.V_bold == R(4) / ((Z + R(1)) * pow(Z - R(1), 2)), "V_bold = " + s.V_bold.to_string("z"));
    KovacicReport k = solve(s.r(Q(0)));
    bool phi0 = false;
    for (auto& sol : k.solutions) phi0 |= sol.logderiv() == R(1) / (Z + R(1)) - R(1) / (Z - R(1));
    ok(phi0, "Phi0 = (z+1)/(z-1) not found");
    ok(k.group.tag == GroupTag::Additive, "group not Additive");
    EigenringBasis E = eigenring(s.r(Q(0)));
    ok(E.dimension == 2, "reduced eigenring dimension");
    OperatorElement gen{R(2) * (Z + R(1)) / pow(Z - R(1), 3), pow(Z + R(1), 2) / pow(R(1) - Z, 2)};
    ok(commutes(LinODE2{R(0), -s.r(Q(0))}, gen), "reduced generator");
    LinODE2 hat = s.hat_operator(Q(0));
    EigenringBasis Eh = eigenring_of_operator(hat);
    pool.eigenrings.push_back(Eh);
    ok(Eh.dimension == 2, "hat eigenring dimension");
    OperatorElement gen_h{-(Z * Z + R(3) * Z + R(2)) / pow(R(1) - Z, 3), pow(Z + R(1), 2) / pow(R(1) - Z, 2)};
    ok(commutes(hat, gen_h), "hat generator");
}

void c8(Check& ok)
{
    NormalizedInput n = normalize(parse("(sinh(x)^2 - 3*sinh(x))/cosh(x)^2"));
    ok(n.change && n.change->atom == Atom::Sinh, "sinh change not detected");
    if (!n.change) return;
    auto s = reduced_algebrized_schrodinger(n.f, *n.change);
    // lambda here is 3 - 4E
    RatFunc one = R(1) + Z * Z;
    LambdaFamily fam{(R(-12) * Z - R(1)) / (R(4) * one * one), R(1) / (R(4) * one)};
    for (long lam : {0L, 3L, 15L}) ok(fam.at(Q(lam)) == s.r(Q(3 - lam, 4)), "family mismatch");
    auto rep = scan_spectrum(fam, {4, std::nullopt, true});
    for (long k = 0; k <= 4; ++k) {
        ok(rep.contains(Q(4 * k * k - 8 * k + 3)), "missing 4n^2-8n+3 at n=" + std::to_string(k));
        ok(rep.contains(Q(4 * k * k + 16 * k + 15)), "missing 4n^2+16n+15 at n=" + std::to_string(k));
    }
    for (auto& e : rep.verified) {
        ok(e.report.group.integrable(), "unverified candidate");
        if (!e.lambda.is_real()) continue;
        bool in = false;
        if (e.lambda.is_integer())
            for (long k = 0; k <= 16; ++k)
                in |= e.lambda == Q(4 * k * k - 8 * k + 3) || e.lambda == Q(4 * k * k + 16 * k + 15);
        ok(in, "real value outside the families: " + to_string(e.lambda));
    }
    for (long lam : {3L, -1L}) {
        ok(solve(fam.at(Q(lam))).group.tag == GroupTag::Borel, "group not Borel at " + std::to_string(lam));
        ok(eigenring(fam.at(Q(lam))).dimension == 1, "eigenring not 1 at " + std::to_string(lam));
    }
}

void c9(Check& ok)
{
    RatFunc vpt = (pow(Z, 4) - Z * Z + R(2)) / ((Z * Z - R(1)) * Z * Z);
    auto cosh = change_for_atom(Atom::Cosh);
    auto pt = reduced_algebrized_schrodinger(vpt, cosh);
    // lambda = 0 of the reference family is E = 3/4 here
    RatFunc r = pt.r(Q(3, 4));
    ok(r == R(8) / (R(4) * Z * Z * pow(Z * Z - R(1), 2)) - R(3) / (R(4) * pow(Z * Z - R(1), 2)), "reduced r");
    KovacicReport k = solve(r);
    ok(k.case_reached == 1 && k.solutions.size() == 2, "two case-1 solutions");
    bool minus = false, plus = false;
    for (auto& s : k.solutions) {
        Poly m = s.multiplier.monic();
        minus |= m == Poly(std::vector<Constant>{Q(-2, 3), Q(1)});
        plus |= m == Poly(std::vector<Constant>{Q(2, 3), Q(1)});
    }
    ok(minus && plus, "P1 = z -+ 2/3");
    ok(k.group.tag == GroupTag::NRoots && k.group.n == 4, "group " + k.group.to_string());
    ok(eigenring(r).dimension == 2, "reduced eigenring dimension");
    auto par = sqrt_parametrization(cosh);
    ok(par.has_value(), "no parametrisation");
    if (!par) return;
    LinODE2 ext = hat_equation_over_extension(HatElem(R(0)), HatElem(-(vpt - R(Q(3, 4)))), cosh, *par);
    EigenringBasis E = eigenring_of_operator(ext);
    pool.eigenrings.push_back(E);
    ok(E.dimension == 4, "algebrized eigenring dimension");
}

Poly quartic(long mu) { return Poly(std::vector<Constant>{Q(0), Q(-mu), Q(2), Q(4), Q(1)}); }

void c10(Check& ok)
{
    auto q6 = quasi_solvable_eliminate(quartic(6), 0);
    ok(q6.lambdas() == std::vector<Constant>{Q(1)}, "Lambda(V6) != {1}");
    auto q8 = quasi_solvable_eliminate(quartic(8), 1);
    ok(q8.branches.size() == 1, "one branch for V8");
    if (q8.branches.empty()) return;
    const auto& br = q8.branches[0];
    ok(br.Q == Poly(std::vector<Constant>{Q(1), Q(-6), Q(1)}), "Q2 = " + br.Q.to_string("lambda"));
    Constant s2 = csqrt(Q(2));
    ok(br.lambdas.size() == 2, "two roots");
    for (size_t i = 0; i < br.lambdas.size(); ++i) {
        const Constant& l = br.lambdas[i];
        bool p = l == Q(3) + Q(2) * s2, m = l == Q(3) - Q(2) * s2;
        ok(p || m, "root " + to_string(l));
        ok(br.P[i] == Poly(std::vector<Constant>{Q(1) + (p ? -s2 : s2), Q(1)}), "P1 at " + to_string(l));
        RatFunc w = R(-1) * RatFunc(Poly(std::vector<Constant>{Q(-1), Q(2), Q(1)}));
        ok(eigenfunction_holds(RatFunc(quartic(8)), l, br.P[i], w), "eigenfunction at " + to_string(l));
    }
}

void c11(Check& ok)
{
    // 3D oscillator W = x - (a+1)/x
    auto r3 = shape_invariance_check(ParamSuperpotential{{X - R(1) / X, R(-1) / X}});
    ok(r3.holds, "3D oscillator not shape invariant");
    ok(r3.f_map.kappa == Q(1) && r3.f_map.shift == Q(1), "f(a0) = " + r3.f_map.to_string());
    ok(r3.remainder == Poly(2), "3D oscillator R = " + r3.remainder.to_string("a0") + ", expected 2");
    for (int n = 0; n <= 4; ++n)
        ok(r3.energy(n) == Poly(Q(2 * n)),
           "3D oscillator E_" + std::to_string(n) + " = " + r3.energy(n).to_string("a0") + ", expected 2n");
    // algebrized Poschl-Teller W = mu z, hat d z = 1 - z^2
    auto pt = shape_invariance_check(ParamSuperpotential{{R(0), Z}, Derivation{R(1) - Z * Z}});
    ok(pt.holds, "Poschl-Teller not shape invariant");
    Poly expected_r = Poly(std::vector<Constant>{Q(1), Q(2)});
    ok(pt.remainder == expected_r, "Poschl-Teller R(a1) = " + pt.remainder.to_string("a0") + ", expected 2a0+1");
    for (int n = 0; n <= 4; ++n) {
        Poly an = Poly(std::vector<Constant>{pt.f_map.shift * Q(n), Q(1)});
        Poly a0 = Poly::x();
        bool eq = pt.f_map.kappa == Q(1) && pt.energy(n) == an * an - a0 * a0;
        ok(eq, "Poschl-Teller E_" + std::to_string(n) + " = " + pt.energy(n).to_string("a0") + ", expected a_n^2-a0^2");
    }
}

void c12(Check& ok)
{
    RiemannExponents e{Surd(qrat(1, 2)), Surd(qrat(1, 2)), Surd(QRat(0))};
    ok(kimura_check(e).integrable, "kimura (1/2,1/2,0)");
    for (long k = -4; k <= 4; ++k) {
        QRat n = qrat(k, 2);
        ok(bessel_check(n) == (k % 2 != 0), "bessel_check at " + n.get_str());
    }
    std::vector<QRat> ks = {0, qrat(1, 2), qrat(3, 4), 1, qrat(-3, 2)};
    std::vector<QRat> ms = {0, qrat(1, 4), qrat(1, 2), 1, qrat(5, 2)};
    for (auto& k : ks)
        for (auto& m : ms) {
            ReducedODE w = whittaker_equation(k, m);
            ok(whittaker_check(k, m) == solve(w.r).group.integrable(),
               "whittaker disagrees at " + k.get_str() + ", " + m.get_str());
        }
    for (long n = -2; n <= 3; ++n) {
        RatFunc r = X * X / R(4) - R(Q(1, 2)) - R(n);
        bool w = weber_check(qrat(1, 4), 0, -qrat(1, 2) - n);
        ok(w == solve(r).group.integrable(), "weber disagrees at n=" + std::to_string(n));
    }
}

void c13(Check& ok)
{
    for (auto& [eq, s] : pool.solutions) ok(verify_solution(eq, s), "solution fails: " + s.omega.to_string());
    for (auto& E : pool.eigenrings) {
        ok(commutator_holds(E), "eigenring commutator");
        ok(closure_holds(E), "eigenring closure");
        ok(constant_eigenvalues(E), "eigenring eigenvalues");
    }
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> v(-3, 3);
    auto random_rat = [&] {
        RatFunc num = R(v(rng)) * Z * Z + R(v(rng)) * Z + R(v(rng) == 0 ? 1 : v(rng));
        return num / (Z - R(Q(v(rng) + 7, 2)));
    };
    std::vector<HamiltonianChange> chs;
    for (Atom a : {Atom::Tan, Atom::Tanh, Atom::Coth, Atom::Sin, Atom::Cos, Atom::Sinh, Atom::Cosh})
        chs.push_back(change_for_atom(a));
    chs.push_back(change_for_atom(Atom::Exp, Q(2, 3)));
    for (int k = 0; k < 100; ++k) {
        HatField F(chs[k % chs.size()]);
        bool rat = F.change().sqrt_alpha_rational();
        HatElem f(random_rat(), rat ? R(0) : random_rat()), g(random_rat(), rat ? R(0) : random_rat());
        ok(F.equal(F.d(F.add(f, g)), F.add(F.d(f), F.d(g))), "hat sum rule");
        ok(F.equal(F.d(F.mul(f, g)), F.add(F.mul(F.d(f), g), F.mul(f, F.d(g)))), "hat Leibniz rule");
    }
    for (auto& d : pool.darboux) {
        RatFunc W = d.W.W;
        ok(d.v_plus + d.v_minus == R(2) * W * W + R(Q(2) * d.lambda1), "partner sum identity");
        pool.partners.push_back(partner_from_superpotential(d.W));
    }
    for (auto& p : pool.partners) {
        ok(p.identities_hold(), "partner identities");
        ok(p.v_plus + p.v_minus == R(2) * p.W.W * p.W.W, "V+ + V- != 2W^2");
    }
    auto crum = crum_iteration(R(2) / (X * X), {{Q(-1), {(X + R(1)) / X, R(-1)}},
                                                {Q(-4), {(R(2) * X + R(1)) / (R(2) * X), R(-2)}}});
    std::vector<std::pair<RatFunc, RatFunc>> pairs{
        {R(0), R(2) / (X * X)}, {X * X - R(1), X * X + R(1)}, {R(2) / (X * X), crum.new_potential}};
    for (auto& [vm, vp] : pairs)
        for (long l : {0L, -1L, -4L, 3L})
            ok(run_full({vm - R(l)}).group == run_full({vp - R(l)}).group, "DT changed the group");
}

void c14(Check& ok)
{
    for (std::string args : {"solve --potential \"exp(-2*x)-exp(-x)\" --lambda -1 --json",
                             "spectrum --potential \"x^2\" --nmax 5 --json", "group --r \"x\" --json"}) {
        int rc1 = 0, rc2 = 0;
        std::string a = run_cli(args, rc1), b = run_cli(args, rc2);
        ok(rc1 == 0 && rc2 == 0, "exit status for " + args);
        ok(!a.empty() && a == b, "outputs differ for " + args);
        ok(a.find("\"schema_version\"") != std::string::npos, "no schema version for " + args);
    }
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"Airy and x^3 are SL2 with no solutions", c1},
        {"harmonic oscillator spectrum +-(2m+1)", c2},
        {"Coulomb spectrum and lambda = 1 rejected", c3},
        {"Darboux 0 -> 2/x^2 and eigenring dimensions", c4},
        {"Crum iteration and one-seed agreement", c5},
        {"Morse algebrization, spectrum, groups, eigenrings", c6},
        {"Eckart at lambda = 0", c7},
        {"Scarf spectrum families", c8},
        {"Poschl-Teller at lambda = 0", c9},
        {"quartic anharmonic elimination", c10},
        {"shape invariance data", c11},
        {"special-function checkers agree with the algorithm", c12},
        {"property suites", c13},
        {"CLI determinism", c14},
    };
    auto t0 = std::chrono::steady_clock::now();
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Check ok;
        try {
            criteria[i].second(ok);
        } catch (const std::exception& e) {
            ok.failures.push_back(std::string("exception: ") + e.what());
        }
        bool pass = ok.failures.empty();
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!pass) {
            std::cout << " [";
            for (size_t k = 0; k < ok.failures.size() && k < 6; ++k) std::cout << (k ? "; " : "") << ok.failures[k];
            if (ok.failures.size() > 6) std::cout << "; ... " << ok.failures.size() - 6 << " more";
            std::cout << "]";
        }
        std::cout << std::endl;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed in " << secs << " s"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
