#include <random>

#include "doctest.h"
#include "galois/eigenring.hpp"
#include "galois/kovacic.hpp"
#include "galois/susy.hpp"
#include "support.hpp"

using namespace galois;
using namespace testsupport;

namespace {

RatFunc random_logderiv(std::mt19937& rng)
{
    std::uniform_int_distribution<long> v(-4, 4);
    RatFunc u = R(v(rng)) * X + R(v(rng));
    int poles = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < poles; ++k) u += R(v(rng) == 0 ? 1 : v(rng)) / (X - R(Q(v(rng) + 10 * k, 1 + k)));
    return u;
}

// truncated power-series residual check: x^2 (d^2 u + C u) with u = x^(-1/2) w
std::vector<Constant> half_power_residual(const RatFunc& C, const Poly& w, int keep)
{
    // u'' = x^(-1/2) (w'' - w'/x + 3/4 w / x^2)
    RatFunc W(w);
    RatFunc res = W.derivative().derivative() - W.derivative() / X + R(Q(3, 4)) * W / (X * X) + C * W;
    res *= X * X;
    std::vector<Constant> out;
    for (int i = 0; i <= keep; ++i) out.push_back((res.num() / res.den()).coeff(i));
    return out;
}

}  // namespace

TEST_SUITE("susy")
{
    TEST_CASE("partner potentials")
    {
        auto p1 = partner_from_superpotential({X});
        CHECK(p1.v_minus == X * X - R(1));
        CHECK(p1.v_plus == X * X + R(1));
        CHECK(p1.identities_hold());

        auto p2 = partner_from_superpotential({X - R(2) / X});
        CHECK(p2.v_minus == X * X + R(2) / (X * X) - R(5));
        CHECK(p2.v_plus == X * X + R(6) / (X * X) - R(3));

        auto p3 = partner_from_superpotential({R(-1) / X});
        // W = -1/x: W^2 = dW = 1/x^2
        CHECK(p3.v_minus.is_zero());
        CHECK(p3.v_plus == R(2) / (X * X));

        std::mt19937 rng(21);
        for (int k = 0; k < 20; ++k) {
            Derivation d{k % 2 ? R(1) - X * X : R(1)};
            auto p = partner_from_superpotential({random_logderiv(rng), d});
            CHECK(p.identities_hold());
        }
    }

    TEST_CASE("superpotential from a ground state")
    {
        CHECK(superpotential_from_solution(R(1) / X).W == R(-1) / X);
        CHECK(superpotential_from_solution(-X).W == X);
        CHECK(superpotential_from_solution(R(-1)).W == R(1));
    }

    TEST_CASE("general Darboux transformation")
    {
        auto a = darboux_general(R(0), R(0), R(1), R(1) / X);
        CHECK(a.Q == R(-2) / (X * X));
        // iterate with theta = x^2
        auto b = darboux_general(a.P, a.Q, a.R, R(2) / X);
        CHECK(b.Q == R(-6) / (X * X));
        CHECK_THROWS_AS(darboux_general(R(0), R(0), R(1), R(2) / X), Error);

        // y = e^{2x} solves y'' = 4y; its image must solve the new equation at m = 4
        RatFunc v = darboux_general_image(a, R(1) / X, R(2));
        CHECK((v.derivative() + v * v + a.P * v + a.Q - R(4) * a.R).is_zero());

        // R = x with theta = 1: u = y' / sqrt(x), checked on a power series of y'' = m x y
        auto c = darboux_general(R(0), R(0), X, R(0));
        Constant m = Q(3, 2);
        std::vector<Constant> y(30);
        y[0] = Q(1);
        y[1] = Q(1);
        for (int n = 0; n + 3 < 30; ++n) y[n + 3] = m * y[n] / Q((n + 3) * (n + 2));
        Poly w = Poly(y).derivative();
        for (auto& e : half_power_residual(c.Q - R(m) * c.R, w, 20)) CHECK(e.is_zero());
    }

    TEST_CASE("corollary expressions agree")
    {
        std::mt19937 rng(4);
        for (int k = 0; k < 15; ++k) {
            RatFunc t = random_logderiv(rng);
            Constant m1 = Q(static_cast<long>(rng() % 7) - 3, 2);
            RatFunc f = t.derivative() + t * t - R(m1);
            auto res = darboux_general(R(0), -f - R(m1), R(1), t);
            RatFunc e1 = t * t - t.derivative() - R(m1);  // theta d^2(1/theta) - m1
            RatFunc e2 = f - R(2) * t.derivative();
            RatFunc e3 = R(2) * t * t - f - R(2) * R(m1);
            CHECK(e1 == e2);
            CHECK(e2 == e3);
            CHECK(-res.Q - R(m1) == e1);
        }
    }

    TEST_CASE("Schrodinger Darboux transformation")
    {
        auto a = darboux_schrodinger(R(0), Q(0), R(1) / X);
        CHECK(a.v_plus == R(2) / (X * X));
        auto b = darboux_schrodinger(X * X - R(1), Q(0), -X);
        CHECK(b.v_plus == X * X + R(1));
        Derivation morse{-X};
        auto c = darboux_schrodinger(X * X - X, Q(0), X, morse);
        CHECK(c.v_plus == X * X + X);
        CHECK_THROWS_AS(darboux_schrodinger(R(0), Q(0), R(2) / X), Error);

        // e^{-x} at lambda = -1 maps to a solution of the partner equation
        RatFunc v = a.transform_logderiv(R(-1));
        CHECK((v.derivative() + v * v - a.v_plus - R(1)).is_zero());
    }

    TEST_CASE("Crum iteration")
    {
        RatFunc V = R(2) / (X * X);
        CrumSeed s1{Q(-1), {(X + R(1)) / X, R(-1)}};
        CrumSeed s2{Q(-4), {(R(2) * X + R(1)) / (R(2) * X), R(-2)}};
        auto res = crum_iteration(V, {s1, s2});
        CHECK(res.new_potential == R(8) / ((R(2) * X + R(3)) * (R(2) * X + R(3))));
        // transformed solution at lambda = -9 solves the new equation
        HyperexpFunction psi{(R(3) * X + R(1)) / X, R(-3)};
        REQUIRE(schrodinger_residual(V, Q(-9), psi).is_zero());
        CHECK(schrodinger_residual(res.new_potential, Q(-9), res.transform(psi)).is_zero());
        CHECK(res.solution_map().find("W(") != std::string::npos);

        CHECK_THROWS_AS(crum_iteration(V, {s1, s1}), Error);
        try {
            crum_iteration(V, {s1, s1});
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::WronskianIdenticallyZero);
        }
        CrumSeed bad{Q(-2), {(X + R(1)) / X, R(-1)}};
        CHECK_THROWS_AS(crum_iteration(V, {bad}), Error);
    }

    TEST_CASE("Crum with one seed is the Darboux transformation")
    {
        std::mt19937 rng(99);
        for (int k = 0; k < 10; ++k) {
            RatFunc u = random_logderiv(rng);
            Constant l1 = Q(static_cast<long>(rng() % 9) - 4);
            RatFunc V = u.derivative() + u * u + R(l1);
            auto dt = darboux_schrodinger(V, l1, u);
            auto ci = crum_iteration(V, {{l1, {R(1), u}}});
            CHECK(ci.new_potential == dt.v_plus);
            RatFunc g = random_logderiv(rng);
            CHECK(ci.transform({R(1), g}).logderiv() == dt.transform_logderiv(g));
        }
    }

    TEST_CASE("shape invariance: radial oscillator")
    {
        ParamSuperpotential W{{X - R(1) / X, R(-1) / X}};
        auto res = shape_invariance_check(W);
        REQUIRE(res.holds);
        CHECK(res.f_map.kappa == Q(1));
        CHECK(res.f_map.shift == Q(1));
        // oracle: the remainder at sample parameter values from the plain partner formulas
        for (long a0 : {0L, 1L, 3L, 7L}) {
            Constant a(a0);
            auto vp = partner_from_superpotential({X - R(a + Q(1)) / X}).v_plus;
            auto vm = partner_from_superpotential({X - R(a + Q(2)) / X}).v_minus;
            RatFunc diff = vp - vm;
            REQUIRE(diff.is_constant());
            CHECK(res.remainder.eval(a) == diff.constant_value());
        }
        CHECK(res.remainder == Poly(4));
        CHECK(res.energy(3) == Poly(12));
    }

    TEST_CASE("shape invariance: algebrized Poschl-Teller")
    {
        ParamSuperpotential W{{R(0), X}, Derivation{R(1) - X * X}};
        auto res = shape_invariance_check(W);
        REQUIRE(res.holds);
        CHECK(res.f_map.kappa == Q(1));
        CHECK(res.f_map.shift == Q(-1));
        CHECK(res.v_plus[2] == X * X);
        CHECK(res.v_plus[1] == -X * X + R(1));
        Derivation d{R(1) - X * X};
        for (long a0 : {0L, 2L, 5L}) {
            Constant a(a0);
            auto vp = partner_from_superpotential({R(a) * X, d}).v_plus;
            auto vm = partner_from_superpotential({R(a - Q(1)) * X, d}).v_minus;
            RatFunc diff = vp - vm;
            REQUIRE(diff.is_constant());
            CHECK(res.remainder.eval(a) == diff.constant_value());
        }
        CHECK(res.remainder == P({Q(-1), Q(2)}));
        CHECK(res.remainder_in_a1 == P({Q(1), Q(2)}));
        REQUIRE(res.potential);
        CHECK(*res.potential == P({Q(0), Q(0), Q(-1)}));
        // E_n = a0^2 - (a0 - n)^2
        for (int n = 0; n < 5; ++n) CHECK(res.energy(n) == P({Q(-n * n), Q(2 * n)}));
    }

    TEST_CASE("shape invariance: degenerate and negative inputs")
    {
        auto c = shape_invariance_check(ParamSuperpotential{{R(0), R(1)}});
        REQUIRE(c.holds);
        CHECK(c.free_shift);
        CHECK(c.remainder == P({Q(-1), Q(-2)}));  // a0^2 - (a0+1)^2

        CHECK_THROWS_AS(shape_invariance_check(ParamSuperpotential{{X, X * X * X}}), Error);
        try {
            shape_invariance_check(ParamSuperpotential{{R(0), X * X * X}});
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotShapeInvariant);
        }
    }

    TEST_CASE("Gendenshtein spectrum")
    {
        ShapeInvarianceResult r;
        r.holds = true;
        r.f_map = {Q(1), Q(1)};
        r.remainder = Poly(2);
        auto sp = gendenshtein_spectrum(r, 4);
        REQUIRE(sp.size() == 5);
        for (auto& [n, e] : sp) CHECK(e == Poly(2 * n));
        auto z = gendenshtein_spectrum(r, 0);
        REQUIRE(z.size() == 1);
        CHECK(z[0].second.is_zero());

        // R(a_k) = a_k^2 - a_{k-1}^2 along a_k = a0 + k
        ShapeInvarianceResult t;
        t.holds = true;
        t.f_map = {Q(1), Q(1)};
        t.remainder = P({Q(1), Q(2)});
        for (auto& [n, e] : gendenshtein_spectrum(t, 4)) CHECK(e == P({Q(n * n), Q(2 * n)}));
        CHECK_THROWS_AS(gendenshtein_spectrum(ShapeInvarianceResult{}, 2), Error);
    }

    TEST_CASE("bound state heuristic")
    {
        CHECK(normalizable_candidate({R(1), -X}, Domain::RealLine));
        CHECK_FALSE(normalizable_candidate({R(1), X}, Domain::RealLine));
        CHECK_FALSE(normalizable_candidate({R(1), R(-1)}, Domain::RealLine));
        CHECK(normalizable_candidate({R(1), R(-1)}, Domain::HalfLine));
        // x^2 e^{-x^2/2} on the half line
        CHECK(normalizable_candidate({X * X, -X}, Domain::HalfLine));
        CHECK_FALSE(normalizable_candidate({R(1) / X, -X}, Domain::HalfLine));
        // Coulomb-like x e^{-x}
        CHECK(normalizable_candidate({X, R(-1)}, Domain::HalfLine));
        CHECK(normalizable_candidate({R(1), R(-1) + R(1) / X}, Domain::HalfLine));
        CHECK_FALSE(normalizable_candidate({R(1), R(-1) - R(1) / X}, Domain::HalfLine));
    }

    TEST_CASE("Darboux pairs keep groups and eigenring dimensions")
    {
        struct Pair {
            RatFunc vm, vp;
        };
        auto crum = crum_iteration(R(2) / (X * X), {{Q(-1), {(X + R(1)) / X, R(-1)}},
                                                      {Q(-4), {(R(2) * X + R(1)) / (R(2) * X), R(-2)}}});
        std::vector<Pair> pairs{{R(0), R(2) / (X * X)},
                                {X * X - R(1), X * X + R(1)},
                                {R(2) / (X * X), crum.new_potential}};
        for (auto& p : pairs)
            for (long l : {0L, -1L, -4L, 3L}) {
                auto gm = classify_group(run_full({p.vm - R(l)}));
                auto gp = classify_group(run_full({p.vp - R(l)}));
                CHECK(gm.tag == gp.tag);
                auto em = eigenring_of_reduced({p.vm - R(l)});
                auto ep = eigenring_of_reduced({p.vp - R(l)});
                CHECK(em.dimension == ep.dimension);
            }
        CHECK(eigenring_of_reduced({R(0)}).dimension == 4);
        CHECK(eigenring_of_reduced({R(2) / (X * X)}).dimension == 4);
        CHECK(eigenring_of_reduced({R(1)}).dimension == 2);
        CHECK(eigenring_of_reduced({R(2) / (X * X) + R(1)}).dimension == 2);
    }
}
