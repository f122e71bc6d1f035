#include <random>

#include "doctest.h"
#include "galois/diffop.hpp"
#include "support.hpp"

using namespace galois;
using namespace testsupport;

namespace {

RatFunc random_poly_ratfunc(std::mt19937& rng, int maxdeg)
{
    std::uniform_int_distribution<long> v(-4, 4), d(0, maxdeg);
    std::vector<Constant> c;
    int n = d(rng);
    for (int i = 0; i <= n; ++i) c.push_back(Q(v(rng)));
    c.push_back(Q(1));
    return RatFunc(Poly(c));
}

bool same_span(std::vector<RatFunc> a, std::vector<RatFunc> b)
{
    if (a.size() != b.size()) return false;
    // each element of b is a combination of a
    for (auto& f : b) {
        std::vector<RatFunc> basis = a;
        basis.push_back(f);
        auto ns = linear_ansatz(basis, [](const RatFunc& y) { return y; });
        bool ok = false;
        for (auto& v : ns)
            if (!v.back().is_zero()) ok = true;
        if (!ok) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("diffop")
{
    TEST_CASE("reduce_to_normal Kummer to Whittaker")
    {
        // x y'' + (c - x) y' - a0 y = 0
        for (auto [c, a0] : std::vector<std::pair<QRat, QRat>>{{2, 1}, {qrat(3, 2), qrat(1, 3)}, {5, -2}}) {
            LinODE2 k{(R(Constant(c)) - X) / X, R(Constant(-a0)) / X};
            auto [red, gc] = reduce_to_normal(k);
            QRat kappa = c / 2 - a0, mu = c / 2 - qrat(1, 2);
            RatFunc expect = R(Q(1, 4)) - R(Constant(kappa)) / X +
                             R(Constant((4 * mu * mu - 1) / 4)) / (X * X);
            CHECK(red.r == expect);
        }
    }

    TEST_CASE("reduce_to_normal examples and gauge classes")
    {
        auto [r1, g1] = reduce_to_normal(LinODE2{R(0), -X});
        CHECK(r1.r == X);
        CHECK(g1.kind == GaugeKind::StrongIsogaloisian);

        RatFunc a = R(-2) * X / (R(1) - X * X);
        auto [r2, g2] = reduce_to_normal(LinODE2{a, R(0)});
        CHECK(g2.kind == GaugeKind::VirtuallyStrongIsogaloisian);
        REQUIRE(g2.witness_kappa);
        CHECK(*g2.witness_kappa == qrat(1, 2));
        REQUIRE(g2.f);
        CHECK(a - R(Constant(2 * *g2.witness_kappa)) * g2.f->derivative() / *g2.f == R(0));

        // a = 4/x = 2*2 dlog x
        auto g3 = gauge_class(R(4) / X);
        CHECK(g3.kind == GaugeKind::StrongIsogaloisian);
        CHECK(*g3.witness_kappa == 2);
        CHECK(gauge_class(X).kind == GaugeKind::Unknown);
        CHECK(gauge_class(R(1) / (X * X)).kind == GaugeKind::Unknown);
    }

    TEST_CASE("gauge correctness on random equations with a known solution")
    {
        std::mt19937 rng(21);
        for (int t = 0; t < 25; ++t) {
            RatFunc y = random_poly_ratfunc(rng, 2);
            RatFunc a = random_poly_ratfunc(rng, 1) / (X - R(Q(1 + (t % 3))));
            RatFunc b = -(y.derivative().derivative() + a * y.derivative()) / y;
            auto [red, gc] = reduce_to_normal(LinODE2{a, b});
            RatFunc omega = y.derivative() / y + a * R(Q(1, 2));
            CHECK(riccati_form(red).is_solution(omega));
            RatFunc u = omega - a * R(Q(1, 2));
            CHECK((u.derivative() + u * u + a * u + b).is_zero());
        }
    }

    TEST_CASE("op_to_system and system_to_op")
    {
        auto s = op_to_system(LinODE2{R(0), R(-6) / (X * X)});
        CHECK(s.A[0][0] == R(0));
        CHECK(s.A[0][1] == R(-1));
        CHECK(s.A[1][0] == R(-6) / (X * X));
        CHECK(s.A[1][1] == R(0));
        auto s2 = op_to_system(LinODE2{R(1) / X, R(1)});
        CHECK(s2.A[1][0] == R(1));
        CHECK(s2.A[1][1] == R(1) / X);

        std::mt19937 rng(4);
        for (int t = 0; t < 20; ++t) {
            LinODE2 e{random_poly_ratfunc(rng, 2) / (X + R(2)), random_poly_ratfunc(rng, 3)};
            auto back = system_to_op(op_to_system(e));
            CHECK(back.a == e.a);
            CHECK(back.b == e.b);
        }

        // constant M with b = 1: characteristic polynomial t^2 - (a+d) t + (ad - bc)
        FirstOrderSystem m;
        m.A = {{{R(-2), R(-1)}, {R(-3), R(-5)}}};
        auto op = system_to_op(m);
        CHECK(op.a == R(-7));
        CHECK(op.b == R(10 - 3));
        FirstOrderSystem z;
        z.A = {{{R(1), R(0)}, {R(2), R(3)}}};
        CHECK_THROWS_AS(system_to_op(z), Error);
    }

    TEST_CASE("system elimination against a direct solution")
    {
        // (y, z) = (x^2, x) solves y' = a y + b z, z' = c y + d z
        RatFunc a = R(1) / X, b = R(1), c = R(0), d = R(1) / X;
        FirstOrderSystem s;
        s.A = {{{-a, -b}, {-c, -d}}};
        CHECK((X * X).derivative() == a * X * X + b * X);
        CHECK(X.derivative() == c * X * X + d * X);
        auto op = system_to_op(s);
        RatFunc y = X * X;
        CHECK((y.derivative().derivative() + op.a * y.derivative() + op.b * y).is_zero());
    }

    TEST_CASE("second symmetric power")
    {
        auto s0 = second_symmetric_power(ReducedODE{R(0)});
        for (auto u : {R(1), X, X * X}) CHECK(s0.apply(u).is_zero());
        auto s2 = second_symmetric_power(ReducedODE{R(2) / (X * X)});
        CHECK(s2.p1 == R(-8) / (X * X));
        CHECK(s2.p0 == R(8) / (X * X * X));
        for (auto u : {X * X * X * X, X, R(1) / (X * X)}) CHECK(s2.apply(u).is_zero());
        // r = 6/x^2: solutions x^3, x^-2
        auto s6 = second_symmetric_power(ReducedODE{R(6) / (X * X)});
        auto rs = rational_solutions(as_linop(s6));
        CHECK(same_span(rs, {pow(X, 6), X, R(1) / pow(X, 4)}));
        // r = 1: e^{2x}, e^{-2x}, 1; only 1 is rational
        auto s1 = second_symmetric_power(ReducedODE{R(1)});
        CHECK(s1.p1 == R(-4));
        auto r1 = rational_solutions(as_linop(s1));
        REQUIRE(r1.size() == 1);
        CHECK(r1[0].is_constant());
    }

    TEST_CASE("riccati and verify_solution")
    {
        CHECK(riccati_form(ReducedODE{R(2) / (X * X)}).is_solution(R(2) / X));
        CHECK(riccati_form(ReducedODE{R(0)}).is_solution(R(1) / X));
        CHECK(verify_solution(ReducedODE{X * X - R(1)}, HyperexpSolution{-X, Poly(1), 1}));
        CHECK(verify_solution(ReducedODE{R(2) / (X * X)}, HyperexpSolution{R(2) / X, Poly(1), 1}));
        CHECK_FALSE(verify_solution(ReducedODE{X}, HyperexpSolution{R(0), Poly(1), 1}));
        // harmonic x^2 - 3: omega = -x, P = x
        CHECK(verify_solution(ReducedODE{X * X - R(3)}, HyperexpSolution{-X, Poly::x(), 1}));
    }

    TEST_CASE("rational solutions")
    {
        auto a = rational_solutions(as_linop(ReducedODE{R(6) / (X * X)}));
        CHECK(same_span(a, {X * X * X, R(1) / (X * X)}));
        // Legendre n = 2 : (1-x^2) y'' - 2x y' + 6 y
        LinOp leg{{R(6), R(-2) * X, R(1) - X * X}};
        auto l = rational_solutions(leg);
        REQUIRE(l.size() == 1);
        CHECK(same_span(l, {R(3) * X * X - R(1)}));
        CHECK(rational_solutions(as_linop(ReducedODE{X})).empty());
        // y'' = 0
        CHECK(rational_solutions(as_linop(ReducedODE{R(0)})).size() == 2);
        // poles at +-i: y = 1/(x^2+1) solves y'' = r y with r = y''/y
        RatFunc y = R(1) / (X * X + R(1));
        RatFunc r = y.derivative().derivative() / y;
        auto s = rational_solutions(as_linop(ReducedODE{r}));
        REQUIRE(!s.empty());
        bool found = false;
        for (auto& f : s)
            if ((f / y).is_constant()) found = true;
        CHECK((found || s.size() == 2));
        for (auto& f : s) CHECK(as_linop(ReducedODE{r}).apply(f).is_zero());
    }
}
