#include <random>

#include "doctest.h"
#include "galois/exactnum.hpp"

using namespace galois;

TEST_SUITE("exactnum")
{
    TEST_CASE("sqrt_exact examples")
    {
        Surd a = sqrt_exact(qrat(9, 4));
        CHECK(a.rational_part == qrat(3, 2));
        CHECK(sgn(a.radical_coeff) == 0);
        CHECK(a.radicand == 1);

        Surd b = sqrt_exact(QRat(8));
        CHECK(sgn(b.rational_part) == 0);
        CHECK(b.radical_coeff == 2);
        CHECK(b.radicand == 2);

        // 1+4b with b = m(m+1), m = 1
        Surd c = sqrt_exact(QRat(1 + 4 * 2));
        CHECK(c.is_integer());
        CHECK(c.rational_part == 3);

        Surd n = sqrt_exact(QRat(-12));
        CHECK(n.radicand == -3);
        CHECK(n.radical_coeff == 2);
    }

    TEST_CASE("sqrt_exact squares back")
    {
        std::mt19937 rng(7);
        std::uniform_int_distribution<long> num(0, 5000), den(1, 300);
        for (int k = 0; k < 200; ++k) {
            QRat x = qrat(num(rng), den(rng));
            Surd s = sqrt_exact(x);
            Constant c = Constant::from_surd(s);
            CHECK(c * c == Constant(x));
        }
    }

    TEST_CASE("surd_combine examples")
    {
        Surd two(QRat(2));
        Surd z = surd_combine({{+1, two}, {-1, two}});
        CHECK(z.is_integer());
        CHECK(sgn(z.rational_part) == 0);

        Surd p(QRat(1), QRat(1), 2), q(QRat(-1), QRat(1), 2);
        Surd r = surd_combine({{+1, p}, {-1, q}});
        CHECK(r.is_integer());
        CHECK(r.rational_part == 2);

        Surd u(qrat(1, 2), qrat(3, 2), 2), w(qrat(1, 2), qrat(1, 2), 3);
        CHECK_THROWS_AS(surd_combine({{+1, u}, {-1, w}}), Error);
        try {
            surd_combine({{+1, u}, {-1, w}});
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MixedRadicands);
        }
    }

    TEST_CASE("surd_combine associative and commutative on a fixed radicand")
    {
        std::mt19937 rng(11);
        std::uniform_int_distribution<long> v(-40, 40), d(1, 9);
        for (int k = 0; k < 100; ++k) {
            Surd a(qrat(v(rng), d(rng)), qrat(v(rng), d(rng)), 5);
            Surd b(qrat(v(rng), d(rng)), qrat(v(rng), d(rng)), 5);
            Surd c(qrat(v(rng), d(rng)), qrat(v(rng), d(rng)), 5);
            Surd ab = surd_combine({{1, a}, {1, b}});
            Surd l = surd_combine({{1, ab}, {-1, c}});
            Surd bc = surd_combine({{1, b}, {-1, c}});
            Surd r = surd_combine({{1, a}, {1, bc}});
            CHECK(l == r);
            CHECK(surd_combine({{1, a}, {1, b}}) == surd_combine({{1, b}, {1, a}}));
        }
    }

    TEST_CASE("integrality test")
    {
        CHECK(Surd(QRat(4)).is_integer());
        CHECK_FALSE(Surd(qrat(1, 2)).is_integer());
        CHECK_FALSE(Surd(QRat(1), QRat(1), 2).is_integer());
        CHECK(Surd(QRat(3), QRat(0), 7).is_integer());
    }

    TEST_CASE("Gaussian square roots")
    {
        // sqrt((5+12i)/4) = (3+2i)/2
        auto r = gauss_sqrt(GaussRat(qrat(5, 4), QRat(3)));
        REQUIRE(r);
        CHECK(*r * *r == GaussRat(qrat(5, 4), QRat(3)));
        auto m1 = gauss_sqrt(GaussRat(-1));
        REQUIRE(m1);
        CHECK(*m1 * *m1 == GaussRat(-1));
        CHECK_FALSE(gauss_sqrt(GaussRat(2)));
    }

    TEST_CASE("Constant arithmetic")
    {
        Constant s2 = sqrt_of_integer(2);
        CHECK(s2 * s2 == Constant(2));
        Constant x = Constant(3) + Constant(2) * s2;  // 3+2sqrt2
        CHECK((x * x.surd_conj()) == Constant(1));
        CHECK(x.inv() == x.surd_conj());
        Constant s3 = sqrt_of_integer(3);
        CHECK_THROWS_AS(s2 + s3, Error);
        Constant im = sqrt_of_integer(-4);
        CHECK(im == Constant(GaussRat(QRat(0), QRat(2))));
        auto root = try_sqrt(x);
        REQUIRE(root);
        CHECK(*root * *root == x);  // 1 + sqrt2
        auto r2 = try_sqrt(Constant(GaussRat(QRat(0), QRat(2))));
        REQUIRE(r2);
        CHECK(*r2 * *r2 == Constant(GaussRat(QRat(0), QRat(2))));
        auto r3 = try_sqrt(Constant(GaussRat(QRat(0), QRat(1))));  // sqrt(i) = (1+i)/sqrt2
        REQUIRE(r3);
        CHECK(*r3 * *r3 == Constant::I());
        CHECK(to_string(x) == "3+2*sqrt(2)");
    }

    TEST_CASE("RadicalSum tolerates distinct radicands")
    {
        RadicalSum s;
        s.add(Constant(1) + sqrt_of_integer(2));
        s.add(sqrt_of_integer(2), -1);
        s.add(sqrt_of_integer(3));
        CHECK_FALSE(s.is_integer());
        s.add(sqrt_of_integer(3), -1);
        CHECK(s.is_nonneg_integer());
    }

    TEST_CASE("integer factorisation")
    {
        auto f = factor_integer(ZInt(360));
        REQUIRE(f.size() == 3);
        CHECK(f[0].first == 2);
        CHECK(f[0].second == 3);
        ZInt big = ZInt(1000003) * ZInt(1000033);
        auto g = factor_integer(big);
        REQUIRE(g.size() == 2);
        CHECK(divisors(ZInt(12)).size() == 6);
    }
}
