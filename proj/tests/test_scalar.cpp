#include <doctest.h>

#include <random>

#include "scalar.hpp"

using namespace qalg;

static RingPtr vring() { return ring_poly({Param::v()}); }

TEST_CASE("rational arithmetic") {
    Scalar a = Scalar::rational(mpq_class(2, 3));
    Scalar b = Scalar::rational(mpq_class(1, 3));
    CHECK((a + b).is_one());
    CHECK((a - a).is_zero());
    CHECK((a * b) == Scalar::rational(mpq_class(2, 9)));
}

TEST_CASE("laurent expansion and exact division") {
    RingPtr R = vring();
    Scalar v = Scalar::param(R, Param::v());
    Scalar vinv = Scalar::param(R, Param::v(), -1);
    Scalar lhs = (v - vinv) * v;
    Scalar want = v * v - Scalar::constant(R, 1);
    CHECK(lhs == want);
    /* (v^2 - 1) / (v - 1) = v + 1 */
    Scalar q = want.div_exact(v - Scalar::constant(R, 1));
    CHECK(q == v + Scalar::constant(R, 1));
    /* in the Laurent ring over Q every monomial is a unit, so 2v divides */
    CHECK(want.div_exact(v + v) == (v - vinv).div_exact(Scalar::constant(R, 2)));
    CHECK_THROWS_AS((v * v + Scalar::constant(R, 1)).div_exact(v - Scalar::constant(R, 1)),
                    usage_error);
}

TEST_CASE("evaluation") {
    RingPtr R = vring();
    Scalar v = Scalar::param(R, Param::v());
    Scalar vinv = Scalar::param(R, Param::v(), -1);
    std::map<Param, Scalar> at1{{Param::v(), Scalar::rational(1)}};
    CHECK((v - vinv).evaluate(at1, ring_rat()).is_zero());

    RingPtr T = ring_poly({Param::t()});
    Scalar t = Scalar::param(T, Param::t());
    std::map<Param, Scalar> t1{{Param::t(), Scalar::rational(1)}};
    CHECK(t.evaluate(t1, ring_rat()).is_one());
    /* x is a generator symbol, not a parameter */
    CHECK(!Param::parse("x").has_value());
    CHECK(!Param::parse("x_1").has_value());
}

TEST_CASE("derivative at one") {
    RingPtr R = vring();
    Scalar v = Scalar::param(R, Param::v());
    Scalar vinv = Scalar::param(R, Param::v(), -1);
    CHECK((v - vinv).derivative_at_one() == 2);
    CHECK((v * v).derivative_at_one() == 2);
    CHECK(Scalar::constant(R, 1).derivative_at_one() == 0);
    RingPtr QT = ring_poly({Param::q(), Param::t()});
    CHECK_THROWS_AS(Scalar::param(QT, Param::q()).derivative_at_one(), usage_error);
}

TEST_CASE("ring axioms on random scalars") {
    std::mt19937 rng(7);
    RingPtr R = ring_poly({Param::v()});
    auto rnd = [&]() {
        Scalar s(R);
        for (int k = 0; k < 3; ++k) {
            int e = (int)(rng() % 5) - 2;
            long c = (long)(rng() % 7) - 3;
            s = s + Scalar::param(R, Param::v(), e) * Scalar::constant(R, c);
        }
        return s;
    };
    for (int it = 0; it < 50; ++it) {
        Scalar a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK((a * b).div_exact(b) == a);
        /* evaluate commutes with multiplication */
        std::map<Param, Scalar> bind{{Param::v(), Scalar::rational(mpq_class(3, 2))}};
        CHECK((a * b).evaluate(bind, ring_rat()) ==
              a.evaluate(bind, ring_rat()) * b.evaluate(bind, ring_rat()));
    }
}

TEST_CASE("prime field") {
    RingPtr F = ring_fp(2147483629ull);
    Scalar a = Scalar::fp(F, 1234567);
    Scalar b = a.inverse();
    CHECK((a * b).is_one());
    CHECK_THROWS_AS(ring_fp(1ull << 40), usage_error);
}

TEST_CASE("fractions reduce and compare semantically") {
    RingPtr F = ring_frac({Param::tij(1, 2), Param::tij(1, 3)});
    Scalar a = Scalar::param(F, Param::tij(1, 2));
    Scalar b = Scalar::param(F, Param::tij(1, 3));
    Scalar one = Scalar::constant(F, 1);
    Scalar x = (a * a - b * b).div_exact(a - b);
    CHECK(x == a + b);
    Scalar y = one.div_exact(a) + one.div_exact(b);
    CHECK(y * a * b == a + b);
    CHECK((y - (a + b).div_exact(a * b)).is_zero());
}

TEST_CASE("integer ring divisibility") {
    Scalar six = Scalar::integer(6L);
    Scalar three = Scalar::integer(3L);
    CHECK(six.div_exact(three) == Scalar::integer(2L));
    CHECK_THROWS_AS(three.div_exact(six), usage_error);
}

TEST_CASE("rendering is deterministic") {
    RingPtr R = vring();
    Scalar s = Scalar::param(R, Param::v(), 2) - Scalar::constant(R, 1);
    CHECK(s.str() == "v^2 - 1");
    Scalar vinv = Scalar::param(R, Param::v(), -1);
    CHECK(vinv.str() == "v^-1");
    CHECK(Scalar::rational(mpq_class(-2, 3)).str() == "-2/3");
}
