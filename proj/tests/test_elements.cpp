#include <doctest.h>

#include <random>

#include "elements.hpp"

using namespace qalg;

TEST_CASE("element recipes") {
    CHECK(dunkl_theta(ring_int(), 3, 1).str() == "[1,3] + [1,2]");
    CHECK(jm_d(ring_int(), 5, 2).str() == "[1,2]");
    CHECK(f_n(ring_int(), 3).str() == "[2,3]*[1,3]*[2,3] + [1,3]*[2,3]*[1,3]");
    /* theta_2 = -[12] + [23] at n = 3 */
    NCPoly t2 = dunkl_theta(ring_int(), 3, 2);
    CHECK(t2 == parse_element("[2,3] - [1,2]", ring_int(), 3));
}

TEST_CASE("composition monomial pin at rank 7") {
    NCPoly m = lambda_monomial(ring_int(), 7, {2, 1, 2});
    CHECK(m.str() == "[2,4]*[3,4]*[2,5]*[1,6]*[2,6]");
}

TEST_CASE("compositions enumeration") {
    auto c32 = compositions(3, 2);
    REQUIRE(c32.size() == 2);
    CHECK(c32[0] == std::vector<int>{1, 2});
    CHECK(c32[1] == std::vector<int>{2, 1});
    CHECK(compositions(2, 3).empty());
    CHECK(compositions(4, 1).size() == 1);
}

TEST_CASE("sum of all Dunkl elements vanishes freely") {
    for (int n = 2; n <= 8; ++n) {
        NCPoly s = NCPoly::zero(ring_int(), n);
        for (int j = 1; j <= n; ++j) s = s + dunkl_theta(ring_int(), n, j);
        CHECK(s.is_zero());
    }
}

TEST_CASE("generalized elementary functions specialize to the classical ones") {
    int n = 4;
    std::vector<Param> ps;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) ps.push_back(Param::tij(i, j));
    RingPtr R = ring_poly(ps);
    std::vector<int> all{1, 2, 3, 4};
    for (int m = 1; m <= n; ++m) {
        NCPoly em = em_general(R, n, m, all);
        /* kill the parameters */
        std::map<Param, Scalar> zero;
        for (const auto& p : ps) zero.emplace(p, Scalar::rational(0));
        NCPoly at0(ring_rat(), n);
        for (const auto& [w, c] : em.terms) {
            Scalar c0 = c.evaluate(zero, ring_rat());
            if (!c0.is_zero()) at0.terms.push_back({w, c0});
        }
        sort_terms(at0.terms);
        /* classical e_m over the thetas, ascending products */
        NCPoly cls = NCPoly::zero(ring_rat(), n);
        std::vector<int> idx;
        std::function<void(int)> rec = [&](int start) {
            if ((int)idx.size() == m) {
                NCPoly prod = NCPoly::one(ring_rat(), n);
                for (int q : idx) prod = prod * dunkl_theta(ring_rat(), n, q);
                cls = cls + prod;
                return;
            }
            for (int a = start; a <= n; ++a) {
                idx.push_back(a);
                rec(a + 1);
                idx.pop_back();
            }
        };
        rec(1);
        CHECK(at0 == cls);
    }
}

TEST_CASE("straighten moves variables left") {
    int n = 3;
    RingPtr R = ring_int();
    NCPoly e = NCPoly::gen(R, n, GenSym::bracket(1, 2)) * NCPoly::gen(R, n, GenSym::var(1));
    NCPoly s = straighten(e);
    /* [12] x_1 = x_2 [12] - 1 */
    NCPoly want = NCPoly::gen(R, n, GenSym::var(2)) * NCPoly::gen(R, n, GenSym::bracket(1, 2)) -
                  NCPoly::one(R, n);
    CHECK(s == want);

    NCPoly f = NCPoly::gen(R, n, GenSym::var(1)) * NCPoly::gen(R, n, GenSym::var(2)) *
               NCPoly::gen(R, n, GenSym::bracket(1, 3));
    CHECK(straighten(f) == f);  // already straight, disjoint moves are swaps
    NCPoly g = NCPoly::gen(R, n, GenSym::bracket(1, 2)) * NCPoly::gen(R, n, GenSym::var(3));
    CHECK(straighten(g) ==
          NCPoly::gen(R, n, GenSym::var(3)) * NCPoly::gen(R, n, GenSym::bracket(1, 2)));
}

TEST_CASE("straighten preserves the element modulo the affine relations") {
    std::mt19937 rng(31);
    int n = 3;
    Presentation p = build(Preset::TildeGn0, n);
    RewriteBasis rb = RewriteBasis::complete(p, 4, FieldDesc::rationals());
    int alpha = bracket_count(n) + n;
    for (int it = 0; it < 40; ++it) {
        NCPoly e = NCPoly::zero(ring_int(), n);
        for (int k = 0; k < 2; ++k) {
            Word w;
            int len = 1 + (int)(rng() % 3);
            for (int l = 0; l < len; ++l) w.push_back((Letter)(rng() % alpha));
            e = e + NCPoly::monomial(ring_int(), n, w, Scalar::integer((long)(rng() % 5) - 2));
        }
        NCPoly s = straighten(e);
        CHECK(rb.normal_form(s - e).is_zero());
    }
}

TEST_CASE("affine Dunkl elements commute after straightening") {
    int n = 3;
    RewriteBasis brackets = RewriteBasis::complete(build(Preset::En0, n), 3, FieldDesc::rationals());
    NCPoly c = commutator(tilde_theta(ring_int(), n, 1), tilde_theta(ring_int(), n, 2));
    CHECK(straighten_reduce(brackets, c).is_zero());
}

TEST_CASE("pieri right-hand side at tiny ranks") {
    int n = 3;
    std::vector<Param> ps{Param::tij(1, 2), Param::tij(1, 3), Param::tij(2, 3)};
    RingPtr R = ring_poly(ps);
    /* A = {2}, m = 1: theta_2 = [2,1] + [2,3] with the sign convention */
    NCPoly rhs = pieri_rhs(R, n, {2}, 1);
    CHECK(rhs == parse_element("[2,3] - [1,2]", R, n));
    /* A = {1,2}, m = 2: two [i,3][j,3] words */
    NCPoly rhs2 = pieri_rhs(R, n, {1, 2}, 2);
    CHECK(rhs2 == parse_element("[1,3]*[2,3] + [2,3]*[1,3]", R, n));
}

TEST_CASE("pieri identity reduces to zero at rank 3") {
    int n = 3;
    std::vector<Param> ps{Param::tij(1, 2), Param::tij(1, 3), Param::tij(2, 3)};
    FieldDesc fd = FieldDesc::fractions(ps);
    RingPtr R = fd.ring();
    RewriteBasis rb = RewriteBasis::complete(build(Preset::Ent, n), 4, fd);
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> A;
        for (int a = 1; a <= n; ++a)
            if (mask & (1 << (a - 1))) A.push_back(a);
        for (int m = 1; m <= (int)A.size() && m <= 3; ++m) {
            NCPoly diff = em_general(R, n, m, A) - pieri_rhs(R, n, A, m);
            CHECK(rb.check_zero(diff) == Verdict::ProvedZero);
        }
    }
}

TEST_CASE("relabeled identity instance stays in the ideal") {
    int n = 4;
    RewriteBasis rb = RewriteBasis::complete(build(Preset::En0, n), 4, FieldDesc::rationals());
    /* the 3-letter cyclic identity with distinct column letters 1,2,3 */
    RingPtr R = ring_int();
    auto word = [&](std::initializer_list<int> idx) {
        Word w;
        for (int a : idx) w.push_back(letter_of(GenSym::bracket(a, n), n));
        return NCPoly::monomial(R, n, w, Scalar::integer(1L));
    };
    NCPoly id66 = word({1, 2, 3, 1}) + word({2, 3, 1, 2}) + word({3, 1, 2, 3});
    CHECK(rb.check_zero(id66) == Verdict::ProvedZero);
    CHECK(rb.check_zero(relabel(id66, {2, 1, 3, 4})) == Verdict::ProvedZero);
    CHECK(rb.check_zero(relabel(id66, {4, 2, 3, 1})) == Verdict::ProvedZero);
}

TEST_CASE("phi elements vanish and write the column sum as a commutator") {
    RingPtr R = ring_int();
    /* Phi_3 lives at rank 4 */
    RewriteBasis e40 = RewriteBasis::complete(build(Preset::En0, 4), 5, FieldDesc::rationals());
    NCPoly phi = phi_n(R, 3);
    CHECK(e40.check_zero(phi) == Verdict::ProvedZero);
    NCPoly br12 = NCPoly::gen(R, 4, GenSym::bracket(1, 2));
    CHECK(e40.check_zero(commutator(phi, br12) - f_n(R, 4)) == Verdict::ProvedZero);
}
