#include "doctest.h"
#include "helpers.hpp"

#include "linf/paramring.hpp"

using namespace linf;
using namespace linf::testing;

namespace {

RingPtr ring33() {
    return std::make_shared<ParamRing>(
        std::vector<std::string>{"t1", "t2", "t3"},
        std::vector<std::string>{"th1", "th2", "th3"});
}

ParamPoly gen(RingPtr r, const std::string& n) {
    return ParamPoly::gen(r, n);
}

ParamPoly random_poly(std::mt19937& rng, RingPtr r, int deg) {
    ParamPoly p(r);
    for (const ParamMonomial& m : enumerate_param_monomials(*r, deg))
        if (rng() % 3 == 0) p.add_term(m, rand_rat(rng));
    return p;
}

}  // namespace

TEST_SUITE("paramring") {

TEST_CASE("odd generators anticommute and square to zero") {
    RingPtr r = ring33();
    ParamPoly th1 = gen(r, "th1"), th2 = gen(r, "th2"), t1 = gen(r, "t1");
    CHECK(poly_mul(th1, th2) == Rat(-1) * poly_mul(th2, th1));
    CHECK(poly_mul(th1, th1).is_zero());
    CHECK(poly_mul(t1, th2) == poly_mul(th2, t1));
}

TEST_CASE("product is associative and graded commutative") {
    std::mt19937 rng(1001);
    RingPtr r = ring33();
    for (int trial = 0; trial < 30; ++trial) {
        ParamPoly a = random_poly(rng, r, 2);
        ParamPoly b = random_poly(rng, r, 2);
        ParamPoly c = random_poly(rng, r, 2);
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
    }
    // graded commutativity on homogeneous monomials
    for (const ParamMonomial& ma : enumerate_param_monomials(*r, 3))
        for (const ParamMonomial& mb : enumerate_param_monomials(*r, 3)) {
            ParamPoly a(r), b(r);
            a.add_term(ma, 1);
            b.add_term(mb, 1);
            int sgn = sign_pow(ma.parity(), mb.parity());
            CHECK(poly_mul(a, b) == Rat(sgn) * poly_mul(b, a));
        }
}

TEST_CASE("augmentation is the constant term and a ring map") {
    RingPtr r = ring33();
    ParamPoly p = ParamPoly::constant(r, 3) +
                  poly_mul(gen(r, "th1"), gen(r, "t2"));
    CHECK(augment(p) == 3);
    CHECK(augment(gen(r, "th1")) == 0);
    CHECK(augment(ParamPoly(r)) == 0);

    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        ParamPoly a = random_poly(rng, r, 2);
        ParamPoly b = random_poly(rng, r, 2);
        CHECK(augment(poly_mul(a, b)) == augment(a) * augment(b));
    }
}

TEST_CASE("unit inversion as a truncated series") {
    RingPtr r = ring33();
    ParamPoly u = ParamPoly::constant(r, 1) + gen(r, "t1");
    ParamPoly v = invert_unit(u, 6);
    CHECK(truncate(poly_mul(u, v), 6) == ParamPoly::constant(r, 1));
    CHECK_THROWS_AS(invert_unit(gen(r, "t1"), 4), DegreeError);
}

TEST_CASE("reduce_mod on multiples of generators") {
    RingPtr r = ring33();
    ParamPoly th12 = poly_mul(gen(r, "th1"), gen(r, "th2"));
    RelationIdeal ideal(r, {th12}, 5);
    CHECK(reduce_mod(poly_mul(th12, gen(r, "t3")), ideal).is_zero());
    CHECK(reduce_mod(th12, ideal).is_zero());
    CHECK(!reduce_mod(poly_mul(gen(r, "th1"), gen(r, "th3")), ideal)
               .is_zero());
    std::mt19937 rng(1);
    ParamPoly too_big = random_poly(rng, r, 6);
    if (!too_big.is_zero() && too_big.max_degree() > 5)
        CHECK_THROWS_AS(reduce_mod(too_big, ideal), DegreeError);
}

TEST_CASE("reduce_mod is a projection and differences stay in the span") {
    std::mt19937 rng(4004);
    RingPtr r = ring33();
    ParamPoly g1 = poly_mul(gen(r, "th1"), gen(r, "t1"));
    ParamPoly g2 = poly_mul(gen(r, "th2"), gen(r, "t2")) -
                   poly_mul(gen(r, "th3"), gen(r, "t1"));
    RelationIdeal ideal(r, {g1, g2}, 4);
    for (int trial = 0; trial < 15; ++trial) {
        ParamPoly p = random_poly(rng, r, 4);
        ParamPoly red = reduce_mod(p, ideal);
        CHECK(reduce_mod(red, ideal) == red);
        CHECK(reduce_mod(p - red, ideal).is_zero());
    }
}

TEST_CASE("the completely reduced coefficient from the quartic family") {
    // The six relations of the L = 4 miniversal deformation; the
    // leftover coefficient 2 th2 th3 t2 - th1 th3 t3 must reduce to
    // exactly zero, via th3 * R6 + t3 * R3.
    RingPtr r = ring33();
    auto t = [&](int i) { return gen(r, "t" + std::to_string(i)); };
    auto th = [&](int i) { return gen(r, "th" + std::to_string(i)); };
    auto mul = [&](ParamPoly a, ParamPoly b) { return poly_mul(a, b); };

    ParamPoly R1 = mul(mul(th(2), th(3)), t(1));
    ParamPoly R2 = Rat(-1) * mul(th(1), th(2)) + mul(mul(th(2), th(3)), t(2));
    ParamPoly R3 =
        Rat(-2) * mul(th(1), th(3)) + mul(mul(th(2), th(3)), t(3));
    ParamPoly R4 = Rat(-3) * mul(th(1), t(1)) + mul(mul(th(2), t(1)), t(3)) +
                   Rat(2) * mul(mul(th(3), t(1)), t(2)) -
                   mul(mul(mul(th(3), t(1)), t(3)), t(3));
    ParamPoly R5 = Rat(-2) * mul(th(1), t(2)) - Rat(3) * mul(th(2), t(1)) +
                   mul(mul(th(2), t(2)), t(3)) +
                   Rat(2) * mul(mul(th(3), t(2)), t(2)) +
                   mul(mul(th(3), t(1)), t(3)) -
                   mul(mul(mul(th(3), t(2)), t(3)), t(3));
    ParamPoly R6 = Rat(-1) * mul(th(1), t(3)) - Rat(2) * mul(th(2), t(2)) -
                   Rat(3) * mul(th(3), t(1)) + mul(mul(th(2), t(3)), t(3)) +
                   Rat(3) * mul(mul(th(3), t(2)), t(3)) -
                   mul(mul(mul(th(3), t(3)), t(3)), t(3));
    RelationIdeal ideal(r, {R1, R2, R3, R4, R5, R6}, 6);

    ParamPoly leftover =
        Rat(2) * mul(mul(th(2), th(3)), t(2)) - mul(mul(th(1), th(3)), t(3));
    CHECK(reduce_mod(leftover, ideal).is_zero());

    // the hand identity: leftover = th3 * R6 + t3 * R3
    ParamPoly check = leftover - poly_mul(th(3), R6) - poly_mul(t(3), R3);
    CHECK(check.is_zero());
}

TEST_CASE("ideal equality is scale and redundancy insensitive") {
    RingPtr r = ring33();
    ParamPoly a = poly_mul(gen(r, "th1"), gen(r, "t1"));
    RelationIdeal i1(r, {a}, 4);
    RelationIdeal i2(r, {Rat(2) * a}, 4);
    CHECK(ideal_equal(i1, i2));

    ParamPoly th12 = poly_mul(gen(r, "th1"), gen(r, "th2"));
    RelationIdeal j1(r, {th12}, 4);
    RelationIdeal j2(r, {th12, poly_mul(th12, gen(r, "t1"))}, 4);
    CHECK(ideal_equal(j1, j2));

    RelationIdeal k1(r, {poly_mul(gen(r, "th1"), gen(r, "t1"))}, 4);
    RelationIdeal k2(r, {poly_mul(gen(r, "th1"), gen(r, "t2"))}, 4);
    CHECK(!ideal_equal(k1, k2));
}

TEST_CASE("relation generators must sit inside the ideal square") {
    RingPtr r = ring33();
    CHECK_THROWS_AS(RelationIdeal(r, {gen(r, "th1")}, 4), DegreeError);
}

}  // TEST_SUITE
