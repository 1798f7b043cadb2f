#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotoid/laurent.hpp"

using namespace knotoid;

namespace {

Laurent1 random_poly(std::mt19937& rng, char var = 't') {
    std::uniform_int_distribution<int> nterms(0, 5), expo(-6, 6), coef(-9, 9);
    Laurent1 p(var);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(expo(rng), coef(rng));
    return p;
}

}  // namespace

TEST_CASE("additive inverse cancels") {
    Laurent1 p = Laurent1::parse("t - 1", 't');
    Laurent1 q = Laurent1::parse("1 - t", 't');
    CHECK((p + q).is_zero());
    CHECK((p + q).str() == "0");
}

TEST_CASE("unit product of monomials") {
    Laurent1 p = Laurent1::monomial(-1, 2, 'A');
    Laurent1 q = Laurent1::monomial(-1, -2, 'A');
    CHECK((p * q) == Laurent1::constant(1, 'A'));
}

TEST_CASE("square of the loop factor") {
    // (-A^2 - A^-2)^2 expanded by hand: A^4 + 2 + A^-4
    Laurent1 delta = Laurent1::parse("-A^2 - A^-2", 'A');
    CHECK(delta.pow(2).str() == "A^-4 + 2 + A^4");
    CHECK(delta.pow(2) == Laurent1::parse("A^4 + 2 + A^-4", 'A'));
    CHECK(delta.pow(0) == Laurent1::constant(1, 'A'));
}

TEST_CASE("substitute inverse") {
    Laurent1 f = Laurent1::parse("t^-1 - 2 + t", 't');
    CHECK(f.substitute_inverse() == f);  // palindromic fixed point
    Laurent1 g = Laurent1::parse("1 - t", 't');
    CHECK(g.substitute_inverse() == Laurent1::parse("1 - t^-1", 't'));
    CHECK(Laurent1().substitute_inverse().is_zero());
}

TEST_CASE("signed degrees") {
    Laurent1 f = Laurent1::parse("t^-1 - 2 + t", 't');
    CHECK(f.deg_pos() == 1);
    CHECK(f.deg_neg() == 1);
    Laurent1 zero;
    CHECK(zero.deg_pos() == 0);
    CHECK(zero.deg_neg() == 0);
    Laurent1 g = Laurent1::parse("1 - t", 't');
    CHECK(g.deg_pos() == 1);
    CHECK(g.deg_neg() == 0);
}

TEST_CASE("rendering") {
    CHECK(Laurent1().str() == "0");
    CHECK(Laurent1::parse("t^-1-2+t", 't').str() == "t^-1 - 2 + t");
    CHECK(Laurent1::parse("-t + 1", 't').str() == "1 - t");
    Laurent1 p('A');
    p.add_term(-10, -1);
    p.add_term(-6, 2);
    p.add_term(-2, -1);
    CHECK(p.str() == "-A^-10 + 2*A^-6 - A^-2");

    Laurent2 q;
    q.add_term(-10, 2, -1);
    CHECK(q.str() == "-A^-10*u^2");
    q.add_term(0, -2, 3);
    q.add_term(2, 0, 1);
    CHECK(q.str() == "-A^-10*u^2 + 3*u^-2 + A^2");
    CHECK(Laurent2::parse(q.str()) == q);
    CHECK(Laurent2().str() == "0");
}

TEST_CASE("parse round trip on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Laurent1 p = random_poly(rng);
        CHECK(Laurent1::parse(p.str(), 't') == p);
    }
}

TEST_CASE("maxdeg additive under multiplication") {
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        Laurent1 p = random_poly(rng), q = random_poly(rng);
        if (p.is_zero() || q.is_zero()) continue;
        Laurent1 pq = p * q;
        REQUIRE(!pq.is_zero());
        CHECK(pq.maxdeg() == p.maxdeg() + q.maxdeg());
        CHECK(pq.mindeg() == p.mindeg() + q.mindeg());
    }
}

TEST_CASE("substitute_inverse is an involution") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        Laurent1 p = random_poly(rng);
        CHECK(p.substitute_inverse().substitute_inverse() == p);
    }
}

TEST_CASE("arithmetic laws on random inputs") {
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        Laurent1 p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("two-variable arithmetic") {
    Laurent2 a = Laurent2::monomial(1, 2, 2);
    Laurent2 b = Laurent2::monomial(1, -2, -2);
    CHECK(a * b == Laurent2::constant(1));
    CHECK(a.substitute_inverse_u() == Laurent2::monomial(1, 2, -2));
    CHECK(a.deg_pos(0) == 2);
    CHECK(a.deg_neg(1) == 0);
    CHECK(b.deg_neg(1) == 2);

    Laurent2 c;
    c.add_term(-2, 2, -1);
    c.add_term(-6, 2, 2);
    c.add_term(-10, 2, -1);
    CHECK(c.u_coefficient(2).str() == "-A^-10 + 2*A^-6 - A^-2");
    CHECK(c.u_coefficient(0).is_zero());
    CHECK(c.collapse_u() == c.u_coefficient(2));
}
