#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicone/jets.hpp"
#include "bicone/poly.hpp"
#include "bicone/rng.hpp"
#include "bicone/textio.hpp"

using namespace bicone;

namespace {

RatOps K;

Poly var(const RingPtr& r, int i) { return Poly::variable(r, i, K); }
Poly cst(const RingPtr& r, long c) { return Poly::constant(r, mpq_class(c), K); }

Poly random_poly(const RingPtr& r, Rng& rng, int terms, unsigned maxdeg) {
    std::vector<Poly::Term> ts;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int v = 0; v < r->nvars(); ++v)
            m.set_exponent(v, unsigned(rng.uniform_int(0, long(maxdeg))));
        ts.emplace_back(m, rng.rational());
    }
    return Poly::from_terms(r, std::move(ts), K);
}

} // namespace

TEST_CASE("degrevlex order on monomials") {
    Monomial x, y, z; // in a 3-variable ring: x > y > z
    x.set_exponent(0, 1);
    y.set_exponent(1, 1);
    z.set_exponent(2, 1);
    CHECK(Monomial::cmp(x, y) > 0);
    CHECK(Monomial::cmp(y, z) > 0);
    // x*z vs y^2: equal degree, rightmost difference at z favours y^2
    Monomial xz = x * z, y2 = y * y;
    CHECK(Monomial::cmp(y2, xz) > 0);
    // degree dominates
    CHECK(Monomial::cmp(x * x, y) > 0);
    CHECK(xz.divides(x * x * z));
    CHECK(!xz.divides(x * x));
    CHECK((x * y).lcm(y2) == x * y2);
    CHECK(x.coprime(y2));
    CHECK(!xz.coprime(z));
}

TEST_CASE("exponent overflow is detected") {
    Monomial m;
    CHECK_THROWS_AS(m.set_exponent(0, 128), std::overflow_error);
    m.set_exponent(0, 127);
    Monomial one_more;
    one_more.set_exponent(0, 1);
    CHECK_THROWS_AS(m * one_more, std::overflow_error);
}

TEST_CASE("basic arithmetic") {
    auto r = make_ring({"x", "y"});
    Poly x = var(r, 0), y = var(r, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x * cst(r, 0)).is_zero());
    Poly f = x * x + mpq_class(2) * (x * y);
    CHECK(poly_diff(K, f, 0) == mpq_class(2) * x + mpq_class(2) * y);
    CHECK(poly_diff(K, cst(r, 5), 0).is_zero());
    // d/dx (x^3 + x y^2) at (1,2) = 3 + 4 = 7
    Poly g = poly_pow(K, x, 3) + x * y * y;
    CHECK(poly_evaluate(poly_diff(K, g, 0), {mpq_class(1), mpq_class(2)}) == 7);
}

TEST_CASE("ring axioms on random triples") {
    auto r = make_ring({"x", "y", "z"});
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        Poly a = random_poly(r, rng, 4, 3), b = random_poly(r, rng, 4, 3),
             c = random_poly(r, rng, 4, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("Frobenius over F_5") {
    ModOps k5(5);
    auto r = make_ring({"x"}, 5);
    auto x = PolyT<ModOps>::variable(r, 0, k5);
    auto xp1 = poly_add(k5, x, PolyT<ModOps>::constant(r, k5.one(), k5));
    auto lhs = poly_pow(k5, xp1, 5);
    auto rhs = poly_add(k5, poly_pow(k5, x, 5),
                        PolyT<ModOps>::constant(r, k5.one(), k5));
    CHECK(lhs == rhs);
}

TEST_CASE("montgomery field ops") {
    ModOps k(65521);
    auto a = k.from_int(12345), b = k.from_int(54321);
    CHECK(k.to_uint(k.mul(a, b)) == (12345ull * 54321ull) % 65521);
    CHECK(k.to_uint(k.add(a, b)) == (12345 + 54321) % 65521);
    CHECK(k.is_one(k.mul(a, k.inv(a))));
    CHECK(k.to_uint(k.from_int(-1)) == 65520);
    CHECK(k.to_uint(k.from_mpq(mpq_class(1, 2))) == (65521 + 1) / 2);
    CHECK_THROWS_AS(k.from_mpq(mpq_class(1, 65521)), std::domain_error);
}

TEST_CASE("substitution") {
    auto r = make_ring({"x", "y"});
    auto target = make_ring({"a", "b"});
    Poly x = var(r, 0), y = var(r, 1);
    Poly a = var(target, 0), b = var(target, 1);
    std::map<int, Poly> images{{0, a + b}, {1, b}};
    // x^2 -> a^2 + 2ab + b^2
    CHECK(poly_substitute(K, x * x, target, images) ==
          a * a + mpq_class(2) * (a * b) + b * b);
    std::map<int, Poly> zero_img{{0, Poly::zero(target)}, {1, b}};
    CHECK(poly_substitute(K, x, target, zero_img).is_zero());
    std::map<int, Poly> missing{{0, a}};
    CHECK_THROWS_AS(poly_substitute(K, x * y, target, missing), std::invalid_argument);
}

TEST_CASE("bidegree collection and reassembly") {
    auto r = make_ring({"X", "Y", "Z", "a", "b"});
    Poly X = var(r, 0), Y = var(r, 1), Z = var(r, 2), a = var(r, 3), b = var(r, 4);
    Poly f = a * a * X + a * b * Y + b * b * Z;
    auto parts = poly_collect_bidegree(K, f, 3, 4);
    CHECK(parts.size() == 3);
    CHECK(parts.at({2, 0}) == X);
    CHECK(parts.at({1, 1}) == Y);
    CHECK(parts.at({0, 2}) == Z);
    // a polynomial free of a, b collects into the (0,0) bucket
    auto only = poly_collect_bidegree(K, X * Z, 3, 4);
    CHECK(only.size() == 1);
    CHECK(only.at({0, 0}) == X * Z);

    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        Poly g = random_poly(r, rng, 6, 2);
        auto coll = poly_collect_bidegree(K, g, 3, 4);
        Poly back = Poly::zero(r);
        for (auto& [mn, coeff] : coll) {
            Poly w = coeff;
            for (unsigned i = 0; i < mn.first; ++i) w = w * a;
            for (unsigned i = 0; i < mn.second; ++i) w = w * b;
            back = back + w;
        }
        CHECK(back == g);
    }
}

TEST_CASE("jet expansion") {
    auto r = make_ring({"x"});
    Ideal lin(r, {var(r, 0)}, {"f"});
    auto j1 = jet_expand(lin, 1);
    CHECK(j1.generators.size() == 2);
    CHECK(j1.ring->names() == std::vector<std::string>{"x_lvl0", "x_lvl1"});
    CHECK(poly_to_text(j1.generators[0]) == "x_lvl0");
    CHECK(poly_to_text(j1.generators[1]) == "x_lvl1");

    Ideal quad(r, {var(r, 0) * var(r, 0)}, {"f"});
    auto j2 = jet_expand(quad, 1);
    CHECK(poly_to_text(j2.generators[0]) == "x_lvl0^2");
    CHECK(poly_to_text(j2.generators[1]) == "2*x_lvl0*x_lvl1");

    // b^2 + ac at order 2: the t^2 slice mixes all levels
    auto r3 = make_ring({"a", "b", "c"});
    Poly f = var(r3, 1) * var(r3, 1) + var(r3, 0) * var(r3, 2);
    Ideal cone(r3, {f}, {"f"});
    auto j3 = jet_expand(cone, 2);
    CHECK(j3.generators.size() == 3);
    auto rj = j3.ring;
    auto v = [&](const std::string& name) { return var(rj, rj->var_index(name)); };
    Poly expected = v("b_lvl1") * v("b_lvl1") +
                    mpq_class(2) * (v("b_lvl0") * v("b_lvl2")) +
                    v("a_lvl0") * v("c_lvl2") + v("a_lvl1") * v("c_lvl1") +
                    v("a_lvl2") * v("c_lvl0");
    CHECK(j3.generators[2] == expected);

    // truncation compatibility
    RatOps k;
    auto j1_again = jet_expand(cone, 1);
    auto j2_again = jet_expand(cone, 2);
    for (int lvl = 0; lvl <= 1; ++lvl)
        CHECK(poly_project(k, j2_again.generators[lvl], j1_again.ring) ==
              j1_again.generators[lvl]);
}

TEST_CASE("arc order") {
    auto r = make_ring({"X", "Y"});
    Poly X = var(r, 0);
    // f = X along (0, e1): first order
    auto ord = arc_order(X, {mpq_class(0), mpq_class(0)}, {mpq_class(1), mpq_class(0)});
    CHECK(ord.has_value());
    CHECK(*ord == 1);
    // identically zero along the line
    auto inf = arc_order(X, {mpq_class(0), mpq_class(1)}, {mpq_class(0), mpq_class(2)});
    CHECK(!inf.has_value());

    // multiplicativity at finite orders
    Rng rng(3);
    auto r2 = make_ring({"u", "v"});
    for (int t = 0; t < 40; ++t) {
        Poly f = random_poly(r2, rng, 3, 2), g = random_poly(r2, rng, 3, 2);
        QVec x = rng.rational_vector(2), y = rng.rational_vector(2);
        auto of = arc_order(f, x, y), og = arc_order(g, x, y);
        auto ofg = arc_order(f * g, x, y);
        if (of && og) {
            REQUIRE(ofg.has_value());
            CHECK(*ofg == *of + *og);
        }
    }
}

TEST_CASE("ideal invariants") {
    auto r = make_ring({"x", "y"});
    Poly x = var(r, 0);
    CHECK_THROWS_AS(Ideal(r, {Poly::zero(r)}, {"z"}), std::invalid_argument);
    CHECK_THROWS_AS(Ideal(r, {x, x}, {"a", "a"}), std::invalid_argument);
    auto other = make_ring({"u"});
    CHECK_THROWS_AS(Ideal(r, {Poly::variable(other, 0, K)}, {"u"}), std::invalid_argument);
}

TEST_CASE("text export format") {
    auto r = make_ring({"x1", "x2"});
    Poly f = mpq_class(3, 2) * (var(r, 0) * var(r, 0)) - var(r, 1);
    CHECK(poly_to_text(f) == "3/2*x1^2 - x2");
    CHECK(poly_to_text(Poly::zero(r)) == "0");
    Ideal ideal(r, {f, var(r, 0)}, {"b", "a"});
    std::string text = ideal_to_text(ideal);
    CHECK(text == "vars: x1,x2\nx1\n3/2*x1^2 - x2\n"); // sorted by label
    CHECK(ideal_to_text(ideal) == text);               // deterministic re-export
}
