#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicone/invariants.hpp"
#include "bicone/rng.hpp"
#include "bicone/varieties.hpp"

using namespace bicone;
using invariants::PolarizedFamily;
using liealg::Element;
using varieties::Kind;
using varieties::PairPoint;

namespace {

const PolarizedFamily& family(int n) {
    static std::map<int, PolarizedFamily> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, invariants::build_polarized_sl(n)).first;
    return it->second;
}

const varieties::VarietySpec& spec_of(int n, Kind k) {
    static std::map<std::pair<int, int>, varieties::VarietySpec> cache;
    auto key = std::make_pair(n, int(k));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, varieties::build_variety(k, family(n))).first;
    return it->second;
}

PairPoint explicit_sl3_pair() {
    const auto& L = *family(3).base.algebra;
    QMat xm = mat_zero(3, 3);
    xm[1][0] = 1;
    xm[2][1] = -1;
    return PairPoint{L.element_from_matrix(xm), L.e()};
}

} // namespace

TEST_CASE("variety shapes") {
    auto& nb2 = spec_of(2, Kind::NilpotentBicone);
    CHECK(nb2.ideal.generators.size() == 3);
    CHECK(nb2.ideal.ring->nvars() == 6);
    CHECK(nb2.expected_dimension == 3);

    auto& xb2 = spec_of(2, Kind::PrincipalBicone);
    CHECK(xb2.ideal.generators.empty());
    CHECK(xb2.expected_dimension == 6);

    auto& nb3 = spec_of(3, Kind::NilpotentBicone);
    CHECK(nb3.ideal.generators.size() == 7);
    CHECK(nb3.ideal.ring->nvars() == 16);
    CHECK(nb3.expected_dimension == 9);

    auto& nc3 = spec_of(3, Kind::NilpotentCone);
    CHECK(nc3.ideal.generators.size() == 2);
    CHECK(nc3.expected_dimension == 6);

    auto& yb3 = spec_of(3, Kind::Ybicone);
    auto& zb3 = spec_of(3, Kind::Zbicone);
    CHECK(yb3.ideal.generators.size() == 5);
    CHECK(zb3.ideal.generators.size() == 6);
    CHECK(yb3.expected_dimension == 11);
    CHECK(zb3.expected_dimension == 10);

    // labels carry the bidegrees
    CHECK(nb2.ideal.labels[0] == "p_{1,0,2}");
    CHECK(nb2.ideal.labels[2] == "p_{1,2,0}");
}

TEST_CASE("omega membership") {
    for (int n = 2; n <= 4; ++n) {
        const auto& pf = family(n);
        const auto& L = *pf.base.algebra;
        CHECK(varieties::is_in_omega(pf, PairPoint{L.h(), L.e()}));
        CHECK(varieties::is_in_omega(pf, PairPoint{L.e(), L.f()}));
        CHECK(!varieties::is_in_omega(pf, PairPoint{L.e(), mpq_class(2) * L.e()}));
        CHECK(!varieties::is_in_omega(pf, PairPoint{L.zero(), L.e()}));
    }
    CHECK(varieties::is_in_omega(family(3), explicit_sl3_pair()));
}

TEST_CASE("smoothness agrees with omega and handles the origin") {
    for (int n = 2; n <= 3; ++n) {
        const auto& pf = family(n);
        const auto& L = *pf.base.algebra;
        CHECK(varieties::is_smooth_point_of_N(pf, PairPoint{L.h(), L.e()}));
        CHECK(!varieties::is_smooth_point_of_N(pf, PairPoint{L.zero(), L.zero()}));
        Rng rng(17 + n);
        for (int t = 0; t < 100; ++t) {
            PairPoint p{Element{rng.rational_vector(L.dimension())},
                        Element{rng.rational_vector(L.dimension())}};
            CHECK_NOTHROW(varieties::is_smooth_point_of_N(pf, p));
        }
    }
}

TEST_CASE("explicit sl3 pair is a smooth bicone member") {
    const auto& pf = family(3);
    auto p = explicit_sl3_pair();
    CHECK(varieties::is_in_bicone(p, spec_of(3, Kind::NilpotentBicone)));
    CHECK(varieties::is_smooth_point_of_N(pf, p));
    // it is not a nullcone pair, yet it sits in the nilpotent bicone
    CHECK(!varieties::is_in_nullcone(*pf.base.algebra, p));
}

TEST_CASE("nullcone membership") {
    const auto& pf = family(3);
    const auto& L = *pf.base.algebra;
    Element e13 = L.basis_element(L.basis_index("E13"));
    CHECK(varieties::is_in_nullcone(L, PairPoint{L.e(), e13}));
    CHECK(!varieties::is_in_nullcone(L, PairPoint{L.e(), L.f()}));
    CHECK(varieties::is_in_nullcone(L, PairPoint{L.zero(), L.zero()}));
}

TEST_CASE("bicone membership basics") {
    for (int n = 2; n <= 3; ++n) {
        const auto& L = *family(n).base.algebra;
        auto& nb = spec_of(n, Kind::NilpotentBicone);
        auto& xb = spec_of(n, Kind::PrincipalBicone);
        CHECK(varieties::is_in_bicone(PairPoint{L.zero(), L.zero()}, nb));
        CHECK(!varieties::is_in_bicone(PairPoint{L.h(), L.h()}, nb));
        CHECK(varieties::is_in_bicone(PairPoint{L.h(), L.e()}, xb));
        // cone kinds evaluate in the first coordinate only
        auto& nc = spec_of(n, Kind::NilpotentCone);
        CHECK(varieties::is_in_bicone(PairPoint{L.e(), L.h()}, nc));
        CHECK(!varieties::is_in_bicone(PairPoint{L.h(), L.e()}, nc));
    }
}

TEST_CASE("witnesses") {
    const auto& pf2 = family(2);
    const auto& l2 = *pf2.base.algebra;
    auto rejected = varieties::witness_li3(pf2, l2.f());
    CHECK(!rejected.accepted());
    CHECK(rejected.obstruction == mpq_class(-2) * l2.f());
    auto zero = varieties::witness_li3(pf2, l2.zero());
    CHECK(zero.accepted());
    CHECK(zero.pair->y.is_zero());
    CHECK_THROWS_AS(varieties::witness_polind(pf2, spec_of(2, Kind::NilpotentBicone)),
                    std::invalid_argument);

    for (int n = 3; n <= 4; ++n) {
        const auto& pf = family(n);
        auto w = varieties::witness_polind(pf, spec_of(n, Kind::NilpotentBicone));
        CHECK(varieties::is_in_bicone(w, spec_of(n, Kind::NilpotentBicone)));
        CHECK(!varieties::is_in_nullcone(*pf.base.algebra, w));
    }
}

TEST_CASE("principal cone membership and the Casimir split") {
    const auto& pf = family(3);
    const auto& L = *pf.base.algebra;
    CHECK(varieties::principal_cone_membership(pf, L.h()));
    CHECK(varieties::principal_cone_membership(pf, L.e()));
    CHECK(poly_evaluate(pf.base.p[0], L.h().coords) == 8); // tr(h^2) = 4 + 0 + 4
    CHECK(poly_evaluate(pf.base.p[0], L.e().coords) == 0);
    CHECK(varieties::p1_nilpotency_check(pf, L.h()));
    CHECK(varieties::p1_nilpotency_check(pf, L.e()));
    // sl2 has no q generators: everything is a member
    const auto& pf2 = family(2);
    Rng rng(9);
    for (int t = 0; t < 5; ++t)
        CHECK(varieties::principal_cone_membership(
            pf2, Element{rng.rational_vector(3)}));
}

TEST_CASE("bicone stability under scaling and swaps of members") {
    const auto& pf = family(3);
    auto& nb = spec_of(3, Kind::NilpotentBicone);
    auto p = explicit_sl3_pair();
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        mpq_class sx = rng.nonzero_rational(), sy = rng.nonzero_rational();
        PairPoint q{sx * p.x, sy * p.y};
        CHECK(varieties::is_in_bicone(q, nb));
        PairPoint sw{q.y, q.x};
        CHECK(varieties::is_in_bicone(sw, nb));
    }
}
