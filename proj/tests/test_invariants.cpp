#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicone/invariants.hpp"
#include "bicone/rng.hpp"

using namespace bicone;
using invariants::build_polarized_sl;
using invariants::PolarizedFamily;
using liealg::Element;

namespace {
const PolarizedFamily& family(int n) {
    static std::map<int, PolarizedFamily> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_polarized_sl(n)).first;
    return it->second;
}
} // namespace

TEST_CASE("sl2 generator in the e,h,f coordinates") {
    const auto& pf = family(2);
    // p_1(a e + b h + c f) = 2 b^2 + 2 a c under the trace form
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        mpq_class a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK(poly_evaluate(pf.base.p[0], {a, b, c}) == 2 * b * b + 2 * a * c);
    }
    CHECK(pf.base.degrees == std::vector<unsigned>{2});
}

TEST_CASE("degrees sum to the Borel dimension") {
    CHECK(family(3).base.degrees == std::vector<unsigned>{2, 3});
    CHECK(family(4).base.degrees == std::vector<unsigned>{2, 3, 4});
    for (int n = 2; n <= 4; ++n) {
        unsigned sum = 0;
        for (unsigned d : family(n).base.degrees) sum += d;
        CHECK(int(sum) == family(n).base.algebra->borel_dimension());
    }
    CHECK_THROWS_AS(invariants::build_invariants_sl(invariants::make_sl(5)),
                    std::invalid_argument);
}

TEST_CASE("sl2 polarizations are the bilinear-form slices") {
    const auto& pf = family(2);
    const auto& L = *pf.base.algebra;
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        Element x{rng.rational_vector(3)}, y{rng.rational_vector(3)};
        auto pt = pf.pair_coords(x.coords, y.coords);
        CHECK(poly_evaluate(pf.p_pol[0][2], pt) == L.form_value(x, x));
        CHECK(poly_evaluate(pf.p_pol[0][1], pt) == 2 * L.form_value(x, y));
        CHECK(poly_evaluate(pf.p_pol[0][0], pt) == L.form_value(y, y));
    }
}

TEST_CASE("polarization tables are bihomogeneous with the right counts") {
    for (int n = 2; n <= 4; ++n) {
        const auto& pf = family(n);
        const auto& L = *pf.base.algebra;
        CHECK(pf.polarization_count() == size_t(L.borel_dimension() + L.rank()));
        CHECK(pf.q_polarization_count() == size_t(L.borel_dimension() + L.rank() - 3));
        for (int i = 0; i < pf.rank(); ++i)
            CHECK(pf.p_pol[i].size() == pf.degree(i) + 1);
    }
}

TEST_CASE("epsilon endpoints specialize to the one-variable gradients") {
    for (int n = 2; n <= 3; ++n) {
        const auto& pf = family(n);
        const auto& L = *pf.base.algebra;
        Rng rng(3);
        for (int t = 0; t < 10; ++t) {
            QVec x = rng.rational_vector(L.dimension());
            QVec y = rng.rational_vector(L.dimension());
            for (int i = 0; i < pf.rank(); ++i) {
                unsigned d = pf.degree(i);
                CHECK(invariants::eps_at(pf, i, int(d), x, y) ==
                      invariants::eps_base_at(pf, i, x));
                CHECK(invariants::eps_at(pf, i, 1, x, y) ==
                      invariants::eps_base_at(pf, i, y));
            }
        }
    }
}

TEST_CASE("gradient fields commute with centralizers and detect regularity") {
    for (int n = 2; n <= 3; ++n) {
        const auto& pf = family(n);
        const auto& L = *pf.base.algebra;
        Rng rng(4 + n);
        for (int t = 0; t < 50; ++t) {
            Element x{rng.rational_vector(L.dimension())};
            Element v{rng.rational_vector(L.dimension())};
            // <eps_i(x), [v,x]> = 0 exactly
            for (int i = 0; i < pf.rank(); ++i) {
                Element eps{invariants::eps_base_at(pf, i, x.coords)};
                CHECK(L.form_value(eps, L.bracket(v, x)) == 0);
            }
            // independence of the gradients tracks regularity
            std::vector<QVec> rows;
            for (int i = 0; i < pf.rank(); ++i)
                rows.push_back(invariants::eps_base_at(pf, i, x.coords));
            bool indep = rank_of_rows(rows) == size_t(pf.rank());
            CHECK(indep == L.is_regular(x));
        }
        // eps_i(x) commutes with the centralizer of x (it lies in its center)
        Rng rng2(100 + n);
        for (int t = 0; t < 10; ++t) {
            Element x{rng2.rational_vector(L.dimension())};
            auto cent = L.centralizer_basis(x);
            for (int i = 0; i < pf.rank(); ++i) {
                Element eps{invariants::eps_base_at(pf, i, x.coords)};
                for (auto& z : cent)
                    CHECK(L.bracket(eps, Element{z}).is_zero());
            }
        }
    }
}

TEST_CASE("q family") {
    const auto& pf3 = family(3);
    const auto& l3 = *pf3.base.algebra;
    // odd degree keeps the bare power trace, and it kills h: 8 + 0 - 8 = 0
    CHECK(pf3.q.size() == 1);
    CHECK(pf3.q[0] == pf3.base.p[1]);
    CHECK(poly_evaluate(pf3.q[0], l3.h().coords) == 0);

    const auto& pf4 = family(4);
    const auto& l4 = *pf4.base.algebra;
    CHECK(pf4.q.size() == 2);
    // even degree mixes in the Casimir: p_1(h)^2 p_3 - p_3(h) p_1^2 with
    // p_1(h) = 9 + 1 + 1 + 9 = 20
    mpq_class p1h = poly_evaluate(pf4.base.p[0], l4.h().coords);
    CHECK(p1h == 20);
    mpq_class p3h = poly_evaluate(pf4.base.p[2], l4.h().coords);
    RatOps k;
    Poly expected = (p1h * p1h) * pf4.base.p[2] - p3h * poly_pow(k, pf4.base.p[0], 2);
    CHECK(pf4.q[1] == expected);
    for (auto& qi : pf4.q) CHECK(poly_evaluate(qi, l4.h().coords) == 0);
}

TEST_CASE("characteristic submodule spot checks") {
    for (int n = 2; n <= 3; ++n) {
        const auto& pf = family(n);
        const auto& L = *pf.base.algebra;
        std::vector<std::pair<QVec, QVec>> samples{{L.h().coords, L.e().coords}};
        auto res = invariants::characteristic_submodule_check(pf, samples);
        CHECK(res.accepted == 1);
        CHECK(res.rejected == 0);
        CHECK(res.membership_misses == 0);
        // a collinear pair is rejected as a diagnostic, not a failure
        std::vector<std::pair<QVec, QVec>> bad{{L.e().coords, L.e().coords}};
        auto res2 = invariants::characteristic_submodule_check(pf, bad);
        CHECK(res2.rejected == 1);
        CHECK(res2.accepted == 0);
    }
}
