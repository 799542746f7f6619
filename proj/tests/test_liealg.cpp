#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicone/liealg.hpp"
#include "bicone/rng.hpp"

using namespace bicone;
using liealg::Element;
using liealg::LieAlgebra;

namespace {

Element random_element(const LieAlgebra& L, Rng& rng) {
    return Element{rng.rational_vector(L.dimension())};
}

} // namespace

TEST_CASE("sl_n shape") {
    auto l2 = LieAlgebra::build_sl(2);
    CHECK(l2.dimension() == 3);
    CHECK(l2.rank() == 1);
    CHECK(l2.borel_dimension() == 2);
    CHECK(l2.matrix_of(l2.h()) == QMat{{1, 0}, {0, -1}});

    auto l3 = LieAlgebra::build_sl(3);
    CHECK(l3.matrix_of(l3.h()) == QMat{{2, 0, 0}, {0, 0, 0}, {0, 0, -2}});
    QMat em = mat_zero(3, 3);
    em[0][1] = 1;
    em[1][2] = 1;
    CHECK(l3.matrix_of(l3.e()) == em);

    auto l4 = LieAlgebra::build_sl(4);
    CHECK(l4.dimension() == 15);
    CHECK(l4.rank() == 3);
    CHECK(l4.borel_dimension() == 9);

    CHECK_THROWS_AS(LieAlgebra::build_sl(1), std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra::build_sl(7), std::invalid_argument);
}

TEST_CASE("triple relations and antisymmetry") {
    for (int n = 2; n <= 4; ++n) {
        auto L = LieAlgebra::build_sl(n);
        CHECK(L.bracket(L.h(), L.e()) == mpq_class(2) * L.e());
        CHECK(L.bracket(L.e(), L.f()) == L.h());
        CHECK(L.bracket(L.h(), L.f()) == mpq_class(-2) * L.f());
        CHECK(L.bracket(L.e(), L.e()).is_zero());
    }
}

TEST_CASE("jacobi identity") {
    // exhaustive over basis triples for n <= 3, seeded random for n = 4
    for (int n : {2, 3}) {
        auto L = LieAlgebra::build_sl(n);
        for (int i = 0; i < L.dimension(); ++i)
            for (int j = 0; j < L.dimension(); ++j)
                for (int k = 0; k < L.dimension(); ++k) {
                    Element a = L.basis_element(i), b = L.basis_element(j),
                            c = L.basis_element(k);
                    Element s = L.bracket(L.bracket(a, b), c) +
                                L.bracket(L.bracket(b, c), a) +
                                L.bracket(L.bracket(c, a), b);
                    CHECK(s.is_zero());
                }
    }
    auto L = LieAlgebra::build_sl(4);
    Rng rng(42);
    for (int t = 0; t < 200; ++t) {
        Element a = L.basis_element(int(rng.next_u64() % L.dimension()));
        Element b = L.basis_element(int(rng.next_u64() % L.dimension()));
        Element c = L.basis_element(int(rng.next_u64() % L.dimension()));
        Element s = L.bracket(L.bracket(a, b), c) + L.bracket(L.bracket(b, c), a) +
                    L.bracket(L.bracket(c, a), b);
        CHECK(s.is_zero());
    }
}

TEST_CASE("form invariance") {
    for (int n = 2; n <= 4; ++n) {
        auto L = LieAlgebra::build_sl(n);
        Rng rng(5 + n);
        for (int t = 0; t < 200; ++t) {
            Element x = random_element(L, rng), y = random_element(L, rng),
                    z = random_element(L, rng);
            CHECK(L.form_value(L.bracket(x, y), z) == L.form_value(x, L.bracket(y, z)));
        }
    }
}

TEST_CASE("regularity") {
    auto l2 = LieAlgebra::build_sl(2);
    CHECK(l2.centralizer_dimension(l2.h()) == 1);
    CHECK(l2.is_regular(l2.h()));

    auto l3 = LieAlgebra::build_sl(3);
    CHECK(l3.centralizer_dimension(l3.e()) == 2);
    CHECK(l3.is_regular(l3.e()));
    Element e13 = l3.basis_element(l3.basis_index("E13"));
    CHECK(l3.centralizer_dimension(e13) == 4);
    CHECK(!l3.is_regular(e13));

    // principal triple members are all regular
    for (int n = 2; n <= 4; ++n) {
        auto L = LieAlgebra::build_sl(n);
        CHECK(L.is_regular(L.e()));
        CHECK(L.is_regular(L.f()));
        CHECK(L.is_regular(L.h()));
    }
}

TEST_CASE("grading by ad h") {
    auto l2 = LieAlgebra::build_sl(2);
    auto g2 = l2.ad_h_grading();
    CHECK(g2.size() == 3);
    for (long ev : {-2L, 0L, 2L}) CHECK(g2.at(ev).size() == 1);

    auto l3 = LieAlgebra::build_sl(3);
    auto g3 = l3.ad_h_grading();
    CHECK(g3.at(-4).size() == 1);
    CHECK(g3.at(-2).size() == 2);
    CHECK(g3.at(0).size() == 2);
    CHECK(g3.at(2).size() == 2);
    CHECK(g3.at(4).size() == 1);

    for (int n = 2; n <= 6; ++n) {
        auto L = LieAlgebra::build_sl(n);
        size_t total = 0;
        for (auto& [ev, basis] : L.ad_h_grading()) {
            CHECK(ev % 2 == 0);
            total += basis.size();
        }
        CHECK(total == size_t(L.dimension()));
    }
}

TEST_CASE("w0 sends h to minus h") {
    auto l2 = LieAlgebra::build_sl(2);
    CHECK(l2.matrix_of(l2.w0_on_h()) == QMat{{-1, 0}, {0, 1}});
    auto l3 = LieAlgebra::build_sl(3);
    CHECK(l3.matrix_of(l3.w0_on_h()) == QMat{{-2, 0, 0}, {0, 0, 0}, {0, 0, 2}});
    auto l4 = LieAlgebra::build_sl(4);
    QMat expect = mat_zero(4, 4);
    expect[0][0] = -3;
    expect[1][1] = -1;
    expect[2][2] = 1;
    expect[3][3] = 3;
    CHECK(l4.matrix_of(l4.w0_on_h()) == expect);
}

TEST_CASE("nilpotency and subalgebra closure") {
    auto L = LieAlgebra::build_sl(3);
    CHECK(L.is_nilpotent(L.e()));
    CHECK(!L.is_nilpotent(L.h()));
    Element sum = L.e() + L.f();
    CHECK(!L.is_nilpotent(sum));

    // e and f generate the principal sl2
    auto closure = L.subalgebra_generated_by(L.e(), L.f());
    CHECK(closure.size() == 3);
    // e and E13 commute: the closure is just their span
    Element e13 = L.basis_element(L.basis_index("E13"));
    auto ab = L.subalgebra_generated_by(L.e(), e13);
    CHECK(ab.size() == 2);
}

TEST_CASE("element errors") {
    auto l2 = LieAlgebra::build_sl(2);
    auto l3 = LieAlgebra::build_sl(3);
    CHECK_THROWS_AS(l2.bracket(l2.e(), l3.e()), std::invalid_argument);
}
