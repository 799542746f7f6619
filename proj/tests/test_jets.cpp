#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicone/invariants.hpp"
#include "bicone/jets.hpp"
#include "bicone/rng.hpp"

using namespace bicone;
using varieties::Kind;
using varieties::PairPoint;

namespace {

const invariants::PolarizedFamily& family(int n) {
    static std::map<int, invariants::PolarizedFamily> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, invariants::build_polarized_sl(n)).first;
    return it->second;
}

varieties::VarietySpec spec_of(int n, Kind k) {
    return varieties::build_variety(k, family(n));
}

} // namespace

TEST_CASE("jet ideal construction") {
    auto nc2 = spec_of(2, Kind::NilpotentCone);
    auto j1 = jets::build_jet_ideal(nc2, 1);
    CHECK(j1.ideal.generators.size() == 2);
    CHECK(j1.ideal.ring->nvars() == 6);
    CHECK(j1.variable_blocks.size() == 2);
    CHECK(j1.variable_blocks[1] == std::vector<int>{3, 4, 5});

    auto j0 = jets::build_jet_ideal(nc2, 0);
    CHECK(j0.ideal.generators.size() == 1);

    auto pc3 = spec_of(3, Kind::PrincipalCone);
    auto jp = jets::build_jet_ideal(pc3, 1);
    CHECK(jp.ideal.generators.size() == 2);
    CHECK(jp.ideal.ring->nvars() == 16);

    CHECK_THROWS_AS(jets::build_jet_ideal(spec_of(2, Kind::NilpotentBicone), 1),
                    std::invalid_argument);
}

TEST_CASE("jet dimensions follow dim X times (m+1)") {
    dimension::Budget budget;
    dimension::FieldChoice q;
    auto nc2 = spec_of(2, Kind::NilpotentCone);
    for (int m = 1; m <= 3; ++m) {
        auto jet = jets::build_jet_ideal(nc2, m);
        auto res = jets::check_mustata_dimension(jet, q, budget);
        REQUIRE(res.krull_dimension.has_value());
        CHECK(*res.krull_dimension == 2 * (m + 1));
        CHECK(res.matches_expected());
    }
}

TEST_CASE("truncation compatibility of jet generators") {
    RatOps k;
    auto base = spec_of(2, Kind::NilpotentCone).ideal;
    auto j3 = jet_expand(base, 3);
    auto j2 = jet_expand(base, 2);
    // the first three slices of the deeper expansion match the shallower one
    for (size_t g = 0; g < base.generators.size(); ++g)
        for (int lvl = 0; lvl <= 2; ++lvl) {
            const Poly& deep = j3.generators[g * 4 + lvl];
            const Poly& shallow = j2.generators[g * 3 + lvl];
            CHECK(poly_project(k, deep, j2.ring) == shallow);
        }
}

TEST_CASE("arc order on the principal pair") {
    const auto& pf = family(2);
    // tr((e + t f)^2) = 2t: order one
    auto ord = arc_order(pf.base.p[0], pf.base.algebra->e().coords,
                         pf.base.algebra->f().coords);
    REQUIRE(ord.has_value());
    CHECK(*ord == 1);
    // along a nilpotent line the Casimir vanishes identically
    auto inf = arc_order(pf.base.p[0], pf.base.algebra->e().coords,
                         (mpq_class(2) * pf.base.algebra->e()).coords);
    CHECK(!inf.has_value());
}

TEST_CASE("arc criterion matches bicone membership") {
    for (int n = 2; n <= 3; ++n) {
        auto nb = spec_of(n, Kind::NilpotentBicone);
        auto nc = spec_of(n, Kind::NilpotentCone);
        const auto& L = *family(n).base.algebra;
        Rng rng(57 + n);
        std::vector<PairPoint> samples;
        samples.push_back(PairPoint{L.h(), L.h()});
        samples.push_back(PairPoint{L.h(), L.e()});
        samples.push_back(PairPoint{L.e(), L.zero()});
        for (int t = 0; t < 20; ++t) {
            liealg::Element x = L.zero(), y = L.zero();
            for (int i : L.nilradical_indices()) {
                x.coords[i] = rng.rational();
                y.coords[i] = rng.rational();
            }
            samples.push_back(PairPoint{x, y});
        }
        for (int t = 0; t < 20; ++t)
            samples.push_back(PairPoint{liealg::Element{rng.rational_vector(L.dimension())},
                                        liealg::Element{rng.rational_vector(L.dimension())}});
        auto res = jets::bicone_as_arcs_check(nb, nc, samples);
        CHECK(res.samples == samples.size());
        CHECK(res.mismatches == 0);
    }
}
