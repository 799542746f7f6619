#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicone/dimension.hpp"
#include "bicone/invariants.hpp"
#include "bicone/rng.hpp"

using namespace bicone;
using namespace bicone::dimension;
using varieties::Kind;

namespace {

RatOps K;

Poly var(const RingPtr& r, int i) { return Poly::variable(r, i, K); }

const invariants::PolarizedFamily& family(int n) {
    static std::map<int, invariants::PolarizedFamily> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, invariants::build_polarized_sl(n)).first;
    return it->second;
}

} // namespace

TEST_CASE("buchberger on textbook inputs") {
    auto r = make_ring({"x", "y"});
    Poly x = var(r, 0), y = var(r, 1);

    // already a basis: {x^2, x y}
    auto run = buchberger(K, r, std::vector<Poly>{x * x, x * y});
    REQUIRE(run.complete());
    CHECK(run.gb.reduced_basis.size() == 2);
    CHECK(verify_groebner(K, run.gb, {x * x, x * y}, Budget{}));

    // {x - y, y^2} stays put after reduction
    auto run2 = buchberger(K, r, std::vector<Poly>{x - y, y * y});
    REQUIRE(run2.complete());
    CHECK(run2.gb.reduced_basis.size() == 2);
    CHECK(verify_groebner(K, run2.gb, {x - y, y * y}, Budget{}));

    // a pair that genuinely produces an S-polynomial
    Poly f = x * x * x - mpq_class(2) * (x * y);
    Poly g = x * x * y - mpq_class(2) * (y * y) + x;
    auto run3 = buchberger(K, r, std::vector<Poly>{f, g});
    REQUIRE(run3.complete());
    CHECK(verify_groebner(K, run3.gb, {f, g}, Budget{}));
    // the classical result contains x^2 and xy and y^2 - x/2 up to scaling
    CHECK(run3.gb.reduced_basis.size() == 3);
}

TEST_CASE("normal form is a fixpoint and ideal members vanish") {
    auto r = make_ring({"x", "y", "z"});
    Rng rng(31);
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) {
        std::vector<Poly::Term> ts;
        for (int t = 0; t < 4; ++t) {
            Monomial m;
            for (int v = 0; v < 3; ++v)
                m.set_exponent(v, unsigned(rng.uniform_int(0, 2)));
            ts.emplace_back(m, rng.rational());
        }
        Poly p = Poly::from_terms(r, std::move(ts), K);
        if (!p.is_zero()) gens.push_back(p);
    }
    auto run = buchberger(K, r, gens);
    REQUIRE(run.complete());
    for (auto& g : gens) CHECK(normal_form(K, g, run.gb.reduced_basis).is_zero());
    // random combinations of generators also reduce to zero
    for (int t = 0; t < 10; ++t) {
        Poly combo = Poly::zero(r);
        for (auto& g : gens) {
            Poly mult = Poly::constant(r, rng.rational(), K);
            mult = mult + var(r, int(rng.next_u64() % 3));
            combo = combo + mult * g;
        }
        CHECK(normal_form(K, combo, run.gb.reduced_basis).is_zero());
    }
}

TEST_CASE("krull dimension on leading-term data") {
    auto r = make_ring({"x", "y"});
    Poly x = var(r, 0);
    auto run = buchberger(K, r, std::vector<Poly>{x});
    auto kr = krull_dimension(run.gb);
    CHECK(kr.dimension == 1);
    CHECK(kr.witness_mask == 0b10ull); // {y} is the lexicographically first choice

    // zero ideal: the whole plane
    GroebnerBasis<RatOps> empty{r, {}};
    CHECK(krull_dimension(empty).dimension == 2);

    // unit ideal
    auto unit = buchberger(K, r, std::vector<Poly>{Poly::constant(r, 1, K)});
    CHECK(krull_dimension(unit.gb).dimension == -1);
}

TEST_CASE("variety dimensions over Q at rank one") {
    Budget budget;
    FieldChoice q;
    auto specs = family(2);
    auto nb = varieties::build_variety(Kind::NilpotentBicone, specs);
    auto res = dimension_report(nb, q, budget);
    REQUIRE(res.krull_dimension.has_value());
    CHECK(*res.krull_dimension == 3);
    CHECK(res.matches_expected());
    CHECK(res.independent_variables.size() == 3);
    CHECK(!res.modular);

    auto nc = varieties::build_variety(Kind::NilpotentCone, specs);
    auto res2 = dimension_report(nc, q, budget);
    CHECK(*res2.krull_dimension == 2);
    CHECK(res2.soundness_checked);
    CHECK(res.soundness_checked);
}

TEST_CASE("modular and rational dimensions agree at desk scale") {
    // a short clock still completes both bases; the S-pair soundness
    // sweep is cut off and reported as unchecked rather than skipped
    Budget budget{1'000'000, 8.0};
    auto nb3 = varieties::build_variety(Kind::NilpotentBicone, family(3));
    auto over_q = dimension_report(nb3, FieldChoice{}, budget);
    auto mod = dimension_report(nb3, FieldChoice{65521}, budget);
    REQUIRE(over_q.krull_dimension.has_value());
    REQUIRE(mod.krull_dimension.has_value());
    CHECK(*over_q.krull_dimension == 9);
    CHECK(*mod.krull_dimension == 9);
    CHECK(mod.modular);
}

TEST_CASE("coefficient reduction rejects bad denominators") {
    auto r = make_ring({"x"});
    Poly f = mpq_class(1, 5) * var(r, 0);
    Ideal ideal(r, {f}, {"f"});
    ModOps k5(5);
    CHECK_THROWS_AS(reduce_ideal_mod(ideal, k5), std::domain_error);
}

TEST_CASE("budget exhaustion is reported, never silently passed") {
    auto nb3 = varieties::build_variety(Kind::NilpotentBicone, family(3));
    Budget tiny{3, 60.0}; // three S-pair reductions will never finish
    auto res = dimension_report(nb3, FieldChoice{}, tiny);
    CHECK(res.budget_exceeded);
    CHECK(!res.krull_dimension.has_value());
    CHECK(!res.matches_expected());
}

TEST_CASE("adding a generator never increases the dimension") {
    Budget budget;
    FieldChoice q;
    const auto& pf = family(2);
    std::vector<int> dims;
    for (Kind k : {Kind::PrincipalBicone, Kind::Ybicone, Kind::Zbicone,
                   Kind::NilpotentBicone}) {
        auto res = dimension_report(varieties::build_variety(k, pf), q, budget);
        REQUIRE(res.krull_dimension.has_value());
        dims.push_back(*res.krull_dimension);
    }
    CHECK(dims == std::vector<int>{6, 5, 4, 3});
}

TEST_CASE("field choice parsing") {
    CHECK(FieldChoice::parse("q").over_q());
    CHECK(FieldChoice::parse("p:65521").prime == 65521);
    CHECK_THROWS_AS(FieldChoice::parse("p:65520"), std::invalid_argument);
    CHECK_THROWS_AS(FieldChoice::parse("r:3"), std::invalid_argument);
}

TEST_CASE("tangent rank rejects points off the nilradical") {
    const auto& L = *family(2).base.algebra;
    CHECK_THROWS_AS(
        dimension::tangent_rank_nullcone(L, varieties::PairPoint{L.h(), L.e()}),
        std::invalid_argument);
    varieties::PairPoint p{L.e(), mpq_class(2) * L.e()};
    CHECK(dimension::tangent_rank_nullcone(L, p) == 3);
}
