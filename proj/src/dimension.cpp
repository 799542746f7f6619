#include "bicone/dimension.hpp"

#include <stdexcept>

namespace bicone::dimension {

FieldChoice FieldChoice::parse(const std::string& s) {
    if (s == "q" || s == "Q") return FieldChoice{};
    if (s.rfind("p:", 0) == 0) {
        uint64_t p = std::stoull(s.substr(2));
        if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime: " + s);
        return FieldChoice{p};
    }
    throw std::invalid_argument("field must be 'q' or 'p:<prime>': " + s);
}

std::vector<PolyT<ModOps>> reduce_ideal_mod(const Ideal& ideal, const ModOps& k) {
    RingPtr modring = make_ring(ideal.ring->names(), k.modulus());
    std::vector<PolyT<ModOps>> out;
    for (auto& g : ideal.generators) {
        std::vector<PolyT<ModOps>::Term> terms;
        for (auto& t : g.terms()) {
            auto c = k.from_mpq(t.second);
            if (!k.is_zero(c)) terms.emplace_back(t.first, c);
        }
        out.push_back(PolyT<ModOps>::from_terms(modring, std::move(terms), k));
    }
    return out;
}

namespace {

template <class K>
void fill_from_run(DimensionResult& r, const K& k, const GroebnerResult<K>& run,
                   const std::vector<PolyT<K>>& gens, const Budget& budget) {
    r.elapsed_seconds = run.stats.seconds;
    r.spair_reductions = run.stats.spair_reductions;
    r.budget_exceeded = run.stats.budget_exceeded;
    r.basis_size = run.gb.reduced_basis.size();
    if (!run.complete()) return;
    // soundness: every S-polynomial of the basis and every original
    // generator reduces to zero; a genuine failure is an engine bug
    Budget remaining = budget;
    remaining.max_seconds = std::max(1.0, budget.max_seconds - run.stats.seconds);
    bool exhausted = false;
    if (!verify_groebner(k, run.gb, gens, remaining, &exhausted))
        throw std::logic_error("basis failed the S-polynomial soundness check");
    r.soundness_checked = !exhausted;
    KrullResult kr = krull_dimension(run.gb);
    r.krull_dimension = kr.dimension;
    for (int v = 0; v < run.gb.ring->nvars(); ++v)
        if (kr.witness_mask & (uint64_t(1) << v))
            r.independent_variables.push_back(run.gb.ring->name(v));
}

} // namespace

DimensionResult dimension_of_ideal(const Ideal& ideal, const std::string& label,
                                   const FieldChoice& field, const Budget& budget) {
    DimensionResult r;
    r.ideal_label = label;
    r.field = field.name();
    r.modular = !field.over_q();
    if (field.over_q()) {
        RatOps k;
        auto run = buchberger(k, ideal.ring, ideal.generators, budget);
        fill_from_run(r, k, run, ideal.generators, budget);
    } else {
        ModOps k(field.prime);
        auto gens = reduce_ideal_mod(ideal, k);
        RingPtr modring = gens.empty() ? make_ring(ideal.ring->names(), k.modulus())
                                       : gens.front().ring();
        auto run = buchberger(k, modring, gens, budget);
        fill_from_run(r, k, run, gens, budget);
    }
    return r;
}

DimensionResult dimension_report(const varieties::VarietySpec& spec,
                                 const FieldChoice& field, const Budget& budget) {
    std::string label = varieties::kind_name(spec.kind) + "-sl" +
                        std::to_string(spec.algebra->n());
    DimensionResult r = dimension_of_ideal(spec.ideal, label, field, budget);
    r.expected_dimension = spec.expected_dimension;
    return r;
}

int tangent_rank_nullcone(const liealg::LieAlgebra& L, const varieties::PairPoint& p) {
    const auto& upper = L.nilradical_indices();
    auto in_u = [&](const liealg::Element& z) {
        std::vector<bool> ok(L.dimension(), false);
        for (int i : upper) ok[i] = true;
        for (int i = 0; i < L.dimension(); ++i)
            if (!ok[i] && z.coords[i] != 0) return false;
        return true;
    };
    if (!in_u(p.x) || !in_u(p.y))
        throw std::invalid_argument("tangent rank requires strictly upper triangular pair");

    std::vector<QVec> rows;
    int dim = L.dimension();
    for (int i = 0; i < dim; ++i) {
        auto bx = L.bracket(L.basis_element(i), p.x);
        auto by = L.bracket(L.basis_element(i), p.y);
        QVec row = bx.coords;
        row.insert(row.end(), by.coords.begin(), by.coords.end());
        rows.push_back(std::move(row));
    }
    for (int i : upper) {
        QVec row(2 * dim, mpq_class(0));
        row[i] = 1;
        rows.push_back(row);
        QVec row2(2 * dim, mpq_class(0));
        row2[dim + i] = 1;
        rows.push_back(row2);
    }
    return int(rank_of_rows(rows));
}

} // namespace bicone::dimension
