#include "bicone/jets.hpp"

#include <stdexcept>

namespace bicone {

Ideal jet_expand(const Ideal& system, int m) {
    if (m < 0) throw std::invalid_argument("jet order must be nonnegative");
    RatOps k;
    int N = system.ring->nvars();
    std::vector<std::string> jet_names;
    for (int lvl = 0; lvl <= m; ++lvl)
        for (int j = 0; j < N; ++j)
            jet_names.push_back(system.ring->name(j) + "_lvl" + std::to_string(lvl));
    RingPtr jet_ring = make_ring(jet_names);

    std::vector<std::string> tmp_names = jet_names;
    tmp_names.push_back("t");
    RingPtr tmp_ring = make_ring(tmp_names);
    int tvar = int(tmp_names.size()) - 1;

    std::map<int, Poly> images;
    for (int j = 0; j < N; ++j) {
        Poly img = Poly::zero(tmp_ring);
        for (int lvl = 0; lvl <= m; ++lvl) {
            Poly term = Poly::variable(tmp_ring, lvl * N + j, k);
            for (int s = 0; s < lvl; ++s)
                term = poly_mul(k, term, Poly::variable(tmp_ring, tvar, k));
            img = poly_add(k, img, term);
        }
        images.emplace(j, std::move(img));
    }

    std::vector<Poly> gens;
    std::vector<std::string> labels;
    for (size_t g = 0; g < system.generators.size(); ++g) {
        Poly expanded = poly_substitute(k, system.generators[g], tmp_ring, images);
        auto by_t = poly_collect_var(k, expanded, tvar);
        for (int lvl = 0; lvl <= m; ++lvl) {
            auto it = by_t.find(unsigned(lvl));
            if (it == by_t.end())
                throw std::logic_error("jet coefficient vanished identically");
            gens.push_back(poly_project(k, it->second, jet_ring));
            labels.push_back(system.labels[g] + "@t" + std::to_string(lvl));
        }
    }
    return Ideal(jet_ring, std::move(gens), std::move(labels));
}

std::optional<unsigned> arc_order(const Poly& f, const QVec& x, const QVec& y) {
    int N = f.ring()->nvars();
    if (int(x.size()) != N || int(y.size()) != N)
        throw std::invalid_argument("arc endpoints have wrong arity");
    unsigned d = f.total_degree();
    std::vector<mpq_class> coeffs(d + 1, mpq_class(0));
    std::vector<mpq_class> uni, tmp;
    for (auto& term : f.terms()) {
        uni.assign(1, term.second);
        for (int v = 0; v < N; ++v) {
            unsigned e = term.first.exponent(v);
            if (!e) continue;
            // (x_v + t y_v)^e expanded by the binomial theorem
            std::vector<mpq_class> bin(e + 1);
            mpz_class binom = 1;
            std::vector<mpq_class> xp(e + 1), yp(e + 1);
            xp[0] = 1;
            yp[0] = 1;
            for (unsigned i = 1; i <= e; ++i) {
                xp[i] = xp[i - 1] * x[v];
                yp[i] = yp[i - 1] * y[v];
            }
            for (unsigned i = 0; i <= e; ++i) {
                bin[i] = mpq_class(binom) * xp[e - i] * yp[i];
                binom = binom * (e - i) / (i + 1);
            }
            tmp.assign(uni.size() + e, mpq_class(0));
            for (size_t a = 0; a < uni.size(); ++a) {
                if (uni[a] == 0) continue;
                for (unsigned b = 0; b <= e; ++b)
                    if (bin[b] != 0) tmp[a + b] += uni[a] * bin[b];
            }
            uni.swap(tmp);
        }
        for (size_t a = 0; a < uni.size(); ++a) coeffs[a] += uni[a];
    }
    for (unsigned a = 0; a <= d; ++a)
        if (coeffs[a] != 0) return a;
    return std::nullopt;
}

namespace jets {

JetIdeal build_jet_ideal(const varieties::VarietySpec& spec, int m) {
    if (!varieties::is_cone(spec.kind))
        throw std::invalid_argument("jet ideals are built for cone kinds only");
    JetIdeal jet;
    jet.base_label = varieties::kind_name(spec.kind) + "-sl" +
                     std::to_string(spec.algebra->n());
    jet.order = m;
    jet.base_dimension = spec.expected_dimension;
    jet.ideal = jet_expand(spec.ideal, m);
    int N = spec.ideal.ring->nvars();
    for (int lvl = 0; lvl <= m; ++lvl) {
        std::vector<int> block;
        for (int j = 0; j < N; ++j) block.push_back(lvl * N + j);
        jet.variable_blocks.push_back(std::move(block));
    }
    return jet;
}

dimension::DimensionResult check_mustata_dimension(const JetIdeal& jet,
                                                   const dimension::FieldChoice& field,
                                                   const dimension::Budget& budget) {
    auto r = dimension::dimension_of_ideal(
        jet.ideal, jet.base_label + "-jet" + std::to_string(jet.order), field, budget);
    r.expected_dimension = jet.base_dimension * (jet.order + 1);
    return r;
}

ArcsCheck bicone_as_arcs_check(const varieties::VarietySpec& bicone,
                               const varieties::VarietySpec& base_cone,
                               const std::vector<varieties::PairPoint>& samples) {
    if (varieties::is_cone(bicone.kind) || !varieties::is_cone(base_cone.kind))
        throw std::invalid_argument("need a bicone spec and its base cone");
    ArcsCheck out;
    for (auto& p : samples) {
        bool member = varieties::is_in_bicone(p, bicone);
        bool arcs = true;
        for (auto& g : base_cone.ideal.generators)
            if (arc_order(g, p.x.coords, p.y.coords).has_value()) {
                arcs = false;
                break;
            }
        ++out.samples;
        if (member != arcs) ++out.mismatches;
    }
    return out;
}

} // namespace jets
} // namespace bicone
