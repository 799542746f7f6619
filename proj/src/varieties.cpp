#include "bicone/varieties.hpp"

#include <stdexcept>

namespace bicone::varieties {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::NilpotentCone: return "nilpotent-cone";
        case Kind::PrincipalCone: return "principal-cone";
        case Kind::NilpotentBicone: return "nilpotent-bicone";
        case Kind::PrincipalBicone: return "principal-bicone";
        case Kind::Ybicone: return "y-bicone";
        case Kind::Zbicone: return "z-bicone";
    }
    return "?";
}

bool is_cone(Kind k) {
    return k == Kind::NilpotentCone || k == Kind::PrincipalCone;
}

std::vector<mpq_class> point_coords(const PairPoint& p) {
    std::vector<mpq_class> v = p.x.coords;
    v.insert(v.end(), p.y.coords.begin(), p.y.coords.end());
    return v;
}

namespace {

std::string pol_label(const char* base, int i, unsigned m, unsigned n) {
    return std::string(base) + "_{" + std::to_string(i) + "," + std::to_string(m) +
           "," + std::to_string(n) + "}";
}

void append_polarizations(const PolarizedFamily& pf, bool q_family,
                          std::vector<Poly>& gens, std::vector<std::string>& labels) {
    const auto& table = q_family ? pf.q_pol : pf.p_pol;
    for (size_t idx = 0; idx < table.size(); ++idx) {
        int i = q_family ? int(idx) + 2 : int(idx) + 1;
        unsigned d = q_family ? pf.degree(int(idx) + 1) : pf.degree(int(idx));
        for (unsigned m = 0; m <= d; ++m) {
            gens.push_back(table[idx][m]);
            labels.push_back(pol_label(q_family ? "q" : "p", i, m, d - m));
        }
    }
}

} // namespace

VarietySpec build_variety(Kind kind, const PolarizedFamily& pf) {
    const auto& L = *pf.base.algebra;
    int b = L.borel_dimension(), rk = L.rank(), dim = L.dimension();
    VarietySpec spec;
    spec.kind = kind;
    spec.algebra = pf.base.algebra;

    std::vector<Poly> gens;
    std::vector<std::string> labels;
    switch (kind) {
        case Kind::NilpotentCone:
            for (int i = 0; i < rk; ++i) {
                gens.push_back(pf.base.p[i]);
                labels.push_back("p_" + std::to_string(i + 1));
            }
            spec.ideal = Ideal(pf.base.xring, gens, labels);
            spec.expected_dimension = dim - rk;
            spec.expected_codim_generators = rk;
            return spec;
        case Kind::PrincipalCone:
            for (size_t i = 0; i < pf.q.size(); ++i) {
                gens.push_back(pf.q[i]);
                labels.push_back("q_" + std::to_string(i + 2));
            }
            spec.ideal = Ideal(pf.base.xring, gens, labels);
            spec.expected_dimension = dim - rk + 1;
            spec.expected_codim_generators = rk - 1;
            return spec;
        case Kind::NilpotentBicone:
            append_polarizations(pf, false, gens, labels);
            spec.ideal = Ideal(pf.xyring, gens, labels);
            spec.expected_dimension = 3 * (b - rk);
            spec.expected_codim_generators = b + rk;
            if (int(gens.size()) != b + rk)
                throw std::logic_error("nilpotent bicone generator count is off");
            return spec;
        case Kind::PrincipalBicone:
            append_polarizations(pf, true, gens, labels);
            spec.ideal = Ideal(pf.xyring, gens, labels);
            spec.expected_dimension = 3 * (b - rk + 1);
            spec.expected_codim_generators = b + rk - 3;
            if (int(gens.size()) != b + rk - 3)
                throw std::logic_error("principal bicone generator count is off");
            return spec;
        case Kind::Ybicone:
            append_polarizations(pf, true, gens, labels);
            gens.push_back(pf.p_pol[0][1]); // p_{1,1,1}
            labels.push_back(pol_label("p", 1, 1, 1));
            spec.ideal = Ideal(pf.xyring, gens, labels);
            spec.expected_dimension = 3 * (b - rk) + 2;
            spec.expected_codim_generators = b + rk - 2;
            return spec;
        case Kind::Zbicone:
            append_polarizations(pf, true, gens, labels);
            gens.push_back(pf.p_pol[0][1]);
            labels.push_back(pol_label("p", 1, 1, 1));
            gens.push_back(pf.p_pol[0][0]); // p_{1,0,2}
            labels.push_back(pol_label("p", 1, 0, 2));
            spec.ideal = Ideal(pf.xyring, gens, labels);
            spec.expected_dimension = 3 * (b - rk) + 1;
            spec.expected_codim_generators = b + rk - 1;
            return spec;
    }
    throw std::invalid_argument("unknown variety kind");
}

bool is_in_omega(const PolarizedFamily& pf, const PairPoint& p) {
    const auto& L = *pf.base.algebra;
    std::vector<QVec> rows{p.x.coords, p.y.coords};
    for (int i = 0; i < pf.rank(); ++i)
        for (unsigned m = 1; m <= pf.degree(i); ++m)
            rows.push_back(invariants::eps_at(pf, i, int(m), p.x.coords, p.y.coords));
    return rank_of_rows(rows) == size_t(L.borel_dimension());
}

bool is_smooth_point_of_N(const PolarizedFamily& pf, const PairPoint& p) {
    const auto& L = *pf.base.algebra;
    auto pt = point_coords(p);
    std::vector<QVec> rows;
    for (auto& jac_row : pf.jac)
        for (auto& grad : jac_row) {
            QVec row;
            row.reserve(grad.size());
            for (auto& partial : grad) row.push_back(poly_evaluate(partial, pt));
            rows.push_back(std::move(row));
        }
    bool smooth =
        rank_of_rows(rows) == size_t(L.borel_dimension() + L.rank());
    if (smooth != is_in_omega(pf, p))
        throw std::logic_error("Jacobian smoothness test disagrees with the span test");
    return smooth;
}

bool is_in_nullcone(const liealg::LieAlgebra& L, const PairPoint& p) {
    auto basis = L.subalgebra_generated_by(p.x, p.y);
    for (auto& z : basis)
        if (!L.is_nilpotent(z)) return false;
    return true;
}

bool is_in_bicone(const PairPoint& p, const VarietySpec& spec) {
    const auto pt = is_cone(spec.kind) ? p.x.coords : point_coords(p);
    for (auto& g : spec.ideal.generators)
        if (poly_evaluate(g, pt) != 0) return false;
    return true;
}

WitnessLi3 witness_li3(const PolarizedFamily& pf, const liealg::Element& x) {
    const auto& L = *pf.base.algebra;
    liealg::Element obstruction = L.bracket(x, L.bracket(x, L.e()));
    WitnessLi3 w{std::nullopt, obstruction};
    if (obstruction.is_zero())
        w.pair = PairPoint{L.e(), L.bracket(x, L.e())};
    return w;
}

PairPoint witness_polind(const PolarizedFamily& pf, const VarietySpec& nilpotent_bicone) {
    const auto& L = *pf.base.algebra;
    if (L.n() < 3)
        throw std::invalid_argument(
            "no polarization-index witness exists in the 3-dimensional algebra");
    liealg::Element v = L.basis_element(L.lowest_root_index());
    auto w = witness_li3(pf, v);
    if (!w.accepted())
        throw std::logic_error("lowest-root vector fails the square-bracket condition");
    PairPoint p = *w.pair;
    if (!is_in_bicone(p, nilpotent_bicone))
        throw std::logic_error("witness pair is not in the nilpotent bicone");
    if (is_in_nullcone(L, p))
        throw std::logic_error("witness pair unexpectedly lies in the nullcone");
    return p;
}

bool principal_cone_membership(const PolarizedFamily& pf, const liealg::Element& x) {
    for (auto& qi : pf.q)
        if (poly_evaluate(qi, x.coords) != 0) return false;
    return true;
}

bool p1_nilpotency_check(const PolarizedFamily& pf, const liealg::Element& x) {
    if (!principal_cone_membership(pf, x))
        throw std::invalid_argument("p1 check is only meaningful on principal-cone members");
    bool p1_zero = poly_evaluate(pf.base.p[0], x.coords) == 0;
    return p1_zero == pf.base.algebra->is_nilpotent(x);
}

} // namespace bicone::varieties
