#ifndef BICONE_JETS_HPP
#define BICONE_JETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bicone/dimension.hpp"
#include "bicone/poly.hpp"
#include "bicone/varieties.hpp"

namespace bicone {

// Truncated-arc expansion: substitute x_j -> sum_k x_j_lvl<k> t^k into every
// generator, truncate mod t^{m+1}, and return the t-coefficients as an ideal
// in (m+1)*N variables (level-major order). Labels become "<label>@t<k>".
Ideal jet_expand(const Ideal& system, int m);

// Order of vanishing of f along the line t -> x + t y; empty = identically 0.
std::optional<unsigned> arc_order(const Poly& f, const QVec& x, const QVec& y);

namespace jets {

struct JetIdeal {
    std::string base_label;
    int order = 0;
    int base_dimension = 0; // dimension of the base cone
    Ideal ideal;
    std::vector<std::vector<int>> variable_blocks; // level -> variable indices
};

// Cone kinds only; jets of bicones are rejected.
JetIdeal build_jet_ideal(const varieties::VarietySpec& spec, int m);

// Krull dimension of the jet ideal against base_dimension * (m+1).
dimension::DimensionResult check_mustata_dimension(const JetIdeal& jet,
                                                   const dimension::FieldChoice& field,
                                                   const dimension::Budget& budget);

// Membership in a bicone versus infinite vanishing order of every base-cone
// generator along t -> x + t y; returns the number of disagreeing samples.
struct ArcsCheck {
    size_t samples = 0;
    size_t mismatches = 0;
};
ArcsCheck bicone_as_arcs_check(const varieties::VarietySpec& bicone,
                               const varieties::VarietySpec& base_cone,
                               const std::vector<varieties::PairPoint>& samples);

} // namespace jets
} // namespace bicone

#endif
