#ifndef BICONE_DIMENSION_HPP
#define BICONE_DIMENSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "bicone/groebner.hpp"
#include "bicone/varieties.hpp"

namespace bicone::dimension {

// Coefficient field for a dimension run: Q when prime == 0.
struct FieldChoice {
    uint64_t prime = 0;
    bool over_q() const { return prime == 0; }
    std::string name() const {
        return over_q() ? "Q" : "F_" + std::to_string(prime);
    }
    static FieldChoice parse(const std::string& s); // "q" or "p:65521"
};

struct DimensionResult {
    std::string ideal_label;
    std::string field;
    std::optional<int> krull_dimension;          // empty when the budget ran out
    std::vector<std::string> independent_variables;
    size_t basis_size = 0;
    double elapsed_seconds = 0.0;
    bool budget_exceeded = false;
    bool modular = false;                        // dimension over F_p is heuristic
    std::optional<int> expected_dimension;
    uint64_t spair_reductions = 0;
    bool soundness_checked = false;              // S-polynomials re-reduced to zero

    bool matches_expected() const {
        return krull_dimension && expected_dimension &&
               *krull_dimension == *expected_dimension;
    }
};

// Reduce a Q-ideal mod p; throws std::domain_error when a denominator is
// divisible by p.
std::vector<PolyT<ModOps>> reduce_ideal_mod(const Ideal& ideal, const ModOps& k);

DimensionResult dimension_of_ideal(const Ideal& ideal, const std::string& label,
                                   const FieldChoice& field, const Budget& budget);

DimensionResult dimension_report(const varieties::VarietySpec& spec,
                                 const FieldChoice& field, const Budget& budget);

// Exact rank of the tangent space to the saturation of u x u at a pair of
// strictly upper triangular elements: spans [v, x], [v, y] over the basis
// of g together with u x 0 and 0 x u.
int tangent_rank_nullcone(const liealg::LieAlgebra& L, const varieties::PairPoint& p);

} // namespace bicone::dimension

#endif
