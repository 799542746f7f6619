#ifndef BICONE_VARIETIES_HPP
#define BICONE_VARIETIES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bicone/invariants.hpp"
#include "bicone/liealg.hpp"
#include "bicone/poly.hpp"

namespace bicone::varieties {

using invariants::PolarizedFamily;

enum class Kind {
    NilpotentCone,
    PrincipalCone,
    NilpotentBicone,
    PrincipalBicone,
    Ybicone,
    Zbicone,
};

std::string kind_name(Kind k);
bool is_cone(Kind k);

struct VarietySpec {
    Kind kind;
    invariants::AlgebraPtr algebra;
    Ideal ideal;
    int expected_dimension = 0;
    int expected_codim_generators = 0;
};

VarietySpec build_variety(Kind kind, const PolarizedFamily& pf);

struct PairPoint {
    liealg::Element x, y;
};

// rank of <x, y, eps_{i,m,d_i-m}(x,y)> equals the Borel dimension
bool is_in_omega(const PolarizedFamily& pf, const PairPoint& p);

// rank of the Jacobian of all polarizations equals b_g + rk g; checks
// agreement with is_in_omega on every call
bool is_smooth_point_of_N(const PolarizedFamily& pf, const PairPoint& p);

// x and y lie in the nilradical of a common Borel subalgebra, tested via
// the bracket closure of {x, y}: every element of the generated
// subalgebra must be nilpotent
bool is_in_nullcone(const liealg::LieAlgebra& L, const PairPoint& p);

// all generators of the variety's ideal vanish at (x, y); for cone kinds
// the ideal lives in the x-variables only and is evaluated at p.x
bool is_in_bicone(const PairPoint& p, const VarietySpec& spec);

// (e, [x,e]) when (ad x)^2 e = 0; otherwise the nonzero obstruction
struct WitnessLi3 {
    std::optional<PairPoint> pair;
    liealg::Element obstruction; // (ad x)^2 e when rejected
    bool accepted() const { return pair.has_value(); }
};
WitnessLi3 witness_li3(const PolarizedFamily& pf, const liealg::Element& x);

// (e, [v, e]) with v the lowest-root vector; in the nilpotent bicone but
// outside the nullcone for n >= 3; throws for n = 2
PairPoint witness_polind(const PolarizedFamily& pf,
                         const VarietySpec& nilpotent_bicone);

bool principal_cone_membership(const PolarizedFamily& pf, const liealg::Element& x);
// for members: p_1(x) = 0 iff x is nilpotent
bool p1_nilpotency_check(const PolarizedFamily& pf, const liealg::Element& x);

std::vector<mpq_class> point_coords(const PairPoint& p);

} // namespace bicone::varieties

#endif
