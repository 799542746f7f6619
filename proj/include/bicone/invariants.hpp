#ifndef BICONE_INVARIANTS_HPP
#define BICONE_INVARIANTS_HPP

#include <memory>
#include <string>
#include <vector>

#include "bicone/liealg.hpp"
#include "bicone/poly.hpp"

namespace bicone::invariants {

using AlgebraPtr = std::shared_ptr<const liealg::LieAlgebra>;

AlgebraPtr make_sl(int n);

// Fundamental invariants of sl_n as power traces: p_1 = tr(x^2) and
// p_k = tr(x^{k+1}), homogeneous of degrees 2, 3, ..., n, living in
// Q[x1..xN] with the coordinates in the algebra's basis order.
struct InvariantFamily {
    AlgebraPtr algebra;
    RingPtr xring;
    std::vector<Poly> p;            // p_1 .. p_rk
    std::vector<unsigned> degrees;  // d_1 <= ... <= d_rk
};

InvariantFamily build_invariants_sl(const AlgebraPtr& algebra); // 2 <= n <= 4

// The two-variable polarization tables of the family, plus the gradient
// fields carried through the inverse of the invariant form:
//   p_i(a x + b y) = sum_{m+n=d_i} a^m b^n p_{i,m,n}(x, y)
//   <eps_{i,m,n}(x,y), v> = (d/dt) p_{i,m,n}(x + t v, y) at t = 0
struct PolarizedFamily {
    InvariantFamily base;
    RingPtr xyring;   // x1..xN, y1..yN

    // tables indexed [i][m] with n = d_i - m, m = 0..d_i
    std::vector<std::vector<Poly>> p_pol;
    std::vector<std::vector<std::vector<Poly>>> eps;   // eps[i][m]: N coords
    std::vector<std::vector<std::vector<Poly>>> jac;   // d p_{i,m,n} in all 2N vars
    std::vector<std::vector<Poly>> eps_base;           // eps_i over xring: N coords

    // principal-cone generators q_i (i = 2..rk) and their polarizations;
    // empty for rank 1
    std::vector<Poly> q;                       // q[idx] = q_{idx+2} over xring
    std::vector<std::vector<Poly>> q_pol;      // q_pol[idx][m]

    int rank() const { return base.algebra->rank(); }
    unsigned degree(int i) const { return base.degrees[i]; }
    // total number of polarizations p_{i,m,n}; equals b_g + rk g
    size_t polarization_count() const;
    size_t q_polarization_count() const;

    std::vector<mpq_class> pair_coords(const QVec& x, const QVec& y) const;
};

PolarizedFamily polarize(const InvariantFamily& fam);

// Appends the q_i = p_i (d_i odd) or p_1(h)^{d_i/2} p_i - p_i(h) p_1^{d_i/2}
// family and its polarizations; checks q_i(h) = 0 exactly.
void build_q(PolarizedFamily& pf);

PolarizedFamily build_polarized_sl(int n); // convenience: all of the above

// eps_i evaluated at a point of the algebra
QVec eps_base_at(const PolarizedFamily& pf, int i, const QVec& x);
// eps_{i,m,d_i-m} evaluated at a pair
QVec eps_at(const PolarizedFamily& pf, int i, int m, const QVec& x, const QVec& y);

mpq_class invariant_at(const PolarizedFamily& pf, int i, const QVec& x);

// Per accepted sample: (a) the b_g evaluated gradient fields have full rank,
// (b) every one of them lies in the span of the centralizers g(ax + by)
// over twelve pairwise non-proportional (a, b). Samples whose gradient
// span is degenerate are rejected with a diagnostic, not failed; a
// membership miss is inconclusive (the span is sampled, not exhausted).
struct CharacteristicCheck {
    size_t accepted = 0;
    size_t rejected = 0;          // gradient span degenerate: sample diagnostic
    size_t membership_misses = 0; // eps vector outside the sampled span
};
CharacteristicCheck characteristic_submodule_check(
    const PolarizedFamily& pf, const std::vector<std::pair<QVec, QVec>>& samples);

} // namespace bicone::invariants

#endif
