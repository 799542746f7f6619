#include "bicone/invariants.hpp"

#include <stdexcept>

namespace bicone::invariants {

AlgebraPtr make_sl(int n) {
    return std::make_shared<const liealg::LieAlgebra>(liealg::LieAlgebra::build_sl(n));
}

namespace {
QVec lin_combination(long a, const QVec& x, long b, const QVec& y) {
    QVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = a * x[i] + b * y[i];
    return z;
}
} // namespace

namespace {

using PolyMat = std::vector<std::vector<Poly>>;

PolyMat symbolic_matrix(const liealg::LieAlgebra& L, const RingPtr& ring) {
    RatOps k;
    int n = L.n();
    PolyMat M(n, std::vector<Poly>(n, Poly::zero(ring)));
    for (int b = 0; b < L.dimension(); ++b) {
        Poly xb = Poly::variable(ring, b, k);
        const QMat& mat = L.basis_matrix(b);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mat[i][j] != 0) M[i][j] = M[i][j] + mpq_class(mat[i][j]) * xb;
    }
    return M;
}

PolyMat mat_mul_poly(const PolyMat& A, const PolyMat& B) {
    size_t n = A.size();
    PolyMat R(n, std::vector<Poly>(n, Poly::zero(A[0][0].ring())));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < n; ++l) {
            if (A[i][l].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                if (!B[l][j].is_zero()) R[i][j] = R[i][j] + A[i][l] * B[l][j];
        }
    return R;
}

Poly mat_trace_poly(const PolyMat& A) {
    Poly t = Poly::zero(A[0][0].ring());
    for (size_t i = 0; i < A.size(); ++i) t = t + A[i][i];
    return t;
}

// coordinate polynomials of [v, x] in Q[x1..xN, v1..vN]
std::vector<Poly> bracket_coords(const liealg::LieAlgebra& L, const RingPtr& xv) {
    RatOps k;
    int N = L.dimension();
    std::vector<Poly> out(N, Poly::zero(xv));
    for (int i = 0; i < N; ++i) {
        Poly vi = Poly::variable(xv, N + i, k);
        for (int j = 0; j < N; ++j) {
            Poly xj = Poly::variable(xv, j, k);
            liealg::Element br = L.bracket(L.basis_element(i), L.basis_element(j));
            for (int c = 0; c < N; ++c)
                if (br.coords[c] != 0) out[c] = out[c] + br.coords[c] * (vi * xj);
        }
    }
    return out;
}

void check_infinitesimal_invariance(const liealg::LieAlgebra& L, const Poly& p) {
    RatOps k;
    int N = L.dimension();
    std::vector<std::string> names = p.ring()->names();
    for (int i = 0; i < N; ++i) names.push_back("v" + std::to_string(i + 1));
    RingPtr xv = make_ring(names);

    std::map<int, Poly> images;
    for (int i = 0; i < N; ++i) images.emplace(i, Poly::variable(xv, i, k));
    Poly p_xv = poly_substitute(k, p, xv, images);

    std::vector<Poly> br = bracket_coords(L, xv);
    Poly acc = Poly::zero(xv);
    for (int j = 0; j < N; ++j) {
        Poly dj = poly_diff(k, p_xv, j);
        if (!dj.is_zero() && !br[j].is_zero()) acc = acc + dj * br[j];
    }
    if (!acc.is_zero())
        throw std::logic_error("invariant generator fails infinitesimal invariance");
}

} // namespace

InvariantFamily build_invariants_sl(const AlgebraPtr& algebra) {
    const auto& L = *algebra;
    if (L.n() < 2 || L.n() > 4)
        throw std::invalid_argument("symbolic invariants supported for 2 <= n <= 4");
    InvariantFamily fam;
    fam.algebra = algebra;
    fam.xring = make_ring_n("x", L.dimension());

    PolyMat M = symbolic_matrix(L, fam.xring);
    PolyMat power = mat_mul_poly(M, M);
    fam.p.push_back(mat_trace_poly(power)); // tr(x^2)
    fam.degrees.push_back(2);
    for (int d = 3; d <= L.n(); ++d) {
        power = mat_mul_poly(power, M);
        fam.p.push_back(mat_trace_poly(power)); // tr(x^d)
        fam.degrees.push_back(unsigned(d));
    }

    unsigned degsum = 0;
    for (size_t i = 0; i < fam.p.size(); ++i) {
        if (!poly_is_homogeneous(fam.p[i]) || fam.p[i].total_degree() != fam.degrees[i])
            throw std::logic_error("invariant generator has unexpected degree");
        check_infinitesimal_invariance(L, fam.p[i]);
        degsum += fam.degrees[i];
    }
    if (int(degsum) != L.borel_dimension())
        throw std::logic_error("degrees of invariants do not sum to the Borel dimension");
    return fam;
}

size_t PolarizedFamily::polarization_count() const {
    size_t c = 0;
    for (auto& row : p_pol) c += row.size();
    return c;
}

size_t PolarizedFamily::q_polarization_count() const {
    size_t c = 0;
    for (auto& row : q_pol) c += row.size();
    return c;
}

std::vector<mpq_class> PolarizedFamily::pair_coords(const QVec& x, const QVec& y) const {
    std::vector<mpq_class> pt = x;
    pt.insert(pt.end(), y.begin(), y.end());
    return pt;
}

namespace {

// gradient in the given variable block, pushed through the inverse form
std::vector<Poly> form_gradient(const liealg::LieAlgebra& L, const Poly& f,
                                int block_offset) {
    RatOps k;
    int N = L.dimension();
    std::vector<Poly> grad;
    grad.reserve(N);
    for (int j = 0; j < N; ++j) grad.push_back(poly_diff(k, f, block_offset + j));
    const QMat& Finv = L.form_inverse();
    std::vector<Poly> eps(N, Poly::zero(f.ring()));
    for (int r = 0; r < N; ++r)
        for (int j = 0; j < N; ++j)
            if (Finv[r][j] != 0 && !grad[j].is_zero())
                eps[r] = eps[r] + mpq_class(Finv[r][j]) * grad[j];
    return eps;
}

// polarization table of one invariant: index m = 0..d, n = d - m
std::vector<Poly> polarization_table(const liealg::LieAlgebra& L, const Poly& f,
                                     unsigned degree, const RingPtr& xyring) {
    RatOps k;
    int N = L.dimension();
    std::vector<std::string> names = xyring->names();
    names.push_back("a");
    names.push_back("b");
    RingPtr big = make_ring(names);
    int va = 2 * N, vb = 2 * N + 1;

    std::map<int, Poly> images;
    for (int j = 0; j < N; ++j) {
        Poly ax = poly_mul(k, Poly::variable(big, va, k), Poly::variable(big, j, k));
        Poly by = poly_mul(k, Poly::variable(big, vb, k), Poly::variable(big, N + j, k));
        images.emplace(j, poly_add(k, ax, by));
    }
    Poly expanded = poly_substitute(k, f, big, images);
    auto buckets = poly_collect_bidegree(k, expanded, va, vb);

    std::vector<Poly> table(degree + 1, Poly::zero(xyring));
    for (auto& [key, coeff] : buckets) {
        auto [m, n] = key;
        if (m + n != degree)
            throw std::logic_error("polarization bidegrees do not sum to the degree");
        table[m] = poly_project(k, coeff, xyring);
    }
    // bihomogeneity in the x- and y-blocks
    std::vector<int> xvars(N), yvars(N);
    for (int j = 0; j < N; ++j) { xvars[j] = j; yvars[j] = N + j; }
    for (unsigned m = 0; m <= degree; ++m) {
        if (table[m].is_zero()) throw std::logic_error("vanishing polarization");
        if (!poly_is_homogeneous_in(table[m], xvars, m) ||
            !poly_is_homogeneous_in(table[m], yvars, degree - m))
            throw std::logic_error("polarization is not bihomogeneous");
    }
    return table;
}

} // namespace

PolarizedFamily polarize(const InvariantFamily& fam) {
    RatOps k;
    const auto& L = *fam.algebra;
    int N = L.dimension();
    PolarizedFamily pf;
    pf.base = fam;
    std::vector<std::string> names = fam.xring->names();
    for (int j = 0; j < N; ++j) names.push_back("y" + std::to_string(j + 1));
    pf.xyring = make_ring(names);

    for (size_t i = 0; i < fam.p.size(); ++i) {
        pf.p_pol.push_back(polarization_table(L, fam.p[i], fam.degrees[i], pf.xyring));
        pf.eps_base.push_back(form_gradient(L, fam.p[i], 0));
    }
    for (auto& row : pf.p_pol) {
        std::vector<std::vector<Poly>> eps_row, jac_row;
        for (auto& pmn : row) {
            eps_row.push_back(form_gradient(L, pmn, 0));
            std::vector<Poly> grad;
            for (int v = 0; v < 2 * N; ++v) grad.push_back(poly_diff(k, pmn, v));
            jac_row.push_back(std::move(grad));
        }
        pf.eps.push_back(std::move(eps_row));
        pf.jac.push_back(std::move(jac_row));
    }
    // eps_{i,0,d_i} must vanish identically
    for (size_t i = 0; i < pf.eps.size(); ++i)
        for (auto& coord : pf.eps[i][0])
            if (!coord.is_zero())
                throw std::logic_error("eps_{i,0,d_i} is nonzero");
    return pf;
}

void build_q(PolarizedFamily& pf) {
    RatOps k;
    const auto& L = *pf.base.algebra;
    const auto& fam = pf.base;
    pf.q.clear();
    pf.q_pol.clear();
    for (size_t i = 1; i < fam.p.size(); ++i) {
        unsigned d = fam.degrees[i];
        Poly qi = fam.p[i];
        if (d % 2 == 0) {
            mpq_class p1h = poly_evaluate(fam.p[0], L.h().coords);
            mpq_class pih = poly_evaluate(fam.p[i], L.h().coords);
            mpq_class scale(1);
            for (unsigned t = 0; t < d / 2; ++t) scale *= p1h;
            qi = scale * fam.p[i] - pih * poly_pow(k, fam.p[0], d / 2);
        }
        if (poly_evaluate(qi, L.h().coords) != 0)
            throw std::logic_error("q_i does not vanish on the principal h");
        if (!poly_is_homogeneous(qi) || qi.total_degree() != d)
            throw std::logic_error("q_i has unexpected degree");
        pf.q_pol.push_back(polarization_table(L, qi, d, pf.xyring));
        pf.q.push_back(std::move(qi));
    }
}

PolarizedFamily build_polarized_sl(int n) {
    auto fam = build_invariants_sl(make_sl(n));
    PolarizedFamily pf = polarize(fam);
    build_q(pf);
    return pf;
}

QVec eps_base_at(const PolarizedFamily& pf, int i, const QVec& x) {
    QVec v;
    v.reserve(pf.eps_base[i].size());
    for (auto& coord : pf.eps_base[i]) v.push_back(poly_evaluate(coord, x));
    return v;
}

QVec eps_at(const PolarizedFamily& pf, int i, int m, const QVec& x, const QVec& y) {
    auto pt = pf.pair_coords(x, y);
    QVec v;
    v.reserve(pf.eps[i][m].size());
    for (auto& coord : pf.eps[i][m]) v.push_back(poly_evaluate(coord, pt));
    return v;
}

mpq_class invariant_at(const PolarizedFamily& pf, int i, const QVec& x) {
    return poly_evaluate(pf.base.p[i], x);
}

CharacteristicCheck characteristic_submodule_check(
    const PolarizedFamily& pf, const std::vector<std::pair<QVec, QVec>>& samples) {
    const auto& L = *pf.base.algebra;
    const int b = L.borel_dimension();
    // pairwise non-proportional pencil parameters; enough of them to
    // interpolate every gradient family of degree <= 11
    static const std::pair<long, long> lines[12] = {
        {1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2},  {2, 1},
        {1, 3}, {3, 1}, {2, 3}, {3, 2},  {1, -2}, {2, -1}};

    CharacteristicCheck out;
    for (auto& [x, y] : samples) {
        std::vector<QVec> eps_rows;
        for (int i = 0; i < pf.rank(); ++i)
            for (unsigned m = 1; m <= pf.degree(i); ++m)
                eps_rows.push_back(eps_at(pf, i, int(m), x, y));
        if (rank_of_rows(eps_rows) != size_t(b)) {
            ++out.rejected;
            continue;
        }
        ++out.accepted;

        std::vector<QVec> span;
        for (auto& [a, bb] : lines) {
            liealg::Element z{lin_combination(a, x, bb, y)};
            for (auto& v : L.centralizer_basis(z)) span.push_back(v);
        }
        for (auto& row : eps_rows)
            if (!in_span(span, row)) ++out.membership_misses;
    }
    return out;
}

} // namespace bicone::invariants
