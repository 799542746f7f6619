#include "bicone/liealg.hpp"

#include <stdexcept>

namespace bicone::liealg {

Element operator+(const Element& a, const Element& b) {
    Element r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

Element operator-(const Element& a, const Element& b) {
    Element r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

Element operator*(const mpq_class& c, const Element& a) {
    Element r = a;
    for (auto& x : r.coords) x *= c;
    return r;
}

void LieAlgebra::check_element(const Element& x) const {
    if (int(x.coords.size()) != dim_)
        throw std::invalid_argument("element dimension mismatch");
}

Element LieAlgebra::basis_element(int i) const {
    Element z = zero();
    z.coords.at(i) = 1;
    return z;
}

int LieAlgebra::basis_index(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return int(i);
    throw std::invalid_argument("unknown basis label " + label);
}

LieAlgebra LieAlgebra::build_sl(int n) {
    if (n < 2 || n > 6)
        throw std::invalid_argument("sl_n supported for 2 <= n <= 6");
    LieAlgebra L;
    L.n_ = n;
    L.rank_ = n - 1;
    L.dim_ = n * n - 1;
    L.borel_ = (L.dim_ + L.rank_) / 2;

    auto unit = [n](int i, int j) {
        QMat m = mat_zero(n, n);
        m[i][j] = 1;
        return m;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            L.labels_.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            L.basis_mats_.push_back(unit(i, j));
        }
    for (int i = 0; i + 1 < n; ++i) {
        QMat m = mat_zero(n, n);
        m[i][i] = 1;
        m[i + 1][i + 1] = -1;
        L.labels_.push_back("H" + std::to_string(i + 1));
        L.basis_mats_.push_back(m);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            L.labels_.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            L.basis_mats_.push_back(unit(i, j));
        }
    int upper_count = n * (n - 1) / 2;
    for (int i = 0; i < upper_count; ++i) L.upper_.push_back(i);
    L.lowest_ = L.basis_index("E" + std::to_string(n) + "1");

    // structure constants from the matrix realization
    L.c_.assign(L.dim_, std::vector<std::vector<std::pair<int, mpq_class>>>(L.dim_));
    for (int i = 0; i < L.dim_; ++i)
        for (int j = 0; j < L.dim_; ++j) {
            QMat br = mat_mul(L.basis_mats_[i], L.basis_mats_[j]);
            QMat rl = mat_mul(L.basis_mats_[j], L.basis_mats_[i]);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) br[a][b] -= rl[a][b];
            Element z = L.element_from_matrix(br);
            for (int k = 0; k < L.dim_; ++k)
                if (z.coords[k] != 0) L.c_[i][j].emplace_back(k, z.coords[k]);
        }

    L.form_ = mat_zero(L.dim_, L.dim_);
    for (int i = 0; i < L.dim_; ++i)
        for (int j = 0; j <= i; ++j) {
            mpq_class t = mat_trace(mat_mul(L.basis_mats_[i], L.basis_mats_[j]));
            L.form_[i][j] = t;
            L.form_[j][i] = t;
        }
    L.form_inv_ = mat_inverse(L.form_);

    L.e_ = L.zero();
    for (int i = 0; i + 1 < n; ++i)
        L.e_.coords[L.basis_index("E" + std::to_string(i + 1) + std::to_string(i + 2))] = 1;
    QMat hm = mat_zero(n, n);
    for (int i = 0; i < n; ++i) hm[i][i] = n - 1 - 2 * i;
    L.h_ = L.element_from_matrix(hm);

    L.grade_.assign(L.dim_, 0);
    for (int i = 0; i < L.dim_; ++i) {
        Element br = L.bracket(L.h_, L.basis_element(i));
        mpq_class lambda = br.coords[i];
        for (int k = 0; k < L.dim_; ++k)
            if (k != i && br.coords[k] != 0)
                throw std::logic_error("basis is not an eigenbasis of ad h");
        if (lambda.get_den() != 1 || mpz_class(lambda.get_num()) % 2 != 0)
            throw std::logic_error("ad h eigenvalue is not an even integer");
        L.grade_[i] = long(lambda.get_num().get_si());
    }

    // f solved from [e, f] = h inside the (-2)-eigenspace of ad h
    std::vector<int> low;
    for (int i = 0; i < L.dim_; ++i)
        if (L.grade_[i] == -2) low.push_back(i);
    QMat sys = mat_zero(L.dim_, low.size());
    for (size_t c = 0; c < low.size(); ++c) {
        Element br = L.bracket(L.e_, L.basis_element(low[c]));
        for (int r = 0; r < L.dim_; ++r) sys[r][c] = br.coords[r];
    }
    auto sol = mat_solve(sys, L.h_.coords);
    if (!sol) throw std::logic_error("no solution for the principal f");
    L.f_ = L.zero();
    for (size_t c = 0; c < low.size(); ++c) L.f_.coords[low[c]] = (*sol)[c];

    // triple relations, checked once per construction
    if (!(L.bracket(L.h_, L.e_) == (mpq_class(2) * L.e_)) ||
        !(L.bracket(L.e_, L.f_) == L.h_) ||
        !(L.bracket(L.h_, L.f_) == (mpq_class(-2) * L.f_)))
        throw std::logic_error("principal triple relations failed");
    return L;
}

Element LieAlgebra::bracket(const Element& a, const Element& b) const {
    check_element(a);
    check_element(b);
    Element r = zero();
    for (int i = 0; i < dim_; ++i) {
        if (a.coords[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b.coords[j] == 0) continue;
            mpq_class s = a.coords[i] * b.coords[j];
            for (auto& [k, c] : c_[i][j]) r.coords[k] += s * c;
        }
    }
    return r;
}

QMat LieAlgebra::ad_matrix(const Element& x) const {
    check_element(x);
    QMat m = mat_zero(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Element br = bracket(x, basis_element(j));
        for (int i = 0; i < dim_; ++i) m[i][j] = br.coords[i];
    }
    return m;
}

int LieAlgebra::centralizer_dimension(const Element& x) const {
    return dim_ - int(mat_rank(ad_matrix(x)));
}

bool LieAlgebra::is_regular(const Element& x) const {
    return centralizer_dimension(x) == rank_;
}

std::vector<QVec> LieAlgebra::centralizer_basis(const Element& x) const {
    return mat_kernel(ad_matrix(x));
}

std::map<long, std::vector<int>> LieAlgebra::ad_h_grading() const {
    std::map<long, std::vector<int>> g;
    for (int i = 0; i < dim_; ++i) g[grade_[i]].push_back(i);
    return g;
}

Element LieAlgebra::w0_on_h() const { return mpq_class(-1) * h_; }

mpq_class LieAlgebra::form_value(const Element& x, const Element& y) const {
    check_element(x);
    check_element(y);
    mpq_class s(0);
    for (int i = 0; i < dim_; ++i) {
        if (x.coords[i] == 0) continue;
        for (int j = 0; j < dim_; ++j)
            if (form_[i][j] != 0 && y.coords[j] != 0)
                s += x.coords[i] * form_[i][j] * y.coords[j];
    }
    return s;
}

QMat LieAlgebra::matrix_of(const Element& x) const {
    check_element(x);
    QMat m = mat_zero(n_, n_);
    for (int i = 0; i < dim_; ++i) {
        if (x.coords[i] == 0) continue;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (basis_mats_[i][a][b] != 0) m[a][b] += x.coords[i] * basis_mats_[i][a][b];
    }
    return m;
}

Element LieAlgebra::element_from_matrix(const QMat& m) const {
    mpq_class tr = mat_trace(m);
    if (tr != 0) throw std::invalid_argument("matrix is not traceless");
    Element z = zero();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j || m[i][j] == 0) continue;
            z.coords[basis_index("E" + std::to_string(i + 1) + std::to_string(j + 1))] =
                m[i][j];
        }
    // diagonal part: coefficient of H_k is d_1 + ... + d_k
    mpq_class acc(0);
    for (int k = 0; k + 1 < n_; ++k) {
        acc += m[k][k];
        if (acc != 0) z.coords[basis_index("H" + std::to_string(k + 1))] = acc;
    }
    return z;
}

bool LieAlgebra::is_nilpotent(const Element& x) const {
    // for sl_n, ad-nilpotent iff the n x n realization is nilpotent
    QMat m = matrix_of(x);
    QMat p = m;
    for (int k = 1; k < n_; ++k) p = mat_mul(p, m);
    for (auto& row : p)
        for (auto& v : row)
            if (v != 0) return false;
    return true;
}

std::vector<Element> LieAlgebra::subalgebra_generated_by(const Element& x,
                                                         const Element& y) const {
    std::vector<Element> basis;
    QMat echelon;
    auto try_add = [&](const Element& v) {
        if (v.is_zero()) return false;
        QMat m = echelon;
        m.push_back(v.coords);
        if (mat_rank(m) == echelon.size()) return false;
        basis.push_back(v);
        echelon.push_back(v.coords);
        row_echelon(echelon);
        return true;
    };
    try_add(x);
    try_add(y);
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = basis.size();
        for (size_t i = 0; i < sz && !grew; ++i)
            for (size_t j = i + 1; j < sz && !grew; ++j)
                grew = try_add(bracket(basis[i], basis[j]));
    }
    return basis;
}

} // namespace bicone::liealg
