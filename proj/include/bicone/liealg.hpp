#ifndef BICONE_LIEALG_HPP
#define BICONE_LIEALG_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bicone/linalg.hpp"

namespace bicone::liealg {

// Coordinate vector in the basis of the parent algebra.
struct Element {
    QVec coords;

    bool is_zero() const { return vec_is_zero(coords); }
    bool operator==(const Element& o) const { return coords == o.coords; }
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const mpq_class& c, const Element& a);

// sl_n in the matrix-unit basis: E_ij (i < j) row-major, then the traceless
// diagonals H_i = E_ii - E_{i+1,i+1}, then E_ij (i > j) row-major. The
// invariant form is the trace form tr(xy); (e, h, f) is the principal triple
// with h = diag(n-1, n-3, ..., -(n-1)) and f solved from [e,f] = h in the
// (-2)-eigenspace of ad h.
class LieAlgebra {
public:
    static LieAlgebra build_sl(int n);

    int n() const { return n_; }
    int dimension() const { return dim_; }
    int rank() const { return rank_; }
    int borel_dimension() const { return borel_; }

    const std::vector<std::string>& basis_labels() const { return labels_; }
    const QMat& basis_matrix(int i) const { return basis_mats_[i]; }
    Element basis_element(int i) const;
    int basis_index(const std::string& label) const;

    const Element& e() const { return e_; }
    const Element& h() const { return h_; }
    const Element& f() const { return f_; }
    Element zero() const { return Element{QVec(dim_, mpq_class(0))}; }

    Element bracket(const Element& a, const Element& b) const;
    QMat ad_matrix(const Element& x) const;

    int centralizer_dimension(const Element& x) const;
    bool is_regular(const Element& x) const;
    std::vector<QVec> centralizer_basis(const Element& x) const;

    // eigenvalue of ad h -> indices of basis eigenvectors
    std::map<long, std::vector<int>> ad_h_grading() const;
    long grading_of_basis(int i) const { return grade_[i]; }

    // action of the longest Weyl element on the principal h
    Element w0_on_h() const;

    const QMat& form() const { return form_; }
    const QMat& form_inverse() const { return form_inv_; }
    mpq_class form_value(const Element& x, const Element& y) const;

    // n x n matrix realization and its inverse
    QMat matrix_of(const Element& x) const;
    Element element_from_matrix(const QMat& m) const;

    // basis indices of the nilradical u (strictly upper triangular part)
    const std::vector<int>& nilradical_indices() const { return upper_; }
    // basis index of E_{n,1}, the lowest-root vector
    int lowest_root_index() const { return lowest_; }

    bool is_nilpotent(const Element& x) const;

    // closure of {x, y} under the bracket, as a basis of the generated
    // subalgebra; stabilizes in at most dim steps
    std::vector<Element> subalgebra_generated_by(const Element& x, const Element& y) const;

private:
    LieAlgebra() = default;
    void check_element(const Element& x) const;

    int n_ = 0, dim_ = 0, rank_ = 0, borel_ = 0, lowest_ = 0;
    std::vector<std::string> labels_;
    std::vector<QMat> basis_mats_;
    // structure constants: c_[i][j] lists (k, c) with [b_i, b_j] = sum c b_k
    std::vector<std::vector<std::vector<std::pair<int, mpq_class>>>> c_;
    QMat form_, form_inv_;
    Element e_, h_, f_;
    std::vector<long> grade_;
    std::vector<int> upper_;
};

} // namespace bicone::liealg

#endif
