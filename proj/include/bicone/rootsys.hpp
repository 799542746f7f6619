#ifndef BICONE_ROOTSYS_HPP
#define BICONE_ROOTSYS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bicone::rootsys {

// Simple-root combinatorics for the supported simple types. Roots are
// integer coordinate vectors in the simple-root basis; the Cartan matrix
// convention is C[i][j] = <alpha_i, alpha_j^vee>.
struct RootDatum {
    char type_label;                           // 'A', 'B', 'C', 'D', 'G'
    int rank;
    std::vector<std::vector<int>> cartan_matrix;
    std::vector<std::vector<int>> positive_roots;
    std::vector<int> highest_root;

    std::string name() const { return std::string(1, type_label) + std::to_string(rank); }
    int algebra_dimension() const { return 2 * int(positive_roots.size()) + rank; }
    bool is_root(const std::vector<int>& v) const;
};

struct LeviShape {
    uint32_t subset_mask;                           // over the simple roots
    std::vector<std::pair<char, int>> simple_factors; // (type, rank) per component
};

// Supported: A1..A5, B2..B4, C3..C4, D4..D6, G2.
bool is_supported(char type_label, int rank);
std::vector<std::pair<char, int>> supported_data();

RootDatum build_root_datum(char type_label, int rank);

// Connected components of the sub-diagram induced by the subset,
// classified by type and rank.
LeviShape levi_decompose(const RootDatum& datum, uint32_t subset_mask);

int simple_algebra_dimension(char type_label, int rank);

// Certified lower bound on the number of irreducible components of the
// nilpotent bicone, by the parabolic recursion with each unknown term
// replaced by its lower bound (0 for the 3-dimensional algebra, else 1).
long component_lower_bound(const RootDatum& datum);

// Simple roots beta such that (1) theta - alpha is not a root for every
// other simple alpha and (2) theta - beta is a root with coefficient 1 at
// beta, where theta is the highest root. Expected empty for every type.
std::vector<int> scan_highest_root_conditions(const RootDatum& datum);

} // namespace bicone::rootsys

#endif
