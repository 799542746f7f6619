#include "bicone/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bicone::rootsys {

bool RootDatum::is_root(const std::vector<int>& v) const {
    auto neg = v;
    for (auto& c : neg) c = -c;
    for (auto& r : positive_roots)
        if (r == v || r == neg) return true;
    return false;
}

bool is_supported(char t, int r) {
    switch (t) {
        case 'A': return r >= 1 && r <= 5;
        case 'B': return r >= 2 && r <= 4;
        case 'C': return r >= 3 && r <= 4;
        case 'D': return r >= 4 && r <= 6;
        case 'G': return r == 2;
        default: return false;
    }
}

std::vector<std::pair<char, int>> supported_data() {
    std::vector<std::pair<char, int>> all;
    for (int r = 1; r <= 5; ++r) all.emplace_back('A', r);
    for (int r = 2; r <= 4; ++r) all.emplace_back('B', r);
    for (int r = 3; r <= 4; ++r) all.emplace_back('C', r);
    for (int r = 4; r <= 6; ++r) all.emplace_back('D', r);
    all.emplace_back('G', 2);
    return all;
}

int simple_algebra_dimension(char t, int r) {
    switch (t) {
        case 'A': return r * (r + 2);
        case 'B': return r * (2 * r + 1);
        case 'C': return r * (2 * r + 1);
        case 'D': return r * (2 * r - 1);
        case 'G': return 14;
        default: throw std::invalid_argument("unknown type label");
    }
}

namespace {

std::vector<std::vector<int>> cartan_matrix(char t, int r) {
    std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) c[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) { c[i][i + 1] = -1; c[i + 1][i] = -1; }
    };
    switch (t) {
        case 'A':
            chain(r);
            break;
        case 'B': // last simple root short
            chain(r);
            c[r - 2][r - 1] = -2;
            break;
        case 'C': // last simple root long
            chain(r);
            c[r - 1][r - 2] = -2;
            break;
        case 'D': // fork: r-1 and r both attached to r-2
            chain(r - 1);
            c[r - 2][r - 1] = 0;
            c[r - 1][r - 2] = 0;
            c[r - 3][r - 1] = -1;
            c[r - 1][r - 3] = -1;
            c[r - 3][r - 2] = -1;
            c[r - 2][r - 3] = -1;
            break;
        case 'G': // first root short: <a1,a2v> = -1, <a2,a1v> = -3
            c[0][1] = -1;
            c[1][0] = -3;
            break;
        default:
            throw std::invalid_argument("unknown type label");
    }
    return c;
}

int classical_positive_count(char t, int r) {
    switch (t) {
        case 'A': return r * (r + 1) / 2;
        case 'B':
        case 'C': return r * r;
        case 'D': return r * (r - 1);
        case 'G': return 6;
        default: throw std::invalid_argument("unknown type label");
    }
}

} // namespace

RootDatum build_root_datum(char t, int r) {
    if (!is_supported(t, r))
        throw std::invalid_argument("unsupported root datum " + std::string(1, t) +
                                    std::to_string(r));
    RootDatum d;
    d.type_label = t;
    d.rank = r;
    d.cartan_matrix = cartan_matrix(t, r);

    // closure under root strings, built by height
    std::set<std::vector<int>> known;
    std::vector<std::vector<std::vector<int>>> by_height(1);
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        by_height[0].push_back(e);
        known.insert(e);
    }
    auto pairing = [&](const std::vector<int>& beta, int i) {
        int s = 0;
        for (int j = 0; j < r; ++j) s += beta[j] * d.cartan_matrix[j][i];
        return s;
    };
    for (size_t h = 0; h < by_height.size(); ++h) {
        const std::vector<std::vector<int>> level = by_height[h]; // outer vector may grow
        for (auto& beta : level) {
            for (int i = 0; i < r; ++i) {
                int p = 0;
                std::vector<int> down = beta;
                for (;;) {
                    down[i] -= 1;
                    bool nonneg = true;
                    for (int v : down) nonneg &= (v >= 0);
                    bool zero = std::all_of(down.begin(), down.end(),
                                            [](int v) { return v == 0; });
                    if (!nonneg || zero || !known.count(down)) break;
                    ++p;
                }
                int q = p - pairing(beta, i);
                if (q >= 1) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    if (known.insert(up).second) {
                        if (by_height.size() <= h + 1) by_height.resize(h + 2);
                        by_height[h + 1].push_back(up);
                    }
                }
            }
        }
    }
    for (auto& level : by_height)
        for (auto& root : level) d.positive_roots.push_back(root);

    if (int(d.positive_roots.size()) != classical_positive_count(t, r))
        throw std::logic_error("positive root closure disagrees with the classical count");
    d.highest_root = by_height.back().at(0);
    if (by_height.back().size() != 1)
        throw std::logic_error("highest root is not unique");
    for (int c : d.highest_root)
        if (c <= 0) throw std::logic_error("highest root has a nonpositive coordinate");
    return d;
}

LeviShape levi_decompose(const RootDatum& d, uint32_t subset_mask) {
    LeviShape shape;
    shape.subset_mask = subset_mask;
    int r = d.rank;
    std::vector<int> nodes;
    for (int i = 0; i < r; ++i)
        if (subset_mask & (uint32_t(1) << i)) nodes.push_back(i);

    std::vector<bool> seen(r, false);
    auto adjacent = [&](int i, int j) { return d.cartan_matrix[i][j] != 0; };
    for (int start : nodes) {
        if (seen[start]) continue;
        // collect the connected component of start within the subset
        std::vector<int> comp{start};
        seen[start] = true;
        for (size_t k = 0; k < comp.size(); ++k)
            for (int j : nodes)
                if (!seen[j] && adjacent(comp[k], j)) {
                    seen[j] = true;
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());

        int n = int(comp.size());
        if (n == 1) {
            shape.simple_factors.emplace_back('A', 1);
            continue;
        }
        auto degree = [&](int i) {
            int deg = 0;
            for (int j : comp)
                if (j != i && adjacent(i, j)) ++deg;
            return deg;
        };
        char type = 'A';
        for (int i : comp)
            for (int j : comp)
                if (i != j) {
                    int mult = d.cartan_matrix[i][j] * d.cartan_matrix[j][i];
                    if (mult == 3) type = 'G';
                    if (mult == 2 && type == 'A') {
                        // C[i][j] = -2 means alpha_i long, alpha_j short
                        int lng = d.cartan_matrix[i][j] == -2 ? i : j;
                        int sht = lng == i ? j : i;
                        if (n == 2) type = 'B'; // B2 and C2 coincide
                        else if (degree(sht) == 1) type = 'B';
                        else if (degree(lng) == 1) type = 'C';
                        else throw std::logic_error("interior double edge in sub-diagram");
                    }
                }
        if (type == 'A')
            for (int i : comp)
                if (degree(i) == 3) type = 'D';
        shape.simple_factors.emplace_back(type, n);
    }
    std::sort(shape.simple_factors.begin(), shape.simple_factors.end());
    return shape;
}

namespace {
// lower bound for the count of components not contained in any proper
// parabolic: 0 when the algebra is 3-dimensional, else 1
long interior_lower_bound(char t, int r) {
    return simple_algebra_dimension(t, r) == 3 ? 0 : 1;
}
} // namespace

long component_lower_bound(const RootDatum& d) {
    long total = interior_lower_bound(d.type_label, d.rank) + 1;
    uint32_t full = (uint32_t(1) << d.rank) - 1;
    for (uint32_t s = 1; s < full; ++s) {
        LeviShape shape = levi_decompose(d, s);
        long prod = 1;
        for (auto& [t, r] : shape.simple_factors) prod *= interior_lower_bound(t, r);
        total += prod;
    }
    return total;
}

std::vector<int> scan_highest_root_conditions(const RootDatum& d) {
    std::vector<int> hits;
    const auto& theta = d.highest_root;
    for (int beta = 0; beta < d.rank; ++beta) {
        bool cond1 = true;
        for (int alpha = 0; alpha < d.rank && cond1; ++alpha) {
            if (alpha == beta) continue;
            auto v = theta;
            v[alpha] -= 1;
            if (d.is_root(v)) cond1 = false;
        }
        if (!cond1) continue;
        auto v = theta;
        v[beta] -= 1;
        bool cond2 = d.is_root(v) && theta[beta] == 1;
        if (cond2) hits.push_back(beta);
    }
    return hits;
}

} // namespace bicone::rootsys
