#ifndef BICONE_RING_HPP
#define BICONE_RING_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bicone/modp.hpp"
#include "bicone/monomial.hpp"

namespace bicone {

// Polynomial ring descriptor: ordered variable names, coefficient domain
// (Q when prime == 0, F_p otherwise), degrevlex throughout.
class Ring {
public:
    Ring(std::vector<std::string> names, uint64_t prime = 0)
        : names_(std::move(names)), prime_(prime) {
        if (names_.size() > size_t(Monomial::max_vars))
            throw std::invalid_argument("ring supports at most 64 variables");
        for (size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], int(i)).second)
                throw std::invalid_argument("duplicate variable name: " + names_[i]);
        }
        if (prime_ != 0 && !is_prime_u64(prime_))
            throw std::invalid_argument("coefficient modulus is not prime");
    }

    int nvars() const { return int(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }
    uint64_t prime() const { return prime_; }
    bool over_q() const { return prime_ == 0; }

    int var_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("unknown variable: " + name);
        return it->second;
    }
    bool has_var(const std::string& name) const { return index_.count(name) != 0; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    uint64_t prime_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names, uint64_t prime = 0) {
    return std::make_shared<Ring>(std::move(names), prime);
}

// Variables x1..xn (or any prefix).
inline RingPtr make_ring_n(const std::string& prefix, int n, uint64_t prime = 0) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return make_ring(std::move(names), prime);
}

} // namespace bicone

#endif
