#ifndef BICONE_RNG_HPP
#define BICONE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace bicone {

// All randomness in the toolkit flows from one seeded generator so that
// every run is reproducible from the CLI seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    long uniform_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    // Small exact rational; numerators in [-9, 9], denominators in {1,2,3}.
    mpq_class rational() {
        mpq_class q(uniform_int(-9, 9), uniform_int(1, 3));
        q.canonicalize();
        return q;
    }

    mpq_class nonzero_rational() {
        for (;;) {
            mpq_class q = rational();
            if (q != 0) return q;
        }
    }

    std::vector<mpq_class> rational_vector(size_t n) {
        std::vector<mpq_class> v;
        v.reserve(n);
        for (size_t i = 0; i < n; ++i) v.push_back(rational());
        return v;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace bicone

#endif
