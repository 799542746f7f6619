#ifndef BICONE_MODP_HPP
#define BICONE_MODP_HPP

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace bicone {

// Arithmetic in F_p for an odd prime p < 2^62. Values are kept in
// Montgomery form (x * 2^64 mod p); REDC does the reductions, so the
// hot loop never divides.
class ModOps {
public:
    using C = uint64_t;
    using u128 = unsigned __int128;

    explicit ModOps(uint64_t p) : p_(p) {
        if (p < 3 || p >= (uint64_t(1) << 62) || (p & 1) == 0)
            throw std::invalid_argument("modulus must be an odd prime below 2^62");
        // p^{-1} mod 2^64 by Newton iteration, then negate
        uint64_t inv = p;
        for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
        ninv_ = ~inv + 1;
        uint64_t r = (~uint64_t(0)) % p + 1;          // 2^64 mod p
        r2_ = mulmod_slow(r, r);                      // 2^128 mod p
        one_ = redc(u128(r2_));                       // 1 in Montgomery form
    }

    uint64_t modulus() const { return p_; }

    C zero() const { return 0; }
    C one() const { return one_; }
    bool is_zero(C a) const { return a == 0; }
    bool is_one(C a) const { return a == one_; }

    C from_int(long v) const {
        uint64_t u = v >= 0 ? uint64_t(v) % p_ : p_ - ((uint64_t(-(v + 1)) + 1) % p_);
        if (u == p_) u = 0;
        return to_mont(u);
    }

    // Reduce an exact rational; the denominator must be invertible mod p.
    C from_mpq(const mpq_class& q) const {
        mpz_class num = q.get_num() % mpz_class(p_);
        mpz_class den = q.get_den() % mpz_class(p_);
        if (den == 0)
            throw std::domain_error("denominator divisible by the modulus");
        uint64_t n = mpz_class(num < 0 ? num + mpz_class(p_) : num).get_ui();
        uint64_t d = mpz_class(den).get_ui();
        return mul(to_mont(n), inv(to_mont(d)));
    }

    uint64_t to_uint(C a) const { return redc(u128(a)); }

    C add(C a, C b) const {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    C sub(C a, C b) const { return a >= b ? a - b : a + p_ - b; }
    C neg(C a) const { return a == 0 ? 0 : p_ - a; }
    C mul(C a, C b) const { return redc(u128(a) * b); }

    C pow(C a, uint64_t e) const {
        C r = one_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    C inv(C a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return pow(a, p_ - 2);
    }

    C div(C a, C b) const { return mul(a, inv(b)); }

private:
    uint64_t redc(u128 t) const {
        uint64_t m = uint64_t(t) * ninv_;
        uint64_t r = uint64_t((t + u128(m) * p_) >> 64);
        return r >= p_ ? r - p_ : r;
    }
    uint64_t to_mont(uint64_t a) const { return redc(u128(a) * r2_); }
    uint64_t mulmod_slow(uint64_t a, uint64_t b) const {
        return uint64_t(u128(a) * b % p_);
    }

    uint64_t p_, ninv_, r2_, one_;
};

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [n](uint64_t a, uint64_t b) { return uint64_t((unsigned __int128)a * b % n); };
    auto powmod = [&](uint64_t a, uint64_t e) {
        uint64_t r = 1;
        a %= n;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace bicone

#endif
