#ifndef BICONE_MONOMIAL_HPP
#define BICONE_MONOMIAL_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bicone {

// Packed exponent vector for up to 64 variables, one byte per variable,
// with the total degree cached. Exponents are capped at 127 so that the
// word-wise add in mul() can never carry across byte lanes.
class Monomial {
public:
    static constexpr int max_vars = 64;
    static constexpr int words = 8;
    static constexpr unsigned max_exponent = 127;

    Monomial() = default;

    unsigned exponent(int var) const {
        return (w_[var >> 3] >> (8 * (var & 7))) & 0xff;
    }

    void set_exponent(int var, unsigned e) {
        if (e > max_exponent)
            throw std::overflow_error("monomial exponent exceeds 127");
        int w = var >> 3, sh = 8 * (var & 7);
        unsigned old = (w_[w] >> sh) & 0xff;
        w_[w] = (w_[w] & ~(uint64_t(0xff) << sh)) | (uint64_t(e) << sh);
        deg_ += e - old;
    }

    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < words; ++i) {
            uint64_t s = w_[i] + o.w_[i];
            if (s & 0x8080808080808080ULL)
                throw std::overflow_error("monomial exponent exceeds 127");
            r.w_[i] = s;
        }
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        // per-byte a <= b: set the high bit of every byte of b, subtract a;
        // lanes never borrow (bytes < 128), and the high bit survives iff a <= b.
        constexpr uint64_t H = 0x8080808080808080ULL;
        for (int i = 0; i < words; ++i)
            if ((((o.w_[i] | H) - w_[i]) & H) != H) return false;
        return true;
    }

    // this / o, requires o.divides(*this)
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < words; ++i) r.w_[i] = w_[i] - o.w_[i];
        r.deg_ = deg_ - o.deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        unsigned d = 0;
        for (int v = 0; v < max_vars; ++v) {
            unsigned e = exponent(v), f = o.exponent(v);
            unsigned m = e > f ? e : f;
            if (m) {
                int w = v >> 3, sh = 8 * (v & 7);
                r.w_[w] |= uint64_t(m) << sh;
                d += m;
            }
        }
        r.deg_ = d;
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < words; ++i) {
            // nonzero bytes in both at the same lane means a shared variable
            uint64_t a = w_[i], b = o.w_[i];
            for (int s = 0; s < 64; s += 8)
                if (((a >> s) & 0xff) && ((b >> s) & 0xff)) return false;
        }
        return true;
    }

    // Support of the monomial as a variable bitmask.
    uint64_t support_mask() const {
        uint64_t m = 0;
        for (int v = 0; v < max_vars; ++v)
            if (exponent(v)) m |= uint64_t(1) << v;
        return m;
    }

    bool operator==(const Monomial& o) const { return w_ == o.w_; }
    bool operator!=(const Monomial& o) const { return w_ != o.w_; }

    // degrevlex: higher total degree wins; on ties the monomial whose
    // exponent at the rightmost differing variable is smaller wins.
    // Returns -1, 0, +1 for a < b, a == b, a > b.
    static int cmp(const Monomial& a, const Monomial& b) {
        if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
        for (int i = words - 1; i >= 0; --i) {
            uint64_t x = a.w_[i] ^ b.w_[i];
            if (x) {
                int byte = 7 - (std::countl_zero(x) >> 3);
                unsigned ea = (a.w_[i] >> (8 * byte)) & 0xff;
                unsigned eb = (b.w_[i] >> (8 * byte)) & 0xff;
                return ea < eb ? 1 : -1;
            }
        }
        return 0;
    }

    bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }
    bool operator>(const Monomial& o) const { return cmp(*this, o) > 0; }

    size_t hash() const {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (uint64_t w : w_) { h ^= w; h *= 0x100000001b3ULL; }
        return size_t(h);
    }

private:
    std::array<uint64_t, words> w_{};
    uint32_t deg_ = 0;
};

} // namespace bicone

#endif
