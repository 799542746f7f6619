#ifndef BICONE_POLY_HPP
#define BICONE_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "bicone/modp.hpp"
#include "bicone/ring.hpp"

namespace bicone {

// Coefficient ops over Q. Stateless; exists so the same polynomial and
// Groebner code instantiates over Q and over F_p.
struct RatOps {
    using C = mpq_class;
    C zero() const { return C(0); }
    C one() const { return C(1); }
    bool is_zero(const C& a) const { return a == 0; }
    bool is_one(const C& a) const { return a == 1; }
    C from_int(long v) const { return C(v); }
    C add(const C& a, const C& b) const { return a + b; }
    C sub(const C& a, const C& b) const { return a - b; }
    C mul(const C& a, const C& b) const { return a * b; }
    C neg(const C& a) const { return -a; }
    C inv(const C& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return C(1) / a;
    }
    C div(const C& a, const C& b) const { return a / inv_guard(b); }

private:
    const C& inv_guard(const C& b) const {
        if (b == 0) throw std::domain_error("division by zero");
        return b;
    }
};

// Sparse multivariate polynomial: terms sorted descending in degrevlex,
// no zero coefficients, the zero polynomial owns no terms.
template <class K>
class PolyT {
public:
    using C = typename K::C;
    using Term = std::pair<Monomial, C>;

    PolyT() = default;
    explicit PolyT(RingPtr ring) : ring_(std::move(ring)) {}

    static PolyT zero(RingPtr ring) { return PolyT(std::move(ring)); }

    static PolyT constant(RingPtr ring, C c, const K& k) {
        PolyT p(std::move(ring));
        if (!k.is_zero(c)) p.t_.emplace_back(Monomial{}, std::move(c));
        return p;
    }

    static PolyT variable(RingPtr ring, int var, const K& k) {
        if (var < 0 || var >= ring->nvars())
            throw std::invalid_argument("variable index out of range");
        Monomial m;
        m.set_exponent(var, 1);
        PolyT p(std::move(ring));
        p.t_.emplace_back(m, k.one());
        return p;
    }

    static PolyT from_terms(RingPtr ring, std::vector<Term> terms, const K& k) {
        PolyT p(std::move(ring));
        p.t_ = std::move(terms);
        p.normalize(k);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    const Monomial& leading_monomial() const { return t_.front().first; }
    const C& leading_coeff() const { return t_.front().second; }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& t : t_) d = std::max(d, t.first.degree());
        return d;
    }

    bool operator==(const PolyT& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (size_t i = 0; i < t_.size(); ++i)
            if (t_[i].first != o.t_[i].first || t_[i].second != o.t_[i].second)
                return false;
        return true;
    }
    bool operator!=(const PolyT& o) const { return !(*this == o); }

    // sort descending, combine equal monomials, drop zeros
    void normalize(const K& k) {
        std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) {
            return Monomial::cmp(a.first, b.first) > 0;
        });
        size_t out = 0;
        for (size_t i = 0; i < t_.size();) {
            Monomial m = t_[i].first;
            C c = std::move(t_[i].second);
            size_t j = i + 1;
            while (j < t_.size() && t_[j].first == m) {
                c = k.add(c, t_[j].second);
                ++j;
            }
            if (!k.is_zero(c)) t_[out++] = Term(m, std::move(c));
            i = j;
        }
        t_.resize(out);
    }

    std::vector<Term>& mutable_terms() { return t_; }

private:
    RingPtr ring_;
    std::vector<Term> t_;
};

namespace detail {
inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get())
        throw std::invalid_argument("polynomial ring mismatch");
}
} // namespace detail

template <class K>
PolyT<K> poly_add(const K& k, const PolyT<K>& a, const PolyT<K>& b) {
    detail::check_same_ring(a.ring(), b.ring());
    PolyT<K> r(a.ring());
    auto& out = r.mutable_terms();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int c = Monomial::cmp(ta[i].first, tb[j].first);
        if (c > 0) out.push_back(ta[i++]);
        else if (c < 0) out.push_back(tb[j++]);
        else {
            auto s = k.add(ta[i].second, tb[j].second);
            if (!k.is_zero(s)) out.emplace_back(ta[i].first, std::move(s));
            ++i; ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) out.push_back(tb[j]);
    return r;
}

template <class K>
PolyT<K> poly_neg(const K& k, const PolyT<K>& a) {
    PolyT<K> r(a.ring());
    auto& out = r.mutable_terms();
    out.reserve(a.size());
    for (auto& t : a.terms()) out.emplace_back(t.first, k.neg(t.second));
    return r;
}

template <class K>
PolyT<K> poly_sub(const K& k, const PolyT<K>& a, const PolyT<K>& b) {
    return poly_add(k, a, poly_neg(k, b));
}

template <class K>
PolyT<K> poly_scale(const K& k, const PolyT<K>& a, const typename K::C& c) {
    PolyT<K> r(a.ring());
    if (k.is_zero(c)) return r;
    auto& out = r.mutable_terms();
    out.reserve(a.size());
    for (auto& t : a.terms()) out.emplace_back(t.first, k.mul(t.second, c));
    return r;
}

// a * (c * m); degrevlex order is preserved by a fixed monomial shift
template <class K>
PolyT<K> poly_mul_term(const K& k, const PolyT<K>& a, const Monomial& m,
                       const typename K::C& c) {
    PolyT<K> r(a.ring());
    if (k.is_zero(c)) return r;
    auto& out = r.mutable_terms();
    out.reserve(a.size());
    for (auto& t : a.terms()) out.emplace_back(t.first * m, k.mul(t.second, c));
    return r;
}

template <class K>
PolyT<K> poly_mul(const K& k, const PolyT<K>& a, const PolyT<K>& b) {
    detail::check_same_ring(a.ring(), b.ring());
    PolyT<K> r(a.ring());
    if (a.is_zero() || b.is_zero()) return r;
    auto& out = r.mutable_terms();
    out.reserve(a.size() * b.size());
    for (auto& ta : a.terms())
        for (auto& tb : b.terms())
            out.emplace_back(ta.first * tb.first, k.mul(ta.second, tb.second));
    r.normalize(k);
    return r;
}

template <class K>
PolyT<K> poly_pow(const K& k, const PolyT<K>& a, unsigned e) {
    PolyT<K> r = PolyT<K>::constant(a.ring(), k.one(), k);
    PolyT<K> base = a;
    while (e) {
        if (e & 1) r = poly_mul(k, r, base);
        e >>= 1;
        if (e) base = poly_mul(k, base, base);
    }
    return r;
}

template <class K>
PolyT<K> poly_diff(const K& k, const PolyT<K>& f, int var) {
    if (var < 0 || var >= f.ring()->nvars())
        throw std::invalid_argument("unknown variable in differentiation");
    PolyT<K> r(f.ring());
    auto& out = r.mutable_terms();
    for (auto& t : f.terms()) {
        unsigned e = t.first.exponent(var);
        if (e == 0) continue;
        Monomial m = t.first;
        m.set_exponent(var, e - 1);
        auto c = k.mul(t.second, k.from_int(long(e)));
        if (!k.is_zero(c)) out.emplace_back(m, std::move(c));
    }
    r.normalize(k);
    return r;
}

template <class K>
std::vector<PolyT<K>> poly_gradient(const K& k, const PolyT<K>& f,
                                    const std::vector<int>& vars) {
    std::vector<PolyT<K>> g;
    g.reserve(vars.size());
    for (int v : vars) g.push_back(poly_diff(k, f, v));
    return g;
}

// Composition: every variable occurring in f must have an image in the
// target ring. Images of a variable's powers are cached per variable.
template <class K>
PolyT<K> poly_substitute(const K& k, const PolyT<K>& f, const RingPtr& target,
                         const std::map<int, PolyT<K>>& images) {
    std::map<int, std::vector<PolyT<K>>> powers; // var -> [1, img, img^2, ...]
    auto power = [&](int v, unsigned e) -> const PolyT<K>& {
        auto it = images.find(v);
        if (it == images.end())
            throw std::invalid_argument("substitute: no image for variable " +
                                        f.ring()->name(v));
        detail::check_same_ring(it->second.ring(), target);
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(PolyT<K>::constant(target, k.one(), k));
        while (tab.size() <= e) tab.push_back(poly_mul(k, tab.back(), it->second));
        return tab[e];
    };
    PolyT<K> acc(target);
    for (auto& t : f.terms()) {
        PolyT<K> prod = PolyT<K>::constant(target, t.second, k);
        for (int v = 0; v < f.ring()->nvars(); ++v) {
            unsigned e = t.first.exponent(v);
            if (e) prod = poly_mul(k, prod, power(v, e));
        }
        acc = poly_add(k, acc, prod);
    }
    return acc;
}

// Remap a polynomial into another ring by explicit variable indices;
// index_map[v] = -1 forbids v from occurring.
template <class K>
PolyT<K> poly_reindex(const K& k, const PolyT<K>& f, const RingPtr& target,
                      const std::vector<int>& index_map) {
    PolyT<K> r(target);
    auto& out = r.mutable_terms();
    for (auto& t : f.terms()) {
        Monomial m;
        for (int v = 0; v < f.ring()->nvars(); ++v) {
            unsigned e = t.first.exponent(v);
            if (!e) continue;
            if (index_map.at(v) < 0)
                throw std::invalid_argument("variable has no image under the reindexing");
            m.set_exponent(index_map[v], e);
        }
        out.emplace_back(m, t.second);
    }
    r.normalize(k);
    return r;
}

// Remap a polynomial into another ring by matching variable names.
template <class K>
PolyT<K> poly_project(const K& k, const PolyT<K>& f, const RingPtr& target) {
    PolyT<K> r(target);
    auto& out = r.mutable_terms();
    for (auto& t : f.terms()) {
        Monomial m;
        for (int v = 0; v < f.ring()->nvars(); ++v) {
            unsigned e = t.first.exponent(v);
            if (!e) continue;
            m.set_exponent(target->var_index(f.ring()->name(v)), e);
        }
        out.emplace_back(m, t.second);
    }
    r.normalize(k);
    return r;
}

// Coefficient extraction on a pair of variables: f = sum a^m b^n * c_{m,n}
// with the c_{m,n} free of both variables.
template <class K>
std::map<std::pair<unsigned, unsigned>, PolyT<K>>
poly_collect_bidegree(const K& k, const PolyT<K>& f, int va, int vb) {
    std::map<std::pair<unsigned, unsigned>, std::vector<typename PolyT<K>::Term>> buckets;
    for (auto& t : f.terms()) {
        unsigned m = t.first.exponent(va), n = t.first.exponent(vb);
        Monomial mm = t.first;
        mm.set_exponent(va, 0);
        mm.set_exponent(vb, 0);
        buckets[{m, n}].emplace_back(mm, t.second);
    }
    std::map<std::pair<unsigned, unsigned>, PolyT<K>> out;
    for (auto& [key, terms] : buckets)
        out.emplace(key, PolyT<K>::from_terms(f.ring(), std::move(terms), k));
    return out;
}

// Coefficient extraction on one variable: f = sum t^j * c_j.
template <class K>
std::map<unsigned, PolyT<K>> poly_collect_var(const K& k, const PolyT<K>& f, int v) {
    std::map<unsigned, std::vector<typename PolyT<K>::Term>> buckets;
    for (auto& t : f.terms()) {
        unsigned e = t.first.exponent(v);
        Monomial mm = t.first;
        mm.set_exponent(v, 0);
        buckets[e].emplace_back(mm, t.second);
    }
    std::map<unsigned, PolyT<K>> out;
    for (auto& [key, terms] : buckets)
        out.emplace(key, PolyT<K>::from_terms(f.ring(), std::move(terms), k));
    return out;
}

inline bool poly_is_homogeneous(const PolyT<RatOps>& f) {
    if (f.is_zero()) return true;
    unsigned d = f.terms().front().first.degree();
    for (auto& t : f.terms())
        if (t.first.degree() != d) return false;
    return true;
}

// Homogeneity with respect to a subset of variables.
template <class K>
bool poly_is_homogeneous_in(const PolyT<K>& f, const std::vector<int>& vars,
                            unsigned degree) {
    for (auto& t : f.terms()) {
        unsigned d = 0;
        for (int v : vars) d += t.first.exponent(v);
        if (d != degree) return false;
    }
    return true;
}

// ---- Q-specialized conveniences -------------------------------------------

using Poly = PolyT<RatOps>;

inline Poly operator+(const Poly& a, const Poly& b) { return poly_add(RatOps{}, a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return poly_sub(RatOps{}, a, b); }
inline Poly operator-(const Poly& a) { return poly_neg(RatOps{}, a); }
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(RatOps{}, a, b); }
inline Poly operator*(const mpq_class& c, const Poly& a) { return poly_scale(RatOps{}, a, c); }

inline mpq_class poly_evaluate(const Poly& f, const std::vector<mpq_class>& point) {
    if (int(point.size()) != f.ring()->nvars())
        throw std::invalid_argument("evaluation point has wrong arity");
    // cache powers of the coordinates
    std::vector<std::vector<mpq_class>> pow(point.size(), {mpq_class(1)});
    mpq_class acc(0);
    for (auto& t : f.terms()) {
        mpq_class prod = t.second;
        for (size_t v = 0; v < point.size(); ++v) {
            unsigned e = t.first.exponent(int(v));
            if (!e) continue;
            auto& tab = pow[v];
            while (tab.size() <= e) tab.push_back(tab.back() * point[v]);
            prod *= tab[e];
        }
        acc += prod;
    }
    return acc;
}

// Scale to integer coefficients with content 1 and positive leading
// coefficient. Used to keep Buchberger intermediates small over Q.
inline void poly_make_primitive(Poly& f) {
    if (f.is_zero()) return;
    mpz_class den_lcm(1), num_gcd(0);
    for (auto& t : f.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
    }
    for (auto& t : f.terms()) {
        mpz_class n = t.second.get_num() * (den_lcm / t.second.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (f.leading_coeff() < 0) scale = -scale;
    for (auto& t : f.mutable_terms()) {
        t.second *= scale;
        t.second.canonicalize();
    }
}

inline void poly_make_monic(Poly& f) {
    if (f.is_zero()) return;
    mpq_class lc = f.leading_coeff();
    for (auto& t : f.mutable_terms()) t.second /= lc;
}

// Ideal over Q with one provenance label per generator.
struct Ideal {
    RingPtr ring;
    std::vector<Poly> generators;
    std::vector<std::string> labels;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Poly> gens, std::vector<std::string> labs)
        : ring(std::move(r)), generators(std::move(gens)), labels(std::move(labs)) {
        if (generators.size() != labels.size())
            throw std::invalid_argument("ideal: one label per generator required");
        for (size_t i = 0; i < generators.size(); ++i) {
            detail::check_same_ring(generators[i].ring(), ring);
            if (generators[i].is_zero())
                throw std::invalid_argument("ideal: zero generator " + labels[i]);
            for (size_t j = i + 1; j < labels.size(); ++j)
                if (labels[i] == labels[j])
                    throw std::invalid_argument("ideal: duplicate label " + labels[i]);
        }
    }
};

} // namespace bicone

#endif
