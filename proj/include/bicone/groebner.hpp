#ifndef BICONE_GROEBNER_HPP
#define BICONE_GROEBNER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicone/modp.hpp"
#include "bicone/poly.hpp"

namespace bicone::dimension {

struct Budget {
    uint64_t max_spair_reductions = 1'000'000;
    double max_seconds = 60.0;
};

struct GroebnerStats {
    uint64_t spair_reductions = 0;
    double seconds = 0.0;
    bool budget_exceeded = false;
};

// Reduced degrevlex basis: monic, auto-reduced, sorted by ascending
// leading monomial.
template <class K>
struct GroebnerBasis {
    RingPtr ring;
    std::vector<PolyT<K>> reduced_basis;
};

template <class K>
struct GroebnerResult {
    GroebnerBasis<K> gb;
    GroebnerStats stats;
    bool complete() const { return !stats.budget_exceeded; }
};

namespace detail {

inline double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class K>
void make_canonical(const K& k, PolyT<K>& f) {
    if (f.is_zero()) return;
    auto inv = k.inv(f.leading_coeff());
    for (auto& t : f.mutable_terms()) t.second = k.mul(t.second, inv);
}

// over Q, keep intermediates primitive-integer instead of monic
inline void make_canonical_intermediate(const RatOps&, Poly& f) { poly_make_primitive(f); }
template <class K>
void make_canonical_intermediate(const K& k, PolyT<K>& f) { make_canonical(k, f); }

// f - c * (m * g); the caller arranges the leading-term cancellation
template <class K>
PolyT<K> sub_scaled(const K& k, const PolyT<K>& f, size_t from, const PolyT<K>& g,
                    const Monomial& m, const typename K::C& c) {
    PolyT<K> r(f.ring());
    auto& out = r.mutable_terms();
    const auto& tf = f.terms();
    const auto& tg = g.terms();
    out.reserve(tf.size() - from + tg.size());
    size_t i = from, j = 0;
    while (i < tf.size() && j < tg.size()) {
        Monomial mg = tg[j].first * m;
        int cmpv = Monomial::cmp(tf[i].first, mg);
        if (cmpv > 0) { out.push_back(tf[i++]); continue; }
        auto prod = k.mul(c, tg[j].second);
        if (cmpv < 0) {
            out.emplace_back(mg, k.neg(prod));
            ++j;
        } else {
            auto d = k.sub(tf[i].second, prod);
            if (!k.is_zero(d)) out.emplace_back(tf[i].first, std::move(d));
            ++i; ++j;
        }
    }
    for (; i < tf.size(); ++i) out.push_back(tf[i]);
    for (; j < tg.size(); ++j)
        out.emplace_back(tg[j].first * m, k.neg(k.mul(c, tg[j].second)));
    return r;
}

} // namespace detail

// Full normal form against G; deterministic (first applicable reducer in
// basis order).
template <class K>
PolyT<K> normal_form(const K& k, const PolyT<K>& f0, const std::vector<PolyT<K>>& G) {
    using P = PolyT<K>;
    P f = f0;
    std::vector<typename P::Term> done;
    size_t pos = 0;
    while (pos < f.terms().size()) {
        const Monomial& lm = f.terms()[pos].first;
        const P* red = nullptr;
        for (auto& g : G)
            if (!g.is_zero() && g.leading_monomial().divides(lm)) { red = &g; break; }
        if (!red) {
            done.push_back(f.terms()[pos]);
            ++pos;
            continue;
        }
        Monomial m = lm / red->leading_monomial();
        auto c = k.div(f.terms()[pos].second, red->leading_coeff());
        // cancel the current term and fold the rest of the reducer in
        P rest = detail::sub_scaled(k, f, pos, *red, m, c);
        f = std::move(rest);
        pos = 0;
    }
    P r(f0.ring());
    r.mutable_terms() = std::move(done);
    return r;
}

template <class K>
PolyT<K> s_polynomial(const K& k, const PolyT<K>& f, const PolyT<K>& g) {
    Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    auto a = poly_mul_term(k, f, l / f.leading_monomial(), k.inv(f.leading_coeff()));
    auto b = poly_mul_term(k, g, l / g.leading_monomial(), k.inv(g.leading_coeff()));
    return poly_sub(k, a, b);
}

namespace detail {

struct Pair {
    int i, j;
    Monomial lcm;
};

// Gebauer-Moeller pair update on adding h to G.
template <class K>
void gm_update(std::vector<PolyT<K>>& G, std::vector<Pair>& B, PolyT<K> h) {
    const Monomial lh = h.leading_monomial();
    const int t = int(G.size());

    struct Cand {
        int g;
        Monomial lcm;
        bool coprime;
    };
    std::vector<Cand> C, D;
    for (int g = 0; g < t; ++g) {
        const Monomial& lg = G[g].leading_monomial();
        C.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    while (!C.empty()) {
        Cand c = C.back();
        C.pop_back();
        bool keep = c.coprime;
        if (!keep) {
            keep = true;
            for (auto& o : C)
                if (o.lcm.divides(c.lcm)) { keep = false; break; }
            if (keep)
                for (auto& o : D)
                    if (o.lcm.divides(c.lcm)) { keep = false; break; }
        }
        if (keep) D.push_back(std::move(c));
    }

    // chain criterion against the old pairs
    std::vector<Pair> kept;
    kept.reserve(B.size());
    for (auto& p : B) {
        bool drop = lh.divides(p.lcm) &&
                    G[p.i].leading_monomial().lcm(lh) != p.lcm &&
                    G[p.j].leading_monomial().lcm(lh) != p.lcm;
        if (!drop) kept.push_back(p);
    }
    B = std::move(kept);
    for (auto& c : D)
        if (!c.coprime) B.push_back(Pair{c.g, t, c.lcm});
    G.push_back(std::move(h));
}

inline bool pair_less(const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = Monomial::cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

} // namespace detail

template <class K>
GroebnerResult<K> buchberger(const K& k, const RingPtr& ring,
                             const std::vector<PolyT<K>>& gens,
                             const Budget& budget = Budget{}) {
    auto t0 = std::chrono::steady_clock::now();
    GroebnerResult<K> res;
    res.gb.ring = ring;

    std::vector<PolyT<K>> G;
    std::vector<detail::Pair> B;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        PolyT<K> h = g;
        detail::make_canonical_intermediate(k, h);
        detail::gm_update(G, B, std::move(h));
    }

    while (!B.empty()) {
        if (res.stats.spair_reductions >= budget.max_spair_reductions ||
            detail::elapsed_since(t0) > budget.max_seconds) {
            res.stats.budget_exceeded = true;
            break;
        }
        auto it = std::min_element(B.begin(), B.end(), detail::pair_less);
        detail::Pair p = *it;
        B.erase(it);
        PolyT<K> s = s_polynomial(k, G[p.i], G[p.j]);
        PolyT<K> h = normal_form(k, s, G);
        ++res.stats.spair_reductions;
        if (!h.is_zero()) {
            detail::make_canonical_intermediate(k, h);
            detail::gm_update(G, B, std::move(h));
        }
    }

    if (!res.stats.budget_exceeded) {
        // minimal basis: leading monomials pairwise non-divisible
        std::sort(G.begin(), G.end(), [](const PolyT<K>& a, const PolyT<K>& b) {
            return Monomial::cmp(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        std::vector<PolyT<K>> minimal;
        for (auto& g : G) {
            bool redundant = false;
            for (auto& m : minimal)
                if (m.leading_monomial().divides(g.leading_monomial())) {
                    redundant = true;
                    break;
                }
            if (!redundant) minimal.push_back(g);
        }
        // tail-reduce each against the others; leading terms survive
        std::vector<PolyT<K>> reduced;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<PolyT<K>> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            PolyT<K> r = normal_form(k, minimal[i], others);
            detail::make_canonical(k, r);
            reduced.push_back(std::move(r));
        }
        std::sort(reduced.begin(), reduced.end(), [](const PolyT<K>& a, const PolyT<K>& b) {
            return Monomial::cmp(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        res.gb.reduced_basis = std::move(reduced);
    } else {
        res.gb.reduced_basis = std::move(G); // partial, not a basis
    }
    res.stats.seconds = detail::elapsed_since(t0);
    return res;
}

// Soundness checks on a finished basis: every S-polynomial of a
// non-coprime pair reduces to zero, and every original generator reduces
// to zero. Budget-aware; returns false only on a genuine failure and
// reports exhaustion separately.
template <class K>
bool verify_groebner(const K& k, const GroebnerBasis<K>& gb,
                     const std::vector<PolyT<K>>& original, const Budget& budget,
                     bool* exhausted = nullptr) {
    auto t0 = std::chrono::steady_clock::now();
    if (exhausted) *exhausted = false;
    const auto& G = gb.reduced_basis;
    for (auto& f : original)
        if (!normal_form(k, f, G).is_zero()) return false;
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
            if (G[i].leading_monomial().coprime(G[j].leading_monomial())) continue;
            if (detail::elapsed_since(t0) > budget.max_seconds) {
                if (exhausted) *exhausted = true;
                return true;
            }
            if (!normal_form(k, s_polynomial(k, G[i], G[j]), G).is_zero()) return false;
        }
    return true;
}

// ---- Krull dimension via independent variable sets ------------------------

struct KrullResult {
    int dimension = -1;       // -1 for the unit ideal
    uint64_t witness_mask = 0; // lexicographically first maximal independent set
};

namespace detail {

// minimum hitting set size over the support masks, branch and bound
inline void hit_dfs(const std::vector<uint64_t>& masks, uint64_t hit, int chosen,
                    int& best) {
    if (chosen >= best) return;
    const uint64_t* unhit = nullptr;
    int fewest = 65;
    for (auto& m : masks) {
        if (m & hit) continue;
        int c = std::popcount(m);
        if (c < fewest) { fewest = c; unhit = &m; }
    }
    if (!unhit) {
        best = chosen;
        return;
    }
    uint64_t m = *unhit;
    while (m) {
        uint64_t v = m & (~m + 1);
        hit_dfs(masks, hit | v, chosen + 1, best);
        m ^= v;
    }
}

inline bool independent(const std::vector<uint64_t>& masks, uint64_t u) {
    for (auto& m : masks)
        if ((m & ~u) == 0) return false;
    return true;
}

// lexicographically-first independent set of the given size, preferring
// low variable indices
inline bool lex_first(const std::vector<uint64_t>& masks, int nvars, int need,
                      int from, uint64_t u, uint64_t& out) {
    if (need == 0) {
        out = u;
        return true;
    }
    for (int v = from; v <= nvars - need; ++v) {
        uint64_t u2 = u | (uint64_t(1) << v);
        if (!independent(masks, u2)) continue;
        if (lex_first(masks, nvars, need - 1, v + 1, u2, out)) return true;
    }
    return false;
}

} // namespace detail

template <class K>
KrullResult krull_dimension(const GroebnerBasis<K>& gb) {
    int nvars = gb.ring->nvars();
    std::vector<uint64_t> masks;
    for (auto& g : gb.reduced_basis) {
        uint64_t m = g.leading_monomial().support_mask();
        if (m == 0) return KrullResult{-1, 0}; // the ideal is the whole ring
        masks.push_back(m);
    }
    // keep only minimal masks
    std::sort(masks.begin(), masks.end(),
              [](uint64_t a, uint64_t b) { return std::popcount(a) < std::popcount(b); });
    std::vector<uint64_t> minimal;
    for (uint64_t m : masks) {
        bool dominated = false;
        for (uint64_t s : minimal)
            if ((s & ~m) == 0) { dominated = true; break; }
        if (!dominated) minimal.push_back(m);
    }
    int best = nvars + 1;
    detail::hit_dfs(minimal, 0, 0, best);
    if (best > nvars) best = 0; // no constraints
    KrullResult r;
    r.dimension = nvars - best;
    uint64_t witness = 0;
    if (detail::lex_first(minimal, nvars, r.dimension, 0, 0, witness))
        r.witness_mask = witness;
    return r;
}

} // namespace bicone::dimension

#endif
