#include "bicone/suites.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bicone/rootsys.hpp"

namespace bicone::suites {

using liealg::Element;
using varieties::Kind;
using varieties::PairPoint;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

uint64_t claim_seed(uint64_t base, const std::string& id) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : id) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h ^ base;
}

Report claim(const std::string& id, const std::string& provenance,
             const std::function<void(Report&)>& body) {
    Report r;
    r.claim_id = id;
    r.provenance = provenance;
    r.status = "pass";
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.status = "fail";
        r.details = std::string("exception: ") + e.what();
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

void expect_eq(Report& r, const nlohmann::json& computed, const nlohmann::json& expected) {
    r.computed = computed;
    r.expected = expected;
    if (computed != expected) r.status = "fail";
}

QVec lin_comb(const mpq_class& a, const QVec& x, const mpq_class& b, const QVec& y) {
    QVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = a * x[i] + b * y[i];
    return z;
}

PairPoint gl2_apply(const PairPoint& p, const mpq_class& a, const mpq_class& b,
                    const mpq_class& c, const mpq_class& d) {
    return PairPoint{Element{lin_comb(a, p.x.coords, b, p.y.coords)},
                     Element{lin_comb(c, p.x.coords, d, p.y.coords)}};
}

std::string sl_tag(int n) { return "sl" + std::to_string(n); }

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "identities", "omega", "bicones", "dimensions",
        "jets",       "components", "nullcone", "all"};
    return names;
}

const invariants::PolarizedFamily& Session::family(int n) {
    auto it = families_.find(n);
    if (it == families_.end())
        it = families_.emplace(n, invariants::build_polarized_sl(n)).first;
    return it->second;
}

const varieties::VarietySpec& Session::variety(int n, Kind kind) {
    auto key = std::make_pair(n, int(kind));
    auto it = specs_.find(key);
    if (it == specs_.end())
        it = specs_.emplace(key, varieties::build_variety(kind, family(n))).first;
    return it->second;
}

PairPoint Session::random_pair(int n, Rng& rng) {
    const auto& L = *family(n).base.algebra;
    return PairPoint{Element{rng.rational_vector(L.dimension())},
                     Element{rng.rational_vector(L.dimension())}};
}

PairPoint Session::random_upper_pair(int n, Rng& rng) {
    const auto& L = *family(n).base.algebra;
    Element x = L.zero(), y = L.zero();
    for (int i : L.nilradical_indices()) {
        x.coords[i] = rng.rational();
        y.coords[i] = rng.rational();
    }
    return PairPoint{x, y};
}

PairPoint Session::rsc4_pair() {
    const auto& L = *family(3).base.algebra;
    QMat xm = mat_zero(3, 3);
    xm[1][0] = 1;
    xm[2][1] = -1;
    return PairPoint{L.element_from_matrix(xm), L.e()};
}

std::vector<PairPoint> Session::nilpotent_bicone_members(int n, Rng& rng, size_t count) {
    const auto& pf = family(n);
    const auto& L = *pf.base.algebra;
    std::vector<PairPoint> base;
    base.push_back(PairPoint{L.zero(), L.zero()});
    base.push_back(PairPoint{L.e(), L.zero()});
    base.push_back(random_upper_pair(n, rng));
    base.push_back(random_upper_pair(n, rng));
    if (n >= 3) {
        base.push_back(varieties::witness_polind(pf, variety(n, Kind::NilpotentBicone)));
        if (n == 3) base.push_back(rsc4_pair());
    }
    std::vector<PairPoint> out;
    while (out.size() < count) {
        const PairPoint& b = base[rng.next_u64() % base.size()];
        // scalings and invertible 2x2 substitutions preserve membership
        mpq_class a = rng.rational(), bb = rng.rational(), c = rng.rational(),
                  d = rng.rational();
        if (a * d - bb * c == 0) continue;
        out.push_back(gl2_apply(b, a, bb, c, d));
    }
    return out;
}

// ---- identities ------------------------------------------------------------

std::vector<Report> suite_identities(Session& s) {
    std::vector<Report> out;
    for (int n : s.options().algebras) {
        const auto& pf = s.family(n);
        const auto& L = *pf.base.algebra;
        const int b = L.borel_dimension(), rk = L.rank();
        const std::string tag = sl_tag(n);

        out.push_back(claim("identities/degree-sum-" + tag, "paper", [&](Report& r) {
            unsigned sum = std::accumulate(pf.base.degrees.begin(), pf.base.degrees.end(), 0u);
            expect_eq(r, sum, unsigned(b));
        }));

        out.push_back(claim("identities/polarization-count-" + tag, "paper", [&](Report& r) {
            expect_eq(r, pf.polarization_count(), size_t(b + rk));
        }));

        out.push_back(claim("identities/q-polarization-count-" + tag, "derived",
                            [&](Report& r) {
                                expect_eq(r, pf.q_polarization_count(), size_t(b + rk - 3));
                            }));

        out.push_back(claim("identities/q-vanish-on-h-" + tag, "paper", [&](Report& r) {
            size_t nonzero = 0;
            for (auto& qi : pf.q)
                if (poly_evaluate(qi, L.h().coords) != 0) ++nonzero;
            expect_eq(r, nonzero, size_t(0));
        }));

        out.push_back(claim("identities/epsilon-top-zero-" + tag, "paper", [&](Report& r) {
            size_t nonzero = 0;
            for (int i = 0; i < rk; ++i)
                for (auto& coord : pf.eps[i][0])
                    if (!coord.is_zero()) ++nonzero;
            expect_eq(r, nonzero, size_t(0));
        }));

        out.push_back(claim("identities/polarize-roundtrip-" + tag, "derived",
                            [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            int mismatches = 0;
            const int trials = 20;
            for (int t = 0; t < trials; ++t) {
                mpq_class a = rng.rational(), bb = rng.rational();
                QVec x = rng.rational_vector(L.dimension());
                QVec y = rng.rational_vector(L.dimension());
                QVec z = lin_comb(a, x, bb, y);
                auto pt = pf.pair_coords(x, y);
                for (int i = 0; i < rk; ++i) {
                    mpq_class lhs = poly_evaluate(pf.base.p[i], z);
                    mpq_class rhs(0);
                    for (unsigned m = 0; m <= pf.degree(i); ++m) {
                        mpq_class coeff(1);
                        for (unsigned u = 0; u < m; ++u) coeff *= a;
                        for (unsigned u = 0; u < pf.degree(i) - m; ++u) coeff *= bb;
                        rhs += coeff * poly_evaluate(pf.p_pol[i][m], pt);
                    }
                    if (lhs != rhs) ++mismatches;
                }
            }
            expect_eq(r, nlohmann::json{{"trials", trials}, {"mismatches", mismatches}},
                      nlohmann::json{{"trials", trials}, {"mismatches", 0}});
        }));

        out.push_back(claim("identities/characteristic-submodule-" + tag, "paper",
                            [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            std::vector<std::pair<QVec, QVec>> samples;
            samples.emplace_back(L.h().coords, L.e().coords);
            // perturb inside h' + u and g_2' + higher grades, then retest
            for (int t = 0; t < 5; ++t) {
                Element x = L.h(), y = L.e();
                for (int i : L.nilradical_indices()) {
                    x.coords[i] += rng.rational();
                    if (L.grading_of_basis(i) >= 4) y.coords[i] += rng.rational();
                }
                samples.emplace_back(x.coords, y.coords);
            }
            auto res = invariants::characteristic_submodule_check(pf, samples);
            r.computed = nlohmann::json{{"accepted", res.accepted},
                                        {"rejected", res.rejected},
                                        {"membership_misses", res.membership_misses}};
            r.expected = nlohmann::json{{"accepted", samples.size()},
                                        {"rejected", 0},
                                        {"membership_misses", 0}};
            if (res.accepted != samples.size() || res.rejected != 0) r.status = "fail";
            else if (res.membership_misses > 0) r.status = "inconclusive";
        }));

        out.push_back(claim("identities/epsilon-expansion-" + tag, "paper", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            int mismatches = 0;
            const int trials = 20;
            auto check = [&](const mpq_class& a, const mpq_class& bb, const QVec& x,
                             const QVec& y) {
                QVec z = lin_comb(a, x, bb, y);
                for (int i = 0; i < rk; ++i) {
                    QVec lhs = invariants::eps_base_at(pf, i, z);
                    QVec rhs(L.dimension(), mpq_class(0));
                    for (unsigned m = 1; m <= pf.degree(i); ++m) {
                        mpq_class coeff(1);
                        for (unsigned u = 0; u + 1 < m; ++u) coeff *= a;
                        for (unsigned u = 0; u < pf.degree(i) - m; ++u) coeff *= bb;
                        QVec em = invariants::eps_at(pf, i, int(m), x, y);
                        for (int c = 0; c < L.dimension(); ++c) rhs[c] += coeff * em[c];
                    }
                    if (lhs != rhs) ++mismatches;
                }
            };
            for (int t = 0; t < trials; ++t)
                check(rng.rational(), rng.rational(), rng.rational_vector(L.dimension()),
                      rng.rational_vector(L.dimension()));
            // the two degenerate specializations
            QVec x = rng.rational_vector(L.dimension());
            QVec y = rng.rational_vector(L.dimension());
            check(mpq_class(1), mpq_class(0), x, y); // eps_i(x) = eps_{i,d_i,0}
            check(mpq_class(0), mpq_class(1), x, y); // eps_i(y) = eps_{i,1,d_i-1}
            expect_eq(r, nlohmann::json{{"trials", trials + 2}, {"mismatches", mismatches}},
                      nlohmann::json{{"trials", trials + 2}, {"mismatches", 0}});
        }));
    }
    return out;
}

// ---- omega -----------------------------------------------------------------

std::vector<Report> suite_omega(Session& s) {
    std::vector<Report> out;
    for (int n : s.options().algebras) {
        const auto& pf = s.family(n);
        const auto& L = *pf.base.algebra;
        const std::string tag = sl_tag(n);

        out.push_back(claim("omega/fixtures-" + tag, "paper", [&](Report& r) {
            std::vector<PairPoint> fixtures{
                PairPoint{L.e(), L.h()}, PairPoint{L.f(), L.h()},
                PairPoint{L.e(), L.f()}, PairPoint{L.h(), L.e()}};
            int inside = 0;
            for (auto& p : fixtures)
                if (varieties::is_in_omega(pf, p)) ++inside;
            expect_eq(r, inside, 4);
        }));

        out.push_back(claim("omega/collinear-rejected-" + tag, "trivial", [&](Report& r) {
            PairPoint p{L.e(), mpq_class(2) * L.e()};
            expect_eq(r, varieties::is_in_omega(pf, p), false);
        }));

        out.push_back(claim("omega/smooth-agreement-" + tag, "derived", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            const int pairs = 100;
            int smooth = 0;
            for (int t = 0; t < pairs; ++t) {
                PairPoint p = s.random_pair(n, rng);
                if (varieties::is_smooth_point_of_N(pf, p)) ++smooth; // throws on mismatch
            }
            r.computed = nlohmann::json{{"pairs", pairs}, {"smooth", smooth}};
            r.expected = nlohmann::json{{"pairs", pairs}};
            r.details = "Jacobian rank test agreed with the span test on every pair";
        }));

        out.push_back(claim("omega/smooth-codim-identity-" + tag, "derived", [&](Report& r) {
            // at smooth points the Jacobian's codimension b+rk matches
            // 2 dim g - 3(b - rk)
            int lhs = 2 * L.dimension() - (L.borel_dimension() + L.rank());
            int rhs = 3 * (L.borel_dimension() - L.rank());
            expect_eq(r, lhs, rhs);
        }));

        if (n == 3) {
            out.push_back(claim("omega/explicit-sl3-pair", "paper", [&](Report& r) {
                expect_eq(r, varieties::is_in_omega(pf, s.rsc4_pair()), true);
            }));
        }
    }
    return out;
}

// ---- bicones ---------------------------------------------------------------

std::vector<Report> suite_bicones(Session& s) {
    std::vector<Report> out;
    for (int n : s.options().algebras) {
        const auto& pf = s.family(n);
        const auto& L = *pf.base.algebra;
        const std::string tag = sl_tag(n);
        const auto& nb = s.variety(n, Kind::NilpotentBicone);
        const auto& xb = s.variety(n, Kind::PrincipalBicone);
        const auto& yb = s.variety(n, Kind::Ybicone);
        const auto& zb = s.variety(n, Kind::Zbicone);

        out.push_back(claim("bicones/scaling-invariance-" + tag, "paper", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            auto members = s.nilpotent_bicone_members(n, rng, 10);
            int failures = 0;
            for (int t = 0; t < 50; ++t) {
                const auto& p = members[rng.next_u64() % members.size()];
                PairPoint sc{rng.nonzero_rational() * p.x, rng.nonzero_rational() * p.y};
                if (!varieties::is_in_bicone(sc, nb)) ++failures;
            }
            expect_eq(r, failures, 0);
        }));

        out.push_back(claim("bicones/gl2-invariance-" + tag, "paper", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            auto members = s.nilpotent_bicone_members(n, rng, 10);
            int failures = 0, done = 0;
            while (done < 50) {
                mpq_class a = rng.rational(), b = rng.rational(), c = rng.rational(),
                          d = rng.rational();
                if (a * d - b * c == 0) continue;
                const auto& p = members[rng.next_u64() % members.size()];
                if (!varieties::is_in_bicone(gl2_apply(p, a, b, c, d), nb)) ++failures;
                ++done;
            }
            expect_eq(r, failures, 0);
        }));

        out.push_back(claim("bicones/containment-chain-" + tag, "paper", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            auto members = s.nilpotent_bicone_members(n, rng, 20);
            int broken = 0;
            for (auto& p : members) {
                bool in_n = varieties::is_in_bicone(p, nb);
                bool in_z = varieties::is_in_bicone(p, zb);
                bool in_y = varieties::is_in_bicone(p, yb);
                bool in_x = varieties::is_in_bicone(p, xb);
                if (!(in_n && in_z && in_y && in_x)) ++broken;
            }
            expect_eq(r, broken, 0);
        }));

        out.push_back(claim("bicones/principal-sl2-span-" + tag, "paper", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            int failures = 0;
            for (int t = 0; t < 10; ++t) {
                Element x = rng.rational() * L.e() + rng.rational() * L.h() +
                            rng.rational() * L.f();
                Element y = rng.rational() * L.e() + rng.rational() * L.h() +
                            rng.rational() * L.f();
                if (!varieties::is_in_bicone(PairPoint{x, y}, xb)) ++failures;
            }
            expect_eq(r, failures, 0);
        }));

        out.push_back(claim("bicones/borel-slice-" + tag, "paper", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            bool he = varieties::is_in_bicone(PairPoint{L.h(), L.e()}, xb);
            Element u = L.zero();
            for (int i : L.nilradical_indices()) u.coords[i] = rng.rational();
            bool hb0 = varieties::is_in_bicone(
                PairPoint{L.h(), rng.rational() * L.h() + u}, xb);
            bool negative_ok = true;
            if (n >= 3) {
                // a Cartan element not collinear with h leaves the slice
                Element t = L.basis_element(L.basis_index("H1"));
                negative_ok = !varieties::is_in_bicone(PairPoint{L.h(), t}, xb);
            }
            expect_eq(r,
                      nlohmann::json{{"h_e", he}, {"h_b0", hb0}, {"negative", negative_ok}},
                      nlohmann::json{{"h_e", true}, {"h_b0", true}, {"negative", true}});
        }));

        out.push_back(claim("bicones/witness-bracket-square-" + tag, "paper", [&](Report& r) {
            auto wf = varieties::witness_li3(pf, L.f());
            bool f_rejected = !wf.accepted() &&
                              wf.obstruction == (mpq_class(-2) * L.f());
            // the lowest-root vector works once the algebra is bigger than sl2
            // (in sl2 it coincides with f)
            bool lowest_ok = true;
            if (n >= 3) {
                auto wl = varieties::witness_li3(pf, L.basis_element(L.lowest_root_index()));
                lowest_ok = wl.accepted() && varieties::is_in_bicone(*wl.pair, nb);
            }
            auto wz = varieties::witness_li3(pf, L.zero());
            bool zero_ok = wz.accepted() && wz.pair->y.is_zero();
            expect_eq(r,
                      nlohmann::json{{"f_rejected", f_rejected},
                                     {"lowest_root_accepted", lowest_ok},
                                     {"zero_accepted", zero_ok}},
                      nlohmann::json{{"f_rejected", true},
                                     {"lowest_root_accepted", true},
                                     {"zero_accepted", true}});
        }));

        out.push_back(claim("bicones/origin-member-" + tag, "trivial", [&](Report& r) {
            PairPoint origin{L.zero(), L.zero()};
            bool all = varieties::is_in_bicone(origin, nb) &&
                       varieties::is_in_bicone(origin, xb) &&
                       varieties::is_in_bicone(origin, yb) &&
                       varieties::is_in_bicone(origin, zb);
            expect_eq(r, all, true);
        }));

        out.push_back(claim("bicones/nonmember-" + tag, "trivial", [&](Report& r) {
            expect_eq(r, varieties::is_in_bicone(PairPoint{L.h(), L.h()}, nb), false);
        }));

        if (n == 3) {
            out.push_back(claim("bicones/explicit-sl3-member", "paper", [&](Report& r) {
                expect_eq(r, varieties::is_in_bicone(s.rsc4_pair(), nb), true);
            }));
        }
    }
    return out;
}

// ---- nullcone --------------------------------------------------------------

std::vector<Report> suite_nullcone(Session& s) {
    std::vector<Report> out;
    for (int n : s.options().algebras) {
        const auto& pf = s.family(n);
        const auto& L = *pf.base.algebra;
        const std::string tag = sl_tag(n);
        const auto& nb = s.variety(n, Kind::NilpotentBicone);

        out.push_back(claim("nullcone/uxu-members-" + tag, "derived", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            const int samples = 200;
            int in_nullcone = 0, in_bicone = 0;
            for (int t = 0; t < samples; ++t) {
                PairPoint p = s.random_upper_pair(n, rng);
                bool nc = varieties::is_in_nullcone(L, p);
                if (nc) ++in_nullcone;
                if (varieties::is_in_bicone(p, nb)) ++in_bicone;
            }
            expect_eq(r,
                      nlohmann::json{{"samples", samples},
                                     {"nullcone", in_nullcone},
                                     {"bicone", in_bicone}},
                      nlohmann::json{{"samples", samples},
                                     {"nullcone", samples},
                                     {"bicone", samples}});
        }));

        out.push_back(claim("nullcone/omega-exclusion-" + tag, "paper", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            const int samples = 200;
            int rejected = 0;
            for (int t = 0; t < samples; ++t)
                if (!varieties::is_in_omega(pf, s.random_upper_pair(n, rng))) ++rejected;
            expect_eq(r, rejected, samples);
        }));

        out.push_back(claim("nullcone/ef-pair-" + tag, "trivial", [&](Report& r) {
            bool ef = varieties::is_in_nullcone(L, PairPoint{L.e(), L.f()});
            Element upper = L.basis_element(L.nilradical_indices().back());
            bool eu = varieties::is_in_nullcone(L, PairPoint{L.e(), upper});
            expect_eq(r, nlohmann::json{{"e_f", ef}, {"e_upper", eu}},
                      nlohmann::json{{"e_f", false}, {"e_upper", true}});
        }));

        out.push_back(claim("nullcone/polind-witness-" + tag, "paper", [&](Report& r) {
            if (n == 2) {
                bool rejected = false;
                try {
                    varieties::witness_polind(pf, nb);
                } catch (const std::invalid_argument&) {
                    rejected = true;
                }
                expect_eq(r, nlohmann::json{{"rejected", rejected}},
                          nlohmann::json{{"rejected", true}});
                return;
            }
            PairPoint w = varieties::witness_polind(pf, nb);
            bool in_n = varieties::is_in_bicone(w, nb);
            bool in_v = varieties::is_in_nullcone(L, w);
            expect_eq(r, nlohmann::json{{"in_bicone", in_n}, {"in_nullcone", in_v}},
                      nlohmann::json{{"in_bicone", true}, {"in_nullcone", false}});
        }));

        out.push_back(claim("nullcone/tangent-rank-" + tag, "derived", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            int expected = 3 * (L.borel_dimension() - L.rank());
            int best = 0;
            for (int t = 0; t < 3; ++t) {
                PairPoint p = s.random_upper_pair(n, rng);
                best = std::max(best, dimension::tangent_rank_nullcone(L, p));
            }
            expect_eq(r, best, expected);
        }));

        out.push_back(claim("nullcone/principal-cone-members-" + tag, "paper",
                            [&](Report& r) {
            bool h_member = varieties::principal_cone_membership(pf, L.h());
            bool e_member = varieties::principal_cone_membership(pf, L.e());
            bool h_check = varieties::p1_nilpotency_check(pf, L.h());
            bool e_check = varieties::p1_nilpotency_check(pf, L.e());
            mpq_class p1h = poly_evaluate(pf.base.p[0], L.h().coords);
            expect_eq(r,
                      nlohmann::json{{"h_member", h_member},
                                     {"e_member", e_member},
                                     {"h_consistent", h_check},
                                     {"e_consistent", e_check},
                                     {"p1_h_nonzero", p1h != 0}},
                      nlohmann::json{{"h_member", true},
                                     {"e_member", true},
                                     {"h_consistent", true},
                                     {"e_consistent", true},
                                     {"p1_h_nonzero", true}});
        }));
    }
    return out;
}

// ---- dimensions ------------------------------------------------------------

namespace {

Report dimension_claim(Session& s, const std::string& id, const std::string& provenance,
                       int n, Kind kind, const dimension::FieldChoice& field) {
    return claim(id, provenance, [&](Report& r) {
        auto res = dimension::dimension_report(s.variety(n, kind), field,
                                               s.options().budget);
        r.computed = res.krull_dimension ? nlohmann::json(*res.krull_dimension)
                                         : nlohmann::json();
        r.expected = res.expected_dimension ? nlohmann::json(*res.expected_dimension)
                                            : nlohmann::json();
        nlohmann::json details{{"field", res.field},
                               {"basis_size", res.basis_size},
                               {"spair_reductions", res.spair_reductions},
                               {"seconds", res.elapsed_seconds},
                               {"soundness_checked", res.soundness_checked},
                               {"independent_vars", res.independent_variables}};
        if (res.modular) details["note"] = "modular heuristic";
        r.details = details.dump();
        if (res.budget_exceeded) r.status = "budget-exceeded";
        else if (!res.matches_expected()) r.status = "fail";
    });
}

} // namespace

std::vector<Report> suite_dimensions(Session& s) {
    std::vector<Report> out;
    const auto& opt = s.options();
    dimension::FieldChoice q{};

    bool has2 = false, has3 = false;
    for (int n : opt.algebras) {
        has2 |= n == 2;
        has3 |= n == 3;
    }

    if (has2) {
        out.push_back(dimension_claim(s, "dimensions/nilpotent-bicone-sl2", "paper", 2,
                                      Kind::NilpotentBicone, q));
        out.push_back(dimension_claim(s, "dimensions/principal-bicone-sl2", "trivial", 2,
                                      Kind::PrincipalBicone, q));
        out.push_back(dimension_claim(s, "dimensions/y-bicone-sl2", "paper", 2,
                                      Kind::Ybicone, q));
        out.push_back(dimension_claim(s, "dimensions/z-bicone-sl2", "paper", 2,
                                      Kind::Zbicone, q));
        out.push_back(dimension_claim(s, "dimensions/nilpotent-cone-sl2", "paper", 2,
                                      Kind::NilpotentCone, q));
        out.push_back(dimension_claim(s, "dimensions/principal-cone-sl2", "trivial", 2,
                                      Kind::PrincipalCone, q));

        out.push_back(claim("dimensions/monotone-chain-sl2", "derived", [&](Report& r) {
            std::vector<int> dims;
            for (Kind k : {Kind::PrincipalBicone, Kind::Ybicone, Kind::Zbicone,
                           Kind::NilpotentBicone}) {
                auto res = dimension::dimension_report(s.variety(2, k), q, opt.budget);
                if (!res.krull_dimension) throw std::runtime_error("budget exceeded");
                dims.push_back(*res.krull_dimension);
            }
            bool monotone = true;
            for (size_t i = 1; i < dims.size(); ++i) monotone &= dims[i - 1] >= dims[i];
            expect_eq(r, nlohmann::json{{"dims", dims}, {"monotone", monotone}},
                      nlohmann::json{{"dims", {6, 5, 4, 3}}, {"monotone", true}});
        }));

        out.push_back(claim("dimensions/groebner-soundness-sl2", "derived", [&](Report& r) {
            RatOps k;
            const auto& spec = s.variety(2, Kind::NilpotentBicone);
            auto run = dimension::buchberger(k, spec.ideal.ring, spec.ideal.generators,
                                             opt.budget);
            if (!run.complete()) throw std::runtime_error("budget exceeded");
            bool ok = dimension::verify_groebner(k, run.gb, spec.ideal.generators,
                                                 opt.budget);
            expect_eq(r, ok, true);
        }));
    }

    if (has3) {
        out.push_back(dimension_claim(s, "dimensions/nilpotent-cone-sl3", "paper", 3,
                                      Kind::NilpotentCone, q));
        out.push_back(dimension_claim(s, "dimensions/principal-cone-sl3", "derived", 3,
                                      Kind::PrincipalCone, q));
        if (!opt.field.over_q()) {
            out.push_back(dimension_claim(s, "dimensions/nilpotent-bicone-sl3-modular",
                                          "paper", 3, Kind::NilpotentBicone, opt.field));
            out.push_back(dimension_claim(s, "dimensions/principal-bicone-sl3-modular",
                                          "paper", 3, Kind::PrincipalBicone, opt.field));
        }
    }
    return out;
}

// ---- jets ------------------------------------------------------------------

std::vector<Report> suite_jets(Session& s) {
    std::vector<Report> out;
    const auto& opt = s.options();
    dimension::FieldChoice q{};

    bool has2 = false;
    for (int n : opt.algebras) has2 |= n == 2;

    if (has2) {
        for (int m = 1; m <= 3; ++m) {
            out.push_back(claim("jets/dimension-sl2-m" + std::to_string(m), "paper",
                                [&, m](Report& r) {
                auto jet = jets::build_jet_ideal(s.variety(2, Kind::NilpotentCone), m);
                auto res = jets::check_mustata_dimension(jet, q, opt.budget);
                r.computed = res.krull_dimension ? nlohmann::json(*res.krull_dimension)
                                                 : nlohmann::json();
                r.expected = *res.expected_dimension;
                if (res.budget_exceeded) r.status = "budget-exceeded";
                else if (!res.matches_expected()) r.status = "fail";
            }));
        }

        out.push_back(claim("jets/order-zero-is-base-sl2", "trivial", [&](Report& r) {
            RatOps k;
            const auto& base = s.variety(2, Kind::NilpotentCone).ideal;
            auto jet = jet_expand(base, 0);
            std::vector<int> identity(base.ring->nvars());
            std::iota(identity.begin(), identity.end(), 0);
            bool equal = jet.generators.size() == base.generators.size();
            for (size_t i = 0; equal && i < base.generators.size(); ++i)
                equal = poly_reindex(k, jet.generators[i], base.ring, identity) ==
                        base.generators[i];
            expect_eq(r, equal, true);
        }));

        out.push_back(claim("jets/truncation-compatibility-sl2", "paper", [&](Report& r) {
            RatOps k;
            const auto& base = s.variety(2, Kind::NilpotentCone).ideal;
            for (int m = 1; m <= 3; ++m) {
                auto big = jet_expand(base, m);
                auto small = jet_expand(base, m - 1);
                // generators at t-levels 0..m-1 must match under renaming
                size_t idx_small = 0;
                for (size_t g = 0; g < base.generators.size(); ++g)
                    for (int lvl = 0; lvl < m; ++lvl) {
                        const Poly& from_big = big.generators[g * (m + 1) + lvl];
                        const Poly& from_small = small.generators[idx_small++];
                        if (poly_project(k, from_big, small.ring) != from_small)
                            throw std::logic_error("truncation mismatch");
                    }
            }
            expect_eq(r, true, true);
        }));
    }

    for (int n : opt.algebras) {
        const std::string tag = sl_tag(n);
        out.push_back(claim("jets/arcs-equivalence-" + tag, "derived", [&](Report& r) {
            Rng rng(claim_seed(s.options().seed, r.claim_id));
            const auto& L = *s.family(n).base.algebra;
            auto samples = s.nilpotent_bicone_members(n, rng, 25);
            // non-members and boundary fixtures
            samples.push_back(PairPoint{L.h(), L.h()});
            samples.push_back(PairPoint{L.h(), L.e()});
            for (int t = 0; t < 24; ++t) samples.push_back(s.random_pair(n, rng));
            auto res = jets::bicone_as_arcs_check(s.variety(n, Kind::NilpotentBicone),
                                                  s.variety(n, Kind::NilpotentCone),
                                                  samples);
            expect_eq(r,
                      nlohmann::json{{"samples", res.samples}, {"mismatches", res.mismatches}},
                      nlohmann::json{{"samples", samples.size()}, {"mismatches", 0}});
        }));
    }

    bool has3 = false;
    for (int n : opt.algebras) has3 |= n == 3;
    if (has3) {
        out.push_back(claim("jets/principal-cone-sl3-m1-shape", "derived", [&](Report& r) {
            auto jet = jets::build_jet_ideal(s.variety(3, Kind::PrincipalCone), 1);
            expect_eq(r,
                      nlohmann::json{{"generators", jet.ideal.generators.size()},
                                     {"vars", jet.ideal.ring->nvars()}},
                      nlohmann::json{{"generators", 2}, {"vars", 16}});
        }));
    }
    return out;
}

// ---- components ------------------------------------------------------------

std::vector<Report> suite_components(Session&) {
    std::vector<Report> out;

    out.push_back(claim("components/lower-bounds-typeA", "paper", [&](Report& r) {
        std::vector<long> got;
        for (int rank = 1; rank <= 5; ++rank)
            got.push_back(
                rootsys::component_lower_bound(rootsys::build_root_datum('A', rank)));
        expect_eq(r, got, std::vector<long>{1, 2, 4, 7, 12});
    }));

    out.push_back(claim("components/highest-root-scan-empty", "paper", [&](Report& r) {
        nlohmann::json per;
        int total_hits = 0;
        for (auto& [t, rank] : rootsys::supported_data()) {
            auto d = rootsys::build_root_datum(t, rank);
            auto hits = rootsys::scan_highest_root_conditions(d);
            per[d.name()] = hits.size();
            total_hits += int(hits.size());
        }
        r.computed = per;
        r.expected = nlohmann::json("all zero");
        if (total_hits != 0) r.status = "fail";
    }));

    out.push_back(claim("components/levi-fixtures", "derived", [&](Report& r) {
        auto fmt = [](const rootsys::LeviShape& shape) {
            std::string s;
            for (auto& [t, rank] : shape.simple_factors)
                s += std::string(1, t) + std::to_string(rank) + " ";
            return s;
        };
        auto a3 = rootsys::levi_decompose(rootsys::build_root_datum('A', 3), 0b101);
        auto a4 = rootsys::levi_decompose(rootsys::build_root_datum('A', 4), 0b0111);
        auto a5 = rootsys::levi_decompose(rootsys::build_root_datum('A', 5), 0b11011);
        expect_eq(r,
                  nlohmann::json{{"A3:13", fmt(a3)}, {"A4:123", fmt(a4)}, {"A5:1245", fmt(a5)}},
                  nlohmann::json{{"A3:13", "A1 A1 "}, {"A4:123", "A3 "}, {"A5:1245", "A2 A2 "}});
    }));

    out.push_back(claim("components/positive-root-counts", "derived", [&](Report& r) {
        int bad = 0;
        for (auto& [t, rank] : rootsys::supported_data()) {
            auto d = rootsys::build_root_datum(t, rank);
            int expected =
                (rootsys::simple_algebra_dimension(t, rank) - rank) / 2;
            if (int(d.positive_roots.size()) != expected) ++bad;
        }
        expect_eq(r, bad, 0);
    }));

    out.push_back(claim("components/highest-root-fixtures", "derived", [&](Report& r) {
        auto a1 = rootsys::build_root_datum('A', 1);
        auto a2 = rootsys::build_root_datum('A', 2);
        auto g2 = rootsys::build_root_datum('G', 2);
        expect_eq(r,
                  nlohmann::json{{"A1", a1.highest_root},
                                 {"A2", a2.highest_root},
                                 {"G2", g2.highest_root}},
                  nlohmann::json{{"A1", {1}}, {"A2", {1, 1}}, {"G2", {3, 2}}});
    }));

    return out;
}

std::vector<Report> run_suite(const std::string& suite, const Options& opt) {
    Session s(opt);
    if (suite == "identities") return suite_identities(s);
    if (suite == "omega") return suite_omega(s);
    if (suite == "bicones") return suite_bicones(s);
    if (suite == "dimensions") return suite_dimensions(s);
    if (suite == "jets") return suite_jets(s);
    if (suite == "components") return suite_components(s);
    if (suite == "nullcone") return suite_nullcone(s);
    if (suite == "all") {
        std::vector<Report> out;
        for (auto fn : {suite_identities, suite_omega, suite_bicones, suite_dimensions,
                        suite_jets, suite_components, suite_nullcone}) {
            auto part = fn(s);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

} // namespace bicone::suites
