#include "affprym/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "affprym/cyclo.hpp"
#include "affprym/genvec.hpp"
#include "affprym/reptheory.hpp"
#include "affprym/sweep.hpp"

namespace affprym::selftest {

using cyclo::CycloNumber;
using group::AffGroup;
using group::ClassId;
using group::SubgroupType;
using reptheory::Character;

namespace {

std::vector<Character> all_irreducibles(const AffGroup& G) {
    std::vector<Character> irr;
    irr.push_back(reptheory::psi_character(G, G.q() - 1));  // 1_G
    for (int j = 1; j <= G.q() - 2; ++j) irr.push_back(reptheory::psi_character(G, j));
    irr.push_back(reptheory::theta_character(G));
    return irr;
}

bool same_cyclo(const CycloNumber& a, const CycloNumber& b) {
    int M = std::lcm(a.order(), b.order());
    return a.lift(M) == b.lift(M);
}

struct Runner {
    const AffGroup& G;
    const Options& opt;
    std::vector<CheckResult> results;

    void check(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.pass = r.detail.empty();
        } catch (const Error& e) {
            r.pass = false;
            r.detail = std::string(e.code()) + ": " + e.what();
        }
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
        results.push_back(std::move(r));
    }
};

} // namespace

std::vector<CheckResult> run_for_q(const AffGroup& G, const Options& opt) {
    Runner run{G, opt, {}};
    const auto& F = G.field();
    int q = G.q();
    int p = G.p();
    int m = q - 1;

    run.check("field-axioms", [&]() -> std::string {
        std::vector<std::array<int, 3>> triples;
        if (q <= 16) {
            for (int x = 0; x < q; ++x)
                for (int y = 0; y < q; ++y)
                    for (int z = 0; z < q; ++z) triples.push_back({x, y, z});
        } else {
            std::mt19937 rng(q);
            std::uniform_int_distribution<int> dist(0, q - 1);
            for (int i = 0; i < 4000; ++i) triples.push_back({dist(rng), dist(rng), dist(rng)});
        }
        for (auto [x, y, z] : triples) {
            if (F.add(F.add(x, y), z) != F.add(x, F.add(y, z))) return "add not associative";
            if (F.mul(F.mul(x, y), z) != F.mul(x, F.mul(y, z))) return "mul not associative";
            if (F.mul(x, F.add(y, z)) != F.add(F.mul(x, y), F.mul(x, z)))
                return "not distributive";
            if (F.add(x, y) != F.add(y, x) || F.mul(x, y) != F.mul(y, x))
                return "not commutative";
        }
        for (int x = 0; x < q; ++x) {
            if (F.add(x, F.neg(x)) != 0) return "additive inverse fails";
            if (x != 0 && F.mul(x, F.inv(x)) != 1) return "multiplicative inverse fails";
        }
        return "";
    });

    run.check("exp-log-tables", [&]() -> std::string {
        std::set<int> seen;
        for (int k = 0; k < m; ++k) {
            int x = F.exp(k);
            if (x == 0 || !seen.insert(x).second) return "exp table misses or repeats";
            if (F.dlog(x) != k) return "log(exp(k)) != k";
        }
        return seen.size() == static_cast<size_t>(m) ? "" : "exp does not cover GF(q)^x";
    });

    run.check("trace-linear-surjective", [&]() -> std::string {
        std::set<int> image;
        for (int x = 0; x < q; ++x) image.insert(F.trace(x));
        if (image.size() != static_cast<size_t>(p)) return "trace not surjective onto Z_p";
        for (int x = 0; x < std::min(q, 64); ++x)
            for (int y = 0; y < std::min(q, 64); ++y)
                if (F.trace(F.add(x, y)) != (F.trace(x) + F.trace(y)) % p)
                    return "trace not additive";
        // Z_p-linearity: scaling by c in the prime subfield
        for (int c = 0; c < p; ++c)
            for (int x = 0; x < std::min(q, 64); ++x)
                if (F.trace(F.mul(c, x)) != (c * F.trace(x)) % p) return "trace not Z_p-linear";
        return "";
    });

    run.check("conjugacy-classes", [&]() -> std::string {
        auto classes = G.classes();
        long long total = 0;
        for (const auto& c : classes) total += c.size;
        if (total != G.order()) return "class equation fails";
        if (static_cast<int>(classes.size()) != q) return "expected q classes";
        if (q > 16) return "";
        // brute-force conjugation orbits
        std::vector<int> orbit_of(G.order(), -1);
        int orbits = 0;
        for (int x = 0; x < G.order(); ++x) {
            if (orbit_of[x] >= 0) continue;
            std::vector<int> orbit;
            for (int h = 0; h < G.order(); ++h) {
                int y = G.conjugate(x, h);
                if (orbit_of[y] < 0) {
                    orbit_of[y] = orbits;
                    orbit.push_back(y);
                }
            }
            // everything in one orbit must carry the same ClassId
            for (int y : orbit)
                if (!(G.class_of(y) == G.class_of(x))) return "class_of splits an orbit";
            long long expected = 0;
            for (const auto& c : classes)
                if (c.id == G.class_of(x)) expected = c.size;
            if (static_cast<long long>(orbit.size()) != expected)
                return "class size disagrees with orbit size";
            ++orbits;
        }
        return orbits == q ? "" : "wrong number of orbits";
    });

    run.check("rational-classes", [&]() -> std::string {
        auto rc = G.rational_classes();
        int nd = static_cast<int>(G.divisors().size());
        if (static_cast<int>(rc.size()) != nd + 1) return "expected nd(q-1)+1 rational classes";
        std::set<std::pair<int, int>> covered;
        for (const auto& set : rc)
            for (const auto& cid : set)
                covered.insert({static_cast<int>(cid.kind), cid.k});
        if (covered.size() != static_cast<size_t>(q)) return "rational classes do not partition";
        if (q > 16) return "";
        // generator-conjugacy brute force: two lambda-classes sit in one
        // rational class iff their representatives generate conjugate cyclic
        // subgroups
        auto cyclic_set = [&](int rep) {
            std::set<int> out;
            int x = rep;
            while (true) {
                out.insert(x);
                if (x == G.identity()) break;
                x = G.compose(x, rep);
            }
            return out;
        };
        auto same_rational = [&](int k1, int k2) {
            auto s1 = cyclic_set(G.make(0, k1));
            for (int h = 0; h < G.order(); ++h) {
                std::set<int> conj;
                for (int x : s1) conj.insert(G.conjugate(x, h));
                if (conj == cyclic_set(G.make(0, k2))) return true;
            }
            return false;
        };
        for (int k1 = 1; k1 < m; ++k1)
            for (int k2 = k1; k2 < m; ++k2) {
                bool rule = group::gcd_int(k1, m) == group::gcd_int(k2, m);
                if (rule != same_rational(k1, k2)) return "gcd rule disagrees with conjugacy";
            }
        return "";
    });

    run.check("type-partial-order", [&]() -> std::string {
        const auto& types = G.subgroup_types();
        for (const auto& t : types)
            if (!AffGroup::type_contains(t, t)) return "not reflexive";
        for (const auto& a : types)
            for (const auto& b : types) {
                if (AffGroup::type_contains(a, b) && AffGroup::type_contains(b, a) && !(a == b))
                    return "not antisymmetric";
                for (const auto& c : types)
                    if (AffGroup::type_contains(a, b) && AffGroup::type_contains(b, c) &&
                        !AffGroup::type_contains(a, c))
                        return "not transitive";
            }
        return "";
    });

    run.check("realize-subgroup-closure", [&]() -> std::string {
        for (const auto& t : G.subgroup_types()) {
            auto H = G.realize_subgroup(t);  // throws if not closed / wrong size
            long long expected = t.d;
            for (int i = 0; i < t.k; ++i) expected *= p;
            if (static_cast<long long>(H.elements.size()) != expected)
                return "order != p^k * d for " + t.to_string();
            for (int x : H.elements) {
                if (!std::binary_search(H.elements.begin(), H.elements.end(), G.inverse(x)))
                    return "not closed under inverse";
            }
        }
        return "";
    });

    run.check("generated-subgroup-types", [&]() -> std::string {
        if (q > 16) return "";
        std::mt19937 rng(2024 + q);
        std::uniform_int_distribution<int> dist(0, G.order() - 1);
        std::uniform_int_distribution<int> howmany(1, 3);
        for (int trial = 0; trial < opt.trials; ++trial) {
            std::vector<int> gens;
            int count = howmany(rng);
            for (int i = 0; i < count; ++i) gens.push_back(dist(rng));
            auto closure = G.closure(gens);
            auto t = G.type_of_order(static_cast<long long>(closure.size()));
            if (!t) return "generated subgroup order matches no admissible type";
            group::ExplicitSubgroup H{*t, closure};
            auto dec = reptheory::rho_decomposition_closed(G, *t);
            // decompose the explicit induced character the brute-force way
            auto chi = reptheory::induced_trivial_bruteforce(G, H);
            for (int d : G.divisors()) {
                Rational mult = reptheory::inner_product(G, chi, reptheory::psi_character(G, d));
                long long want = dec.xi.count(d) ? dec.xi.at(d) : 0;
                if (mult != want) return "induced decomposition depends on more than the type";
            }
            Rational tm = reptheory::inner_product(G, chi, reptheory::theta_character(G));
            if (tm != dec.theta) return "theta multiplicity depends on more than the type";
        }
        return "";
    });

    run.check("character-orthogonality", [&]() -> std::string {
        auto irr = all_irreducibles(G);
        for (size_t i = 0; i < irr.size(); ++i)
            for (size_t j = 0; j < irr.size(); ++j) {
                Rational ip = reptheory::inner_product(G, irr[i], irr[j]);
                if (ip != (i == j ? 1 : 0)) return "row orthogonality fails";
            }
        // column orthogonality
        auto classes = G.classes();
        int M = m == 1 ? 1 : m;
        for (size_t c1 = 0; c1 < classes.size(); ++c1)
            for (size_t c2 = 0; c2 < classes.size(); ++c2) {
                CycloNumber sum = CycloNumber::zero(M);
                for (const auto& chi : irr)
                    sum = sum.add(chi.values[c1].lift(M).mul(chi.values[c2].lift(M).conj()));
                auto r = sum.as_rational();
                Rational want = c1 == c2 ? Rational(G.order()) / classes[c1].size : Rational(0);
                if (!r || *r != want) return "column orthogonality fails";
            }
        return "";
    });

    run.check("degree-squares", [&]() -> std::string {
        Rational total = 0;
        for (const auto& chi : all_irreducibles(G)) total += chi.degree() * chi.degree();
        return total == G.order() ? "" : "sum of squared degrees != |G|";
    });

    run.check("theta-induction", [&]() -> std::string {
        auto a = reptheory::theta_character(G);
        auto b = reptheory::theta_by_induction(G);
        for (size_t i = 0; i < a.values.size(); ++i)
            if (!same_cyclo(a.values[i], b.values[i])) return "induced theta differs";
        return "";
    });

    run.check("xi-integrality", [&]() -> std::string {
        for (int d : G.divisors()) {
            auto xi = reptheory::xi_character(G, d);
            for (const auto& v : xi.values) {
                auto r = v.as_rational();
                if (!r || !is_integer(*r)) return "xi value is not a rational integer";
            }
        }
        return "";
    });

    run.check("rho-closed-vs-bruteforce", [&]() -> std::string {
        for (const auto& t : G.subgroup_types()) {
            auto a = reptheory::rho_decomposition_closed(G, t);
            auto b = reptheory::rho_decomposition_bruteforce(G, t);
            if (!(a == b)) return "decomposition mismatch at type " + t.to_string();
        }
        return "";
    });

    run.check("rho-psi-multiplicities", [&]() -> std::string {
        for (const auto& t : G.subgroup_types()) {
            auto H = G.realize_subgroup(t);
            auto chi = reptheory::induced_trivial_bruteforce(G, H);
            for (int delta : G.divisors()) {
                Rational u =
                    reptheory::inner_product(G, chi, reptheory::psi_character(G, delta));
                Rational want = delta % t.d == 0 ? 1 : 0;
                if (u != want) return "<rho_H, psi_delta> is not [d | delta]";
            }
        }
        return "";
    });

    run.check("dims-double-entry", [&]() -> std::string {
        auto sigs = sweep::enumerate_signatures(G, 2, 3);
        for (const auto& sig : sigs) {
            std::string code_a, code_b;
            prym::ComponentDims da, db;
            try {
                da = prym::component_dims(G, sig);
            } catch (const Error& e) {
                code_a = e.code();
            }
            try {
                db = prym::dims_via_general_formula(G, sig);
            } catch (const Error& e) {
                code_b = e.code();
            }
            if (code_a != code_b) return "routes error differently on " + sig.to_string();
            if (code_a.empty() && !(da == db)) return "dimension mismatch on " + sig.to_string();
        }
        return "";
    });

    run.check("genus-consistency", [&]() -> std::string {
        auto sigs = sweep::enumerate_signatures(G, 2, 3);
        for (const auto& sig : sigs) {
            prym::ComponentDims dims;
            try {
                dims = prym::component_dims(G, sig);
            } catch (const Error&) {
                continue;
            }
            long long total = sig.g + dims.theta * m;
            for (const auto& [d, dim] : dims.xi)
                if (d != m) total += dim;
            if (total != prym::genus_of_X(G, sig))
                return "genus identity fails on " + sig.to_string();
        }
        return "";
    });

    run.check("prym-additivity", [&]() -> std::string {
        const auto& types = G.subgroup_types();
        for (const auto& a : types)
            for (const auto& b : types)
                for (const auto& c : types) {
                    if (!AffGroup::type_contains(a, b) || !AffGroup::type_contains(b, c))
                        continue;
                    auto ab = prym::prym_decomposition(G, a, b);
                    auto bc = prym::prym_decomposition(G, b, c);
                    auto ac = prym::prym_decomposition(G, a, c);
                    if (ab.theta + bc.theta != ac.theta) return "theta multiplicity not additive";
                    for (int d : G.divisors()) {
                        long long x = (ab.xi.count(d) ? ab.xi.at(d) : 0) +
                                      (bc.xi.count(d) ? bc.xi.at(d) : 0);
                        long long y = ac.xi.count(d) ? ac.xi.at(d) : 0;
                        if (x != y) return "xi multiplicities not additive";
                    }
                }
        return "";
    });

    run.check("prym-dims-sum", [&]() -> std::string {
        auto sigs = sweep::enumerate_signatures(G, 1, 2);
        const auto& types = G.subgroup_types();
        for (const auto& sig : sigs) {
            prym::ComponentDims dims;
            try {
                dims = prym::component_dims(G, sig);
            } catch (const Error&) {
                continue;
            }
            for (const auto& sub : types)
                for (const auto& sup : types) {
                    if (!AffGroup::type_contains(sub, sup)) continue;
                    auto pr = prym::prym_decomposition(G, sub, sup);
                    long long total = pr.theta * dims.theta;
                    for (const auto& [d, mult] : pr.xi) total += mult * dims.xi.at(d);
                    long long diff = prym::quotient_genus(G, sig, sub) -
                                     prym::quotient_genus(G, sig, sup);
                    if (total != diff) return "Prym dims do not telescope on " + sig.to_string();
                }
        }
        return "";
    });

    run.check("genvec-witness-verify", [&]() -> std::string {
        auto sigs = sweep::enumerate_signatures(G, 1, 3);
        std::mt19937 rng(7 + q);
        std::uniform_int_distribution<int> dist(0, G.order() - 1);
        for (const auto& sig : sigs) {
            auto r = genvec::find_generating_vector(G, sig, opt.budget);
            if (r.status != genvec::SearchResult::Status::Yes) continue;
            std::string reason;
            if (!genvec::verify_generating_vector(G, sig, *r.witness, &reason))
                return "witness fails verification (" + reason + ") on " + sig.to_string();
            // conjugating the whole tuple preserves all three conditions
            for (int trial = 0; trial < 3; ++trial) {
                int h = dist(rng);
                genvec::GeneratingVector conj;
                for (auto [a, b] : r.witness->hyperbolic)
                    conj.hyperbolic.emplace_back(G.conjugate(a, h), G.conjugate(b, h));
                for (int c : r.witness->elliptic) conj.elliptic.push_back(G.conjugate(c, h));
                if (!genvec::verify_generating_vector(G, sig, conj, &reason))
                    return "conjugated witness fails (" + reason + ")";
            }
        }
        return "";
    });

    run.check("genvec-dims-soundness", [&]() -> std::string {
        auto sigs = sweep::enumerate_signatures(G, 2, 3);
        for (const auto& sig : sigs) {
            bool dims_ok = true;
            try {
                prym::component_dims(G, sig);
            } catch (const Error&) {
                dims_ok = false;
            }
            if (dims_ok) continue;
            auto r = genvec::is_realizable(G, sig, opt.budget);
            if (r.status == genvec::SearchResult::Status::Yes)
                return "witness exists for dimension-invalid " + sig.to_string();
        }
        return "";
    });

    if (q == 5 || q == 9) {
        run.check("two-heavy-periods-have-order-q-1", [&]() -> std::string {
            // realizable genus-0 signatures with exactly two non-p periods
            // force both of them to be q-1
            for (int a = 0; a <= 3; ++a)
                for (int x : G.divisors())
                    for (int y : G.divisors()) {
                        if (x == 1 || y == 1 || y < x) continue;
                        std::vector<int> periods(a, p);
                        periods.push_back(x);
                        periods.push_back(y);
                        auto sig = prym::make_signature(G, 0, periods);
                        auto r = genvec::is_realizable(G, sig, opt.budget);
                        if (r.status == genvec::SearchResult::Status::Yes &&
                            !(x == m && y == m))
                            return "realizable with heavy periods " + std::to_string(x) + "," +
                                   std::to_string(y);
                    }
            return "";
        });
    }

    if (q == 9) {
        run.check("q9-golden-lattice", [&]() -> std::string {
            std::vector<std::pair<int, int>> want_types{{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1},
                                                        {2, 2}, {4, 0}, {4, 2}, {8, 0}, {8, 2}};
            const auto& types = G.subgroup_types();
            if (types.size() != want_types.size()) return "type count differs from Example";
            for (size_t i = 0; i < types.size(); ++i)
                if (types[i].d != want_types[i].first || types[i].k != want_types[i].second)
                    return "type list differs from Example";
            std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> want_edges{
                {{1, 0}, {1, 1}}, {{1, 0}, {2, 0}}, {{1, 1}, {1, 2}}, {{1, 1}, {2, 1}},
                {{1, 2}, {2, 2}}, {{2, 0}, {2, 1}}, {{2, 0}, {4, 0}}, {{2, 1}, {2, 2}},
                {{2, 2}, {4, 2}}, {{4, 0}, {4, 2}}, {{4, 0}, {8, 0}}, {{4, 2}, {8, 2}},
                {{8, 0}, {8, 2}}};
            auto edges = G.type_lattice_edges();
            if (edges.size() != want_edges.size()) return "Hasse edge count differs";
            for (size_t i = 0; i < edges.size(); ++i) {
                if (edges[i].first.d != want_edges[i].first.first ||
                    edges[i].first.k != want_edges[i].first.second ||
                    edges[i].second.d != want_edges[i].second.first ||
                    edges[i].second.k != want_edges[i].second.second)
                    return "Hasse edges differ from Example";
            }
            std::vector<std::string> want_rho{
                "1_G ⊕ ξ_4 ⊕ ξ_2 ⊕ ξ_1 ⊕ 8θ", "1_G ⊕ ξ_4 ⊕ ξ_2 ⊕ ξ_1 ⊕ 2θ",
                "1_G ⊕ ξ_4 ⊕ ξ_2 ⊕ ξ_1",      "1_G ⊕ ξ_4 ⊕ ξ_2 ⊕ 4θ",
                "1_G ⊕ ξ_4 ⊕ ξ_2 ⊕ θ",        "1_G ⊕ ξ_4 ⊕ ξ_2",
                "1_G ⊕ ξ_4 ⊕ 2θ",             "1_G ⊕ ξ_4",
                "1_G ⊕ θ",                     "1_G"};
            for (size_t i = 0; i < types.size(); ++i) {
                auto dec = reptheory::rho_decomposition_closed(G, types[i]);
                if (dec.to_string(m) != want_rho[i]) return "decorated node differs from Example";
            }
            return "";
        });
    }

    run.check("theorem-sweep", [&]() -> std::string {
        sweep::SweepOptions so;
        so.max_g = opt.sweep_g;
        so.max_s = opt.sweep_s;
        so.budget = opt.budget;
        so.parallel = opt.parallel;
        auto report = sweep::theorem_sweep(G, so);
        if (report.ok()) return "";
        for (const auto& o : report.outcomes)
            if (o.mismatch) return o.sig.to_string() + ": " + o.note;
        return "sweep hit the search budget";
    });

    return run.results;
}

} // namespace affprym::selftest
