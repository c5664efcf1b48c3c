#include "affprym/genvec.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace affprym::genvec {

using group::AffGroup;
using prym::Signature;

namespace {

struct Bitset {
    std::vector<uint64_t> w;
    explicit Bitset(int bits = 0) : w((bits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
};

// achievable sums mod m of one value from `vals` plus anything in `tail`
Bitset sum_reach(const Bitset& tail, const std::vector<int>& vals, int m) {
    Bitset out(m);
    for (int v : vals)
        for (int r = 0; r < m; ++r)
            if (tail.test(r)) out.set((r + v) % m);
    return out;
}

struct Searcher {
    const AffGroup& G;
    const Signature& sig;
    int q, m, g, s;
    std::vector<int> periods;
    std::vector<std::vector<int>> cand;  // per elliptic stage; [0] may be restricted
    std::vector<Bitset> reach;           // reach[j]: k-sums achievable by stages j..s-1
    long long budget = 0;
    long long nodes = 0;
    bool cut = false;
    std::atomic<int>* best = nullptr;  // partition early-abort channel
    int partition_index = 0;
    bool aborted = false;

    std::vector<int> chosen_c;
    std::vector<std::pair<int, int>> chosen_ab;
    std::optional<GeneratingVector> found;

    // reusable closure buffers (stamp-marked)
    std::vector<int> seen;
    std::vector<int> queue;
    int stamp = 0;

    Searcher(const AffGroup& G_, const Signature& sig_)
        : G(G_), sig(sig_), q(G_.q()), m(G_.q() - 1), g(sig_.g), s(sig_.s()),
          periods(sig_.periods()), seen(G_.order(), 0) {}

    bool tick() {
        ++nodes;
        if (nodes > budget) {
            cut = true;
            return false;
        }
        if (best && (nodes & 1023) == 0 && best->load(std::memory_order_relaxed) < partition_index) {
            aborted = true;
            return false;
        }
        return true;
    }

    bool generates_group(int extra1 = -1, int extra2 = -1) {
        std::vector<int> gens = chosen_c;
        for (auto [a, b] : chosen_ab) {
            gens.push_back(a);
            gens.push_back(b);
        }
        if (extra1 >= 0) gens.push_back(extra1);
        if (extra2 >= 0) gens.push_back(extra2);
        // necessary condition, much cheaper than the closure: the scaling
        // exponents must generate all of Z_{q-1}
        int gk = m;
        for (int gen : gens) gk = group::gcd_int(gk, G.k_of(gen));
        if (gk != 1 && m > 1) return false;
        ++stamp;
        queue.clear();
        auto push = [&](int x) {
            if (seen[x] != stamp) {
                seen[x] = stamp;
                queue.push_back(x);
            }
        };
        push(G.identity());
        for (size_t head = 0; head < queue.size(); ++head) {
            for (int gen : gens) push(G.compose(queue[head], gen));
            if (static_cast<int>(queue.size()) == G.order()) return true;
        }
        return static_cast<int>(queue.size()) == G.order();
    }

    GeneratingVector snapshot(int last_c = -1, std::optional<std::pair<int, int>> last_ab = {}) {
        GeneratingVector v;
        v.hyperbolic = chosen_ab;
        if (last_ab) v.hyperbolic.push_back(*last_ab);
        v.elliptic = chosen_c;
        if (last_c >= 0) v.elliptic.push_back(last_c);
        return v;
    }

    // [tau_u lam_t, tau_c lam_j] = tau_{u(1-alpha^j) + c(alpha^t - 1)}; given a
    // and the required commutator value, enumerate solutions b in id order.
    template <typename F>
    bool for_each_commutator_solution(int a, int target, F&& fn) {
        if (G.k_of(target) != 0) return true;  // commutators live in T
        const auto& Fq = G.field();
        int z = G.b_of(target);
        int u = G.b_of(a), t = G.k_of(a);
        int at_minus_1 = Fq.sub(Fq.exp(t), 1);
        for (int j = 0; j < m; ++j) {
            int w = Fq.sub(z, Fq.mul(u, Fq.sub(1, Fq.exp(j))));
            if (t != 0) {
                int c = Fq.mul(w, Fq.inv(at_minus_1));
                if (!fn(G.make(c, j))) return false;
            } else if (w == 0) {
                for (int c = 0; c < q; ++c)
                    if (!fn(G.make(c, j))) return false;
            }
        }
        return true;
    }

    bool dfs_ab(size_t idx, int acc, int target) {
        // acc = product of commutators so far; need the remaining pairs to
        // multiply to acc^{ -1} * target
        if (idx + 1 == static_cast<size_t>(g)) {
            int residual = G.compose(G.inverse(acc), target);
            for (int a = 0; a < G.order(); ++a) {
                if (!tick()) return false;
                bool keep_going = for_each_commutator_solution(a, residual, [&](int b) {
                    if (!tick()) return false;
                    chosen_ab.emplace_back(a, b);
                    bool gen = generates_group();
                    if (gen) {
                        found = snapshot();
                        chosen_ab.pop_back();
                        return false;
                    }
                    chosen_ab.pop_back();
                    return true;
                });
                if (!keep_going) return false;
            }
            return true;
        }
        for (int a = 0; a < G.order(); ++a) {
            for (int b = 0; b < G.order(); ++b) {
                if (!tick()) return false;
                int comm = G.compose(G.compose(a, b), G.compose(G.inverse(a), G.inverse(b)));
                chosen_ab.emplace_back(a, b);
                bool ok = dfs_ab(idx + 1, G.compose(acc, comm), target);
                chosen_ab.pop_back();
                if (!ok) return false;
            }
        }
        return true;
    }

    bool leaf_elliptic(int prefix) {
        // all elliptic entries fixed (prefix = their product)
        if (g == 0) {
            if (prefix != G.identity()) return true;  // relation fails
            if (generates_group()) {
                found = snapshot();
                return false;
            }
            return true;
        }
        int target = G.inverse(prefix);  // commutators must multiply to this
        return dfs_ab(0, G.identity(), target);
    }

    // returns false to stop (found / cut / aborted)
    bool dfs_c(int stage, int prefix, int ksum) {
        if (stage == s) return leaf_elliptic(prefix);
        bool forced = (g == 0 && stage == s - 1);
        if (forced) {
            if (!tick()) return false;
            int c = G.inverse(prefix);
            if (G.element_order(c) != periods[stage]) return true;
            chosen_c.push_back(c);
            bool ok = leaf_elliptic(G.compose(prefix, c));
            chosen_c.pop_back();
            return ok;
        }
        for (int c : cand[stage]) {
            if (!tick()) return false;
            int ks = (ksum + G.k_of(c)) % m;
            if (!reach[stage + 1].test((m - ks) % m)) continue;
            chosen_c.push_back(c);
            bool ok = dfs_c(stage + 1, G.compose(prefix, c), ks);
            chosen_c.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    void run() {
        dfs_c(0, G.identity(), 0);
    }
};

} // namespace

bool verify_generating_vector(const AffGroup& G, const Signature& sig,
                              const GeneratingVector& vec, std::string* reason) {
    auto fail = [&](const std::string& r) {
        if (reason) *reason = r;
        return false;
    };
    auto periods = sig.periods();
    if (static_cast<int>(vec.hyperbolic.size()) != sig.g ||
        vec.elliptic.size() != periods.size())
        return fail("ShapeMismatch");
    for (size_t j = 0; j < periods.size(); ++j)
        if (G.element_order(vec.elliptic[j]) != periods[j]) return fail("OrderMismatch");
    int prod = G.identity();
    for (auto [a, b] : vec.hyperbolic) {
        int comm = G.compose(G.compose(a, b), G.compose(G.inverse(a), G.inverse(b)));
        prod = G.compose(prod, comm);
    }
    for (int c : vec.elliptic) prod = G.compose(prod, c);
    if (prod != G.identity()) return fail("ProductNotIdentity");
    std::vector<int> gens = vec.elliptic;
    for (auto [a, b] : vec.hyperbolic) {
        gens.push_back(a);
        gens.push_back(b);
    }
    if (static_cast<int>(G.closure(gens).size()) != G.order()) return fail("NotGenerating");
    if (reason) reason->clear();
    return true;
}

SearchResult find_generating_vector(const AffGroup& G, const Signature& sig, long long budget,
                                    bool parallel) {
    int m = G.q() - 1;
    int s = sig.s();
    auto periods = sig.periods();

    // candidate lists per order, ascending element ids
    std::vector<std::vector<int>> by_period(periods.size());
    for (size_t j = 0; j < periods.size(); ++j) {
        if (j > 0 && periods[j] == periods[j - 1]) {
            by_period[j] = by_period[j - 1];
            continue;
        }
        for (int x = 0; x < G.order(); ++x)
            if (G.element_order(x) == periods[j]) by_period[j].push_back(x);
    }

    // root prune for g = 0: all entries (the forced one included) come from
    // the order-matched candidate lists, so their union bounds any witness
    if (sig.g == 0) {
        std::vector<int> all;
        for (const auto& lst : by_period) all.insert(all.end(), lst.begin(), lst.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        if (static_cast<int>(G.closure(all).size()) != G.order())
            return {SearchResult::Status::No, std::nullopt, 0, true};
    }

    // reach sets over the scaling exponents
    std::vector<Bitset> reach(s + 1);
    reach[s] = Bitset(m);
    reach[s].set(0);
    for (int j = s - 1; j >= 0; --j) {
        std::vector<int> ks;
        for (int x : by_period[j]) ks.push_back(G.k_of(x));
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
        // the forced final entry of a genus-0 search still has the same
        // order-determined exponent set, so this stays exact
        reach[j] = sum_reach(reach[j + 1], ks, m);
    }

    // partitions: conjugacy-class representatives for the first elliptic entry
    std::vector<std::vector<int>> partitions;
    bool reduce_first = s >= 1 && !(sig.g == 0 && s == 1);
    if (reduce_first) {
        for (int x : by_period[0]) {
            bool rep = (G.k_of(x) == 0) ? (G.b_of(x) == 1)  // tau_1 for the p-class
                                        : (G.b_of(x) == 0); // lambda_k
            if (rep) partitions.push_back({x});
        }
    } else {
        partitions.push_back({});  // single partition, nothing restricted
    }
    int P = static_cast<int>(partitions.size());
    if (P == 0) return {SearchResult::Status::No, std::nullopt, 0, true};

    std::vector<Searcher*> workers(P, nullptr);
    std::vector<std::unique_ptr<Searcher>> storage;
    storage.reserve(P);
    for (int i = 0; i < P; ++i) {
        auto w = std::make_unique<Searcher>(G, sig);
        w->cand.resize(s);
        for (int j = 0; j < s; ++j) w->cand[j] = by_period[j];
        if (reduce_first) w->cand[0] = partitions[i];
        w->reach = reach;
        w->budget = budget / P + (i < static_cast<int>(budget % P) ? 1 : 0);
        w->partition_index = i;
        workers[i] = w.get();
        storage.push_back(std::move(w));
    }

    std::atomic<int> best{P};
    for (auto* w : workers) w->best = &best;

    auto run_one = [&](int i) {
        if (best.load() < i) {
            workers[i]->aborted = true;
            return;
        }
        workers[i]->run();
        if (workers[i]->found) {
            int cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
        }
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < P; ++i) run_one(i);
#else
        for (int i = 0; i < P; ++i) run_one(i);
#endif
    } else {
        for (int i = 0; i < P; ++i) run_one(i);
    }

    SearchResult res;
    for (auto* w : workers) res.nodes += w->nodes;
    int winner = best.load();
    if (winner < P) {
        res.status = SearchResult::Status::Yes;
        res.witness = workers[winner]->found;
        res.swept = false;
        return res;
    }
    bool any_cut = false;
    for (auto* w : workers) any_cut = any_cut || w->cut || w->aborted;
    res.status = any_cut ? SearchResult::Status::Unknown : SearchResult::Status::No;
    res.swept = !any_cut;
    return res;
}

SearchResult is_realizable(const AffGroup& G, const Signature& sig, long long budget,
                           bool parallel) {
    return find_generating_vector(G, sig, budget, parallel);
}

} // namespace affprym::genvec
