#include "affprym/sweep.hpp"

namespace affprym::sweep {

using group::AffGroup;
using prym::Signature;

std::vector<Signature> enumerate_signatures(const AffGroup& G, int max_g, int max_s) {
    std::vector<int> values{G.p()};
    for (auto it = G.divisors().rbegin(); it != G.divisors().rend(); ++it)
        if (*it > 1) values.push_back(*it);

    std::vector<Signature> out;
    for (int g = 0; g <= max_g; ++g) {
        std::vector<int> counts(values.size(), 0);
        auto gen = [&](auto&& self, size_t vi, int remaining) -> void {
            if (vi == values.size()) {
                std::vector<int> ps;
                for (size_t i = 0; i < values.size(); ++i)
                    ps.insert(ps.end(), counts[i], values[i]);
                out.push_back(prym::make_signature(G, g, ps));
                return;
            }
            for (int cnt = 0; cnt <= remaining; ++cnt) {
                counts[vi] = cnt;
                self(self, vi + 1, remaining - cnt);
            }
            counts[vi] = 0;
        };
        gen(gen, 0, max_s);
    }
    return out;
}

SweepReport theorem_sweep(const AffGroup& G, const SweepOptions& opt) {
    SweepReport report;
    report.q = G.q();
    auto sigs = enumerate_signatures(G, opt.max_g, opt.max_s);
    report.outcomes.resize(sigs.size());
    report.total = static_cast<long long>(sigs.size());

    auto work = [&](size_t i) {
        SignatureOutcome& o = report.outcomes[i];
        o.sig = sigs[i];
        try {
            prym::component_dims(G, sigs[i]);
            o.dims_valid = true;
        } catch (const Error&) {
            o.dims_valid = false;
        }
        auto r = genvec::is_realizable(G, sigs[i], opt.budget, /*parallel=*/false);
        switch (r.status) {
            case genvec::SearchResult::Status::Yes:
                o.realizable = SignatureOutcome::Realizable::Yes;
                break;
            case genvec::SearchResult::Status::No:
                o.realizable = SignatureOutcome::Realizable::No;
                break;
            case genvec::SearchResult::Status::Unknown:
                o.realizable = SignatureOutcome::Realizable::Unknown;
                break;
        }
        if (o.realizable == SignatureOutcome::Realizable::Yes && !o.dims_valid) {
            o.mismatch = true;
            o.note = "realizable signature with invalid dimension formulas";
            return;
        }
        if (o.realizable != SignatureOutcome::Realizable::Yes || !o.dims_valid) return;
        try {
            o.closed_affordable = prym::decide_affordable(G, sigs[i]).affordable;
            o.oracle_affordable = prym::decide_affordable_oracle(G, sigs[i]);
        } catch (const Error& e) {
            o.mismatch = true;
            o.note = std::string("decision raised ") + e.code() + " on a realizable signature";
            return;
        }
        if (o.closed_affordable != o.oracle_affordable) {
            o.mismatch = true;
            o.note = "theorem pattern-match disagrees with the isolation oracle";
        }
    };

    if (opt.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(sigs.size()); ++i)
            work(static_cast<size_t>(i));
    } else {
        for (size_t i = 0; i < sigs.size(); ++i) work(i);
    }

    for (const auto& o : report.outcomes) {
        if (o.realizable == SignatureOutcome::Realizable::Yes) ++report.realizable;
        if (o.realizable == SignatureOutcome::Realizable::Unknown) ++report.unknown;
        if (o.mismatch) ++report.mismatches;
        if (o.realizable == SignatureOutcome::Realizable::Yes && o.closed_affordable)
            ++report.affordable;
    }
    return report;
}

} // namespace affprym::sweep
