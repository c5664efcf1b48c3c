#ifndef AFFPRYM_SWEEP_HPP
#define AFFPRYM_SWEEP_HPP

#include <string>
#include <vector>

#include "affprym/genvec.hpp"
#include "affprym/prym.hpp"

namespace affprym::sweep {

struct SweepOptions {
    int max_g = 2;
    int max_s = 5;
    long long budget = genvec::kDefaultBudget;
    bool parallel = true;
};

struct SignatureOutcome {
    prym::Signature sig;
    enum class Realizable { Yes, No, Unknown } realizable = Realizable::No;
    bool dims_valid = false;
    bool closed_affordable = false;
    bool oracle_affordable = false;
    bool mismatch = false;
    std::string note;

    bool operator==(const SignatureOutcome&) const = default;
};

struct SweepReport {
    int q = 0;
    long long total = 0;
    long long realizable = 0;
    long long affordable = 0;
    long long unknown = 0;
    long long mismatches = 0;
    std::vector<SignatureOutcome> outcomes;

    bool ok() const { return mismatches == 0 && unknown == 0; }
    bool operator==(const SweepReport&) const = default;
};

/// All signatures with genus <= max_g and at most max_s periods drawn from
/// {p} and the divisors > 1 of q-1; deterministic order.
std::vector<prym::Signature> enumerate_signatures(const group::AffGroup& G, int max_g, int max_s);

/// Machine check of the Main Theorem: on every realizable signature in range
/// the pattern-match decision must equal the definition-level oracle. Also
/// cross-checks that invalid dimension formulas never coexist with a witness.
/// Signatures are processed independently; `parallel` runs them on OpenMP
/// threads, and the report is identical to the serial one.
SweepReport theorem_sweep(const group::AffGroup& G, const SweepOptions& opt);

} // namespace affprym::sweep

#endif
