#ifndef AFFPRYM_GENVEC_HPP
#define AFFPRYM_GENVEC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affprym/group.hpp"
#include "affprym/prym.hpp"

namespace affprym::genvec {

inline constexpr long long kDefaultBudget = 10'000'000;

/// Riemann-existence datum: g hyperbolic pairs (a_i, b_i) and s elliptic
/// entries c_j with prescribed orders, prod [a_i,b_i] prod c_j = 1, the whole
/// tuple generating G. Entries are element ids; the elliptic list follows the
/// signature's canonical period order.
struct GeneratingVector {
    std::vector<std::pair<int, int>> hyperbolic;
    std::vector<int> elliptic;
};

struct SearchResult {
    enum class Status { Yes, No, Unknown };
    Status status = Status::No;
    std::optional<GeneratingVector> witness;
    long long nodes = 0;
    bool swept = false;  // the whole space was visited (required for No)
};

bool verify_generating_vector(const group::AffGroup& G, const prym::Signature& sig,
                              const GeneratingVector& vec, std::string* reason = nullptr);

/// Depth-first backtracking; elliptic entries are chosen before hyperbolic
/// ones, c_1 runs over one representative per conjugacy class of the right
/// order, and the final entry is forced by the product relation. Deterministic
/// element ordering makes the witness deterministic. The search is partitioned
/// by c_1's representative; with `parallel`, partitions run on OpenMP threads
/// with a first-found-wins rule tie-broken by partition index, so the result
/// does not depend on the thread count.
SearchResult find_generating_vector(const group::AffGroup& G, const prym::Signature& sig,
                                    long long budget = kDefaultBudget, bool parallel = false);

/// Three-valued wrapper: No is only reported when the space was fully swept.
SearchResult is_realizable(const group::AffGroup& G, const prym::Signature& sig,
                           long long budget = kDefaultBudget, bool parallel = false);

} // namespace affprym::genvec

#endif
