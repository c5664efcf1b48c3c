#ifndef AFFPRYM_PRYM_HPP
#define AFFPRYM_PRYM_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affprym/group.hpp"
#include "affprym/rational.hpp"
#include "affprym/reptheory.hpp"

namespace affprym::prym {

/// Covering signature (g; n_1,...,n_s) in canonical form: every period is
/// either p (counted by a) or a divisor d > 1 of q-1 (counted by b[d]).
struct Signature {
    int g = 0;
    int p = 0;  // field characteristic, kept for rendering the period list
    int a = 0;
    std::map<int, int, std::greater<int>> b;

    int s() const {
        int out = a;
        for (const auto& [d, cnt] : b) out += cnt;
        return out;
    }
    /// Canonical period list: p repeated a times, then divisors descending.
    std::vector<int> periods() const;
    std::string to_string() const;  // "g;n1,n2,..."

    bool operator==(const Signature&) const = default;
};

/// Grammar: g ";" n1 ("," ni)*, optional whitespace, empty period list allowed.
Signature parse_signature(const group::AffGroup& G, const std::string& text);
Signature make_signature(const group::AffGroup& G, int g, const std::vector<int>& periods);

/// Genus of X from Riemann-Hurwitz; NotACovering when non-integral or negative.
long long genus_of_X(const group::AffGroup& G, const Signature& sig);

/// Group algebra component: the xi_d piece for a divisor d of q-1 (d = q-1 is
/// the trivial one, J(Y)) or the theta piece. Ordered xi-descending, theta last.
struct ComponentId {
    bool theta = false;
    int d = 0;

    static ComponentId xi(int d) { return {false, d}; }
    static ComponentId theta_id() { return {true, 0}; }
    bool operator==(const ComponentId&) const = default;
    bool operator<(const ComponentId& o) const {
        if (theta != o.theta) return !theta;
        return d > o.d;
    }
    std::string to_string(int q_minus_1) const {
        return theta ? "θ" : reptheory::xi_label(d, q_minus_1);
    }
    std::string json_key() const { return theta ? "theta" : "xi_" + std::to_string(d); }
};

struct ComponentDims {
    std::map<int, long long, std::greater<int>> xi;  // keyed by divisor, incl. q-1
    long long theta = 0;
    long long genus_X = 0;

    long long dim_of(const ComponentId& c) const { return c.theta ? theta : xi.at(c.d); }
    bool operator==(const ComponentDims&) const = default;
};

/// dim B_i by the totient closed forms; errors NonIntegerDimension /
/// NegativeDimension on signatures that cannot occur (never clamped).
ComponentDims component_dims(const group::AffGroup& G, const Signature& sig);
/// Same dimensions through the general group-algebra-component formula,
/// evaluated with rho-decompositions of the stabilizer types; independent
/// route that must agree with component_dims exactly.
ComponentDims dims_via_general_formula(const group::AffGroup& G, const Signature& sig);

/// Pr(pi^H_N) for H <= N of types (e,j) <= (d,k): B(delta) once for each
/// divisor with e | delta, d ∤ delta, theta to the power
/// s = (p^(n-j)-1)/e - (p^(n-k)-1)/d.
struct PrymDecomposition {
    group::SubgroupType sub, sup;
    std::map<int, long long, std::greater<int>> xi;
    long long theta = 0;
};
PrymDecomposition prym_decomposition(const group::AffGroup& G,
                                     const group::SubgroupType& sub,
                                     const group::SubgroupType& sup);

/// J(X/H) ~ J(Y) x prod B_i^{u_i} x B_theta^{u}; u_i from the closed rho
/// decomposition (Schur index 1 throughout).
struct QuotientDecomposition {
    group::SubgroupType stype;
    std::map<int, long long, std::greater<int>> xi;  // includes q-1 with mult 1
    long long theta = 0;
};
QuotientDecomposition jacobian_quotient_decomposition(const group::AffGroup& G,
                                                      const group::SubgroupType& t);
/// Genus of X/H for the given covering signature (dimension of J(X/H)).
long long quotient_genus(const group::AffGroup& G, const Signature& sig,
                         const group::SubgroupType& t);

/// Lexicographically smallest nested pair whose Prym decomposition,
/// restricted to positive-dimensional components, is exactly {component: 1}.
std::optional<std::pair<group::SubgroupType, group::SubgroupType>>
isolating_pair(const group::AffGroup& G, const Signature& sig, const ComponentId& component);

enum class Cond1Reason { qIs2, qIs9, FermatPrime, MersenneQminus1 };

struct Condition {
    int item = 0;  // 1, 2 or 3
    Cond1Reason reason = Cond1Reason::qIs2;  // item 1 only
    std::string form;                        // items 2 and 3: matched shape
    int d = 0, e = 0, mu = 0, nu = 0;        // item 3 only
};

struct VerdictRow {
    ComponentId component;
    long long dim = 0;
    group::SubgroupType H, N;
};

struct Verdict {
    bool affordable = false;
    std::optional<Condition> condition;
    std::vector<VerdictRow> table;  // one row per positive-dimensional component
    ComponentDims dims;
    std::optional<bool> realizable;  // set only when verification was requested
    bool simple_decomposition = false;  // J(X) ~ J(Y) x Pr(pi^Lambda_G) applies
};

/// Main-theorem pattern match. With check_realizability set, a generating
/// vector is searched first (UnrealizableSignature / BudgetExhausted).
Verdict decide_affordable(const group::AffGroup& G, const Signature& sig,
                          bool check_realizability = false,
                          long long budget = 10'000'000);

/// Definition-level brute force: every positive-dimensional component must
/// admit an isolating pair. Independent of the theorem's condition list.
bool decide_affordable_oracle(const group::AffGroup& G, const Signature& sig);

} // namespace affprym::prym

#endif
