#ifndef AFFPRYM_GROUP_HPP
#define AFFPRYM_GROUP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affprym/gf.hpp"

namespace affprym::group {

/// The map x -> alpha^k * x + b. k = 0 is the identity scaling (the group's
/// lambda_{q-1}); for q = 2 the scaling part is always trivial.
struct AffElement {
    gf::FieldElement b;
    int k = 0;

    bool operator==(const AffElement&) const = default;
};

/// Conjugacy class tag: Identity, Tau (all nonzero translations), or
/// Lambda(k) for k in [1, q-1) (everything with scaling exponent k).
struct ClassId {
    enum class Kind { Identity = 0, Tau = 1, Lambda = 2 };
    Kind kind = Kind::Identity;
    int k = 0;  // only meaningful for Lambda

    static ClassId identity() { return {Kind::Identity, 0}; }
    static ClassId tau() { return {Kind::Tau, 0}; }
    static ClassId lambda(int k) { return {Kind::Lambda, k}; }

    bool operator==(const ClassId&) const = default;
    std::string to_string() const;
};

struct ConjClass {
    ClassId id;
    long long size = 0;
    AffElement representative;
};

/// Conjugacy-invariant subgroup descriptor: conjugate to V x| Lambda_d with
/// dim_{F_p} V = k; m is the least positive divisor of n with d | p^m - 1,
/// and admissibility means m | k.
struct SubgroupType {
    int d = 1;
    int k = 0;
    int m = 1;

    bool operator==(const SubgroupType& o) const { return d == o.d && k == o.k; }
    bool operator<(const SubgroupType& o) const {
        return d != o.d ? d < o.d : k < o.k;
    }
    std::string to_string() const {
        return "(" + std::to_string(d) + "," + std::to_string(k) + ")";
    }
};

struct ExplicitSubgroup {
    SubgroupType stype;
    std::vector<int> elements;  // sorted element ids, closed under the group ops
};

/// Aff(F_q) = T x| Lambda over a built field. Elements are handled as ids in
/// [0, q(q-1)): id = k*q + b. Immutable after construction.
class AffGroup {
public:
    static AffGroup build(int p, int n, int bound = gf::kDefaultBound);
    explicit AffGroup(gf::FieldTable field);

    const gf::FieldTable& field() const { return field_; }
    int p() const { return field_.p(); }
    int n() const { return field_.n(); }
    int q() const { return field_.q(); }
    int order() const { return field_.q() * (field_.q() - 1); }

    int make(int b, int k) const { return k * field_.q() + b; }
    int b_of(int g) const { return g % field_.q(); }
    int k_of(int g) const { return g / field_.q(); }
    int identity() const { return 0; }
    AffElement element(int g) const { return {field_.element(b_of(g)), k_of(g)}; }
    int id_of(const AffElement& e) const;

    int compose(int g, int h) const {
        // tau_b lam_k . tau_c lam_j = tau_{b + alpha^k c} lam_{k+j}
        int q = field_.q();
        int m = q - 1;
        int b = g % q, k = g / q, c = h % q, j = h / q;
        int scaled = c == 0 ? 0 : field_.exp(k + field_.dlog(c));
        return ((k + j) % m) * q + field_.add(b, scaled);
    }
    int inverse(int g) const {
        int q = field_.q();
        int m = q - 1;
        int b = g % q, k = g / q;
        int kinv = (m - k) % m;
        int scaled = b == 0 ? 0 : field_.exp(kinv + field_.dlog(b));
        return kinv * q + field_.neg(scaled);
    }
    int conjugate(int g, int x) const {
        return compose(compose(x, g), inverse(x));
    }
    long long element_order(int g) const;

    ClassId class_of(int g) const;
    /// Column position in the character table: id, tau, lambda_1..lambda_{q-2}.
    int class_column(const ClassId& c) const;
    int num_classes() const { return field_.q(); }
    std::vector<ConjClass> classes() const;
    /// Rational classes: {id}, {tau}, then for each divisor d < q-1 ascending
    /// the set of Lambda(k) with gcd(k, q-1) = d.
    std::vector<std::vector<ClassId>> rational_classes() const;

    const std::vector<int>& divisors() const { return divisors_; }  // of q-1, ascending
    int min_subfield_degree(int d) const;
    bool type_admissible(int d, int k) const;
    SubgroupType type(int d, int k) const;  // throws InadmissibleType
    const std::vector<SubgroupType>& subgroup_types() const { return types_; }
    /// sub <= sup in the subgroup order: e | d and j <= k.
    static bool type_contains(const SubgroupType& sub, const SubgroupType& sup) {
        return sup.d % sub.d == 0 && sub.k <= sup.k;
    }
    ExplicitSubgroup realize_subgroup(const SubgroupType& t) const;
    /// Hasse cover edges of the type order, sorted by (sub, sup).
    std::vector<std::pair<SubgroupType, SubgroupType>> type_lattice_edges() const;
    /// Human name: T, G, Lambda_d, T x| Lambda_d, V{k} x| Lambda_d.
    std::string type_name(const SubgroupType& t) const;

    /// Subgroup generated by the given elements (BFS closure); sorted ids.
    std::vector<int> closure(const std::vector<int>& gens) const;
    std::optional<SubgroupType> type_of_order(long long order) const;

private:
    gf::FieldTable field_;
    std::vector<int> divisors_;
    std::vector<SubgroupType> types_;
};

int gcd_int(int a, int b);

} // namespace affprym::group

#endif
