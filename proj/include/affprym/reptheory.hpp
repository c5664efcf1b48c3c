#ifndef AFFPRYM_REPTHEORY_HPP
#define AFFPRYM_REPTHEORY_HPP

#include <map>
#include <string>
#include <vector>

#include "affprym/cyclo.hpp"
#include "affprym/group.hpp"

namespace affprym::reptheory {

/// Class function given by exact cyclotomic values, one per conjugacy class
/// in table-column order (id, tau, lambda_1, ..., lambda_{q-2}).
struct Character {
    std::string label;
    std::vector<cyclo::CycloNumber> values;

    const cyclo::CycloNumber& value(const group::AffGroup& G, const group::ClassId& c) const {
        return values[G.class_column(c)];
    }
    Rational degree() const { return *values.at(0).as_rational(); }
};

/// psi_j(tau_b lam_k) = zeta_{q-1}^{jk}, 1 <= j <= q-1; psi_{q-1} = 1_G.
Character psi_character(const group::AffGroup& G, int j);
/// Table row (q-1, -1, 0, ..., 0); degree-1 (1, -1) when q = 2.
Character theta_character(const group::AffGroup& G);
/// Ind_T^G(chi_1) with chi_b(tau_c) = zeta_p^{tr(bc)}, summed explicitly.
/// Equals theta_character exactly; kept as an independent oracle.
Character theta_by_induction(const group::AffGroup& G);
/// Rational irreducible xi_d = sum of psi_k over gcd(k, q-1) = d.
Character xi_character(const group::AffGroup& G, int d);
/// rho_H evaluated from the explicit subgroup: (1/|H|)#{x : x^-1 g x in H}.
Character induced_trivial_bruteforce(const group::AffGroup& G, const group::ExplicitSubgroup& H);

/// (1/|G|) sum over classes of size * a * conj(b); exact.
Rational inner_product(const group::AffGroup& G, const Character& a, const Character& b);

/// Multiset of rational irreducible constituents: xi components keyed by
/// divisor (descending, so 1_G = xi_{q-1} leads) plus a theta multiplicity.
struct Decomposition {
    std::map<int, long long, std::greater<int>> xi;
    long long theta = 0;

    bool operator==(const Decomposition&) const = default;
    /// Paper-style rendering, e.g. "1_G ⊕ ξ_4 ⊕ ξ_2 ⊕ 4θ".
    std::string to_string(int q_minus_1) const;
};

/// Lemma-form decomposition of rho_H for H of type (d,k):
/// xi_delta once for every d | delta | q-1, theta with multiplicity (p^(n-k)-1)/d.
Decomposition rho_decomposition_closed(const group::AffGroup& G, const group::SubgroupType& t);
/// Frobenius-reciprocity route through the explicit induced character;
/// must agree with the closed form exactly.
Decomposition rho_decomposition_bruteforce(const group::AffGroup& G, const group::SubgroupType& t);

std::string xi_label(int d, int q_minus_1);

} // namespace affprym::reptheory

#endif
