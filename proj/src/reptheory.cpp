#include "affprym/reptheory.hpp"

#include <numeric>

namespace affprym::reptheory {

using cyclo::CycloNumber;
using group::AffGroup;

Character psi_character(const AffGroup& G, int j) {
    int m = G.q() - 1;
    if (j < 1 || j > m) throw Error(errc::Internal, "psi index out of range");
    Character chi;
    chi.label = (j == m) ? "1_G" : "ψ_" + std::to_string(j);
    int M = m == 1 ? 1 : m;
    chi.values.push_back(CycloNumber::one(M));  // id
    chi.values.push_back(CycloNumber::one(M));  // tau
    for (int k = 1; k <= G.q() - 2; ++k)
        chi.values.push_back(CycloNumber::root_of_unity(M, static_cast<long long>(j) * k));
    return chi;
}

Character theta_character(const AffGroup& G) {
    Character chi;
    chi.label = "θ";
    chi.values.push_back(CycloNumber::from_rational(1, G.q() - 1));
    chi.values.push_back(CycloNumber::from_rational(1, -1));
    for (int k = 1; k <= G.q() - 2; ++k) chi.values.push_back(CycloNumber::zero(1));
    return chi;
}

Character theta_by_induction(const AffGroup& G) {
    const auto& F = G.field();
    int p = F.p();
    Character chi;
    chi.label = "θ(induced)";
    for (const auto& cls : G.classes()) {
        int rep = G.id_of(cls.representative);
        CycloNumber sum = CycloNumber::zero(p);
        for (int x = 0; x < G.order(); ++x) {
            int y = G.conjugate(rep, G.inverse(x));  // x^-1 g x
            if (G.k_of(y) != 0) continue;            // not in T
            sum = sum.add(CycloNumber::root_of_unity(p, F.trace(G.b_of(y))));
        }
        // divide by |T| = q
        chi.values.push_back(sum.scalar_mul(Rational(1, G.q())));
    }
    return chi;
}

Character xi_character(const AffGroup& G, int d) {
    int m = G.q() - 1;
    if (d < 1 || m % d != 0)
        throw Error(errc::NotADivisor, std::to_string(d) + " does not divide q-1");
    Character chi;
    chi.label = xi_label(d, m);
    int M = m == 1 ? 1 : m;
    CycloNumber zero = CycloNumber::zero(M);
    std::vector<CycloNumber> vals(G.num_classes(), zero);
    for (int k = 1; k <= m; ++k) {
        if (group::gcd_int(k, m) != d) continue;
        Character psi = psi_character(G, k);
        for (size_t i = 0; i < vals.size(); ++i) vals[i] = vals[i].add(psi.values[i]);
    }
    chi.values = std::move(vals);
    return chi;
}

Character induced_trivial_bruteforce(const AffGroup& G, const group::ExplicitSubgroup& H) {
    std::vector<bool> member(G.order(), false);
    for (int h : H.elements) member[h] = true;
    Character chi;
    chi.label = "ρ_" + H.stype.to_string();
    for (const auto& cls : G.classes()) {
        int rep = G.id_of(cls.representative);
        long long count = 0;
        for (int x = 0; x < G.order(); ++x)
            if (member[G.conjugate(rep, G.inverse(x))]) ++count;
        Rational v(count, static_cast<long long>(H.elements.size()));
        if (!is_integer(v))
            throw Error(errc::Internal, "induced character value not integral");
        chi.values.push_back(CycloNumber::from_rational(1, v));
    }
    return chi;
}

Rational inner_product(const AffGroup& G, const Character& a, const Character& b) {
    int M = 1;
    for (const auto& v : a.values) M = std::lcm(M, v.order());
    for (const auto& v : b.values) M = std::lcm(M, v.order());
    CycloNumber sum = CycloNumber::zero(M);
    auto classes = G.classes();
    for (size_t i = 0; i < classes.size(); ++i) {
        CycloNumber term = a.values[i].lift(M).mul(b.values[i].lift(M).conj());
        sum = sum.add(term.scalar_mul(classes[i].size));
    }
    auto r = sum.as_rational();
    if (!r) throw Error(errc::Internal, "inner product is not rational");
    return *r / G.order();
}

std::string xi_label(int d, int q_minus_1) {
    return d == q_minus_1 ? "1_G" : "ξ_" + std::to_string(d);
}

std::string Decomposition::to_string(int q_minus_1) const {
    std::string out;
    auto append = [&out](const std::string& term) {
        if (!out.empty()) out += " ⊕ ";
        out += term;
    };
    for (const auto& [d, mult] : xi) {
        if (mult == 0) continue;
        std::string name = xi_label(d, q_minus_1);
        append(mult == 1 ? name : std::to_string(mult) + name);
    }
    if (theta != 0) append(theta == 1 ? "θ" : std::to_string(theta) + "θ");
    if (out.empty()) out = "0";
    return out;
}

Decomposition rho_decomposition_closed(const AffGroup& G, const group::SubgroupType& t) {
    if (!G.type_admissible(t.d, t.k))
        throw Error(errc::InadmissibleType, "inadmissible type " + t.to_string());
    Decomposition dec;
    for (int delta : G.divisors())
        if (delta % t.d == 0) dec.xi[delta] = 1;
    long long pnk = 1;
    for (int i = 0; i < G.n() - t.k; ++i) pnk *= G.p();
    dec.theta = (pnk - 1) / t.d;
    return dec;
}

Decomposition rho_decomposition_bruteforce(const AffGroup& G, const group::SubgroupType& t) {
    auto H = G.realize_subgroup(t);
    Character rho = induced_trivial_bruteforce(G, H);
    Decomposition dec;
    // Schur indices are all 1, so <rho_H, psi_d> is the xi_d multiplicity.
    for (int d : G.divisors()) {
        Rational mult = inner_product(G, rho, psi_character(G, d));
        if (!is_integer(mult) || mult < 0)
            throw Error(errc::NonIntegerMultiplicity,
                        "multiplicity of psi_" + std::to_string(d) + " is " + rat_to_string(mult));
        long long m = rat_num(mult).convert_to<long long>();
        if (m != 0) dec.xi[d] = m;
    }
    Rational tm = inner_product(G, rho, theta_character(G));
    if (!is_integer(tm) || tm < 0)
        throw Error(errc::NonIntegerMultiplicity, "multiplicity of theta is " + rat_to_string(tm));
    dec.theta = rat_num(tm).convert_to<long long>();
    return dec;
}

} // namespace affprym::reptheory
