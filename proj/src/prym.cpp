#include "affprym/prym.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "affprym/cyclo.hpp"
#include "affprym/genvec.hpp"

namespace affprym::prym {

using group::AffGroup;
using group::SubgroupType;

std::vector<int> Signature::periods() const {
    std::vector<int> out(a, p);
    for (const auto& [d, cnt] : b) out.insert(out.end(), cnt, d);
    return out;
}

std::string Signature::to_string() const {
    std::string out = std::to_string(g) + ";";
    bool first = true;
    for (int n : periods()) {
        if (!first) out += ",";
        out += std::to_string(n);
        first = false;
    }
    return out;
}

Signature make_signature(const AffGroup& G, int g, const std::vector<int>& periods) {
    if (g < 0) throw Error(errc::ParseError, "genus must be non-negative");
    Signature sig;
    sig.g = g;
    sig.p = G.p();
    for (int n : periods) {
        if (n == G.p()) {
            ++sig.a;
        } else if (n > 1 && (G.q() - 1) % n == 0) {
            ++sig.b[n];
        } else {
            throw Error(errc::InvalidPeriod,
                        "period " + std::to_string(n) + " is neither p nor a divisor > 1 of q-1");
        }
    }
    return sig;
}

Signature parse_signature(const AffGroup& G, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto semi = s.find(';');
    if (semi == std::string::npos)
        throw Error(errc::ParseError, "signature must look like \"g;n1,n2,...\"");
    auto parse_int = [](const std::string& tok) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw Error(errc::ParseError, "bad integer '" + tok + "' in signature");
        return std::stoi(tok);
    };
    int g = parse_int(s.substr(0, semi));
    std::vector<int> periods;
    std::string rest = s.substr(semi + 1);
    if (!rest.empty()) {
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) periods.push_back(parse_int(tok));
        if (!rest.empty() && rest.back() == ',')
            throw Error(errc::ParseError, "trailing comma in signature");
    }
    return make_signature(G, g, periods);
}

long long genus_of_X(const AffGroup& G, const Signature& sig) {
    long long order = G.order();
    long long t = order * (2LL * sig.g - 2);
    for (int n : sig.periods()) t += order - order / n;
    if (t % 2 != 0)
        throw Error(errc::NotACovering, "Riemann-Hurwitz total is odd for " + sig.to_string());
    long long gx = t / 2 + 1;
    if (gx < 0)
        throw Error(errc::NotACovering,
                    "Riemann-Hurwitz gives negative genus for " + sig.to_string());
    return gx;
}

namespace {

long long int_pow(long long base, int e) {
    long long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

bool is_prime_int(int x) {
    if (x < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

int smallest_prime_factor(int x) {
    for (int d = 2; d <= x; ++d)
        if (x % d == 0) return d;
    return x;
}

std::vector<std::pair<int, int>> factorize(int x) {
    std::vector<std::pair<int, int>> out;
    for (int d = 2; d <= x; ++d) {
        if (x % d != 0) continue;
        int e = 0;
        while (x % d == 0) {
            x /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    return out;
}

long long checked_dim(const Rational& r, const std::string& what) {
    if (!is_integer(r))
        throw Error(errc::NonIntegerDimension, "dim " + what + " = " + rat_to_string(r));
    if (r < 0)
        throw Error(errc::NegativeDimension, "dim " + what + " = " + rat_to_string(r));
    return rat_num(r).convert_to<long long>();
}

} // namespace

ComponentDims component_dims(const AffGroup& G, const Signature& sig) {
    int m = G.q() - 1;
    ComponentDims dims;
    dims.xi[m] = sig.g;
    // descending divisors, then theta; keep the error order identical to the
    // general-formula route
    for (auto it = G.divisors().rbegin(); it != G.divisors().rend(); ++it) {
        int di = *it;
        if (di == m) continue;
        Rational sum = 0;
        for (const auto& [dj, bj] : sig.b)
            if (di % dj != 0) sum += bj;
        Rational dim = Rational(cyclo::totient(m / di)) * (Rational(sig.g) - 1 + sum / 2);
        dims.xi[di] = checked_dim(dim, "B[" + reptheory::xi_label(di, m) + "]");
    }
    Rational ramif = Rational(sig.a) * int_pow(G.p(), G.n() - 1) * (G.p() - 1);
    for (const auto& [dj, bj] : sig.b)
        ramif += Rational(m) * bj * (Rational(dj) - 1) / dj;
    Rational theta = Rational(sig.g - 1) * m + ramif / 2;
    dims.theta = checked_dim(theta, "B[θ]");

    dims.genus_X = genus_of_X(G, sig);
    long long total = sig.g + dims.theta * m;
    for (const auto& [d, dim] : dims.xi)
        if (d != m) total += dim;
    if (total != dims.genus_X)
        throw Error(errc::Internal, "component dimensions disagree with Riemann-Hurwitz");
    return dims;
}

ComponentDims dims_via_general_formula(const AffGroup& G, const Signature& sig) {
    int m = G.q() - 1;
    // stabilizer types are (1,1) for period p and (d,0) for periods d | q-1
    std::vector<reptheory::Decomposition> stab;
    stab.reserve(sig.s());
    if (sig.a > 0) {
        auto rho_p = reptheory::rho_decomposition_closed(G, G.type(1, 1));
        for (int i = 0; i < sig.a; ++i) stab.push_back(rho_p);
    }
    for (const auto& [dj, bj] : sig.b) {
        auto rho_d = reptheory::rho_decomposition_closed(G, G.type(dj, 0));
        for (int i = 0; i < bj; ++i) stab.push_back(rho_d);
    }

    ComponentDims dims;
    dims.xi[m] = sig.g;
    for (auto it = G.divisors().rbegin(); it != G.divisors().rend(); ++it) {
        int di = *it;
        if (di == m) continue;
        Rational sum = 0;
        for (const auto& rho : stab) {
            long long u = rho.xi.count(di) ? rho.xi.at(di) : 0;  // <rho_Gj, psi_di>
            sum += Rational(1) - u;
        }
        Rational dim = Rational(cyclo::totient(m / di)) * (Rational(sig.g) - 1 + sum / 2);
        dims.xi[di] = checked_dim(dim, "B[" + reptheory::xi_label(di, m) + "]");
    }
    Rational sum = 0;
    for (const auto& rho : stab) sum += Rational(m) - rho.theta;  // deg - <rho_Gj, theta>
    Rational theta = Rational(sig.g - 1) * m + sum / 2;
    dims.theta = checked_dim(theta, "B[θ]");

    dims.genus_X = genus_of_X(G, sig);
    return dims;
}

PrymDecomposition prym_decomposition(const AffGroup& G, const SubgroupType& sub,
                                     const SubgroupType& sup) {
    if (!G.type_admissible(sub.d, sub.k) || !G.type_admissible(sup.d, sup.k))
        throw Error(errc::InadmissibleType, "inadmissible type in Prym pair");
    if (!AffGroup::type_contains(sub, sup))
        throw Error(errc::NotNested,
                    sub.to_string() + " is not contained in " + sup.to_string());
    PrymDecomposition pr;
    pr.sub = sub;
    pr.sup = sup;
    for (int delta : G.divisors())
        if (delta % sub.d == 0 && delta % sup.d != 0) pr.xi[delta] = 1;
    pr.theta = (int_pow(G.p(), G.n() - sub.k) - 1) / sub.d -
               (int_pow(G.p(), G.n() - sup.k) - 1) / sup.d;
    return pr;
}

QuotientDecomposition jacobian_quotient_decomposition(const AffGroup& G, const SubgroupType& t) {
    auto rho = reptheory::rho_decomposition_closed(G, t);
    QuotientDecomposition out;
    out.stype = t;
    out.xi = rho.xi;
    out.theta = rho.theta;
    return out;
}

long long quotient_genus(const AffGroup& G, const Signature& sig, const SubgroupType& t) {
    auto dims = component_dims(G, sig);
    auto dec = jacobian_quotient_decomposition(G, t);
    long long total = dec.theta * dims.theta;
    for (const auto& [d, mult] : dec.xi) total += mult * dims.xi.at(d);
    return total;
}

std::optional<std::pair<SubgroupType, SubgroupType>>
isolating_pair(const AffGroup& G, const Signature& sig, const ComponentId& component) {
    auto dims = component_dims(G, sig);
    if (dims.dim_of(component) <= 0) return std::nullopt;
    const auto& types = G.subgroup_types();
    for (const auto& sub : types) {
        for (const auto& sup : types) {
            if (!AffGroup::type_contains(sub, sup)) continue;
            auto pr = prym_decomposition(G, sub, sup);
            // restrict to positive-dimensional components
            std::map<ComponentId, long long> filtered;
            for (const auto& [d, mult] : pr.xi)
                if (mult != 0 && dims.xi.at(d) > 0) filtered[ComponentId::xi(d)] = mult;
            if (pr.theta != 0 && dims.theta > 0) filtered[ComponentId::theta_id()] = pr.theta;
            if (filtered.size() == 1 && filtered.begin()->first == component &&
                filtered.begin()->second == 1)
                return std::make_pair(sub, sup);
        }
    }
    return std::nullopt;
}

namespace {

/// Table-2 shaped affording pair for a xi component under the matched
/// condition; theta always uses (Lambda, G).
std::pair<SubgroupType, SubgroupType> table_pair(const AffGroup& G, const Condition& cond,
                                                 int di) {
    int m = G.q() - 1;
    int sup_div;
    if (cond.item == 3) {
        // positive components are powers of e; climb the e-chain, then close
        // the top power with d
        int b = 0, x = di;
        while (x % cond.e == 0) {
            x /= cond.e;
            ++b;
        }
        if (x != 1)
            throw Error(errc::Internal,
                        "positive component not a power of e in the mixed case");
        sup_div = (b < cond.nu) ? di * cond.e : di * cond.d;
    } else {
        sup_div = di * smallest_prime_factor(m / di);
    }
    return {G.type(di, G.n()), G.type(sup_div, G.n())};
}

} // namespace

Verdict decide_affordable(const AffGroup& G, const Signature& sig, bool check_realizability,
                          long long budget) {
    Verdict v;
    v.dims = component_dims(G, sig);

    if (check_realizability) {
        auto r = genvec::is_realizable(G, sig, budget);
        if (r.status == genvec::SearchResult::Status::No)
            throw Error(errc::UnrealizableSignature,
                        "no generating vector of type " + sig.to_string() + " exists");
        if (r.status == genvec::SearchResult::Status::Unknown)
            throw Error(errc::BudgetExhausted,
                        "generating-vector search exhausted its budget on " + sig.to_string());
        v.realizable = true;
    }

    int q = G.q();
    int m = q - 1;

    std::optional<Condition> cond;
    // (1) q itself is exceptional
    if (q == 2) {
        cond = Condition{1, Cond1Reason::qIs2, "", 0, 0, 0, 0};
    } else if (q == 9) {
        cond = Condition{1, Cond1Reason::qIs9, "", 0, 0, 0, 0};
    } else if (is_prime_int(q) && (m & (m - 1)) == 0) {
        cond = Condition{1, Cond1Reason::FermatPrime, "", 0, 0, 0, 0};
    } else if (G.p() == 2 && is_prime_int(m)) {
        cond = Condition{1, Cond1Reason::MersenneQminus1, "", 0, 0, 0, 0};
    }
    // (2) torus or sphere with the two heavy branch points
    if (!cond) {
        if (sig.g == 1 && sig.b.empty()) {
            cond = Condition{2, Cond1Reason::qIs2, "(1;p,...,p)", 0, 0, 0, 0};
        } else if (sig.g == 0 && sig.b.size() == 1 && sig.b.count(m) && sig.b.at(m) == 2) {
            cond = Condition{2, Cond1Reason::qIs2, "(0;p,...,p,q-1,q-1)", 0, 0, 0, 0};
        }
    }
    // (3) q-1 = d^mu e^nu with both ordered prime assignments
    if (!cond) {
        auto fac = factorize(m);
        if (fac.size() == 2) {
            for (int swap = 0; swap < 2 && !cond; ++swap) {
                int d = fac[swap].first, mu = fac[swap].second;
                int e = fac[1 - swap].first, nu = fac[1 - swap].second;
                int env = static_cast<int>(int_pow(e, nu));
                auto has = [&](int key, int cnt) {
                    return sig.b.count(key) && sig.b.at(key) == cnt;
                };
                int t = sig.b.count(d) ? sig.b.at(d) : 0;
                if (sig.g == 1 && t >= 1 && sig.b.size() == 1) {
                    cond = Condition{3, Cond1Reason::qIs2, "(1;p,...,p,d,...,d)", d, e, mu, nu};
                } else if (sig.g == 0 && t >= 1 && sig.b.size() == 2 && has(m, 2)) {
                    cond = Condition{3, Cond1Reason::qIs2, "(0;p,...,p,q-1,q-1,d,...,d)",
                                     d, e, mu, nu};
                } else if (mu == 1 && sig.g == 0 && t >= 1 && sig.b.size() == 3 && has(m, 1) &&
                           has(env, 1)) {
                    cond = Condition{3, Cond1Reason::qIs2, "(0;p,...,p,q-1,e^nu,d,...,d)",
                                     d, e, mu, nu};
                } else if (mu == 1 && sig.g == 0 && t >= 1 && sig.b.size() == 2 && has(env, 2)) {
                    cond = Condition{3, Cond1Reason::qIs2, "(0;p,...,p,e^nu,e^nu,d,...,d)",
                                     d, e, mu, nu};
                }
            }
        }
    }

    v.affordable = cond.has_value();
    v.condition = cond;
    if (!v.affordable) return v;

    bool has_xi_row = false;
    for (auto it = G.divisors().rbegin(); it != G.divisors().rend(); ++it) {
        int di = *it;
        if (di == m || v.dims.xi.at(di) <= 0) continue;
        auto [H, N] = table_pair(G, *cond, di);
        v.table.push_back({ComponentId::xi(di), v.dims.xi.at(di), H, N});
        has_xi_row = true;
    }
    if (v.dims.theta > 0)
        v.table.push_back({ComponentId::theta_id(), v.dims.theta, G.type(m, 0), G.type(m, G.n())});
    v.simple_decomposition = !has_xi_row;

    // each emitted row must actually isolate its component
    for (const auto& row : v.table) {
        auto pr = prym_decomposition(G, row.H, row.N);
        std::map<ComponentId, long long> filtered;
        for (const auto& [d, mult] : pr.xi)
            if (mult != 0 && v.dims.xi.at(d) > 0) filtered[ComponentId::xi(d)] = mult;
        if (pr.theta != 0 && v.dims.theta > 0) filtered[ComponentId::theta_id()] = pr.theta;
        if (filtered.size() != 1 || !(filtered.begin()->first == row.component) ||
            filtered.begin()->second != 1)
            throw Error(errc::Internal,
                        "table pair fails to isolate " + row.component.to_string(m));
    }
    return v;
}

bool decide_affordable_oracle(const AffGroup& G, const Signature& sig) {
    auto dims = component_dims(G, sig);
    int m = G.q() - 1;
    for (const auto& [d, dim] : dims.xi) {
        if (d == m || dim <= 0) continue;
        if (!isolating_pair(G, sig, ComponentId::xi(d))) return false;
    }
    if (dims.theta > 0 && !isolating_pair(G, sig, ComponentId::theta_id())) return false;
    return true;
}

} // namespace affprym::prym
