#include "affprym/group.hpp"

#include <algorithm>
#include <numeric>

namespace affprym::group {

int gcd_int(int a, int b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::string ClassId::to_string() const {
    switch (kind) {
        case Kind::Identity: return "id";
        case Kind::Tau: return "τ";
        case Kind::Lambda: return "λ" + std::to_string(k);
    }
    return "?";
}

AffGroup AffGroup::build(int p, int n, int bound) {
    return AffGroup(gf::FieldTable::build(p, n, bound));
}

AffGroup::AffGroup(gf::FieldTable field) : field_(std::move(field)) {
    int m = field_.q() - 1;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) divisors_.push_back(d);
    for (int d : divisors_) {
        int sm = min_subfield_degree(d);
        for (int k = 0; k <= field_.n(); k += sm) types_.push_back({d, k, sm});
    }
    std::sort(types_.begin(), types_.end());
}

int AffGroup::id_of(const AffElement& e) const {
    int m = field_.q() - 1;
    if (e.k < 0 || e.k >= m)
        throw Error(errc::Internal, "scaling exponent out of range");
    return make(field_.index_of(e.b), e.k);
}

long long AffGroup::element_order(int g) const {
    int q = field_.q();
    int b = g % q, k = g / q;
    if (k == 0) return b == 0 ? 1 : field_.p();
    return (q - 1) / gcd_int(k, q - 1);
}

ClassId AffGroup::class_of(int g) const {
    int q = field_.q();
    int b = g % q, k = g / q;
    if (k == 0) return b == 0 ? ClassId::identity() : ClassId::tau();
    return ClassId::lambda(k);
}

int AffGroup::class_column(const ClassId& c) const {
    switch (c.kind) {
        case ClassId::Kind::Identity: return 0;
        case ClassId::Kind::Tau: return 1;
        case ClassId::Kind::Lambda: return 1 + c.k;
    }
    return -1;
}

std::vector<ConjClass> AffGroup::classes() const {
    int q = field_.q();
    std::vector<ConjClass> out;
    out.push_back({ClassId::identity(), 1, element(identity())});
    out.push_back({ClassId::tau(), q - 1, element(make(1, 0))});
    for (int k = 1; k <= q - 2; ++k)
        out.push_back({ClassId::lambda(k), q, element(make(0, k))});
    return out;
}

std::vector<std::vector<ClassId>> AffGroup::rational_classes() const {
    int m = field_.q() - 1;
    std::vector<std::vector<ClassId>> out;
    out.push_back({ClassId::identity()});  // the divisor q-1
    out.push_back({ClassId::tau()});
    for (int d : divisors_) {
        if (d == m) continue;
        std::vector<ClassId> set;
        for (int k = 1; k <= m - 1; ++k)
            if (gcd_int(k, m) == d) set.push_back(ClassId::lambda(k));
        out.push_back(std::move(set));
    }
    return out;
}

int AffGroup::min_subfield_degree(int d) const {
    int m = field_.q() - 1;
    if (m % d != 0) throw Error(errc::NotADivisor, std::to_string(d) + " does not divide q-1");
    for (int s = 1; s <= field_.n(); ++s) {
        if (field_.n() % s != 0) continue;
        long long pm = 1;
        for (int i = 0; i < s; ++i) pm *= field_.p();
        if ((pm - 1) % d == 0) return s;
    }
    throw Error(errc::Internal, "no subfield degree found");
}

bool AffGroup::type_admissible(int d, int k) const {
    int m = field_.q() - 1;
    if (d < 1 || m % d != 0) return false;
    if (k < 0 || k > field_.n()) return false;
    return k % min_subfield_degree(d) == 0;
}

SubgroupType AffGroup::type(int d, int k) const {
    if (!type_admissible(d, k))
        throw Error(errc::InadmissibleType,
                    "no subgroup of type (" + std::to_string(d) + "," + std::to_string(k) + ")");
    return {d, k, min_subfield_degree(d)};
}

ExplicitSubgroup AffGroup::realize_subgroup(const SubgroupType& t) const {
    if (!type_admissible(t.d, t.k))
        throw Error(errc::InadmissibleType, "inadmissible type " + t.to_string());
    const auto& F = field_;
    int q = F.q();
    int m = q - 1;
    int sm = min_subfield_degree(t.d);

    // V = GF(p^m)-span of 1, alpha, ..., alpha^(k/m - 1)
    long long pm = 1;
    for (int i = 0; i < sm; ++i) pm *= F.p();
    std::vector<int> subfield{0};
    int step = static_cast<int>((q - 1) / (pm - 1));
    for (long long j = 0; j < pm - 1; ++j)
        subfield.push_back(F.exp(static_cast<int>(j) * step));

    int t_dim = t.k / sm;
    std::vector<int> span{0};
    for (int i = 0; i < t_dim; ++i) {
        int basis = F.exp(i);  // alpha^i
        std::vector<int> next;
        next.reserve(span.size() * subfield.size());
        for (int s : subfield)
            for (int v : span) next.push_back(F.add(v, F.mul(s, basis)));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        span = std::move(next);
    }

    long long expected = t.d;
    for (int i = 0; i < t.k; ++i) expected *= F.p();

    int e = m / t.d;
    std::vector<int> elems;
    elems.reserve(static_cast<size_t>(expected));
    for (int j = 0; j < t.d; ++j)
        for (int v : span) elems.push_back(make(v, (j * e) % m));
    std::sort(elems.begin(), elems.end());

    if (static_cast<long long>(elems.size()) != expected)
        throw Error(errc::Internal, "realized subgroup has wrong cardinality");
    // closure check
    std::vector<bool> in(order(), false);
    for (int g : elems) in[g] = true;
    for (int g : elems)
        for (int h : elems)
            if (!in[compose(g, h)])
                throw Error(errc::Internal, "realized subgroup not closed");
    return {t, std::move(elems)};
}

std::vector<std::pair<SubgroupType, SubgroupType>> AffGroup::type_lattice_edges() const {
    std::vector<std::pair<SubgroupType, SubgroupType>> edges;
    for (const auto& a : types_) {
        for (const auto& b : types_) {
            if (a == b || !type_contains(a, b)) continue;
            bool cover = true;
            for (const auto& c : types_) {
                if (c == a || c == b) continue;
                if (type_contains(a, c) && type_contains(c, b)) {
                    cover = false;
                    break;
                }
            }
            if (cover) edges.emplace_back(a, b);
        }
    }
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
        if (!(x.first == y.first)) return x.first < y.first;
        return x.second < y.second;
    });
    return edges;
}

std::string AffGroup::type_name(const SubgroupType& t) const {
    int m = field_.q() - 1;
    if (t.k == field_.n() && t.d == m) return "G";
    if (t.k == 0) return "Λ_" + std::to_string(t.d);
    std::string v = t.k == field_.n() ? "T" : "V" + std::to_string(t.k);
    if (t.d == 1) return v;
    return v + "⋊Λ_" + std::to_string(t.d);
}

std::vector<int> AffGroup::closure(const std::vector<int>& gens) const {
    std::vector<bool> seen(order(), false);
    std::vector<int> queue{identity()};
    seen[identity()] = true;
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (int g : gens) {
            int y = compose(x, g);
            if (!seen[y]) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::optional<SubgroupType> AffGroup::type_of_order(long long ord) const {
    int p = field_.p();
    int k = 0;
    long long rest = ord;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest > field_.q() - 1 || (field_.q() - 1) % rest != 0) return std::nullopt;
    int d = static_cast<int>(rest);
    if (!type_admissible(d, k)) return std::nullopt;
    return type(d, k);
}

} // namespace affprym::group
