#include "affprym/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace affprym::cyclo {

int totient(int m) {
    int result = m;
    for (int d = 2; static_cast<long long>(d) * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials, both monic-leading cases we need.
std::vector<BigInt> exact_div(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num;
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    std::vector<BigInt> quot(dn - dd + 1);
    for (int d = dn; d >= dd; --d) {
        BigInt c = rem[d] / den[dd];
        quot[d - dd] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i) rem[d - dd + i] -= c * den[i];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw Error(errc::Internal, "cyclotomic division not exact");
    return quot;
}

const std::vector<BigInt>& cached_cyclotomic(int M) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const std::vector<BigInt>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return *it->second;
    // fill in all divisors of M from below; each Phi_d only needs smaller ones
    for (int d = 1; d <= M; ++d) {
        if (M % d != 0 || cache.count(d)) continue;
        std::vector<BigInt> f(d + 1);
        f[0] = -1;
        f[d] = 1;
        for (int e = 1; e < d; ++e)
            if (d % e == 0) f = exact_div(f, *cache.at(e));
        cache.emplace(d, std::make_unique<const std::vector<BigInt>>(std::move(f)));
    }
    return *cache.at(M);
}

} // namespace

std::vector<BigInt> cyclotomic_poly(int M) {
    if (M < 1) throw Error(errc::Internal, "cyclotomic_poly needs M >= 1");
    return cached_cyclotomic(M);
}

CycloNumber CycloNumber::zero(int M) {
    CycloNumber x;
    x.M_ = M;
    x.coeffs_.assign(totient(M), Rational(0));
    return x;
}

CycloNumber CycloNumber::from_rational(int M, const Rational& r) {
    CycloNumber x = zero(M);
    x.coeffs_[0] = r;
    return x;
}

CycloNumber CycloNumber::from_poly(int M, std::vector<Rational> poly) {
    const std::vector<BigInt>& phi = cached_cyclotomic(M);
    int deg = static_cast<int>(phi.size()) - 1;  // = totient(M)
    // reduce mod the monic Phi_M
    for (int d = static_cast<int>(poly.size()) - 1; d >= deg; --d) {
        Rational c = poly[d];
        if (c == 0) continue;
        for (int i = 0; i <= deg; ++i) poly[d - deg + i] -= c * Rational(phi[i]);
    }
    poly.resize(deg, Rational(0));
    CycloNumber x;
    x.M_ = M;
    x.coeffs_ = std::move(poly);
    return x;
}

CycloNumber CycloNumber::root_of_unity(int M, long long k) {
    long long r = ((k % M) + M) % M;
    std::vector<Rational> poly(static_cast<size_t>(r) + 1, Rational(0));
    poly[static_cast<size_t>(r)] = 1;
    return from_poly(M, std::move(poly));
}

namespace {
void check_same_order(const CycloNumber& a, const CycloNumber& b) {
    if (a.order() != b.order())
        throw Error(errc::MixedModuli,
                    "cyclotomic operands live in different fields (M = " +
                        std::to_string(a.order()) + " vs " + std::to_string(b.order()) +
                        "); lift to a common order first");
}
} // namespace

CycloNumber CycloNumber::add(const CycloNumber& o) const {
    check_same_order(*this, o);
    CycloNumber x = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) x.coeffs_[i] += o.coeffs_[i];
    return x;
}

CycloNumber CycloNumber::sub(const CycloNumber& o) const {
    check_same_order(*this, o);
    CycloNumber x = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) x.coeffs_[i] -= o.coeffs_[i];
    return x;
}

CycloNumber CycloNumber::mul(const CycloNumber& o) const {
    check_same_order(*this, o);
    std::vector<Rational> prod(2 * coeffs_.size(), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return from_poly(M_, std::move(prod));
}

CycloNumber CycloNumber::scalar_mul(const Rational& r) const {
    CycloNumber x = *this;
    for (Rational& c : x.coeffs_) c *= r;
    return x;
}

CycloNumber CycloNumber::conj() const {
    std::vector<Rational> poly(M_, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        poly[(i * static_cast<size_t>(M_ - 1)) % M_] += coeffs_[i];
    }
    return from_poly(M_, std::move(poly));
}

CycloNumber CycloNumber::lift(int M2) const {
    if (M2 % M_ != 0)
        throw Error(errc::MixedModuli, "lift target order must be a multiple of M");
    int step = M2 / M_;
    std::vector<Rational> poly(static_cast<size_t>(M2), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        poly[i * static_cast<size_t>(step)] += coeffs_[i];
    }
    return from_poly(M2, std::move(poly));
}

bool CycloNumber::is_zero() const {
    for (const Rational& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<Rational> CycloNumber::as_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

std::string CycloNumber::to_string() const {
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string term;
        if (k == 0) {
            term = rat_to_string(mag);
        } else {
            std::string zeta = "ζ" + std::to_string(M_);
            if (k > 1) zeta += "^" + std::to_string(k);
            term = (mag == 1) ? zeta : rat_to_string(mag) + "·" + zeta;
        }
        out += term;
    }
    if (out.empty()) out = "0";
    return out;
}

} // namespace affprym::cyclo
