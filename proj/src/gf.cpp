#include "affprym/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace affprym::gf {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> prime_factors(int m) {
    std::vector<int> out;
    for (int d = 2; static_cast<long long>(d) * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

// Dense polynomials over Z_p, coefficient of x^i at position i.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce by the monic modulus
    int deg_m = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(prod.size()) - 1; d >= deg_m; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i <= deg_m; ++i) {
            int pos = d - deg_m + i;
            prod[pos] = ((prod[pos] - c * mod[i]) % p + p) % p;
        }
    }
    prod.resize(deg_m);
    trim(prod);
    return prod;
}

Poly poly_powmod(Poly base, long long e, const Poly& mod, int p) {
    Poly result{1};
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    auto inv_mod_p = [p](int x) {
        int t = 0, newt = 1, r = p, newr = ((x % p) + p) % p;
        while (newr != 0) {
            int q = r / newr;
            int t2 = t - q * newt;
            t = newt;
            newt = t2;
            int r2 = r - q * newr;
            r = newr;
            newr = r2;
        }
        return ((t % p) + p) % p;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        Poly r = a;
        int db = static_cast<int>(b.size()) - 1;
        int lead_inv = inv_mod_p(b[db]);
        for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
            int c = r[d];
            if (c == 0) continue;
            int f = (c * lead_inv) % p;
            for (int i = 0; i <= db; ++i) {
                int pos = d - db + i;
                r[pos] = ((r[pos] - f * b[i]) % p + p) % p;
            }
        }
        trim(r);
        a = b;
        b = r;
    }
    return a;
}

bool is_irreducible(const Poly& f, int p, int n) {
    if (n == 1) return true;
    // x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n
    Poly x{0, 1};
    long long pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    Poly xq = poly_powmod(x, pn, f, p);
    if (xq != x) return false;
    for (int r : prime_factors(n)) {
        long long pm = 1;
        for (int i = 0; i < n / r; ++i) pm *= p;
        Poly xm = poly_powmod(x, pm, f, p);
        // xm - x
        Poly diff = xm;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        trim(diff);
        Poly g = poly_gcd(diff, f, p);
        if (static_cast<int>(g.size()) - 1 != 0) return false;
    }
    return true;
}

} // namespace

FieldTable FieldTable::build(int p, int n, int bound) {
    if (!is_prime(p)) throw Error(errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (n < 1) throw Error(errc::BoundExceeded, "n must be positive");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > bound)
            throw Error(errc::BoundExceeded,
                        "q = p^n exceeds the bound " + std::to_string(bound));
    }

    FieldTable ft;
    ft.pp_ = {p, n, static_cast<int>(q)};
    int qi = ft.pp_.q;

    // Lexicographically smallest monic irreducible modulus; coefficient
    // tuples (c0, ..., c_{n-1}) are compared starting at the constant term,
    // so c0 is the most significant digit of the enumeration counter.
    std::vector<long long> pw(n + 1, 1);
    for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * p;
    Poly mod;
    for (long long v = 0; v < pw[n]; ++v) {
        Poly f(n + 1, 0);
        f[n] = 1;
        for (int i = 0; i < n; ++i)
            f[i] = static_cast<int>((v / pw[n - 1 - i]) % p);
        if (is_irreducible(f, p, n)) {
            mod = f;
            break;
        }
    }
    ft.modulus_ = mod;

    auto idx_to_poly = [&](int idx) {
        Poly a;
        for (int i = 0, v = idx; i < n; ++i, v /= p) a.push_back(v % p);
        trim(a);
        return a;
    };
    auto poly_to_idx = [&](const Poly& a) {
        int idx = 0, f = 1;
        for (size_t i = 0; i < a.size(); ++i, f *= p) idx += a[i] * f;
        return idx;
    };

    auto order_is_full = [&](int idx) {
        if (idx == 0) return false;
        if (qi == 2) return idx == 1;
        Poly base = idx_to_poly(idx);
        if (poly_to_idx(poly_powmod(base, qi - 1, mod, p)) != 1) return false;
        for (int r : prime_factors(qi - 1)) {
            if (poly_to_idx(poly_powmod(base, (qi - 1) / r, mod, p)) == 1)
                return false;
        }
        return true;
    };

    // Smallest primitive element in the same constant-term-first order.
    int alpha = -1;
    for (long long v = 0; v < pw[n] && alpha < 0; ++v) {
        int idx = 0, f = 1;
        for (int i = 0; i < n; ++i, f *= p)
            idx += static_cast<int>((v / pw[n - 1 - i]) % p) * f;
        if (order_is_full(idx)) alpha = idx;
    }
    ft.alpha_ = alpha;

    ft.exp_.assign(qi - 1, 0);
    ft.log_.assign(qi, -1);
    Poly acc{1};
    Poly ap = idx_to_poly(alpha);
    for (int k = 0; k < qi - 1; ++k) {
        int idx = poly_to_idx(acc);
        ft.exp_[k] = idx;
        ft.log_[idx] = k;
        acc = poly_mulmod(acc, ap, mod, p);
    }

    ft.add_.assign(static_cast<size_t>(qi) * qi, 0);
    for (int x = 0; x < qi; ++x) {
        for (int y = 0; y < qi; ++y) {
            int s = 0, f = 1, xv = x, yv = y;
            for (int i = 0; i < n; ++i, f *= p, xv /= p, yv /= p)
                s += ((xv % p + yv % p) % p) * f;
            ft.add_[static_cast<size_t>(x) * qi + y] = s;
        }
    }
    ft.neg_.assign(qi, 0);
    for (int x = 0; x < qi; ++x) {
        int s = 0, f = 1, xv = x;
        for (int i = 0; i < n; ++i, f *= p, xv /= p)
            s += ((p - xv % p) % p) * f;
        ft.neg_[x] = s;
    }

    ft.trace_.assign(qi, 0);
    for (int x = 1; x < qi; ++x) {
        int acc_idx = 0;
        long long e = ft.log_[x];
        for (int i = 0; i < n; ++i) {
            int xi = ft.exp_[static_cast<int>(e % (qi - 1))];
            acc_idx = ft.add_[static_cast<size_t>(acc_idx) * qi + xi];
            e = e * p;
        }
        // the trace lands in the prime subfield, i.e. a constant polynomial
        if (acc_idx >= p) throw Error(errc::Internal, "trace left the prime subfield");
        ft.trace_[x] = acc_idx;
    }
    return ft;
}

int FieldTable::pow(int x, long long e) const {
    if (x == 0) {
        if (e == 0) return 1;
        if (e < 0) throw Error(errc::ZeroInverse, "negative power of zero");
        return 0;
    }
    int m = pp_.q - 1;
    long long r = (log_[x] * (e % m)) % m;
    if (r < 0) r += m;
    return exp_[static_cast<int>(r)];
}

bool FieldTable::in_subfield(int x, int m) const {
    if (x == 0) return true;
    if (m == pp_.n) return true;
    long long pm = 1;
    for (int i = 0; i < m; ++i) pm *= pp_.p;
    int step = static_cast<int>((pp_.q - 1) / (pm - 1));
    return log_[x] % step == 0;
}

FieldElement FieldTable::element(int idx) const {
    FieldElement e;
    e.coeffs.resize(pp_.n);
    for (int i = 0; i < pp_.n; ++i, idx /= pp_.p) e.coeffs[i] = idx % pp_.p;
    return e;
}

int FieldTable::index_of(const FieldElement& e) const {
    if (static_cast<int>(e.coeffs.size()) != pp_.n)
        throw Error(errc::Internal, "field element has wrong coefficient count");
    int idx = 0, f = 1;
    for (int i = 0; i < pp_.n; ++i, f *= pp_.p) {
        int c = e.coeffs[i];
        if (c < 0 || c >= pp_.p)
            throw Error(errc::Internal, "field element coefficient out of range");
        idx += c * f;
    }
    return idx;
}

FieldElement FieldTable::add(const FieldElement& x, const FieldElement& y) const {
    return element(add(index_of(x), index_of(y)));
}
FieldElement FieldTable::mul(const FieldElement& x, const FieldElement& y) const {
    return element(mul(index_of(x), index_of(y)));
}
FieldElement FieldTable::neg(const FieldElement& x) const {
    return element(neg(index_of(x)));
}
FieldElement FieldTable::inv(const FieldElement& x) const {
    return element(inv(index_of(x)));
}

} // namespace affprym::gf
