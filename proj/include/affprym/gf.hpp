#ifndef AFFPRYM_GF_HPP
#define AFFPRYM_GF_HPP

#include <vector>

#include "affprym/error.hpp"

namespace affprym::gf {

inline constexpr int kDefaultBound = 1024;

struct PrimePower {
    int p = 0;  // characteristic, prime
    int n = 0;  // extension degree
    int q = 0;  // p^n
};

/// Element of GF(p^n) as coefficients in the polynomial basis modulo the
/// field's irreducible polynomial; coeffs[i] multiplies x^i, length n.
struct FieldElement {
    std::vector<int> coeffs;

    bool operator==(const FieldElement&) const = default;
};

/// Exact arithmetic in GF(p^n) with full exp/log tables for a fixed
/// primitive element. Elements are handled as indices in [0, q): the index's
/// base-p digits, least significant first, are the polynomial coefficients.
///
/// Immutable after construction; safe to share across threads.
class FieldTable {
public:
    /// Deterministic construction: the lexicographically smallest monic
    /// irreducible modulus (coefficients compared from the constant term
    /// upward) and the lexicographically smallest primitive element.
    static FieldTable build(int p, int n, int bound = kDefaultBound);

    const PrimePower& pp() const { return pp_; }
    int p() const { return pp_.p; }
    int n() const { return pp_.n; }
    int q() const { return pp_.q; }

    /// Monic modulus, constant term first, length n+1.
    const std::vector<int>& modulus() const { return modulus_; }

    /// Index of the primitive element.
    int alpha() const { return alpha_; }

    FieldElement element(int idx) const;
    int index_of(const FieldElement& e) const;

    int add(int x, int y) const { return add_[x * pp_.q + y]; }
    int sub(int x, int y) const { return add(x, neg(y)); }
    int neg(int x) const { return neg_[x]; }
    int mul(int x, int y) const {
        if (x == 0 || y == 0) return 0;
        return exp_[(log_[x] + log_[y]) % (pp_.q - 1)];
    }
    int inv(int x) const {
        if (x == 0) throw Error(errc::ZeroInverse, "inverse of zero");
        return exp_[(pp_.q - 1 - log_[x]) % (pp_.q - 1)];
    }
    int pow(int x, long long e) const;

    /// alpha^k for any integer k (reduced mod q-1).
    int exp(int k) const {
        int m = pp_.q - 1;
        int r = static_cast<int>(((k % m) + m) % m);
        return exp_[r];
    }
    int dlog(int x) const {
        if (x == 0) throw Error(errc::LogOfZero, "discrete log of zero");
        return log_[x];
    }
    /// tr(x) = x + x^p + ... + x^(p^(n-1)), reported as a residue mod p.
    int trace(int x) const { return trace_[x]; }

    /// Membership in the subfield GF(p^m), m | n.
    bool in_subfield(int x, int m) const;

    // Coefficient-vector forms of the same operations.
    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement inv(const FieldElement& x) const;
    int trace(const FieldElement& x) const { return trace_[index_of(x)]; }
    int dlog(const FieldElement& x) const { return dlog(index_of(x)); }

private:
    FieldTable() = default;

    PrimePower pp_;
    std::vector<int> modulus_;
    int alpha_ = 0;
    std::vector<int> exp_;      // k -> alpha^k, k in [0, q-1)
    std::vector<int> log_;      // inverse of exp_ on nonzero elements
    std::vector<int> add_;      // q x q addition table
    std::vector<int> neg_;
    std::vector<int> trace_;
};

} // namespace affprym::gf

#endif
