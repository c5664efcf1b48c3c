#ifndef AFFPRYM_CYCLO_HPP
#define AFFPRYM_CYCLO_HPP

#include <optional>
#include <string>
#include <vector>

#include "affprym/error.hpp"
#include "affprym/rational.hpp"

namespace affprym::cyclo {

int totient(int m);

/// M-th cyclotomic polynomial, integer coefficients, constant term first,
/// computed by exact division in the recursion x^M - 1 = prod_{d|M} Phi_d.
std::vector<BigInt> cyclotomic_poly(int M);

/// Exact element of Q(zeta_M) in the power basis 1, zeta, ..., zeta^(phi(M)-1)
/// reduced mod Phi_M. Canonical form, so equality is coefficient equality.
/// Values are immutable; binary operations require equal M (lift explicitly).
class CycloNumber {
public:
    CycloNumber() = default;
    static CycloNumber zero(int M);
    static CycloNumber one(int M) { return from_rational(M, 1); }
    static CycloNumber from_rational(int M, const Rational& r);
    static CycloNumber root_of_unity(int M, long long k);
    /// From arbitrary-degree coefficients in zeta_M (reduced here).
    static CycloNumber from_poly(int M, std::vector<Rational> poly);

    int order() const { return M_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    CycloNumber add(const CycloNumber& o) const;
    CycloNumber sub(const CycloNumber& o) const;
    CycloNumber mul(const CycloNumber& o) const;
    CycloNumber scalar_mul(const Rational& r) const;
    CycloNumber neg() const { return scalar_mul(-1); }
    /// Complex conjugation: zeta -> zeta^(M-1).
    CycloNumber conj() const;
    /// Embed into Q(zeta_M2) for M | M2.
    CycloNumber lift(int M2) const;

    bool is_zero() const;
    std::optional<Rational> as_rational() const;

    bool operator==(const CycloNumber&) const = default;

    /// Sum of c_k·ζ{M}^k over the reduced power basis, e.g. "1 - ζ8^2".
    std::string to_string() const;

private:
    int M_ = 0;
    std::vector<Rational> coeffs_;
};

} // namespace affprym::cyclo

#endif
