#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wrtk/phase.hpp"
#include "wrtk/rational.hpp"

namespace wrtk {

using i64 = std::int64_t;

i64 gcd_i64(i64 a, i64 b);

// Deterministic solution of a d - b c = 1 with d = a^{-1} mod b in [0, b)
// (d adjusted to 1 when b = 1). Throws DomainError unless gcd(a, b) = 1.
std::pair<i64, i64> canonical_cd(i64 a, i64 b);

// Residue of x mod p in [0, p). Throws DomainError when p < 1.
i64 bracket_mod(i64 x, i64 p);

// Jacobi symbol (c/n) for odd n >= 1; 0 on a shared factor.
int jacobi(i64 c, i64 n);

// Validated surgery parameters for p-surgery on the torus knot T(a,b) with the
// invariant evaluated at e^{4 pi i/n}. The pair (a,b) is normalized at
// construction so that b is odd (swapping if needed; when both are odd, so
// that a < b), and (c,d) is the canonical solution of ad - bc = 1.
struct SurgerySpec {
    i64 a = 0;
    i64 b = 0;
    i64 p = 0;
    i64 n = 3;
    i64 c = 0;
    i64 d = 0;

    i64 ab() const { return a * b; }
    i64 p_minus_ab() const { return p - a * b; }

    // Throws ValidationError naming the violated constraint.
    static SurgerySpec make(i64 a, i64 b, i64 p, i64 n = 3);
};

// Quotients q_1..q_k of the Euclidean algorithm on (b, a), b > a >= 1, with
// the remainder chain r_0 = b, r_1 = a, r_{i-1} = q_i r_i + r_{i+1} ending at
// remainder 1; the continued fraction [q_1,...,q_k] equals b/a.
struct EuclidChain {
    std::vector<i64> quotients;
    std::vector<i64> remainders; // r_0 = b, r_1 = a, ..., r_{k-1}
};

EuclidChain euclid_chain(i64 a, i64 b);

// m_0 + 1/(m_1 + 1/(... + 1/m_k)) as an exact rational.
Rational continued_fraction_eval(const std::vector<i64>& qs);

// Seifert invariants S(-a/c', b/d', p - ab) of p-surgery on T(a,b), computed
// through the twist chain: products of M(q) = [[q,1],[1,0]] over the
// Euclidean quotients, signs fixed by the parity of the chain length.
// Checks b v1 - a u1 = (-1)^k and the telescoping identity
// p - sum_j r_j^2 q_j - r_{k-1} = p - ab, throwing ConsistencyError on failure.
struct SeifertData {
    Rational r1;
    Rational r2;
    Rational r3;
};

// Chain endpoint with identities already verified; (a, b) ordered so b > a.
struct SeifertChainResult {
    EuclidChain chain;
    i64 k = 0;
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;
    i64 d = 0;
};

SeifertChainResult seifert_chain(i64 a, i64 b, i64 p);
SeifertData seifert_data(i64 a, i64 b, i64 p);
SeifertData seifert_data(const SurgerySpec& spec);

// Quadratic Gauss sum sum_{l=0}^{n-1} zeta^{l^2} with zeta = e^{i pi q},
// phases reduced exactly before evaluation.
template <class Real>
Cplx<Real> gauss_sum_kernel(i64 n, const Rational& zeta_exponent) {
    CompensatedCplxSum<Real> acc;
    for (i64 l = 0; l < n; ++l) {
        PhaseUnit term = phase_of(zeta_exponent).pow(BigInt(l) * l);
        acc.add(term.eval<Real>());
    }
    return acc.value();
}

ComplexValue gauss_sum(i64 n, const Rational& zeta_exponent, int precision_bits = 53);

// Both sides of the Cauchy-Kronecker reciprocity formula
//   1/sqrt(d) sum_{k=1}^{d} e^{(c/d)(k+w)^2 pi i}
//     = e^{pi i/4}/sqrt(c) sum_{l=1}^{c} e^{-(d/c) l^2 pi i + 2 l w pi i}
// for positive integers c, d and rational w with cd + 2cw even. The parity
// precondition is checked exactly; violation throws PreconditionError.
template <class Real>
std::pair<Cplx<Real>, Cplx<Real>> reciprocity_kernel(i64 c, i64 d, const Rational& w) {
    Rational two_cw = Rational(2 * c) * w;
    if (!two_cw.is_integer() || !((Rational(c) * d + two_cw).is_multiple_of(2)))
        throw PreconditionError("reciprocity requires cd + 2cw even (2cw integral)");

    CompensatedCplxSum<Real> lhs_acc;
    for (i64 k = 1; k <= d; ++k) {
        Rational shifted = Rational(k) + w;
        Rational q = Rational(c, d) * shifted * shifted;
        lhs_acc.add(phase_of(q).eval<Real>());
    }
    using std::sqrt;
    Cplx<Real> lhs = lhs_acc.value() / sqrt(static_cast<Real>(d));

    CompensatedCplxSum<Real> rhs_acc;
    for (i64 l = 1; l <= c; ++l) {
        Rational q = Rational(-d * l * l, c) + Rational(2 * l) * w;
        rhs_acc.add(phase_of(q).eval<Real>());
    }
    Cplx<Real> eighth = PhaseUnit::unit(1, 4).eval<Real>();
    Cplx<Real> rhs = eighth * rhs_acc.value() / sqrt(static_cast<Real>(c));
    return {lhs, rhs};
}

std::pair<ComplexValue, ComplexValue> reciprocity_check(i64 c, i64 d, const Rational& w,
                                                        int precision_bits = 53);

} // namespace wrtk
