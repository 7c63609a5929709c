#pragma once

#include <vector>

#include "wrtk/numtheory.hpp"
#include "wrtk/phase.hpp"

namespace wrtk {

struct KnotParam {
    i64 a = 0;
    i64 b = 0;

    static KnotParam make(i64 a, i64 b) {
        if (a < 1 || b < 1) throw ValidationError("torus knot parameters must be positive");
        if (gcd_i64(a, b) != 1) throw ValidationError("gcd(a,b) != 1");
        return KnotParam{a, b};
    }
};

// Table of e^{i pi t/n} for t in [0, 2n); phases over denominator n reduce to
// lookups after exact integer reduction of the exponent.
template <class Real>
std::vector<Cplx<Real>> phase_table(i64 n) {
    std::vector<Cplx<Real>> tbl(static_cast<std::size_t>(2 * n));
    for (i64 t = 0; t < 2 * n; ++t) tbl[static_cast<std::size_t>(t)] = PhaseUnit::unit(t, n).eval<Real>();
    return tbl;
}

template <class Real>
const Cplx<Real>& phase_at(const std::vector<Cplx<Real>>& tbl, i64 numer) {
    i64 m = static_cast<i64>(tbl.size());
    i64 t = static_cast<i64>((static_cast<__int128>(numer) % m + m) % m);
    return tbl[static_cast<std::size_t>(t)];
}

// J_k(T(a,b); q) by the torus-knot formula
//   q^{-ab(k^2-1)/4} sum_{j=-(k-1)/2}^{(k-1)/2} q^{bj(aj+1)}
//     (q^{aj+1/2} - q^{-(aj+1/2)}) / (q^{k/2} - q^{-k/2}),
// half-integer powers cleared to the common denominator 4 den(q). The sum
// runs over l = 2j with l == k+1 (mod 2), |l| <= k-1.
template <class Real>
Cplx<Real> colored_jones_kernel(i64 k, const KnotParam& knot, const PhaseUnit& q) {
    if (k < 1) throw DomainError("colored_jones requires k >= 1");
    if (q.pow(k).is_one())
        throw PoleError("q^{k/2} - q^{-k/2} vanishes at k = " + std::to_string(k) +
                        ", q = e^{i pi " + q.numer().str() + "/" + q.denom().str() + "}");
    const BigInt tn = q.numer();
    const BigInt td = 4 * q.denom();
    auto qpow4 = [&](const BigInt& x) -> Cplx<Real> {
        return PhaseUnit::unit(tn * x, td).template eval<Real>(); // q^{x/4}
    };

    CompensatedCplxSum<Real> acc;
    for (i64 l = -(k - 1); l <= k - 1; l += 2) {
        BigInt e1 = BigInt(knot.b) * l * (knot.a * l + 2);
        BigInt e2 = BigInt(2) * (knot.a * l + 1);
        acc.add(qpow4(e1) * (qpow4(e2) - qpow4(-e2)));
    }
    Cplx<Real> den = qpow4(BigInt(2) * k) - qpow4(BigInt(-2) * k);
    Cplx<Real> pref = qpow4(BigInt(-knot.a) * knot.b * (k * k - 1));
    return pref * (acc.value() / den);
}

// J_k(T(a,b); e^{4 pi i/n}) in the sine-ratio form
//   e^{-ab(k^2-1) pi i/n} sum_l e^{bl(al+2) pi i/n} sin(2(al+1) pi/n) / sin(2k pi/n).
template <class Real>
Cplx<Real> jones_at_root_kernel(i64 k, const KnotParam& knot, i64 n,
                                const std::vector<Cplx<Real>>& tbl) {
    if (k < 1) throw DomainError("jones_at_root requires k >= 1");
    if ((2 * k) % n == 0)
        throw PoleError("sin(2k pi/n) vanishes at k = " + std::to_string(k) +
                        ", n = " + std::to_string(n));
    CompensatedCplxSum<Real> acc;
    for (i64 l = -(k - 1); l <= k - 1; l += 2) {
        const Cplx<Real>& ph = phase_at(tbl, knot.b * l * (knot.a * l + 2));
        Real s = phase_at(tbl, 2 * (knot.a * l + 1)).im; // sin(2(al+1) pi/n)
        acc.add(s * ph);
    }
    Real sk = phase_at(tbl, 2 * k).im; // sin(2k pi/n)
    return phase_at(tbl, -knot.a * knot.b * (k * k - 1)) * (acc.value() / sk);
}

ComplexValue colored_jones(i64 k, const KnotParam& knot, const PhaseUnit& q,
                           int precision_bits = 53);
ComplexValue jones_at_root(i64 k, const KnotParam& knot, i64 n, int precision_bits = 53);

// Normalized Alexander polynomial of T(a,b),
//   (t^{ab/2} - t^{-ab/2})(t^{1/2} - t^{-1/2})
//     / ((t^{a/2} - t^{-a/2})(t^{b/2} - t^{-b/2})),
// half-powers taken through a fixed square root s of t; exactly 1 at t = 1.
template <class Real>
Cplx<Real> alexander_kernel(const KnotParam& knot, const Cplx<Real>& t) {
    if (t.re == 1 && t.im == 0) return {Real(1), Real(0)};
    using std::atan2;
    using std::cos;
    using std::hypot;
    using std::pow;
    using std::sin;
    Real r = hypot(t.re, t.im), th = atan2(t.im, t.re);
    Real sr = pow(r, Real(0.5)), sth = th / 2;
    Cplx<Real> s{sr * cos(sth), sr * sin(sth)};
    auto half_diff = [&](i64 e) {
        // s^e - s^{-e}
        Cplx<Real> z{Real(1), Real(0)};
        for (i64 i = 0; i < e; ++i) z = z * s;
        Cplx<Real> inv = Cplx<Real>{Real(1), Real(0)} / z;
        return z - inv;
    };
    Cplx<Real> den = half_diff(knot.a) * half_diff(knot.b);
    if (den.abs() < 1e-12) throw PoleError("Alexander denominator vanishes away from t = 1");
    return half_diff(knot.a * knot.b) * half_diff(1) / den;
}

ComplexValue alexander(const KnotParam& knot, const ComplexValue& t, int precision_bits = 53);

} // namespace wrtk
