#pragma once

#include "wrtk/jones.hpp"
#include "wrtk/numtheory.hpp"

namespace wrtk {

struct TauValue {
    ComplexValue value;
    i64 n = 0;
    SurgerySpec spec;
    int precision_bits = 53;
};

inline i64 mulmod(i64 x, i64 y, i64 m) {
    __int128 r = static_cast<__int128>(((x % m) + m) % m) * (((y % m) + m) % m);
    return static_cast<i64>(r % m);
}

// tau_n(X_p; e^{4 pi i/n}) =
//   1/(sqrt(n) sin(2 pi/n)) e^{(3/n + (n+1)/4) pi i}
//   sum_{k=1}^{n-1} sin^2(2k pi/n) (-e^{pi i/n})^{p(k^2-1)} J_k(T(a,b); e^{4 pi i/n}).
// All phase exponents are reduced mod 2n in exact integer arithmetic. With
// n odd no sine in range vanishes, so each J_k comes straight from
// jones_at_root.
template <class Real>
Cplx<Real> tau_hat_kernel(const SurgerySpec& spec, const std::vector<Cplx<Real>>& tbl) {
    const i64 n = spec.n;
    const KnotParam knot{spec.a, spec.b};
    CompensatedCplxSum<Real> acc;
    for (i64 k = 1; k < n; ++k) {
        // (-e^{pi i/n})^{p(k^2-1)} = e^{pi i (n+1) p (k^2-1) / n}
        i64 e = mulmod(mulmod(n + 1, spec.p, 2 * n), k * k - 1, 2 * n);
        Real s = phase_at(tbl, 2 * k).im;
        Cplx<Real> term = (s * s) * (phase_at(tbl, e) * jones_at_root_kernel(k, knot, n, tbl));
        acc.add(term);
    }
    using std::sin;
    using std::sqrt;
    const Real pi = RealTraits<Real>::pi();
    PhaseUnit framing = phase_of(Rational(3, n) + Rational(n + 1, 4));
    Cplx<Real> pref = framing.eval<Real>() / (sqrt(static_cast<Real>(n)) * sin(2 * pi / n));
    return pref * acc.value();
}

TauValue tau_hat(const SurgerySpec& spec, int precision_bits = 53);

// Bracket of the omega element on the +1-framed unknot: the k-sum
//   1/(A^2 - A^{-2})^2 sum_{k=1}^{n-1} (-A)^{k^2-1} (A^{2k} - A^{-2k})^2
// at A = e^{pi i/n}, and its closed form sqrt(n)/sin(2 pi/n) e^{-(3/n+(n+1)/4) pi i}.
template <class Real>
std::pair<Cplx<Real>, Cplx<Real>> omega_unknot_plus_kernel(i64 n,
                                                           const std::vector<Cplx<Real>>& tbl) {
    CompensatedCplxSum<Real> acc;
    for (i64 k = 1; k < n; ++k) {
        i64 e = mulmod(n + 1, k * k - 1, 2 * n);
        Real s = phase_at(tbl, 2 * k).im;        // (A^{2k} - A^{-2k})^2 = -4 sin^2(2k pi/n)
        acc.add((-4 * s * s) * phase_at(tbl, e));
    }
    using std::sin;
    using std::sqrt;
    const Real pi = RealTraits<Real>::pi();
    Real s1 = sin(2 * pi / n);
    Cplx<Real> sum_form = acc.value() / (-4 * s1 * s1);
    PhaseUnit ph = phase_of(-(Rational(3, n) + Rational(n + 1, 4)));
    Cplx<Real> closed = (sqrt(static_cast<Real>(n)) / s1) * ph.eval<Real>();
    return {sum_form, closed};
}

std::pair<ComplexValue, ComplexValue> omega_unknot_plus(i64 n, int precision_bits = 53);

} // namespace wrtk
