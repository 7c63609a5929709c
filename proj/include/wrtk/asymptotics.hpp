#pragma once

#include <complex>

#include "wrtk/reps.hpp"
#include "wrtk/wrt.hpp"

namespace wrtk {

// G(g,m) = (-1)^m sin(m pi/a) sin(m pi/b) sin(g pi/(p-ab))
//          e^{n pi i (-g^2/(4(p-ab)) - m^2/(4ab))},
// the phase exponent reduced mod 2 as an exact rational.
template <class Real>
Cplx<Real> g_term_kernel(i64 g, i64 m, i64 n, const SurgerySpec& spec) {
    using std::sin;
    const Real pi = RealTraits<Real>::pi();
    const i64 P = spec.p_minus_ab();
    Rational expo = Rational(BigInt(-n) * g * g, BigInt(4) * P) +
                    Rational(BigInt(-n) * m * m, BigInt(4) * spec.ab());
    Real amp = sin(m * pi / spec.a) * sin(m * pi / spec.b) * sin(g * pi / P);
    if (m % 2 != 0) amp = -amp;
    return amp * phase_of(expo).eval<Real>();
}

ComplexValue g_term(i64 g, i64 m, i64 n, const SurgerySpec& spec, int precision_bits = 53);

// A(n) = e^{(n+1) pi i/4}/sqrt(ab(p-ab)) sum_{S~} G(g,m)
template <class Real>
Cplx<Real> A_via_Stilde_kernel(i64 n, const SurgerySpec& spec) {
    auto [s2, stilde] = enumerate_S2_and_Stilde(spec);
    (void)s2;
    CompensatedCplxSum<Real> acc;
    for (const auto& gm : stilde) acc.add(g_term_kernel<Real>(gm.first, gm.second, n, spec));
    using std::sqrt;
    Cplx<Real> pref = phase_of(Rational(n + 1, 4)).eval<Real>();
    return pref * acc.value() / sqrt(static_cast<Real>(spec.ab()) * spec.p_minus_ab());
}

// The same value summed over the representation labels:
// A(n) = 1/4 e^{(n+1) pi i/4} [ sum_{H+^D, h odd} T_+ e^{n CS_+ pi i}
//                             + sum_{H-^D, h odd} T_- e^{n CS_- pi i}
//                             - sum_{H+^N, h even} T_+ e^{n CS_+ pi i}
//                             - sum_{H-^N, h even} T_- e^{n CS_- pi i} ].
template <class Real>
Cplx<Real> A_via_H_kernel(i64 n, const SurgerySpec& spec) {
    HPartition part = partition_H(spec);
    CompensatedCplxSum<Real> acc;
    auto add_terms = [&](Sign sign, const std::vector<IrrepLabel>& labels, bool odd_filter,
                         Real outer_sign) {
        for (const auto& x : labels) {
            if ((x.h % 2 != 0) != odd_filter) continue;
            Rational expo = Rational(n) * cs_pm_irr(sign, x, spec).value;
            Real amp = t_pm_kernel<Real>(sign, x, spec);
            acc.add((outer_sign * amp) * phase_of(expo).eval<Real>());
        }
    };
    add_terms(Sign::plus, part.plus_delta, true, Real(1));
    add_terms(Sign::minus, part.minus_delta, true, Real(1));
    add_terms(Sign::plus, part.plus_nabla, false, Real(-1));
    add_terms(Sign::minus, part.minus_nabla, false, Real(-1));
    Cplx<Real> pref = phase_of(Rational(n + 1, 4)).eval<Real>();
    return (Real(1) / 4) * (pref * acc.value());
}

// B(n) = 1/2 i (-1)^{a+b+ab} e^{n(1-p) pi i/4}
//        sum_{0 < l < p/2} T_abel(l) e^{n (-l^2/p) pi i}.
// The range includes l = (p-1)/2 for odd p; the residue analysis behind the
// expansion produces exactly the points 0 < l < p/2.
template <class Real>
Cplx<Real> B_of_n_kernel(i64 n, const SurgerySpec& spec) {
    CompensatedCplxSum<Real> acc;
    for (i64 l = 1; 2 * l < spec.p; ++l) {
        Rational expo = Rational(BigInt(-n) * l * l, spec.p);
        acc.add(t_abel_kernel<Real>(l, spec) * phase_of(expo).eval<Real>());
    }
    Cplx<Real> pref = phase_of(Rational(BigInt(n) * (1 - spec.p), 4)).eval<Real>();
    Cplx<Real> half_i{Real(0), Real(1) / 2};
    if ((spec.a + spec.b + spec.ab()) % 2 != 0) half_i.im = -half_i.im;
    return half_i * pref * acc.value();
}

ComplexValue A_via_Stilde(i64 n, const SurgerySpec& spec, int precision_bits = 53);
ComplexValue A_via_H(i64 n, const SurgerySpec& spec, int precision_bits = 53);
ComplexValue B_of_n(i64 n, const SurgerySpec& spec, int precision_bits = 53);

struct ATerm {
    Sign sign = Sign::plus;
    IrrepLabel label;
    ComplexValue term;
};

struct BTerm {
    i64 l = 0;
    ComplexValue term;
};

struct ExpansionReport {
    i64 n = 0;
    ComplexValue tau_exact;
    ComplexValue A;
    ComplexValue B;
    ComplexValue approx;        // (-1)^{p+1} n^{3/2}/(2 pi) (A + B n^{-1/2})
    double residual = 0.0;      // |2 pi (-1)^{p+1} n^{-3/2} tau - A - n^{-1/2} B|
    std::vector<ATerm> a_terms; // signed per-label contributions to A(n)
    std::vector<BTerm> b_terms; // per-l contributions to B(n)
};

ExpansionReport expansion_report(const SurgerySpec& spec, int precision_bits = 53);

struct SweepRow {
    i64 n = 0;
    ComplexValue tau;
    ComplexValue A;
    ComplexValue B;
    double residual = 0.0;
    double n_times_residual = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // sorted by n
    double slope = 0.0;          // least-squares slope of log|residual| vs log n
    double lower_median = 0.0;   // median of n|residual| over the lower half window
    double upper_median = 0.0;   // over the upper half window
    double max_n_residual = 0.0;
};

SweepResult convergence_sweep(i64 a, i64 b, i64 p, const std::vector<i64>& n_values,
                              int precision_bits = 53, int workers = 1);

// sum over 0 <= m <= 2ab of fixed parity of
//   sin(m pi/a) sin(m pi/b) e^{-n m^2 pi i/(4ab)};
// vanishes identically for coprime (a,b) and odd n.
ComplexValue vanishing_sum_check(i64 a, i64 b, i64 n, bool odd_parity, int precision_bits = 53);

// Both sides of the finite-sum identity
//   sum_{l == k+1 (2), |l| <= k-1} e^{-2(al+1)z} sinh(2(al+1)h)
//     = 1/2 e^{2(h-z)} sinh(2ka(z-h))/sinh(2a(z-h))
//     - 1/2 e^{-2(h+z)} sinh(2ka(z+h))/sinh(2a(z+h)).
std::pair<std::complex<double>, std::complex<double>> sum_l_identity_check(
    i64 a, i64 k, std::complex<double> z, std::complex<double> h);

} // namespace wrtk
