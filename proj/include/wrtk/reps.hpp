#pragma once

#include <optional>

#include "wrtk/indexsets.hpp"
#include "wrtk/phase.hpp"

namespace wrtk {

// Chern-Simons invariant of the Abelian representation with meridian
// eigenvalue e^{2 l pi i/p}: the exact rational -l^2/p reduced mod 1.
RationalMod cs_abel(i64 l, const SurgerySpec& spec);

// Torsion of X_p twisted by an irreducible or Abelian representation carries
// an unresolved overall sign; only the magnitude is determined.
struct TorsionValue {
    double magnitude = 0.0;
    bool sign_ambiguous = true;
};

struct AbelTorsion {
    TorsionValue torsion;   // p sin^2(2abl pi/p) / (16 sin^2(2al..) sin^2(2bl..) sin^2(2l..))
    double t_abel = 0.0;    // signed coefficient (-1)^l 4 sin sin sin / (sqrt(p) sin)
};

template <class Real>
Real t_abel_kernel(i64 l, const SurgerySpec& spec) {
    using std::sin;
    using std::sqrt;
    const Real pi = RealTraits<Real>::pi();
    const Real p = static_cast<Real>(spec.p);
    Real s = sin(2 * spec.a * l * pi / p) * sin(2 * spec.b * l * pi / p) * sin(2 * l * pi / p) /
             (sqrt(p) * sin(2 * spec.ab() * l * pi / p));
    return (l % 2 == 0 ? 4 : -4) * s;
}

// Valid for 0 < l < p/2 (the summation range of the n^{-1/2} term).
AbelTorsion torsion_abel(i64 l, const SurgerySpec& spec);

// CS(X_p) of the irreducible representation labeled (h,k,l):
// -h^2/(4(p-ab)) - (adl-bck)^2/(4ab) mod 1, independent of the (c,d) choice.
RationalMod cs_irr(const IrrepLabel& x, const SurgerySpec& spec);
// same value with an explicit (c,d) solving ad-bc=1 (mod-2 classes depend on it)
Rational cs_irr_raw(const IrrepLabel& x, const SurgerySpec& spec, i64 c, i64 d);

// Combinational phase exponent CS_+-(h,k,l) entering A(n), reduced mod 2:
// -(p-ab-h)^2/(4(p-ab)) - M^2/(4ab) with M = Gamma_+- or ab - Gamma_+- by the
// parity of Gamma_+- + ab + h.
RationalMod cs_pm_irr(Sign sign, const IrrepLabel& x, const SurgerySpec& spec);

// Amplitude coefficient T_+-(h,k,l) entering A(n):
// (-1)^M 8 sin(M pi/a) sin(M pi/b) sin((p-ab-h) pi/(p-ab)) / sqrt(ab(p-ab)).
template <class Real>
Real t_pm_kernel(Sign sign, const IrrepLabel& x, const SurgerySpec& spec) {
    using std::sin;
    using std::sqrt;
    i64 g = gamma_map(sign, x.k, x.l, spec);
    i64 m = (g + spec.ab() + x.h) % 2 == 0 ? g : spec.ab() - g;
    const Real pi = RealTraits<Real>::pi();
    const Real P = static_cast<Real>(spec.p_minus_ab());
    Real v = 8 * sin(m * pi / spec.a) * sin(m * pi / spec.b) *
             sin((P - x.h) * pi / P) / sqrt(spec.ab() * P);
    return m % 2 == 0 ? v : -v;
}

double t_pm_irr(Sign sign, const IrrepLabel& x, const SurgerySpec& spec);

// |Tor(X_p)| at label (h,k,l): ab(p-ab) / (64 sin^2(k pi/a) sin^2(l pi/b) sin^2(h pi/(p-ab))).
template <class Real>
Real torsion_irr_magnitude_kernel(const IrrepLabel& x, const SurgerySpec& spec) {
    using std::sin;
    const Real pi = RealTraits<Real>::pi();
    const Real P = static_cast<Real>(spec.p_minus_ab());
    Real sk = sin(x.k * pi / spec.a), sl = sin(x.l * pi / spec.b), sh = sin(x.h * pi / P);
    return spec.ab() * P / (64 * sk * sk * sl * sl * sh * sh);
}

TorsionValue torsion_irr(const IrrepLabel& x, const SurgerySpec& spec);

// Reflection (p-ab-h, a-k, b-l) pairing A(n) terms with representations.
IrrepLabel reflected_label(const IrrepLabel& x, const SurgerySpec& spec);

// Congruence (ad(b-l) - bc(a-k))^2 == M_+-^2 (mod 2ab) with the canonical
// (c,d); equivalently CS_+- and cs_irr at the reflected label differ by a
// multiple of 1/2.
bool cs_reflection_congruence_half(Sign sign, const IrrepLabel& x, const SurgerySpec& spec);

// Smallest |t| such that replacing (c,d) by (c+ta, d+tb) makes
// CS_+-(x) == cs_irr(reflected x) mod 2 exactly, if one exists in the scanned
// range. The mod-2 class of cs_irr depends on the (c,d) lift; the pairing
// holds for a suitable lift for sign +, and for sign - except when
// (b-l) = (a-k) forces a fixed class.
std::optional<i64> cs_congruence_witness(Sign sign, const IrrepLabel& x, const SurgerySpec& spec,
                                         i64 scan = 16);

// S_n(x): S_0 = 1, S_1 = x, S_n = x S_{n-1} - S_{n-2}; S_n(2cos t) = sin((n+1)t)/sin t.
template <class Real>
Cplx<Real> chebyshev_S_kernel(i64 n, const Cplx<Real>& x) {
    if (n < 0) throw DomainError("chebyshev_S requires n >= 0");
    Cplx<Real> prev{Real(1), Real(0)};
    if (n == 0) return prev;
    Cplx<Real> cur = x;
    for (i64 i = 2; i <= n; ++i) {
        Cplx<Real> next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

ComplexValue chebyshev_S(i64 n, const ComplexValue& x);

enum class RepClass { SU2, SU11 };

// SU(2) iff (cos(h pi/(p-ab)) - cos((adl+bck) pi/ab)) *
//           (cos(h pi/(p-ab)) - cos((adl-bck) pi/ab)) > 0, SU(1,1) iff < 0.
// The product is evaluated at 150-bit precision; magnitudes below 1e-12 are
// rejected as degenerate rather than guessed.
RepClass classify_rep(const IrrepLabel& x, const SurgerySpec& spec);

} // namespace wrtk
