#include "wrtk/reps.hpp"

namespace wrtk {

RationalMod cs_abel(i64 l, const SurgerySpec& spec) {
    if (l <= 0 || l >= spec.p) throw DomainError("cs_abel requires 0 < l < p");
    return RationalMod::mod1(Rational(-l * l, spec.p));
}

AbelTorsion torsion_abel(i64 l, const SurgerySpec& spec) {
    if (l <= 0 || 2 * l >= spec.p) throw DomainError("torsion_abel requires 0 < l < p/2");
    AbelTorsion out;
    Real150 t = t_abel_kernel<Real150>(l, spec);
    out.t_abel = static_cast<double>(t);
    out.torsion.magnitude = static_cast<double>(Real150(1) / (t * t));
    out.torsion.sign_ambiguous = true;
    return out;
}

Rational cs_irr_raw(const IrrepLabel& x, const SurgerySpec& spec, i64 c, i64 d) {
    i64 w = spec.a * d * x.l - spec.b * c * x.k;
    return Rational(-x.h * x.h, 4 * spec.p_minus_ab()) + Rational(-w * w, 4 * spec.ab());
}

RationalMod cs_irr(const IrrepLabel& x, const SurgerySpec& spec) {
    if (!in_H(x, spec)) throw DomainError("label not in H");
    return RationalMod::mod1(cs_irr_raw(x, spec, spec.c, spec.d));
}

RationalMod cs_pm_irr(Sign sign, const IrrepLabel& x, const SurgerySpec& spec) {
    if (!in_H(x, spec)) throw DomainError("label not in H");
    i64 g = gamma_map(sign, x.k, x.l, spec);
    i64 m = (g + spec.ab() + x.h) % 2 == 0 ? g : spec.ab() - g;
    i64 hr = spec.p_minus_ab() - x.h;
    return RationalMod::mod2(Rational(-hr * hr, 4 * spec.p_minus_ab()) +
                             Rational(-m * m, 4 * spec.ab()));
}

double t_pm_irr(Sign sign, const IrrepLabel& x, const SurgerySpec& spec) {
    if (!in_H(x, spec)) throw DomainError("label not in H");
    return static_cast<double>(t_pm_kernel<Real150>(sign, x, spec));
}

TorsionValue torsion_irr(const IrrepLabel& x, const SurgerySpec& spec) {
    // valid on the open box (reflected labels drop the parity condition of H)
    if (!(0 < x.h && x.h < spec.p_minus_ab() && 0 < x.k && x.k < spec.a && 0 < x.l &&
          x.l < spec.b))
        throw DomainError("label outside the open box of H");
    TorsionValue t;
    t.magnitude = static_cast<double>(torsion_irr_magnitude_kernel<Real150>(x, spec));
    t.sign_ambiguous = true;
    return t;
}

IrrepLabel reflected_label(const IrrepLabel& x, const SurgerySpec& spec) {
    return {spec.p_minus_ab() - x.h, spec.a - x.k, spec.b - x.l};
}

bool cs_reflection_congruence_half(Sign sign, const IrrepLabel& x, const SurgerySpec& spec) {
    i64 g = gamma_map(sign, x.k, x.l, spec);
    i64 m = (g + spec.ab() + x.h) % 2 == 0 ? g : spec.ab() - g;
    i64 refl = spec.a * spec.d * (spec.b - x.l) - spec.b * spec.c * (spec.a - x.k);
    return (m * m - refl * refl) % (2 * spec.ab()) == 0;
}

std::optional<i64> cs_congruence_witness(Sign sign, const IrrepLabel& x, const SurgerySpec& spec,
                                         i64 scan) {
    Rational lhs = cs_pm_irr(sign, x, spec).value;
    IrrepLabel r = reflected_label(x, spec);
    for (i64 mag = 0; mag <= scan; ++mag)
        for (i64 t : {mag, -mag}) {
            Rational rhs = cs_irr_raw(r, spec, spec.c + t * spec.a, spec.d + t * spec.b);
            if ((lhs - rhs).is_multiple_of(2)) return t;
            if (mag == 0) break;
        }
    return std::nullopt;
}

ComplexValue chebyshev_S(i64 n, const ComplexValue& x) {
    return make_complex_value(chebyshev_S_kernel<double>(n, Cplx64{x.re, x.im}));
}

RepClass classify_rep(const IrrepLabel& x, const SurgerySpec& spec) {
    if (!in_H(x, spec)) throw DomainError("label not in H");
    using std::cos;
    const Real150 pi = RealTraits<Real150>::pi();
    Real150 base = cos(x.h * pi / spec.p_minus_ab());
    i64 plus = spec.a * spec.d * x.l + spec.b * spec.c * x.k;
    i64 minus = spec.a * spec.d * x.l - spec.b * spec.c * x.k;
    Real150 product = (base - cos(plus * pi / spec.ab())) * (base - cos(minus * pi / spec.ab()));
    if (abs(product) < 1e-12)
        throw DegenerateClassificationError("classification product within 1e-12 of zero");
    return product > 0 ? RepClass::SU2 : RepClass::SU11;
}

} // namespace wrtk
