#include "wrtk/indexsets.hpp"

#include <algorithm>

namespace wrtk {

bool in_P(i64 k, i64 l, const SurgerySpec& spec) {
    return 0 < k && k < spec.a && 0 < l && l < spec.b && (k - l) % 2 == 0;
}

bool in_Q(i64 m, const SurgerySpec& spec) {
    return 0 < m && m < spec.ab() && m % spec.a != 0 && m % spec.b != 0;
}

bool in_Q_sign(Sign sign, i64 m, const SurgerySpec& spec) {
    if (!in_Q(m, spec)) return false;
    bool same_parity = (bracket_mod(m, spec.a) - bracket_mod(m, spec.b)) % 2 == 0;
    return (sign == Sign::plus) == same_parity;
}

bool in_H(const IrrepLabel& x, const SurgerySpec& spec) {
    return 0 < x.h && x.h < spec.p_minus_ab() && 0 < x.k && x.k < spec.a && 0 < x.l &&
           x.l < spec.b && (x.h - x.k) % 2 == 0 && (x.k - x.l) % 2 == 0;
}

bool in_R(const LatticePoint& gm, const SurgerySpec& spec) {
    i64 g = gm.first, m = gm.second;
    return 0 < m && m < spec.ab() && 0 < g && g < spec.p_minus_ab() && m % spec.a != 0 &&
           m % spec.b != 0 && (g - (spec.p - m)) % 2 == 0;
}

bool in_R_sign(Sign sign, const LatticePoint& gm, const SurgerySpec& spec) {
    if (!in_R(gm, spec)) return false;
    bool same_parity = (bracket_mod(gm.second, spec.a) - bracket_mod(gm.second, spec.b)) % 2 == 0;
    return (sign == Sign::plus) == same_parity;
}

bool in_R_delta(const LatticePoint& gm, const SurgerySpec& spec) {
    // m/ab < g/(p-ab); the dividing line carries no integer points of R
    return gm.second * spec.p_minus_ab() < gm.first * spec.ab();
}

std::vector<IrrepLabel> enumerate_H(const SurgerySpec& spec) {
    std::vector<IrrepLabel> out;
    for (i64 h = 1; h < spec.p_minus_ab(); ++h)
        for (i64 k = 1; k < spec.a; ++k) {
            if ((h - k) % 2 != 0) continue;
            for (i64 l = 1 + (k + 1) % 2; l < spec.b; l += 2) out.push_back({h, k, l});
        }
    std::sort(out.begin(), out.end());
    return out;
}

i64 card_H(const SurgerySpec& spec) {
    i64 base = (spec.a - 1) * (spec.b - 1);
    if (spec.p % 2 != 0) return base * (spec.p_minus_ab() - 1) / 4;
    return base / 2 * ((spec.p_minus_ab() - 1) / 2);
}

i64 card_R(const SurgerySpec& spec) { return 2 * card_H(spec); }

i64 gamma_map(Sign sign, i64 k, i64 l, const SurgerySpec& spec) {
    if (!in_P(k, l, spec)) throw DomainError("(k,l) not in P");
    i64 v = sign_value(sign) * spec.a * spec.d * l - spec.b * spec.c * k;
    return bracket_mod(v, spec.ab());
}

std::pair<i64, i64> theta_map(Sign sign, i64 m, const SurgerySpec& spec) {
    if (!in_Q_sign(sign, m, spec)) throw DomainError("m not in Q_sign");
    return {bracket_mod(m, spec.a), bracket_mod(sign_value(sign) * m, spec.b)};
}

LatticePoint tilde_gamma(Sign sign, const IrrepLabel& x, const SurgerySpec& spec) {
    if (!in_H(x, spec)) throw DomainError("label not in H");
    i64 g = gamma_map(sign, x.k, x.l, spec);
    i64 m = (g + spec.ab() + x.h) % 2 == 0 ? g : spec.ab() - g;
    return {spec.p_minus_ab() - x.h, m};
}

IrrepLabel tilde_theta(Sign sign, const LatticePoint& gm, const SurgerySpec& spec) {
    if (!in_R_sign(sign, gm, spec)) throw DomainError("point not in R_sign");
    i64 m = gm.second;
    i64 h = spec.p_minus_ab() - gm.first;
    int s = sign_value(sign);
    if ((spec.ab() + m + bracket_mod(m, spec.a)) % 2 == 0)
        return {h, bracket_mod(m, spec.a), bracket_mod(s * m, spec.b)};
    return {h, bracket_mod(-m, spec.a), bracket_mod(-s * m, spec.b)};
}

RPartition partition_R(const SurgerySpec& spec) {
    RPartition out;
    for (i64 g = 1; g < spec.p_minus_ab(); ++g)
        for (i64 m = 1; m < spec.ab(); ++m) {
            LatticePoint gm{g, m};
            if (!in_R(gm, spec)) continue;
            bool plus = in_R_sign(Sign::plus, gm, spec);
            bool delta = in_R_delta(gm, spec);
            auto& bucket = plus ? (delta ? out.plus_delta : out.plus_nabla)
                                : (delta ? out.minus_delta : out.minus_nabla);
            bucket.push_back(gm);
        }
    return out;
}

HPartition partition_H(const SurgerySpec& spec) {
    RPartition r = partition_R(spec);
    HPartition out;
    auto lift = [&](Sign sign, const std::vector<LatticePoint>& src, std::vector<IrrepLabel>& dst) {
        dst.reserve(src.size());
        for (const auto& gm : src) dst.push_back(tilde_theta(sign, gm, spec));
        std::sort(dst.begin(), dst.end());
    };
    lift(Sign::plus, r.plus_delta, out.plus_delta);
    lift(Sign::plus, r.plus_nabla, out.plus_nabla);
    lift(Sign::minus, r.minus_delta, out.minus_delta);
    lift(Sign::minus, r.minus_nabla, out.minus_nabla);
    return out;
}

std::pair<std::vector<LatticePoint>, std::vector<LatticePoint>> enumerate_S2_and_Stilde(
    const SurgerySpec& spec) {
    const i64 ab = spec.ab(), p = spec.p, P = spec.p_minus_ab();

    // S2: -p/2 < l < p/2, m <= 2abl/p + ab, l < m/2 + p/2 - ab, 0 < m < 2ab,
    // a and b not dividing m. Inequalities cleared of denominators; the
    // boundary line pm = ab(2l+p) carries no admissible integer points.
    std::vector<LatticePoint> s2;
    for (i64 l = -(p / 2); 2 * l < p; ++l) {
        if (-2 * l >= p) continue;
        for (i64 m = 1; m < 2 * ab; ++m) {
            if (m % spec.a == 0 || m % spec.b == 0) continue;
            if (!(p * m <= ab * (2 * l + p))) continue;
            if (!(2 * l < m + p - 2 * ab)) continue;
            s2.push_back({l, m});
        }
    }

    // S~: 0 < m < 2ab, (p-ab)m/ab < g < 2(p-ab), g == p-m (mod 2), a,b not dividing m.
    std::vector<LatticePoint> stilde;
    for (i64 g = 1; g < 2 * P; ++g)
        for (i64 m = 1; m < 2 * ab; ++m) {
            if (m % spec.a == 0 || m % spec.b == 0) continue;
            if ((g - (p - m)) % 2 != 0) continue;
            if (!(P * m < g * ab)) continue;
            stilde.push_back({g, m});
        }

    std::sort(s2.begin(), s2.end());
    std::sort(stilde.begin(), stilde.end());
    return {std::move(s2), std::move(stilde)};
}

} // namespace wrtk
