#pragma once

#include <utility>
#include <vector>

#include "wrtk/numtheory.hpp"

namespace wrtk {

// Label (h,k,l) of an irreducible SL(2,C) representation of pi_1(X_p):
// 0 < h < p-ab, 0 < k < a, 0 < l < b, h == k == l (mod 2).
struct IrrepLabel {
    i64 h = 0;
    i64 k = 0;
    i64 l = 0;
    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

// Point (g,m) of R / S~, or (l,m) of S2; `first` holds g or l.
struct LatticePoint {
    i64 first = 0;
    i64 second = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? +1 : -1; }

// membership predicates, all in exact integer arithmetic
bool in_P(i64 k, i64 l, const SurgerySpec& spec);
bool in_Q(i64 m, const SurgerySpec& spec);
bool in_Q_sign(Sign sign, i64 m, const SurgerySpec& spec);
bool in_H(const IrrepLabel& x, const SurgerySpec& spec);
bool in_R(const LatticePoint& gm, const SurgerySpec& spec);
bool in_R_sign(Sign sign, const LatticePoint& gm, const SurgerySpec& spec);
// strict triangle test m/ab < g/(p-ab), cleared of denominators
bool in_R_delta(const LatticePoint& gm, const SurgerySpec& spec);

// all labels of H, lexicographically sorted
std::vector<IrrepLabel> enumerate_H(const SurgerySpec& spec);

// closed-form cardinalities (both parities of p)
i64 card_H(const SurgerySpec& spec);
i64 card_R(const SurgerySpec& spec);

// Gamma_+-(k,l) = [+-adl - bck]_{ab}; lands in Q_+ / Q_-.
i64 gamma_map(Sign sign, i64 k, i64 l, const SurgerySpec& spec);

// Theta_+-(m) = ([m]_a, [+-m]_b), inverse of gamma_map on its sign class.
std::pair<i64, i64> theta_map(Sign sign, i64 m, const SurgerySpec& spec);

// (p-ab-h, Gamma) or (p-ab-h, ab-Gamma) by the parity of Gamma + ab + h.
LatticePoint tilde_gamma(Sign sign, const IrrepLabel& x, const SurgerySpec& spec);

// two-sided inverse of tilde_gamma on R_sign
IrrepLabel tilde_theta(Sign sign, const LatticePoint& gm, const SurgerySpec& spec);

struct RPartition {
    std::vector<LatticePoint> plus_delta;
    std::vector<LatticePoint> plus_nabla;
    std::vector<LatticePoint> minus_delta;
    std::vector<LatticePoint> minus_nabla;
};

struct HPartition {
    std::vector<IrrepLabel> plus_delta;
    std::vector<IrrepLabel> plus_nabla;
    std::vector<IrrepLabel> minus_delta;
    std::vector<IrrepLabel> minus_nabla;
};

RPartition partition_R(const SurgerySpec& spec);
HPartition partition_H(const SurgerySpec& spec);

// S2 as (l,m) pairs and S~ as (g,m) pairs; g = 2l - m + p maps the first
// bijectively onto the second.
std::pair<std::vector<LatticePoint>, std::vector<LatticePoint>> enumerate_S2_and_Stilde(
    const SurgerySpec& spec);

} // namespace wrtk
