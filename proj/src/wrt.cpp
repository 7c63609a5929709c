#include "wrtk/wrt.hpp"

namespace wrtk {

TauValue tau_hat(const SurgerySpec& spec, int precision_bits) {
    TauValue out;
    out.n = spec.n;
    out.spec = spec;
    out.precision_bits = precision_bits;
    if (precision_bits <= 53)
        out.value = make_complex_value(tau_hat_kernel<double>(spec, phase_table<double>(spec.n)));
    else if (precision_bits <= RealTraits<Real150>::bits)
        out.value = make_complex_value(tau_hat_kernel<Real150>(spec, phase_table<Real150>(spec.n)));
    else
        out.value = make_complex_value(tau_hat_kernel<Real300>(spec, phase_table<Real300>(spec.n)));
    return out;
}

std::pair<ComplexValue, ComplexValue> omega_unknot_plus(i64 n, int precision_bits) {
    if (n < 3 || n % 2 == 0) throw DomainError("omega_unknot_plus requires odd n >= 3");
    if (precision_bits <= 53) {
        auto [s, c] = omega_unknot_plus_kernel<double>(n, phase_table<double>(n));
        return {make_complex_value(s), make_complex_value(c)};
    }
    auto [s, c] = omega_unknot_plus_kernel<Real150>(n, phase_table<Real150>(n));
    return {make_complex_value(s), make_complex_value(c)};
}

} // namespace wrtk
