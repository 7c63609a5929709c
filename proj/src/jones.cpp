#include "wrtk/jones.hpp"

namespace wrtk {

ComplexValue colored_jones(i64 k, const KnotParam& knot, const PhaseUnit& q, int precision_bits) {
    if (precision_bits <= 53) return make_complex_value(colored_jones_kernel<double>(k, knot, q));
    if (precision_bits <= RealTraits<Real150>::bits)
        return make_complex_value(colored_jones_kernel<Real150>(k, knot, q));
    return make_complex_value(colored_jones_kernel<Real300>(k, knot, q));
}

ComplexValue jones_at_root(i64 k, const KnotParam& knot, i64 n, int precision_bits) {
    if (n < 3 || n % 2 == 0) throw DomainError("jones_at_root requires odd n >= 3");
    if (precision_bits <= 53)
        return make_complex_value(jones_at_root_kernel<double>(k, knot, n, phase_table<double>(n)));
    if (precision_bits <= RealTraits<Real150>::bits)
        return make_complex_value(jones_at_root_kernel<Real150>(k, knot, n, phase_table<Real150>(n)));
    return make_complex_value(jones_at_root_kernel<Real300>(k, knot, n, phase_table<Real300>(n)));
}

ComplexValue alexander(const KnotParam& knot, const ComplexValue& t, int precision_bits) {
    if (precision_bits <= 53)
        return make_complex_value(alexander_kernel<double>(knot, Cplx64{t.re, t.im}));
    return make_complex_value(alexander_kernel<Real150>(knot, Cplx<Real150>{Real150(t.re), Real150(t.im)}));
}

} // namespace wrtk
