#include "wrtk/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace wrtk {

ComplexValue g_term(i64 g, i64 m, i64 n, const SurgerySpec& spec, int precision_bits) {
    if (precision_bits <= 53) return make_complex_value(g_term_kernel<double>(g, m, n, spec));
    return make_complex_value(g_term_kernel<Real150>(g, m, n, spec));
}

ComplexValue A_via_Stilde(i64 n, const SurgerySpec& spec, int precision_bits) {
    if (precision_bits <= 53) return make_complex_value(A_via_Stilde_kernel<double>(n, spec));
    return make_complex_value(A_via_Stilde_kernel<Real150>(n, spec));
}

ComplexValue A_via_H(i64 n, const SurgerySpec& spec, int precision_bits) {
    if (precision_bits <= 53) return make_complex_value(A_via_H_kernel<double>(n, spec));
    return make_complex_value(A_via_H_kernel<Real150>(n, spec));
}

ComplexValue B_of_n(i64 n, const SurgerySpec& spec, int precision_bits) {
    if (precision_bits <= 53) return make_complex_value(B_of_n_kernel<double>(n, spec));
    return make_complex_value(B_of_n_kernel<Real150>(n, spec));
}

namespace {

template <class Real>
ExpansionReport expansion_report_impl(const SurgerySpec& spec) {
    const i64 n = spec.n;
    ExpansionReport rep;
    rep.n = n;

    Cplx<Real> tau = tau_hat_kernel<Real>(spec, phase_table<Real>(n));
    Cplx<Real> A = A_via_H_kernel<Real>(n, spec);
    Cplx<Real> B = B_of_n_kernel<Real>(n, spec);

    using std::sqrt;
    const Real pi = RealTraits<Real>::pi();
    Real lead = sqrt(static_cast<Real>(n)) * n / (2 * pi);
    if (spec.p % 2 == 0) lead = -lead; // (-1)^{p+1}
    Cplx<Real> approx = lead * (A + B / sqrt(static_cast<Real>(n)));
    Cplx<Real> normalized = tau / lead;
    Real residual = (normalized - A - B / sqrt(static_cast<Real>(n))).abs();

    rep.tau_exact = make_complex_value(tau);
    rep.A = make_complex_value(A);
    rep.B = make_complex_value(B);
    rep.approx = make_complex_value(approx);
    rep.residual = static_cast<double>(residual);

    // per-term breakdown, keyed by representation label / abelian l
    Cplx<Real> quarter_pref = phase_of(Rational(n + 1, 4)).eval<Real>();
    HPartition part = partition_H(spec);
    auto push_terms = [&](Sign sign, const std::vector<IrrepLabel>& labels, bool odd_filter,
                          Real outer) {
        for (const auto& x : labels) {
            if ((x.h % 2 != 0) != odd_filter) continue;
            Rational expo = Rational(n) * cs_pm_irr(sign, x, spec).value;
            Cplx<Real> term = (outer * t_pm_kernel<Real>(sign, x, spec) / 4) *
                              (quarter_pref * phase_of(expo).eval<Real>());
            rep.a_terms.push_back({sign, x, make_complex_value(term)});
        }
    };
    push_terms(Sign::plus, part.plus_delta, true, Real(1));
    push_terms(Sign::minus, part.minus_delta, true, Real(1));
    push_terms(Sign::plus, part.plus_nabla, false, Real(-1));
    push_terms(Sign::minus, part.minus_nabla, false, Real(-1));

    Cplx<Real> b_pref = phase_of(Rational(BigInt(n) * (1 - spec.p), 4)).eval<Real>();
    Cplx<Real> half_i{Real(0), Real(1) / 2};
    if ((spec.a + spec.b + spec.ab()) % 2 != 0) half_i.im = -half_i.im;
    for (i64 l = 1; 2 * l < spec.p; ++l) {
        Rational expo = Rational(BigInt(-n) * l * l, spec.p);
        Cplx<Real> term = half_i * b_pref *
                          (t_abel_kernel<Real>(l, spec) * phase_of(expo).eval<Real>());
        rep.b_terms.push_back({l, make_complex_value(term)});
    }
    return rep;
}

} // namespace

ExpansionReport expansion_report(const SurgerySpec& spec, int precision_bits) {
    if (precision_bits <= 53) return expansion_report_impl<double>(spec);
    return expansion_report_impl<Real150>(spec);
}

SweepResult convergence_sweep(i64 a, i64 b, i64 p, const std::vector<i64>& n_values,
                              int precision_bits, int workers) {
    for (i64 n : n_values)
        if (n < 3 || n % 2 == 0) throw ValidationError("sweep n values must be odd and >= 3");
    std::vector<i64> ns = n_values;
    std::sort(ns.begin(), ns.end());

    SweepResult result;
    result.rows.resize(ns.size());
    auto compute_row = [&](std::size_t i) {
        SurgerySpec spec = SurgerySpec::make(a, b, p, ns[i]);
        ExpansionReport rep = expansion_report(spec, precision_bits);
        SweepRow row;
        row.n = ns[i];
        row.tau = rep.tau_exact;
        row.A = rep.A;
        row.B = rep.B;
        row.residual = rep.residual;
        row.n_times_residual = static_cast<double>(ns[i]) * rep.residual;
        result.rows[i] = row;
    };

    int nworkers = std::max(1, workers);
    if (nworkers == 1) {
        for (std::size_t i = 0; i < ns.size(); ++i) compute_row(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        for (int w = 0; w < nworkers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < ns.size();
                     i += static_cast<std::size_t>(nworkers))
                    compute_row(i);
            });
        for (auto& t : pool) t.join();
    }

    // summary: least-squares slope of log|residual| vs log n, half-window medians
    std::size_t m = result.rows.size();
    if (m >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& row : result.rows) {
            double x = std::log(static_cast<double>(row.n));
            double y = std::log(std::max(row.residual, 1e-300));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double dm = static_cast<double>(m);
        result.slope = (dm * sxy - sx * sy) / (dm * sxx - sx * sx);
    }
    auto median_of = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        std::size_t k = v.size();
        if (k == 0) return 0.0;
        return k % 2 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
    };
    std::vector<double> lower, upper;
    for (std::size_t i = 0; i < m; ++i)
        (i < m / 2 ? lower : upper).push_back(result.rows[i].n_times_residual);
    result.lower_median = median_of(lower);
    result.upper_median = median_of(upper);
    for (const auto& row : result.rows)
        result.max_n_residual = std::max(result.max_n_residual, row.n_times_residual);
    return result;
}

namespace {

template <class Real>
Cplx<Real> vanishing_sum_impl(i64 a, i64 b, i64 n, bool odd_parity) {
    using std::sin;
    const Real pi = RealTraits<Real>::pi();
    CompensatedCplxSum<Real> acc;
    for (i64 m = odd_parity ? 1 : 0; m <= 2 * a * b; m += 2) {
        Rational expo = Rational(BigInt(-n) * m * m, BigInt(4) * a * b);
        Real amp = sin(m * pi / a) * sin(m * pi / b);
        acc.add(amp * phase_of(expo).eval<Real>());
    }
    return acc.value();
}

} // namespace

ComplexValue vanishing_sum_check(i64 a, i64 b, i64 n, bool odd_parity, int precision_bits) {
    if (gcd_i64(a, b) != 1) throw DomainError("gcd(a,b) != 1");
    if (n < 3 || n % 2 == 0) throw DomainError("vanishing sum requires odd n >= 3");
    if (precision_bits <= 53) return make_complex_value(vanishing_sum_impl<double>(a, b, n, odd_parity));
    return make_complex_value(vanishing_sum_impl<Real150>(a, b, n, odd_parity));
}

std::pair<std::complex<double>, std::complex<double>> sum_l_identity_check(
    i64 a, i64 k, std::complex<double> z, std::complex<double> h) {
    if (a < 1 || k < 1) throw DomainError("sum_l identity requires a, k >= 1");
    const std::complex<double> zm = 2.0 * static_cast<double>(a) * (z - h);
    const std::complex<double> zp = 2.0 * static_cast<double>(a) * (z + h);
    if (std::abs(std::sinh(zm)) < 1e-14 || std::abs(std::sinh(zp)) < 1e-14)
        throw PoleError("sinh(2a(z +- h)) vanishes at the requested point");

    std::complex<double> lhs = 0.0;
    for (i64 l = -(k - 1); l <= k - 1; l += 2) {
        std::complex<double> w = static_cast<double>(a * l + 1);
        lhs += std::exp(-2.0 * w * z) * std::sinh(2.0 * w * h);
    }
    std::complex<double> rhs =
        0.5 * std::exp(2.0 * (h - z)) * std::sinh(static_cast<double>(k) * zm) / std::sinh(zm) -
        0.5 * std::exp(-2.0 * (h + z)) * std::sinh(static_cast<double>(k) * zp) / std::sinh(zp);
    return {lhs, rhs};
}

} // namespace wrtk
