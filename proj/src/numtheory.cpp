#include "wrtk/numtheory.hpp"

#include <algorithm>
#include <array>

namespace wrtk {

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::pair<i64, i64> canonical_cd(i64 a, i64 b) {
    if (a < 1 || b < 1) throw DomainError("canonical_cd requires positive a, b");
    if (gcd_i64(a, b) != 1) throw DomainError("gcd(a,b) != 1");
    if (b == 1) return {a - 1, 1}; // d = a^{-1} mod 1 = 0 adjusted to 1
    // extended Euclid, invariant s * a == r (mod b)
    i64 r0 = a % b, s0 = 1;
    i64 r1 = b, s1 = 0;
    while (r0 != 0) {
        i64 q = r1 / r0;
        i64 r2 = r1 - q * r0;
        i64 s2 = s1 - q * s0;
        r1 = r0;
        s1 = s0;
        r0 = r2;
        s0 = s2;
    }
    i64 d = ((s1 % b) + b) % b;
    i64 c = (a * d - 1) / b;
    return {c, d};
}

i64 bracket_mod(i64 x, i64 p) {
    if (p < 1) throw DomainError("modulus must be positive");
    i64 r = x % p;
    return r < 0 ? r + p : r;
}

int jacobi(i64 c, i64 n) {
    if (n < 1 || n % 2 == 0) throw DomainError("Jacobi symbol requires odd positive n");
    c = bracket_mod(c, n);
    int result = 1;
    while (c != 0) {
        while (c % 2 == 0) {
            c /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(c, n);
        if (c % 4 == 3 && n % 4 == 3) result = -result;
        c %= n;
    }
    return n == 1 ? result : 0;
}

SurgerySpec SurgerySpec::make(i64 a, i64 b, i64 p, i64 n) {
    if (a < 1 || b < 1) throw ValidationError("a and b must be positive");
    if (gcd_i64(a, b) != 1) throw ValidationError("gcd(a,b) != 1");
    if (b % 2 == 0) std::swap(a, b);
    else if (a % 2 == 1 && a > b) std::swap(a, b);
    if (b % 2 == 0) throw ValidationError("one of a, b must be odd");
    if (a < 2 || b < 3) throw ValidationError("torus knot requires min(a,b) >= 2");
    if (p <= a * b) throw ValidationError("p must exceed a*b");
    if (gcd_i64(p, a * b) != 1) throw ValidationError("gcd(p,ab) != 1");
    if (n < 3) throw ValidationError("n must be >= 3");
    if (n % 2 == 0) throw ValidationError("n must be odd");
    auto [c, d] = canonical_cd(a, b);
    return SurgerySpec{a, b, p, n, c, d};
}

EuclidChain euclid_chain(i64 a, i64 b) {
    if (a < 1 || b <= a) throw DomainError("euclid_chain requires b > a >= 1");
    if (gcd_i64(a, b) != 1) throw DomainError("gcd(a,b) != 1");
    EuclidChain chain;
    chain.remainders.push_back(b);
    i64 prev = b, cur = a;
    while (cur != 1) {
        chain.remainders.push_back(cur);
        chain.quotients.push_back(prev / cur);
        i64 next = prev % cur;
        prev = cur;
        cur = next;
    }
    // terminal remainder 1: the last quotient equals the preceding remainder
    chain.quotients.push_back(prev);
    return chain;
}

Rational continued_fraction_eval(const std::vector<i64>& qs) {
    if (qs.empty()) throw DomainError("continued fraction of empty list");
    Rational value(qs.back());
    for (auto it = qs.rbegin() + 1; it != qs.rend(); ++it)
        value = Rational(*it) + Rational(1) / value;
    return value;
}

SeifertChainResult seifert_chain(i64 a, i64 b, i64 p) {
    if (a == b) throw DomainError("a and b must differ");
    if (a > b) std::swap(a, b); // the twist chain needs b > a
    EuclidChain chain = euclid_chain(a, b);
    const auto& q = chain.quotients;
    i64 k = static_cast<i64>(q.size());

    // m accumulates M(q_1) M(q_2) ... M(q_k); M(q) is symmetric, so
    // M(q_k) ... M(q_1) = [[s1,t1],[u1,v1]] is its transpose.
    std::array<i64, 4> m = {1, 0, 0, 1};
    for (i64 j = 0; j < k; ++j) {
        std::array<i64, 4> next = {m[0] * q[j] + m[1], m[0], m[2] * q[j] + m[3], m[2]};
        m = next;
    }
    i64 s1 = m[0], t1 = m[2], u1 = m[1], v1 = m[3];
    if (s1 != b || t1 != a) throw ConsistencyError("matrix chain does not reproduce b/a");
    i64 det_sign = (k % 2 == 0) ? 1 : -1;
    if (b * v1 - a * u1 != det_sign) throw ConsistencyError("b v1 - a u1 != (-1)^k");

    i64 c = (k % 2 == 0) ? -v1 : v1;
    i64 d = (k % 2 == 0) ? -u1 : u1;
    if (a * d - b * c != 1) throw ConsistencyError("ad - bc != 1 in seifert chain");

    // telescoping: p - sum_{j=1}^{k-1} r_j^2 q_j - r_{k-1} = p - ab
    i64 tele = p;
    for (std::size_t j = 1; j < chain.remainders.size(); ++j)
        tele -= chain.remainders[j] * chain.remainders[j] * q[j - 1];
    tele -= chain.remainders.back();
    if (tele != p - a * b) throw ConsistencyError("telescoping identity failed");

    return SeifertChainResult{std::move(chain), k, a, b, c, d};
}

SeifertData seifert_data(i64 a, i64 b, i64 p) {
    SeifertChainResult sc = seifert_chain(a, b, p);
    if (sc.c == 0) throw DomainError("degenerate Seifert coefficient (torus knot is unknotted)");
    return SeifertData{Rational(-sc.a, sc.c), Rational(sc.b, sc.d), Rational(p - sc.a * sc.b)};
}

SeifertData seifert_data(const SurgerySpec& spec) { return seifert_data(spec.a, spec.b, spec.p); }

ComplexValue gauss_sum(i64 n, const Rational& zeta_exponent, int precision_bits) {
    if (n < 1) throw DomainError("gauss_sum requires n >= 1");
    if (precision_bits <= 53) return make_complex_value(gauss_sum_kernel<double>(n, zeta_exponent));
    if (precision_bits <= RealTraits<Real150>::bits)
        return make_complex_value(gauss_sum_kernel<Real150>(n, zeta_exponent));
    return make_complex_value(gauss_sum_kernel<Real300>(n, zeta_exponent));
}

std::pair<ComplexValue, ComplexValue> reciprocity_check(i64 c, i64 d, const Rational& w,
                                                        int precision_bits) {
    if (c < 1 || d < 1) throw DomainError("reciprocity requires positive c, d");
    if (precision_bits <= 53) {
        auto [l, r] = reciprocity_kernel<double>(c, d, w);
        return {make_complex_value(l), make_complex_value(r)};
    }
    auto [l, r] = reciprocity_kernel<Real150>(c, d, w);
    return {make_complex_value(l), make_complex_value(r)};
}

} // namespace wrtk
