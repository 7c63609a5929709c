#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wrtk/phase.hpp"

using namespace wrtk;

namespace {

// independent angle oracle: e^{i pi t/d} via long-double trig on the raw fraction
Cplx64 angle_oracle(long long t, long long d) {
    long double ang = M_PIl * static_cast<long double>(t) / static_cast<long double>(d);
    return {static_cast<double>(cosl(ang)), static_cast<double>(sinl(ang))};
}

} // namespace

TEST_CASE("unit_phase normalizes into [0, 2d) and reduces") {
    PhaseUnit one = PhaseUnit::unit(0, 5);
    CHECK(one.numer() == 0);
    CHECK(one.denom() == 1);

    PhaseUnit minus_one = PhaseUnit::unit(5, 5);
    CHECK(minus_one.numer() == 1);
    CHECK(minus_one.denom() == 1);

    PhaseUnit i_unit = PhaseUnit::unit(1, 2);
    Cplx64 z = i_unit.eval<double>();
    CHECK(z.re == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(z.im == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(PhaseUnit::unit(-1, 3) == PhaseUnit::unit(5, 3));
    CHECK_THROWS_AS(PhaseUnit::unit(1, 0), ValidationError);
}

TEST_CASE("phase_mul adds exponents over the lcm") {
    CHECK(phase_mul(PhaseUnit::unit(1, 3), PhaseUnit::unit(1, 3)) == PhaseUnit::unit(2, 3));
    CHECK(phase_mul(PhaseUnit::unit(3, 2), PhaseUnit::unit(1, 2)) == PhaseUnit::unit(0, 1));
    CHECK(phase_mul(PhaseUnit::unit(1, 2), PhaseUnit::unit(1, 3)) == PhaseUnit::unit(5, 6));
}

TEST_CASE("phase_pow reduces the integer exponent before evaluation") {
    CHECK(phase_pow(PhaseUnit::unit(1, 7), 14) == PhaseUnit::unit(0, 1));
    CHECK(phase_pow(PhaseUnit::unit(1, 7), 15) == PhaseUnit::unit(1, 7));
    // (-e^{i pi/5})^{7(3^2-1)} = (e^{i pi 6/5})^{56} = e^{i pi 6/5}: 336 mod 10 = 6
    CHECK(phase_pow(PhaseUnit::unit(6, 5), 7 * (3 * 3 - 1)) == PhaseUnit::unit(6, 5));
    // huge exponents stay exact
    BigInt e = BigInt("123456789123456789123456789");
    CHECK(phase_pow(PhaseUnit::unit(1, 9), 18 + e * 18) == PhaseUnit::unit(1, 9).pow(18));
}

TEST_CASE("pow is additive in the exponent, exactly") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        long long t = static_cast<long long>(rng() % 2000) - 1000;
        long long d = 1 + static_cast<long long>(rng() % 60);
        long long e1 = static_cast<long long>(rng() % 4000) - 2000;
        long long e2 = static_cast<long long>(rng() % 4000) - 2000;
        PhaseUnit x = PhaseUnit::unit(t, d);
        CHECK(phase_pow(x, e1 + e2) == phase_mul(phase_pow(x, e1), phase_pow(x, e2)));
    }
}

TEST_CASE("to_complex matches a high-precision trig oracle") {
    Cplx64 half = PhaseUnit::unit(1, 3).eval<double>();
    CHECK(half.re == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(half.im == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));

    // e^{2 pi i/5}: cos 72, sin 72 frozen at 166-bit precision
    Cplx64 z = PhaseUnit::unit(2, 5).eval<double>();
    CHECK(z.re == doctest::Approx(0.30901699437494742).epsilon(1e-15));
    CHECK(z.im == doctest::Approx(0.95105651629515357).epsilon(1e-15));

    Cplx<Real150> zh = PhaseUnit::unit(2, 5).eval<Real150>();
    CHECK(std::abs(static_cast<double>(zh.re) - 0.30901699437494742) < 1e-16);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        long long t = static_cast<long long>(rng() % 100000);
        long long d = 1 + static_cast<long long>(rng() % 997);
        Cplx64 got = PhaseUnit::unit(t, d).eval<double>();
        Cplx64 want = angle_oracle(t % (2 * d), d);
        CHECK(std::hypot(got.re - want.re, got.im - want.im) < 2e-15);
    }
}

TEST_CASE("to_complex respects conjugation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        long long d = 1 + static_cast<long long>(rng() % 300);
        long long t = static_cast<long long>(rng() % (2 * d));
        PhaseUnit x = PhaseUnit::unit(t, d);
        CHECK(x.conj() == PhaseUnit::unit(2 * d - t, d));
        Cplx64 z = x.eval<double>();
        Cplx64 zc = x.conj().eval<double>();
        CHECK(std::abs(z.re - zc.re) < 2e-15);
        CHECK(std::abs(z.im + zc.im) < 2e-15);
    }
}

TEST_CASE("normalization is idempotent") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        long long t = static_cast<long long>(rng() % 100000) - 50000;
        long long d = 1 + static_cast<long long>(rng() % 999);
        PhaseUnit x = PhaseUnit::unit(t, d);
        PhaseUnit y = PhaseUnit::unit(x.numer(), x.denom());
        CHECK(x.numer() == y.numer());
        CHECK(x.denom() == y.denom());
    }
}

TEST_CASE("accumulate compensates binary64 cancellation") {
    std::vector<ComplexValue> pair{{1.0, 0.0, 53, "", ""}, {-1.0, 0.0, 53, "", ""}};
    CHECK(accumulate(pair).re == 0.0);

    std::vector<ComplexValue> spike{{1e16, 0.0, 53, "", ""},
                                    {1.0, 0.0, 53, "", ""},
                                    {-1e16, 0.0, 53, "", ""}};
    CHECK(accumulate(spike).re == 1.0);
}

TEST_CASE("accumulate: full sets of n-th roots of unity cancel") {
    for (long long n : {7, 24, 101, 256, 999}) {
        std::vector<Cplx64> roots;
        for (long long k = 0; k < n; ++k) roots.push_back(PhaseUnit::unit(2 * k, n).eval<double>());
        Cplx64 total = accumulate(std::span<const Cplx64>(roots));
        CHECK(std::hypot(total.re, total.im) < 1e-12 * static_cast<double>(n));
    }
}
