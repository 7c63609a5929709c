#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "wrtk/errors.hpp"
#include "wrtk/rational.hpp"

namespace wrtk {

// Multiprecision real tiers. Requested precisions map to the smallest tier
// that covers them; 50 decimal digits ~ 166 bits, 90 ~ 300 bits.
using Real150 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>>;
using Real300 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<90>>;

template <class Real>
struct RealTraits;

template <>
struct RealTraits<double> {
    static constexpr int bits = 53;
    static double pi() { return boost::math::constants::pi<double>(); }
};
template <>
struct RealTraits<Real150> {
    static constexpr int bits = 166;
    static Real150 pi() { return boost::math::constants::pi<Real150>(); }
};
template <>
struct RealTraits<Real300> {
    static constexpr int bits = 300;
    static Real300 pi() { return boost::math::constants::pi<Real300>(); }
};

// Minimal complex type templated over the working real type. std::complex is
// only specified for float/double/long double, so multiprecision backends get
// this instead.
template <class Real>
struct Cplx {
    Real re{};
    Real im{};

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const Real& s, const Cplx& a) { return {s * a.re, s * a.im}; }
    friend Cplx operator/(const Cplx& a, const Real& s) { return {a.re / s, a.im / s}; }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real m = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / m, (a.im * b.re - a.re * b.im) / m};
    }
    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Cplx conj() const { return {re, -im}; }
    Real abs() const {
        using std::sqrt;
        return sqrt(re * re + im * im);
    }
};

using Cplx64 = Cplx<double>;

// Value carrier for results: binary64 fields for computation and comparison,
// plus decimal renderings at the precision the value was computed with.
struct ComplexValue {
    double re = 0.0;
    double im = 0.0;
    int precision_bits = 53;
    std::string re_str;
    std::string im_str;

    double abs() const { return std::hypot(re, im); }
};

template <class Real>
ComplexValue make_complex_value(const Cplx<Real>& z) {
    ComplexValue v;
    v.re = static_cast<double>(z.re);
    v.im = static_cast<double>(z.im);
    v.precision_bits = RealTraits<Real>::bits;
    std::ostringstream re_os, im_os;
    re_os.precision(std::numeric_limits<Real>::max_digits10);
    im_os.precision(std::numeric_limits<Real>::max_digits10);
    re_os << z.re;
    im_os << z.im;
    v.re_str = re_os.str();
    v.im_str = im_os.str();
    return v;
}

// Exact root of unity e^{i pi numer/denom} with 0 <= numer < 2 denom.
// Exponent arithmetic is performed on arbitrary-size integers and reduced
// mod 2 denom before any gcd reduction of the fraction, so exponents such as
// n (2l - m + p)^2 never lose the phase.
class PhaseUnit {
public:
    PhaseUnit() : numer_(0), denom_(1) {}

    static PhaseUnit unit(BigInt t, BigInt d) {
        if (d == 0) throw ValidationError("phase denominator must be nonzero");
        if (d < 0) {
            t = -t;
            d = -d;
        }
        PhaseUnit p;
        p.numer_ = std::move(t);
        p.denom_ = std::move(d);
        p.normalize();
        return p;
    }

    const BigInt& numer() const { return numer_; }
    const BigInt& denom() const { return denom_; }

    bool is_one() const { return numer_ == 0; }

    friend PhaseUnit operator*(const PhaseUnit& x, const PhaseUnit& y) {
        BigInt g = big_gcd(x.denom_, y.denom_);
        BigInt l = x.denom_ / g * y.denom_;
        PhaseUnit r;
        r.numer_ = x.numer_ * (l / x.denom_) + y.numer_ * (l / y.denom_);
        r.denom_ = l;
        r.normalize();
        return r;
    }

    PhaseUnit pow(const BigInt& e) const {
        PhaseUnit r;
        r.numer_ = numer_ * e;
        r.denom_ = denom_;
        r.normalize();
        return r;
    }

    PhaseUnit conj() const {
        PhaseUnit r;
        r.numer_ = -numer_;
        r.denom_ = denom_;
        r.normalize();
        return r;
    }

    friend bool operator==(const PhaseUnit& a, const PhaseUnit& b) {
        return a.numer_ == b.numer_ && a.denom_ == b.denom_;
    }

    // cos/sin evaluated on the argument pi*numer/denom already reduced to [0, 2 pi).
    template <class Real>
    Cplx<Real> eval() const {
        Real angle = RealTraits<Real>::pi() * static_cast<Real>(numer_) / static_cast<Real>(denom_);
        using std::cos;
        using std::sin;
        return {cos(angle), sin(angle)};
    }

private:
    void normalize() {
        numer_ = floor_mod(numer_, 2 * denom_);
        BigInt g = big_gcd(numer_, denom_);
        // gcd(0, d) = d: e^{0} keeps denominator 1.
        if (g > 1) {
            numer_ /= g;
            denom_ /= g;
            numer_ = floor_mod(numer_, 2 * denom_);
        }
    }

    BigInt numer_;
    BigInt denom_;
};

inline PhaseUnit unit_phase(const BigInt& t, const BigInt& d) { return PhaseUnit::unit(t, d); }
inline PhaseUnit phase_mul(const PhaseUnit& x, const PhaseUnit& y) { return x * y; }
inline PhaseUnit phase_pow(const PhaseUnit& x, const BigInt& e) { return x.pow(e); }

inline PhaseUnit phase_of(const Rational& q) { return PhaseUnit::unit(q.num(), q.den()); }

template <class Real>
Cplx<Real> to_complex(const PhaseUnit& x) {
    return x.eval<Real>();
}

inline ComplexValue to_complex(const PhaseUnit& x, int precision_bits) {
    if (precision_bits <= 53) return make_complex_value(x.eval<double>());
    if (precision_bits <= RealTraits<Real150>::bits) return make_complex_value(x.eval<Real150>());
    return make_complex_value(x.eval<Real300>());
}

// Neumaier compensated accumulation. For a sequence of N terms the result is
// within N * 2^-precision * sum |t_i| of the exact sum.
template <class Real>
class CompensatedSum {
public:
    void add(const Real& x) {
        using std::fabs;
        Real t = sum_ + x;
        if (fabs(sum_) >= fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    Real value() const { return sum_ + comp_; }

private:
    Real sum_{};
    Real comp_{};
};

template <class Real>
class CompensatedCplxSum {
public:
    void add(const Cplx<Real>& z) {
        re_.add(z.re);
        im_.add(z.im);
    }
    Cplx<Real> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum<Real> re_;
    CompensatedSum<Real> im_;
};

template <class Real>
Cplx<Real> accumulate(std::span<const Cplx<Real>> terms) {
    CompensatedCplxSum<Real> acc;
    for (const auto& t : terms) acc.add(t);
    return acc.value();
}

inline ComplexValue accumulate(const std::vector<ComplexValue>& terms) {
    CompensatedCplxSum<double> acc;
    for (const auto& t : terms) acc.add({t.re, t.im});
    return make_complex_value(acc.value());
}

} // namespace wrtk
