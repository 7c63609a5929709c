#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>

#include "wrtk/errors.hpp"

namespace wrtk {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        a %= b;
        a.swap(b);
    }
    return a;
}

// x mod m with result in [0, m), m > 0.
inline BigInt floor_mod(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

// Exact rational with reduced num/den, den > 0. Used for Chern-Simons values,
// continued fractions, Seifert coefficients and reciprocity shifts, where float
// rounding is unacceptable.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    template <std::integral I>
    Rational(I n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    template <std::integral I, std::integral J>
    Rational(I n, J d) : num_(n), den_(d) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Representative of *this mod m (m = 1 or 2 in practice), in [0, m).
    Rational reduced_mod(const BigInt& m) const {
        return Rational(floor_mod(num_, m * den_), den_, already_reduced{});
    }

    // True iff *this is an integer multiple of m.
    bool is_multiple_of(const BigInt& m) const {
        return den_ == 1 && num_ % m == 0;
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    template <class Real>
    Real to() const {
        return static_cast<Real>(num_) / static_cast<Real>(den_);
    }

private:
    struct already_reduced {};
    Rational(BigInt n, BigInt d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = big_gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

// A rational considered modulo 1 or modulo 2, tracking which. Chern-Simons
// values of closed manifolds live in C/Z; the combinational CS_+- forms feed
// e^{n pi i x} with odd n and are only meaningful mod 2.
struct RationalMod {
    Rational value;   // representative in [0, modulus)
    int modulus = 1;  // 1 or 2

    static RationalMod mod1(const Rational& x) { return {x.reduced_mod(1), 1}; }
    static RationalMod mod2(const Rational& x) { return {x.reduced_mod(2), 2}; }

    bool congruent(const Rational& other) const {
        return (value - other).is_multiple_of(modulus);
    }
};

} // namespace wrtk
