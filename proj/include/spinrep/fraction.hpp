#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinrep {

std::string int128_str(__int128 v);

/// Exact rational number on 128-bit integers, always normalized with a
/// positive denominator. Everything this project evaluates exactly (hook
/// counts, central characters, power sums up to triple products) stays far
/// below the 128-bit range; arithmetic overflow throws instead of wrapping.
class Fraction {
public:
    Fraction() = default;
    Fraction(long long v) : num_(v) {}  // NOLINT: implicit by design
    Fraction(long long num, long long den) : num_(num), den_(den) { normalize(); }

    static Fraction make(__int128 num, __int128 den) {
        Fraction f;
        f.num_ = num;
        f.den_ = den;
        f.normalize();
        return f;
    }

    Fraction operator-() const { return make(-num_, den_); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return make(add_checked(mul_checked(a.num_, b.den_), mul_checked(b.num_, a.den_)),
                    mul_checked(a.den_, b.den_));
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return make(mul_checked(a.num_, b.num_), mul_checked(a.den_, b.den_));
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num_ == 0) throw std::domain_error("Fraction: division by zero");
        return make(mul_checked(a.num_, b.den_), mul_checked(a.den_, b.num_));
    }
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return mul_checked(a.num_, b.den_) < mul_checked(b.num_, a.den_);
    }

    Fraction pow(int k) const {
        if (k < 0) throw std::domain_error("Fraction::pow: negative exponent");
        Fraction r = 1, base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) r *= base;
            if (k > 1) base *= base;
        }
        return r;
    }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    long long as_int() const {
        if (den_ != 1) throw std::domain_error("Fraction::as_int: not an integer: " + str());
        if (num_ > INT64_MAX || num_ < INT64_MIN)
            throw std::overflow_error("Fraction::as_int: out of range");
        return static_cast<long long>(num_);
    }
    double as_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string num_str() const { return int128_str(num_); }
    std::string den_str() const { return int128_str(den_); }
    std::string str() const {
        return den_ == 1 ? num_str() : num_str() + "/" + den_str();
    }

private:
    __int128 num_ = 0;
    __int128 den_ = 1;

    void normalize() {
        if (den_ == 0) throw std::domain_error("Fraction: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        __int128 g = gcd128(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static __int128 mul_checked(__int128 a, __int128 b) {
        __int128 r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("Fraction: 128-bit multiply overflow");
        return r;
    }
    static __int128 add_checked(__int128 a, __int128 b) {
        __int128 r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("Fraction: 128-bit add overflow");
        return r;
    }
};

inline std::string int128_str(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

}  // namespace spinrep
