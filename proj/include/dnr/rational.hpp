#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dnr {

// Exact rational number over int64 storage, always in lowest terms with a
// positive denominator. Intermediates run through __int128; anything that
// would not fit back into int64 after reduction throws std::overflow_error.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { *this = make(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) d = 1;
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw std::overflow_error("Rational: value out of range");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    long long num_;
    long long den_;
};

inline long long lcm_ll(long long a, long long b) {
    __int128 g = a;
    __int128 x = b;
    while (x != 0) {
        __int128 t = g % x;
        g = x;
        x = t;
    }
    __int128 l = (__int128(a) / g) * b;
    if (l > INT64_MAX) throw std::overflow_error("lcm out of range");
    return static_cast<long long>(l);
}

// Complex number with exact rational real and imaginary parts. Contains the
// Gaussian units {1, -1, i, -i} needed for the i-power prefactors.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(re) {}
    GaussianRational(long long re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(re), im_(im) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    // i^k for any signed k
    static GaussianRational i_power(long long k) {
        long long m = ((k % 4) + 4) % 4;
        switch (m) {
            case 0: return GaussianRational(1);
            case 1: return i();
            case 2: return GaussianRational(-1);
            default: return GaussianRational(Rational(0), Rational(-1));
        }
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_gaussian_unit() const {
        return (*this == GaussianRational(1)) || (*this == GaussianRational(-1)) ||
               (*this == i()) || (*this == -i());
    }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
        Rational norm = re_ * re_ + im_ * im_;
        return GaussianRational(re_ / norm, -im_ / norm);
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // canonical term text over a common denominator: "(p/d)+(r/d)i"
    std::string str() const {
        long long d = lcm_ll(re_.den(), im_.den());
        long long p = re_.num() * (d / re_.den());
        long long r = im_.num() * (d / im_.den());
        return "(" + std::to_string(p) + "/" + std::to_string(d) + ")+(" + std::to_string(r) +
               "/" + std::to_string(d) + ")i";
    }

private:
    Rational re_;
    Rational im_;
};

}  // namespace dnr
