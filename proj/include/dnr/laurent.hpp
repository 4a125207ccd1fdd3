#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "dnr/rational.hpp"

namespace dnr {

using Complex = std::complex<double>;

enum class Var { s, x, y };

struct VarExp {
    int s = 0;
    int x = 0;
    int y = 0;
    friend bool operator==(const VarExp&, const VarExp&) = default;
    friend bool operator<(const VarExp& a, const VarExp& b) {
        if (a.s != b.s) return a.s < b.s;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    int get(Var v) const { return v == Var::s ? s : (v == Var::x ? x : y); }
    VarExp without(Var v) const {
        VarExp e = *this;
        (v == Var::s ? e.s : (v == Var::x ? e.x : e.y)) = 0;
        return e;
    }
    VarExp operator+(const VarExp& o) const { return {s + o.s, x + o.x, y + o.y}; }
    VarExp scaled(int k) const { return {s * k, x * k, y * k}; }
};

// Multivariate Laurent polynomial in (s, x, y) over GaussianRational, where s
// stands for q^{1/2}: integer powers of q are even powers of s. Zero
// coefficients are never stored, so structural equality is ring equality.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(GaussianRational c) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[VarExp{}] = c;
        return p;
    }
    static LaurentPoly one() { return constant(GaussianRational(1)); }
    static LaurentPoly monomial(GaussianRational c, int es, int ex = 0, int ey = 0) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[VarExp{es, ex, ey}] = c;
        return p;
    }
    static LaurentPoly s_power(int k) { return monomial(GaussianRational(1), k); }
    static LaurentPoly x_power(int k) { return monomial(GaussianRational(1), 0, k); }
    static LaurentPoly y_power(int k) { return monomial(GaussianRational(1), 0, 0, k); }

    const std::map<VarExp, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }
    std::pair<VarExp, GaussianRational> monomial_parts() const {
        if (!is_monomial()) throw std::invalid_argument("LaurentPoly: not a monomial");
        return *terms_.begin();
    }
    bool is_unit_monomial() const {
        return is_monomial() && terms_.begin()->second.is_gaussian_unit();
    }

    // exact inverse of a single-term polynomial
    LaurentPoly monomial_inverse() const {
        auto [e, c] = monomial_parts();
        return monomial(c.inverse(), -e.s, -e.x, -e.y);
    }

    // k-th power of a single-term polynomial, any signed k
    LaurentPoly monomial_pow(long long k) const {
        auto [e, c] = monomial_parts();
        GaussianRational base = k >= 0 ? c : c.inverse();
        GaussianRational coeff(1);
        for (long long t = 0; t < (k >= 0 ? k : -k); ++t) coeff *= base;
        int m = static_cast<int>(k);
        return monomial(coeff, e.s * m, e.x * m, e.y * m);
    }

    void add_term(VarExp e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Substitute a variable by a single-term monomial with Gaussian-unit
    // coefficient. Non-monomial substitutions are rejected; this keeps the
    // ring closed without general division.
    LaurentPoly substitute(Var v, const LaurentPoly& m) const {
        if (!m.is_unit_monomial())
            throw std::invalid_argument("substitute: replacement must be a unit monomial");
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            LaurentPoly rep = m.monomial_pow(e.get(v));
            auto [re, rc] = rep.monomial_parts();
            r.add_term(e.without(v) + re, c * rc);
        }
        return r;
    }

    // q -> 1/q, i.e. s -> 1/s
    LaurentPoly tilde() const { return substitute(Var::s, s_power(-1)); }

    Complex eval(Complex sv, Complex xv, Complex yv) const {
        Complex acc = 0.0;
        for (const auto& [e, c] : terms_) {
            Complex t = Complex(c.re().to_double(), c.im().to_double());
            t *= int_pow(sv, e.s, "s");
            t *= int_pow(xv, e.x, "x");
            t *= int_pow(yv, e.y, "y");
            acc += t;
        }
        return acc;
    }

    int min_degree(Var v) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            int d = e.get(v);
            m = first ? d : (d < m ? d : m);
            first = false;
        }
        return m;
    }
    int max_degree(Var v) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            int d = e.get(v);
            m = first ? d : (d > m ? d : m);
            first = false;
        }
        return m;
    }

    // extract the coefficient (a polynomial in the other variables) of v^k
    LaurentPoly coefficient_of(Var v, int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            if (e.get(v) == k) r.add_term(e.without(v), c);
        return r;
    }

    // canonical text: terms sorted by (e_s, e_x, e_y), coefficients over a
    // common denominator
    std::string text() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.str() + " * s^" + std::to_string(e.s) + " x^" + std::to_string(e.x) +
                   " y^" + std::to_string(e.y);
        }
        return out;
    }

private:
    static Complex int_pow(Complex base, int e, const char* name) {
        if (e == 0) return 1.0;
        if (base == Complex(0.0) && e < 0)
            throw std::domain_error(std::string("eval: zero value for variable ") + name +
                                    " with negative exponent");
        Complex b = e > 0 ? base : 1.0 / base;
        int k = e > 0 ? e : -e;
        Complex r = 1.0;
        while (k > 0) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    std::map<VarExp, GaussianRational> terms_;
};

// q-integer [m] = (q^m - q^{-m})/(q - q^{-1}) as a Laurent polynomial in s
inline LaurentPoly q_integer(int m) {
    LaurentPoly p;
    for (int k = 0; k < m; ++k) p.add_term(VarExp{2 * (m - 1) - 4 * k, 0, 0}, GaussianRational(1));
    return p;
}

// Balanced q-binomial built from the q-integers above; satisfies
// [a b] = q^b [a-1 b] + q^{b-a} [a-1 b-1], and [a b] = [a a-b].
inline LaurentPoly q_binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) throw std::invalid_argument("q_binomial: need 0 <= b <= a");
    if (b == 0 || b == a) return LaurentPoly::one();
    return LaurentPoly::s_power(2 * b) * q_binomial(a - 1, b) +
           LaurentPoly::s_power(2 * (b - a)) * q_binomial(a - 1, b - 1);
}

}  // namespace dnr
