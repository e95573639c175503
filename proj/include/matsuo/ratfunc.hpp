#pragma once

#include <string>
#include <utility>

#include "matsuo/poly.hpp"

namespace matsuo {

// Element of Q(a). Invariants: gcd(num, den) = 1, den is monic, and num = 0
// implies den = 1.
class RatFunc {
    Poly num_, den_;

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divmod(num_, g).first;
            den_ = poly_divmod(den_, g).first;
        }
        Rat lead = den_.leading();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(int v) : num_(Rat(v)), den_(Rat(1)) {} // NOLINT: implicit for Eigen literals
    explicit RatFunc(const Rat& v) : num_(v), den_(Rat(1)) {}
    explicit RatFunc(Poly n) : num_(std::move(n)), den_(Rat(1)) {}
    RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static RatFunc alpha() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        // Cross-reduce first so intermediate degrees stay small.
        Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
        Poly n1 = g1.degree() > 0 ? poly_divmod(a.num_, g1).first : a.num_;
        Poly d2 = g1.degree() > 0 ? poly_divmod(b.den_, g1).first : b.den_;
        Poly n2 = g2.degree() > 0 ? poly_divmod(b.num_, g2).first : b.num_;
        Poly d1 = g2.degree() > 0 ? poly_divmod(a.den_, g2).first : a.den_;
        return RatFunc(n1 * n2, d1 * d2);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero();
        if (a.is_zero()) return RatFunc();
        return a * RatFunc(b.den_, b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    Rat eval(const Rat& a0) const {
        Rat d = den_.eval(a0);
        if (d == 0) {
            if (num_.eval(a0) == 0)
                throw PoleAtValue("0/0 specialization at a = " + rat_str(a0));
            throw PoleAtValue("pole at a = " + rat_str(a0));
        }
        return num_.eval(a0) / d;
    }

    std::string str() const {
        if (den_ == Poly(Rat(1))) return "(" + poly_str(num_) + ")";
        return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
    }
};

} // namespace matsuo
