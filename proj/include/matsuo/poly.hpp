#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "matsuo/scalars.hpp"

namespace matsuo {

// Dense univariate polynomial over Rat. Invariant: coefficient vector has no
// trailing zeros, so the zero polynomial is {} and degree() is -1 for it.
class Poly {
    std::vector<Rat> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

public:
    Poly() = default;
    explicit Poly(const Rat& r) {
        if (r != 0) c_.push_back(r);
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    const Rat& leading() const {
        assert(!c_.empty());
        return c_.back();
    }

    bool is_constant() const { return c_.size() <= 1; }
    Rat constant_value() const { return c_.empty() ? Rat(0) : c_[0]; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rat& s, const Poly& a) {
        if (s == 0) return Poly();
        std::vector<Rat> r = a.c_;
        for (auto& v : r) v *= s;
        return Poly(std::move(r));
    }

    Rat eval(const Rat& t) const {
        Rat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }
};

// Quotient and remainder over the field Rat. deg(rem) < deg(b).
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
    for (int i = a.degree(); i >= db; --i) {
        Rat q = rem[static_cast<std::size_t>(i)] / b.leading();
        if (q == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

namespace detail {

using IPoly = std::vector<Int>; // same no-trailing-zero convention

inline void itrim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Int icontent(const IPoly& p) {
    Int g(0);
    for (const auto& c : p) g = int_gcd(g, c);
    return g;
}

inline IPoly iprimitive(IPoly p) {
    Int g = icontent(p);
    if (g == 0) return p;
    if (int_sign(p.back()) < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in integers.
inline IPoly iprem(IPoly a, const IPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    Int lb = b.back();
    int da0 = static_cast<int>(a.size()) - 1;
    int passes = 0;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        Int lead = a.back();
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(da - db + j)] -= lead * b[static_cast<std::size_t>(j)];
        itrim(a);
        ++passes;
        if (a.empty()) break;
    }
    // a degree gap skips passes; pad to the exact power, which the
    // subresultant division steps rely on
    for (int i = passes; i < da0 - db + 1; ++i)
        for (auto& c : a) c *= lb;
    return a;
}

// Subresultant polynomial remainder sequence; returns the primitive gcd with
// positive leading coefficient. Inputs need not be primitive.
inline IPoly igcd_subresultant(IPoly a, IPoly b) {
    itrim(a);
    itrim(b);
    if (a.empty()) return iprimitive(std::move(b));
    if (b.empty()) return iprimitive(std::move(a));
    a = iprimitive(std::move(a));
    b = iprimitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    Int g(1), h(1);
    while (true) {
        int d = static_cast<int>(a.size()) - static_cast<int>(b.size());
        IPoly r = iprem(a, b);
        if (r.empty()) return iprimitive(std::move(b));
        if (r.size() == 1) return IPoly{Int(1)};
        a = std::move(b);
        b = std::move(r);
        Int divisor = g;
        for (int i = 0; i < d; ++i) divisor *= h;
        for (auto& c : b) {
            assert(c % divisor == 0);
            c /= divisor;
        }
        g = a.back();
        if (d > 0) {
            Int gh = g;
            for (int i = 1; i < d; ++i) gh *= g;
            for (int i = 1; i < d; ++i) {
                assert(gh % h == 0);
                gh /= h;
            }
            h = gh;
        }
    }
}

inline IPoly to_integer_image(const Poly& p) {
    Int l(1);
    for (const auto& c : p.coeffs()) l = int_lcm(l, rat_den(c));
    IPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.push_back(rat_num(c) * (l / rat_den(c)));
    return r;
}

inline Poly from_integer(const IPoly& p) {
    std::vector<Rat> r;
    r.reserve(p.size());
    for (const auto& c : p) r.emplace_back(c);
    return Poly(std::move(r));
}

} // namespace detail

// Monic gcd over Rat.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    detail::IPoly g = detail::igcd_subresultant(detail::to_integer_image(a), detail::to_integer_image(b));
    Poly m = detail::from_integer(g);
    return (Rat(1) / m.leading()) * m;
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly g = poly_gcd(a, b);
    Poly m = poly_divmod(a, g).first * b;
    return (Rat(1) / m.leading()) * m;
}

// Ascending-degree rendering: "c0 + c1*a + c2*a^2". Omits zero terms.
inline std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rat& c = p[i];
        if (c == 0) continue;
        Rat a = c < 0 ? Rat(-c) : c;
        std::string term;
        if (i == 0) {
            term = rat_str(a);
        } else {
            if (a != 1) term = rat_str(a) + "*";
            term += "a";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (first) {
            out = (c < 0 ? "-" : "") + term;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

} // namespace matsuo
