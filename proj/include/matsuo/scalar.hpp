#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>

#include "matsuo/ratfunc.hpp"

namespace matsuo {

inline std::string k_str(const Rat& r) { return rat_str(r); }
inline std::string k_str(const RatFunc& f) { return f.str(); }

template <class K>
K k_from_rat(const Rat& r) {
    return K(r);
}

// Tagged scalar for API boundaries (CLI, reports). Internal algebra code is
// templated on the field instead; a Scalar never mixes fields silently.
class Scalar {
    std::variant<Rat, RatFunc> v_;

public:
    Scalar() : v_(Rat(0)) {}
    explicit Scalar(Rat r) : v_(std::move(r)) {}
    explicit Scalar(RatFunc f) : v_(std::move(f)) {}

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    const Rat& rational() const { return std::get<Rat>(v_); }
    const RatFunc& func() const { return std::get<RatFunc>(v_); }

    std::string str() const {
        if (is_rational()) return rat_str(rational());
        return func().str();
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.v_.index() != b.v_.index()) return false;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    template <class Op>
    static Scalar apply(const Scalar& a, const Scalar& b, Op op) {
        if (a.v_.index() != b.v_.index()) throw MixedFieldVariant();
        if (a.is_rational()) return Scalar(op(a.rational(), b.rational()));
        return Scalar(op(a.func(), b.func()));
    }

public:
    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return apply(a, b, [](const auto& x, const auto& y) { return x + y; });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return apply(a, b, [](const auto& x, const auto& y) { return x - y; });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return apply(a, b, [](const auto& x, const auto& y) { return x * y; });
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.v_.index() != b.v_.index()) throw MixedFieldVariant();
        if (a.is_rational()) {
            if (b.rational() == 0) throw DivisionByZero();
            return Scalar(a.rational() / b.rational());
        }
        return Scalar(a.func() / b.func());
    }
};

inline Scalar specialize(const Scalar& s, const Rat& a0) {
    if (s.is_rational()) return s;
    return Scalar(s.func().eval(a0));
}

namespace detail {

// Recursive descent over +,-,*,/,^ with 'a' as the indeterminate. Division is
// an ordinary left-associative operator, so "1/2*a" means (1/2)*a.
class FuncParser {
    const std::string& s_;
    std::size_t i_ = 0;

    void skip_ws() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
    }
    bool eat(char c) {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail() const {
        throw ParseError("bad scalar expression: '" + s_ + "'");
    }

    RatFunc atom() {
        skip_ws();
        if (i_ >= s_.size()) fail();
        if (s_[i_] == '(') {
            ++i_;
            RatFunc r = expr();
            if (!eat(')')) fail();
            return r;
        }
        if (s_[i_] == 'a') {
            ++i_;
            return RatFunc::alpha();
        }
        if (s_[i_] >= '0' && s_[i_] <= '9') {
            std::size_t j = i_;
            while (j < s_.size() && s_[j] >= '0' && s_[j] <= '9') ++j;
            RatFunc r(Rat(Int(s_.substr(i_, j - i_))));
            i_ = j;
            return r;
        }
        fail();
    }

    RatFunc factor() {
        bool neg = false;
        skip_ws();
        while (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
            if (s_[i_] == '-') neg = !neg;
            ++i_;
            skip_ws();
        }
        RatFunc r = atom();
        if (eat('^')) {
            skip_ws();
            std::size_t j = i_;
            while (j < s_.size() && s_[j] >= '0' && s_[j] <= '9') ++j;
            if (j == i_) fail();
            unsigned long e = std::stoul(s_.substr(i_, j - i_));
            i_ = j;
            RatFunc p(1);
            for (unsigned long k = 0; k < e; ++k) p *= r;
            r = p;
        }
        return neg ? -r : r;
    }

    RatFunc term() {
        RatFunc r = factor();
        while (true) {
            if (eat('*'))
                r *= factor();
            else if (eat('/'))
                r /= factor();
            else
                return r;
        }
    }

    RatFunc expr() {
        RatFunc r = term();
        while (true) {
            if (eat('+')) {
                r += term();
                continue;
            }
            skip_ws();
            if (i_ < s_.size() && s_[i_] == '-') {
                ++i_;
                r -= term();
                continue;
            }
            return r;
        }
    }

public:
    explicit FuncParser(const std::string& s) : s_(s) {}
    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (i_ != s_.size()) fail();
        return r;
    }
};

} // namespace detail

inline RatFunc ratfunc_parse(const std::string& s) { return detail::FuncParser(s).parse(); }

// A scalar string belongs to Q(a) iff it mentions the indeterminate or uses
// parentheses; bare "p/q" is rational.
inline Scalar scalar_parse(const std::string& s) {
    if (s.find('a') != std::string::npos || s.find('(') != std::string::npos)
        return Scalar(ratfunc_parse(s));
    return Scalar(rat_parse(s));
}

} // namespace matsuo

template <>
struct std::hash<matsuo::Scalar> {
    std::size_t operator()(const matsuo::Scalar& s) const noexcept {
        return std::hash<std::string>()(s.str());
    }
};
