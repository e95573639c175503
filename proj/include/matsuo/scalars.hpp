#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <string>

#include "matsuo/errors.hpp"

namespace matsuo {

namespace mp = boost::multiprecision;

// Expression templates stay off: every intermediate is a plain value, which keeps
// std::variant, Eigen and container semantics predictable.
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rat = mp::number<mp::cpp_rational_backend, mp::et_off>;

inline Int rat_num(const Rat& r) { return Int(mp::numerator(r)); }
inline Int rat_den(const Rat& r) { return Int(mp::denominator(r)); }

inline Int int_gcd(const Int& a, const Int& b) { return Int(mp::gcd(a, b)); }
inline Int int_lcm(const Int& a, const Int& b) { return Int(mp::lcm(a, b)); }

inline int int_sign(const Int& a) { return a.sign(); }

inline std::string rat_str(const Rat& r) {
    Int d = rat_den(r);
    if (d == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + d.str();
}

// Accepts "p" and "p/q" with optional signs. Everything else is a ParseError.
inline Rat rat_parse(const std::string& s) {
    auto is_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto drop_plus = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return t;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(s)) throw ParseError("not a rational: '" + s + "'");
            return Rat(Int(drop_plus(s)));
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!is_int(ns) || !is_int(ds)) throw ParseError("not a rational: '" + s + "'");
        Int n(drop_plus(ns)), d(drop_plus(ds));
        if (d == 0) throw DivisionByZero("zero denominator in '" + s + "'");
        return Rat(n) / Rat(d);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("not a rational: '" + s + "'");
    }
}

} // namespace matsuo
