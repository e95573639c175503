#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "matsuo/eigen_support.hpp"
#include "matsuo/errors.hpp"

namespace matsuo {
namespace spaces {

// Permutation of {0..n-1} as an image table.
struct Perm {
    std::vector<int> img;

    static Perm identity(int n) {
        Perm p;
        p.img.resize(static_cast<std::size_t>(n));
        std::iota(p.img.begin(), p.img.end(), 0);
        return p;
    }
    static Perm transposition(int n, int a, int b) {
        Perm p = identity(n);
        std::swap(p.img[static_cast<std::size_t>(a)], p.img[static_cast<std::size_t>(b)]);
        return p;
    }
    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[static_cast<std::size_t>(i)]; }
    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }
    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
};

// (a*b)(i) = a(b(i))
inline Perm mul(const Perm& a, const Perm& b) {
    Perm r;
    r.img.resize(b.img.size());
    for (std::size_t i = 0; i < b.img.size(); ++i)
        r.img[i] = a.img[static_cast<std::size_t>(b.img[i])];
    return r;
}

inline Perm inverse(const Perm& a) {
    Perm r;
    r.img.resize(a.img.size());
    for (std::size_t i = 0; i < a.img.size(); ++i)
        r.img[static_cast<std::size_t>(a.img[i])] = static_cast<int>(i);
    return r;
}

// Element of V . Sym(n+1) where V = F3^{n+1} / <all-ones>: a translation part
// in canonical coset form (first coordinate 0) and a coordinate permutation
// acting by (s.w)_i = w_{s^-1(i)}.
struct AffinePair {
    std::vector<std::uint8_t> v;
    Perm s;

    void canonicalize() {
        std::uint8_t v0 = v[0];
        if (v0 == 0) return;
        for (auto& c : v) c = static_cast<std::uint8_t>((c + 3 - v0) % 3);
    }
    static AffinePair identity(int n) { return AffinePair{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0), Perm::identity(n)}; }
    bool is_identity() const {
        for (auto c : v)
            if (c != 0) return false;
        return s.is_identity();
    }
    friend bool operator==(const AffinePair& a, const AffinePair& b) {
        return a.v == b.v && a.s == b.s;
    }
};

inline std::vector<std::uint8_t> permute_coords(const Perm& s, const std::vector<std::uint8_t>& w) {
    std::vector<std::uint8_t> r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[static_cast<std::size_t>(s.img[i])] = w[i];
    return r;
}

inline AffinePair mul(const AffinePair& a, const AffinePair& b) {
    std::vector<std::uint8_t> sw = permute_coords(a.s, b.v);
    AffinePair r{a.v, mul(a.s, b.s)};
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = static_cast<std::uint8_t>((r.v[i] + sw[i]) % 3);
    r.canonicalize();
    return r;
}

inline AffinePair inverse(const AffinePair& a) {
    Perm si = inverse(a.s);
    std::vector<std::uint8_t> w = permute_coords(si, a.v);
    for (auto& c : w) c = static_cast<std::uint8_t>((3 - c) % 3);
    AffinePair r{std::move(w), std::move(si)};
    r.canonicalize();
    return r;
}

// Exact orthogonal reflection, for root-system builds.
struct RatMat {
    MatX<Rat> m;

    static RatMat identity(int n) { return RatMat{MatX<Rat>::Identity(n, n)}; }
    bool is_identity() const {
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                if (m(i, j) != (i == j ? Rat(1) : Rat(0))) return false;
        return true;
    }
    friend bool operator==(const RatMat& a, const RatMat& b) { return mat_equal(a.m, b.m); }
};

inline RatMat mul(const RatMat& a, const RatMat& b) { return RatMat{a.m * b.m}; }
inline RatMat inverse(const RatMat& a) {
    // only used for involutions and their products of finite order; invert by
    // power rather than elimination
    RatMat p = a;
    RatMat prev = RatMat::identity(static_cast<int>(a.m.rows()));
    for (int guard = 0; guard < 4096; ++guard) {
        RatMat next = mul(p, a);
        if (next.is_identity()) return p;
        prev = p;
        p = next;
    }
    throw Error("matrix inverse: element order too large");
}

using GroupElement = std::variant<Perm, AffinePair, RatMat>;

inline GroupElement mul(const GroupElement& a, const GroupElement& b) {
    if (a.index() != b.index()) throw Error("group elements from different groups");
    return std::visit(
        [&](const auto& x) -> GroupElement {
            using T = std::decay_t<decltype(x)>;
            return mul(x, std::get<T>(b));
        },
        a);
}

inline bool is_identity(const GroupElement& g) {
    return std::visit([](const auto& x) { return x.is_identity(); }, g);
}

inline bool equal(const GroupElement& a, const GroupElement& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return x == std::get<T>(b);
        },
        a);
}

// Canonical byte string, usable as a hash key.
inline std::string element_key(const GroupElement& g) {
    std::string key;
    if (std::holds_alternative<Perm>(g)) {
        key = "P";
        for (int i : std::get<Perm>(g).img) key += std::to_string(i) + ",";
    } else if (std::holds_alternative<AffinePair>(g)) {
        const auto& a = std::get<AffinePair>(g);
        key = "A";
        for (auto c : a.v) key += static_cast<char>('0' + c);
        key += "|";
        for (int i : a.s.img) key += std::to_string(i) + ",";
    } else {
        const auto& m = std::get<RatMat>(g).m;
        key = "M";
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) key += rat_str(m(i, j)) + ",";
    }
    return key;
}

// Order of g under repeated multiplication, capped.
inline int element_order(const GroupElement& g, int cap = 64) {
    GroupElement p = g;
    for (int k = 1; k <= cap; ++k) {
        if (is_identity(p)) return k;
        p = mul(p, g);
    }
    throw Error("element order exceeds cap");
}

} // namespace spaces
} // namespace matsuo
