#include "matsuo/fischer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

namespace matsuo {
namespace spaces {

namespace {

class PointSet {
    int n_;
    std::vector<std::uint64_t> w_;

public:
    explicit PointSet(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}
    int universe() const { return n_; }
    void add(int i) { w_[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63); }
    bool test(int i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u; }
    int count() const {
        int c = 0;
        for (auto word : w_) c += __builtin_popcountll(word);
        return c;
    }
    bool contains(const PointSet& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (o.w_[k] & ~w_[k]) return false;
        return true;
    }
    friend bool operator==(const PointSet& a, const PointSet& b) { return a.w_ == b.w_; }
    std::string key() const {
        return std::string(reinterpret_cast<const char*>(w_.data()), w_.size() * sizeof(std::uint64_t));
    }
    std::vector<int> members() const {
        std::vector<int> r;
        for (int i = 0; i < n_; ++i)
            if (test(i)) r.push_back(i);
        return r;
    }
};

// Extends an already-closed set by one point. Only wedges involving new
// points can be missing, so the worklist stays small.
void closure_add(const FischerSpace& g, PointSet& s, int x) {
    if (s.test(x)) return;
    s.add(x);
    std::vector<int> work{x};
    while (!work.empty()) {
        int u = work.back();
        work.pop_back();
        for (int v = 0; v < g.points(); ++v) {
            if (v == u || !s.test(v) || !g.collinear(u, v)) continue;
            int w = g.wedge(u, v);
            if (!s.test(w)) {
                s.add(w);
                work.push_back(w);
            }
        }
    }
}

PointSet to_set(const FischerSpace& g, const std::vector<int>& pts) {
    PointSet s(g.points());
    for (int p : pts) {
        if (p < 0 || p >= g.points()) throw Error("point index out of range");
        if (s.test(p)) throw Error("duplicate point index");
        s.add(p);
    }
    return s;
}

std::vector<std::pair<int, int>> letter_pairs(int letters) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < letters; ++a)
        for (int b = a + 1; b < letters; ++b) pairs.emplace_back(a, b);
    return pairs;
}

FischerSpace build_a(int n) {
    if (n < 1) throw Error("A(n) requires n >= 1");
    auto pairs = letter_pairs(n + 1);
    const int m = static_cast<int>(pairs.size());
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < m; ++i) index[pairs[static_cast<std::size_t>(i)]] = i;
    Eigen::MatrixXi wedge = Eigen::MatrixXi::Constant(m, m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = pairs[static_cast<std::size_t>(i)];
            auto [c, d] = pairs[static_cast<std::size_t>(j)];
            int shared = (a == c || a == d) ? a : ((b == c || b == d) ? b : -1);
            if (shared < 0) continue;
            int u = a == shared ? b : a, v = c == shared ? d : c;
            int k = index.at({std::min(u, v), std::max(u, v)});
            wedge(i, j) = wedge(j, i) = k;
        }
    std::vector<GroupElement> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (auto [a, b] : pairs) labels.emplace_back(Perm::transposition(n + 1, a, b));
    return FischerSpace::from_wedge(std::move(wedge), std::move(labels));
}

FischerSpace build_d(int n) {
    if (n < 2) throw Error("D(n) requires n >= 2");
    FischerSpace base = build_a(n - 1);
    FischerSpace doubled = double_graph(base);
    // signed transpositions on 2n letters: plus copy (a b)(n+a n+b), minus
    // copy (a n+b)(b n+a), in the doubled point order (plus block first)
    auto pairs = letter_pairs(n);
    std::vector<GroupElement> labels(static_cast<std::size_t>(doubled.points()), Perm::identity(2 * n));
    const int m = base.points();
    for (int i = 0; i < m; ++i) {
        auto [a, b] = pairs[static_cast<std::size_t>(i)];
        Perm plus = Perm::identity(2 * n);
        std::swap(plus.img[static_cast<std::size_t>(a)], plus.img[static_cast<std::size_t>(b)]);
        std::swap(plus.img[static_cast<std::size_t>(n + a)], plus.img[static_cast<std::size_t>(n + b)]);
        Perm minus = Perm::identity(2 * n);
        std::swap(minus.img[static_cast<std::size_t>(a)], minus.img[static_cast<std::size_t>(n + b)]);
        std::swap(minus.img[static_cast<std::size_t>(b)], minus.img[static_cast<std::size_t>(n + a)]);
        labels[static_cast<std::size_t>(i)] = plus;
        labels[static_cast<std::size_t>(m + i)] = minus;
    }
    return FischerSpace::from_wedge(doubled.wedge_table(), std::move(labels));
}

FischerSpace build_e(int rank) {
    std::vector<std::array<int, 8>> roots;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    std::array<int, 8> r{};
                    r[static_cast<std::size_t>(i)] = 2 * si;
                    r[static_cast<std::size_t>(j)] = 2 * sj;
                    roots.push_back(r);
                }
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        std::array<int, 8> r{};
        for (int i = 0; i < 8; ++i) r[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        roots.push_back(r);
    }
    auto keep = [rank](const std::array<int, 8>& r) {
        if (rank <= 7 && r[6] + r[7] != 0) return false;
        if (rank <= 6 && r[5] - r[6] != 0) return false;
        return true;
    };
    auto positive = [](const std::array<int, 8>& r) {
        for (int c : r) {
            if (c > 0) return true;
            if (c < 0) return false;
        }
        return false;
    };
    std::vector<std::array<int, 8>> pts;
    for (const auto& r : roots)
        if (keep(r) && positive(r)) pts.push_back(r);
    std::sort(pts.begin(), pts.end());
    const int m = static_cast<int>(pts.size());
    std::map<std::array<int, 8>, int> index;
    for (int i = 0; i < m; ++i) index[pts[static_cast<std::size_t>(i)]] = i;
    auto dot = [](const std::array<int, 8>& x, const std::array<int, 8>& y) {
        int s = 0;
        for (int i = 0; i < 8; ++i) s += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        return s;
    };
    Eigen::MatrixXi wedge = Eigen::MatrixXi::Constant(m, m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int d = dot(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
            if (d != 4 && d != -4) continue;
            std::array<int, 8> w{};
            for (int c = 0; c < 8; ++c)
                w[static_cast<std::size_t>(c)] = pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] -
                                                 (d / 4) * pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (!positive(w))
                for (auto& c : w) c = -c;
            wedge(i, j) = wedge(j, i) = index.at(w);
        }
    std::vector<GroupElement> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (const auto& r : pts) {
        MatX<Rat> s = MatX<Rat>::Identity(8, 8);
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
                s(a, b) -= Rat(r[static_cast<std::size_t>(a)] * r[static_cast<std::size_t>(b)]) / Rat(4);
        labels.emplace_back(RatMat{std::move(s)});
    }
    return FischerSpace::from_wedge(std::move(wedge), std::move(labels));
}

FischerSpace build_affine3(int n, std::size_t cap) {
    if (n < 1) throw Error("Affine3(n) requires n >= 1");
    std::size_t count = 1;
    for (int i = 0; i < n; ++i) {
        count *= 3;
        if (count > cap) throw SizeLimitExceeded("Affine3(" + std::to_string(n) + ") exceeds point cap");
    }
    const int m = static_cast<int>(count);
    auto digits = [n](int idx) {
        std::vector<int> d(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            d[static_cast<std::size_t>(i)] = idx % 3;
            idx /= 3;
        }
        return d;
    };
    auto index_of = [n](const std::vector<int>& d) {
        int idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * 3 + d[static_cast<std::size_t>(i)];
        return idx;
    };
    Eigen::MatrixXi wedge = Eigen::MatrixXi::Constant(m, m, -1);
    for (int i = 0; i < m; ++i) {
        auto u = digits(i);
        for (int j = i + 1; j < m; ++j) {
            auto v = digits(j);
            std::vector<int> w(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c)
                w[static_cast<std::size_t>(c)] = (6 - u[static_cast<std::size_t>(c)] - v[static_cast<std::size_t>(c)]) % 3;
            wedge(i, j) = wedge(j, i) = index_of(w);
        }
    }
    return FischerSpace::from_wedge(std::move(wedge));
}

FischerSpace build_w3affine(int n, std::size_t cap) {
    if (n < 1) throw Error("W3AffineA(n) requires n >= 1");
    const int coords = n + 1;
    std::vector<GroupElement> gens;
    for (int i = 0; i < n; ++i)
        gens.emplace_back(AffinePair{std::vector<std::uint8_t>(static_cast<std::size_t>(coords), 0),
                                     Perm::transposition(coords, i, i + 1)});
    std::vector<std::uint8_t> shift(static_cast<std::size_t>(coords), 0);
    shift[0] = 1;
    shift[1] = 2;
    AffinePair extra{std::move(shift), Perm::transposition(coords, 0, 1)};
    extra.canonicalize();
    gens.emplace_back(std::move(extra));
    FischerSpace g = build_from_involutions(gens, cap);
    const std::size_t expected = static_cast<std::size_t>(3 * n * (n + 1) / 2);
    if (static_cast<std::size_t>(g.points()) != expected)
        throw Error("W3AffineA(" + std::to_string(n) + ") closure has unexpected size " +
                    std::to_string(g.points()));
    return g;
}

} // namespace

FischerSpace FischerSpace::from_wedge(Eigen::MatrixXi wedge, std::vector<GroupElement> labels) {
    FischerSpace g;
    const int n = static_cast<int>(wedge.rows());
    if (wedge.cols() != n) throw Error("wedge table not square");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error("label count does not match point count");
    for (int i = 0; i < n; ++i) {
        if (wedge(i, i) != -1) throw Error("wedge table has nonempty diagonal");
        for (int j = 0; j < n; ++j) {
            int k = wedge(i, j);
            if (k < -1 || k >= n) throw Error("wedge index out of range");
            if (i == j) continue;
            if (wedge(j, i) != k) throw Error("wedge table not symmetric");
            if (k >= 0) {
                if (k == i || k == j) throw Error("wedge point coincides with line pair");
                if (wedge(i, k) != j || wedge(j, k) != i)
                    throw Error("wedge table violates triple consistency");
            }
        }
    }
    g.n_ = n;
    g.wedge_ = std::move(wedge);
    g.labels_ = std::move(labels);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int k = g.wedge_(i, j);
            if (k > j) g.lines_.push_back({i, j, k});
        }
    std::sort(g.lines_.begin(), g.lines_.end());
    return g;
}

FischerSpace build_named(Family f, int n, std::size_t cap) {
    switch (f) {
    case Family::A:
        return build_a(n);
    case Family::D:
        return build_d(n);
    case Family::E6:
    case Family::E7:
    case Family::E8: {
        int rank = f == Family::E6 ? 6 : (f == Family::E7 ? 7 : 8);
        if (n != rank) throw Error("E-family rank is fixed");
        return build_e(rank);
    }
    case Family::Affine3:
        return build_affine3(n, cap);
    case Family::W3AffineA:
        return build_w3affine(n, cap);
    }
    throw Error("unknown family");
}

FischerSpace build_from_involutions(const std::vector<GroupElement>& generators, std::size_t cap) {
    if (generators.empty()) throw Error("no generators given");
    for (const auto& g : generators) {
        if (is_identity(g)) throw NotInvolution("generator is the identity");
        if (!is_identity(mul(g, g))) throw NotInvolution("generator has order > 2");
    }
    std::vector<GroupElement> pool;
    std::unordered_map<std::string, int> index;
    auto intern = [&](GroupElement e) -> int {
        std::string key = element_key(e);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        if (pool.size() >= cap)
            throw SizeLimitExceeded("transposition closure exceeded cap of " + std::to_string(cap));
        pool.push_back(std::move(e));
        int id = static_cast<int>(pool.size()) - 1;
        index.emplace(std::move(key), id);
        return id;
    };
    std::vector<int> work;
    for (const auto& g : generators) {
        int before = static_cast<int>(pool.size());
        if (intern(g) == before) work.push_back(before);
    }
    while (!work.empty()) {
        int xi = work.back();
        work.pop_back();
        for (std::size_t yi = 0; yi < pool.size(); ++yi) {
            GroupElement x = pool[static_cast<std::size_t>(xi)];
            GroupElement y = pool[yi];
            for (GroupElement conj : {mul(mul(x, y), x), mul(mul(y, x), y)}) {
                int before = static_cast<int>(pool.size());
                if (intern(std::move(conj)) == before) work.push_back(before);
            }
        }
    }
    std::sort(pool.begin(), pool.end(), [](const GroupElement& a, const GroupElement& b) {
        return element_key(a) < element_key(b);
    });
    index.clear();
    for (std::size_t i = 0; i < pool.size(); ++i) index[element_key(pool[i])] = static_cast<int>(i);
    const int m = static_cast<int>(pool.size());
    Eigen::MatrixXi wedge = Eigen::MatrixXi::Constant(m, m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            GroupElement p = mul(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            GroupElement p2 = mul(p, p);
            if (is_identity(p2)) continue; // commuting pair, not collinear
            if (!is_identity(mul(p2, p)))
                throw Not3Transposition("product of two transpositions has order > 3");
            GroupElement w = mul(mul(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]),
                                 pool[static_cast<std::size_t>(i)]);
            auto it = index.find(element_key(w));
            if (it == index.end()) throw Error("conjugation closure is inconsistent");
            wedge(i, j) = wedge(j, i) = it->second;
        }
    return FischerSpace::from_wedge(std::move(wedge), std::move(pool));
}

Eigen::MatrixXi complete_graph(int n) {
    if (n < 1) throw Error("complete graph needs n >= 1");
    return Eigen::MatrixXi::Ones(n, n) - Eigen::MatrixXi::Identity(n, n);
}

Eigen::MatrixXi adjacency(const FischerSpace& g) {
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(g.points(), g.points());
    for (int i = 0; i < g.points(); ++i)
        for (int j = 0; j < g.points(); ++j)
            if (i != j && g.collinear(i, j)) a(i, j) = 1;
    return a;
}

std::vector<int> letter_block_pairs(int letters_total, int sub) {
    std::vector<int> out;
    int idx = 0;
    for (int a = 0; a < letters_total; ++a)
        for (int b = a + 1; b < letters_total; ++b) {
            if (b < sub) out.push_back(idx);
            ++idx;
        }
    return out;
}

void validate(const FischerSpace& g) {
    const auto& lines = g.lines();
    for (std::size_t li = 0; li < lines.size(); ++li)
        for (std::size_t lj = li + 1; lj < lines.size(); ++lj) {
            bool meet = false;
            for (int a : lines[li])
                for (int b : lines[lj])
                    if (a == b) meet = true;
            if (!meet) continue;
            PointSet s(g.points());
            for (int a : lines[li]) closure_add(g, s, a);
            for (int b : lines[lj]) closure_add(g, s, b);
            int size = s.count();
            if (size != 6 && size != 9)
                throw Not3Transposition("two intersecting lines close into " + std::to_string(size) +
                                        " points");
            auto pts = s.members();
            int inner_lines = 0;
            std::vector<int> per_point(pts.size(), 0);
            for (std::size_t x = 0; x < pts.size(); ++x)
                for (std::size_t y = x + 1; y < pts.size(); ++y) {
                    if (!g.collinear(pts[x], pts[y])) continue;
                    int w = g.wedge(pts[x], pts[y]);
                    if (w > pts[y]) {
                        ++inner_lines;
                    }
                }
            for (std::size_t x = 0; x < pts.size(); ++x)
                for (std::size_t y = 0; y < pts.size(); ++y) {
                    if (x == y) continue;
                    if (g.collinear(pts[x], pts[y])) ++per_point[x];
                }
            if (size == 6) {
                if (inner_lines != 4) throw Not3Transposition("6-point closure with wrong line count");
                for (int d : per_point)
                    if (d != 4) throw Not3Transposition("6-point closure with wrong collinearity degree");
            } else {
                if (inner_lines != 12) throw Not3Transposition("9-point closure with wrong line count");
                for (int d : per_point)
                    if (d != 8) throw Not3Transposition("9-point closure with wrong collinearity degree");
            }
        }
}

std::vector<std::vector<int>> components(const FischerSpace& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(g.points()), false);
    for (int start = 0; start < g.points(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp{start};
        seen[static_cast<std::size_t>(start)] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            int u = comp[head];
            for (int v = 0; v < g.points(); ++v)
                if (!seen[static_cast<std::size_t>(v)] && g.collinear(u, v)) {
                    seen[static_cast<std::size_t>(v)] = true;
                    comp.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const FischerSpace& g) { return components(g).size() == 1; }

std::optional<int> regularity(const FischerSpace& g) {
    if (g.points() == 0) return std::nullopt;
    int d = g.degree(0);
    for (int i = 1; i < g.points(); ++i)
        if (g.degree(i) != d) return std::nullopt;
    return d;
}

std::vector<int> subspace_closure(const FischerSpace& g, const std::vector<int>& seed) {
    PointSet s(g.points());
    for (int p : seed) {
        if (p < 0 || p >= g.points()) throw Error("point index out of range");
        closure_add(g, s, p);
    }
    return s.members();
}

bool is_closed_subspace(const FischerSpace& g, const std::vector<int>& set) {
    PointSet s = to_set(g, set);
    for (std::size_t x = 0; x < set.size(); ++x)
        for (std::size_t y = x + 1; y < set.size(); ++y)
            if (g.collinear(set[x], set[y]) && !s.test(g.wedge(set[x], set[y]))) return false;
    return true;
}

FischerSpace induced_subspace(const FischerSpace& g, const std::vector<int>& set) {
    if (!is_closed_subspace(g, set))
        throw NotClosed("induced subspace requires a closed point set");
    const int m = static_cast<int>(set.size());
    std::vector<int> local(static_cast<std::size_t>(g.points()), -1);
    for (int i = 0; i < m; ++i) local[static_cast<std::size_t>(set[static_cast<std::size_t>(i)])] = i;
    Eigen::MatrixXi wedge = Eigen::MatrixXi::Constant(m, m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int a = set[static_cast<std::size_t>(i)], b = set[static_cast<std::size_t>(j)];
            if (!g.collinear(a, b)) continue;
            wedge(i, j) = wedge(j, i) = local[static_cast<std::size_t>(g.wedge(a, b))];
        }
    std::vector<GroupElement> labels;
    if (g.has_labels())
        for (int p : set) labels.push_back(g.labels()[static_cast<std::size_t>(p)]);
    return FischerSpace::from_wedge(std::move(wedge), std::move(labels));
}

FischerSpace double_graph(const FischerSpace& g) {
    const int n = g.points();
    Eigen::MatrixXi wedge = Eigen::MatrixXi::Constant(2 * n, 2 * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !g.collinear(i, j)) continue;
            int w = g.wedge(i, j);
            for (int ei = 0; ei < 2; ++ei)
                for (int ej = 0; ej < 2; ++ej) {
                    int p = i + ei * n, q = j + ej * n, r = w + ((ei + ej) % 2) * n;
                    wedge(p, q) = r;
                }
        }
    return FischerSpace::from_wedge(std::move(wedge));
}

BoundaryGraph boundary_graph(const FischerSpace& g, const std::vector<int>& h) {
    if (h.empty()) throw Error("boundary of an empty subspace");
    PointSet hs = to_set(g, h);
    if (!is_closed_subspace(g, h)) throw NotClosed("boundary requires a closed subspace");
    BoundaryGraph b;
    for (int y = 0; y < g.points(); ++y) {
        if (hs.test(y)) continue;
        bool adj = false;
        for (int x : h)
            if (g.collinear(x, y)) adj = true;
        if (adj) b.points.push_back(y);
    }
    const int m = static_cast<int>(b.points.size());
    b.adjacency = Eigen::MatrixXi::Zero(m, m);
    b.degree_to_h.assign(static_cast<std::size_t>(m), 0);
    std::vector<int> local(static_cast<std::size_t>(g.points()), -1);
    for (int i = 0; i < m; ++i) local[static_cast<std::size_t>(b.points[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < m; ++i) {
        int y = b.points[static_cast<std::size_t>(i)];
        for (int x : h) {
            if (!g.collinear(x, y)) continue;
            ++b.degree_to_h[static_cast<std::size_t>(i)];
            int z = g.wedge(x, y);
            if (!hs.test(z)) {
                int zj = local[static_cast<std::size_t>(z)];
                if (zj >= 0) b.adjacency(i, zj) += 1;
            }
        }
    }
    return b;
}

namespace {

bool graph_connected(const Eigen::MatrixXi& a) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int v = 0; v < n; ++v)
            if (!seen[static_cast<std::size_t>(v)] && a(queue[head], v) > 0) {
                seen[static_cast<std::size_t>(v)] = true;
                queue.push_back(v);
            }
    return static_cast<int>(queue.size()) == n;
}

} // namespace

RegularityVerdict is_very_regular(const FischerSpace& g, const std::vector<int>& h) {
    RegularityVerdict v;
    PointSet hs = to_set(g, h);
    if (h.empty()) throw Error("empty subspace");
    v.ambient_connected = is_connected(g);
    v.subspace_closed = is_closed_subspace(g, h);
    {
        // connectivity of h through its own lines
        std::vector<int> queue{h[0]};
        PointSet seen(g.points());
        seen.add(h[0]);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int y : h)
                if (!seen.test(y) && g.collinear(queue[head], y)) {
                    seen.add(y);
                    queue.push_back(y);
                }
        v.subspace_connected = queue.size() == h.size();
    }
    v.proper = static_cast<int>(h.size()) < g.points();
    if (v.subspace_closed && v.proper) {
        v.maximal = true;
        for (int x = 0; x < g.points() && v.maximal; ++x) {
            if (hs.test(x)) continue;
            PointSet grown = hs;
            closure_add(g, grown, x);
            if (grown.count() != g.points()) v.maximal = false;
        }
        BoundaryGraph b = boundary_graph(g, h);
        v.boundary_connected = graph_connected(b.adjacency);
        if (!b.points.empty()) {
            bool reg = true, hom = true;
            int d0 = b.adjacency.row(0).sum(), t0 = b.degree_to_h[0];
            for (int i = 0; i < static_cast<int>(b.points.size()); ++i) {
                if (b.adjacency.row(i).sum() != d0) reg = false;
                if (b.degree_to_h[static_cast<std::size_t>(i)] != t0) hom = false;
            }
            if (reg) v.boundary_regular_degree = d0;
            if (hom) v.degree_to_subspace = t0;
        }
    }
    return v;
}

namespace {

// Every connected closed subspace is reachable from a singleton by repeatedly
// adjoining one collinear point and closing, so the breadth-first scan below
// enumerates all of them. succ[s][x] caches closure(sets[s] + x): -1 when x
// attaches to no line of the set, -2 not yet computed.
void enumerate_closed(const FischerSpace& g, std::size_t cap, std::vector<PointSet>& sets,
                      std::vector<std::vector<int>>& succ) {
    const int n = g.points();
    std::unordered_map<std::string, int> ids;
    auto intern = [&](const PointSet& s) -> int {
        std::string key = s.key();
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        if (sets.size() >= cap)
            throw SizeLimitExceeded("connected closed subspace enumeration exceeded cap");
        sets.push_back(s);
        succ.emplace_back(static_cast<std::size_t>(n), -2);
        ids.emplace(std::move(key), static_cast<int>(sets.size()) - 1);
        return static_cast<int>(sets.size()) - 1;
    };
    for (int i = 0; i < n; ++i) {
        PointSet s(n);
        s.add(i);
        intern(s);
    }
    for (std::size_t s = 0; s < sets.size(); ++s) {
        for (int x = 0; x < n; ++x) {
            if (sets[s].test(x)) continue;
            bool adj = false;
            for (int u = 0; u < n && !adj; ++u)
                if (sets[s].test(u) && g.collinear(u, x)) adj = true;
            if (!adj) {
                succ[s][static_cast<std::size_t>(x)] = -1;
                continue;
            }
            PointSet grown = sets[s];
            closure_add(g, grown, x);
            succ[s][static_cast<std::size_t>(x)] = intern(grown);
        }
    }
}

} // namespace

std::vector<std::vector<int>> connected_closed_subspaces(const FischerSpace& g, std::size_t cap) {
    std::vector<PointSet> sets;
    std::vector<std::vector<int>> succ;
    enumerate_closed(g, cap, sets, succ);
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.members());
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

VregReport check_hypothesis_vreg(const FischerSpace& g, std::size_t cap) {
    const int n = g.points();
    std::vector<PointSet> sets;
    std::vector<std::vector<int>> succ;
    enumerate_closed(g, cap, sets, succ);
    VregReport report;
    report.connected_closed_count = static_cast<int>(sets.size());
    for (std::size_t hi = 0; hi < sets.size(); ++hi) {
        if (sets[hi].count() < 2) continue;
        FischerSpace ambient = induced_subspace(g, sets[hi].members());
        std::vector<int> ambient_pts = sets[hi].members();
        std::vector<int> global_to_local(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < ambient_pts.size(); ++i)
            global_to_local[static_cast<std::size_t>(ambient_pts[i])] = static_cast<int>(i);
        for (std::size_t ki = 0; ki < sets.size(); ++ki) {
            if (ki == hi || !sets[hi].contains(sets[ki])) continue;
            // maximality of K inside H among closed subspaces
            bool maximal = true;
            for (int x = 0; x < n && maximal; ++x) {
                if (!sets[hi].test(x) || sets[ki].test(x)) continue;
                int next = succ[ki][static_cast<std::size_t>(x)];
                if (next == -1) {
                    // K + x is closed; strictly between unless it is all of H
                    if (sets[ki].count() + 1 != sets[hi].count()) maximal = false;
                } else if (!(sets[static_cast<std::size_t>(next)] == sets[hi])) {
                    maximal = false;
                }
            }
            if (!maximal) continue;
            ++report.maximal_pairs_checked;
            std::vector<int> k_local;
            for (int p : sets[ki].members()) k_local.push_back(global_to_local[static_cast<std::size_t>(p)]);
            RegularityVerdict verdict = is_very_regular(ambient, k_local);
            if (!verdict.very_regular()) {
                std::string reason;
                if (!verdict.subspace_connected) reason += "subspace disconnected;";
                if (!verdict.boundary_connected) reason += "boundary disconnected;";
                if (!verdict.maximal) reason += "not maximal;";
                if (reason.empty()) reason = "unknown";
                report.failures.push_back({sets[ki].members(), sets[hi].members(), reason});
            }
        }
    }
    return report;
}

namespace {

struct IsoSearch {
    const FischerSpace& a;
    const FischerSpace& b;
    std::vector<int> ma, mb;
    long long budget = 10'000'000;

    IsoSearch(const FischerSpace& a_, const FischerSpace& b_)
        : a(a_), b(b_), ma(static_cast<std::size_t>(a_.points()), -1),
          mb(static_cast<std::size_t>(b_.points()), -1) {}

    // Assign i->j plus every wedge forced by already-mapped points; records
    // all assignments made into trail. Returns false on contradiction.
    bool assign(int i, int j, std::vector<int>& trail) {
        std::vector<std::pair<int, int>> queue{{i, j}};
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            if (ma[static_cast<std::size_t>(x)] >= 0) {
                if (ma[static_cast<std::size_t>(x)] != y) return false;
                continue;
            }
            if (mb[static_cast<std::size_t>(y)] >= 0) return false;
            if (a.degree(x) != b.degree(y)) return false;
            ma[static_cast<std::size_t>(x)] = y;
            mb[static_cast<std::size_t>(y)] = x;
            trail.push_back(x);
            for (int u = 0; u < a.points(); ++u) {
                if (u == x || ma[static_cast<std::size_t>(u)] < 0) continue;
                int v = ma[static_cast<std::size_t>(u)];
                bool ca = a.collinear(x, u), cb = b.collinear(y, v);
                if (ca != cb) return false;
                if (!ca) continue;
                int wa = a.wedge(x, u), wb = b.wedge(y, v);
                int mapped = ma[static_cast<std::size_t>(wa)];
                if (mapped >= 0) {
                    if (mapped != wb) return false;
                } else if (mb[static_cast<std::size_t>(wb)] >= 0) {
                    return false;
                } else {
                    queue.emplace_back(wa, wb);
                }
            }
        }
        return true;
    }

    void undo(std::vector<int>& trail, std::size_t from) {
        while (trail.size() > from) {
            int x = trail.back();
            trail.pop_back();
            mb[static_cast<std::size_t>(ma[static_cast<std::size_t>(x)])] = -1;
            ma[static_cast<std::size_t>(x)] = -1;
        }
    }

    bool search(std::vector<int>& trail) {
        if (--budget <= 0) throw SizeLimitExceeded("isomorphism search exceeded node budget");
        int pick = -1;
        // prefer an unmapped point adjacent to the mapped region
        for (int i = 0; i < a.points() && pick < 0; ++i) {
            if (ma[static_cast<std::size_t>(i)] >= 0) continue;
            for (int u = 0; u < a.points(); ++u)
                if (ma[static_cast<std::size_t>(u)] >= 0 && a.collinear(i, u)) {
                    pick = i;
                    break;
                }
        }
        if (pick < 0)
            for (int i = 0; i < a.points(); ++i)
                if (ma[static_cast<std::size_t>(i)] < 0) {
                    pick = i;
                    break;
                }
        if (pick < 0) return true;
        for (int j = 0; j < b.points(); ++j) {
            if (mb[static_cast<std::size_t>(j)] >= 0) continue;
            std::size_t mark = trail.size();
            if (assign(pick, j, trail) && search(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }
};

std::vector<int> degree_profile(const FischerSpace& g) {
    std::vector<int> d;
    for (int i = 0; i < g.points(); ++i) d.push_back(g.degree(i));
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

std::optional<std::vector<int>> isomorphic(const FischerSpace& a, const FischerSpace& b) {
    if (a.points() != b.points()) return std::nullopt;
    if (a.lines().size() != b.lines().size()) return std::nullopt;
    if (degree_profile(a) != degree_profile(b)) return std::nullopt;
    IsoSearch search(a, b);
    std::vector<int> trail;
    if (!search.search(trail)) return std::nullopt;
    // double-check the witness before handing it out
    for (int i = 0; i < a.points(); ++i)
        for (int j = 0; j < a.points(); ++j) {
            if (i == j) continue;
            bool ca = a.collinear(i, j);
            int mi = search.ma[static_cast<std::size_t>(i)], mj = search.ma[static_cast<std::size_t>(j)];
            if (ca != b.collinear(mi, mj)) throw Error("isomorphism witness failed verification");
            if (ca && search.ma[static_cast<std::size_t>(a.wedge(i, j))] != b.wedge(mi, mj))
                throw Error("isomorphism witness failed verification");
        }
    return search.ma;
}

std::optional<std::vector<int>> graph_isomorphic(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
    const int n = static_cast<int>(a.rows());
    if (b.rows() != n) return std::nullopt;
    std::vector<int> da, db;
    for (int i = 0; i < n; ++i) {
        da.push_back(a.row(i).sum());
        db.push_back(b.row(i).sum());
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<int> ma(static_cast<std::size_t>(n), -1), mb(static_cast<std::size_t>(n), -1);
    long long budget = 10'000'000;
    auto consistent = [&](int i, int j) {
        if (da[static_cast<std::size_t>(i)] != db[static_cast<std::size_t>(j)]) return false;
        for (int u = 0; u < n; ++u)
            if (ma[static_cast<std::size_t>(u)] >= 0 &&
                a(i, u) != b(j, ma[static_cast<std::size_t>(u)]))
                return false;
        return true;
    };
    std::function<bool(int)> dfs = [&](int i) -> bool {
        if (--budget <= 0) throw SizeLimitExceeded("graph isomorphism search exceeded node budget");
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (mb[static_cast<std::size_t>(j)] >= 0 || !consistent(i, j)) continue;
            ma[static_cast<std::size_t>(i)] = j;
            mb[static_cast<std::size_t>(j)] = i;
            if (dfs(i + 1)) return true;
            ma[static_cast<std::size_t>(i)] = -1;
            mb[static_cast<std::size_t>(j)] = -1;
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    return ma;
}

std::string to_text(const FischerSpace& g) {
    std::ostringstream out;
    out << "points " << g.points() << "\n";
    for (const auto& line : g.lines()) out << line[0] << " " << line[1] << " " << line[2] << "\n";
    return out.str();
}

FischerSpace from_text(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    int n = -1;
    if (!(in >> head) || head != "points" || !(in >> n) || n < 0)
        throw ParseError("space file must start with 'points N'");
    Eigen::MatrixXi wedge = Eigen::MatrixXi::Constant(n, n, -1);
    long long a, b, c;
    while (in >> a) {
        if (!(in >> b >> c)) throw ParseError("line rows need three point indices");
        if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
            throw ParseError("point index out of range in space file");
        int t[3] = {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            throw ParseError("line row with repeated points");
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                int third = t[3 - i - j];
                int& cell = wedge(t[i], t[j]);
                if (cell != -1 && cell != third) throw ParseError("conflicting lines through a pair");
                cell = third;
            }
    }
    if (!in.eof()) throw ParseError("trailing garbage in space file");
    return FischerSpace::from_wedge(std::move(wedge));
}

FischerSpace load_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open space file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

} // namespace spaces
} // namespace matsuo
