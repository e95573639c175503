#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matsuo/eigen_support.hpp"
#include "matsuo/errors.hpp"
#include "matsuo/scalar.hpp"

namespace matsuo {

// In-place reduced row echelon form. Returns the pivot columns. Pivot choice
// is the first nonzero entry, so results are deterministic over any field.
template <class K>
std::vector<int> rref(MatX<K>& m) {
    const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!(m(i, c) == K(0))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        K inv = K(1) / m(r, c);
        for (int j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            K f = m(i, c);
            if (f == K(0)) continue;
            for (int j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank_of(MatX<K> m) {
    return static_cast<int>(rref(m).size());
}

// Basis of the right kernel as matrix columns, one per free column of A.
template <class K>
MatX<K> kernel_basis(MatX<K> a) {
    const int cols = static_cast<int>(a.cols());
    std::vector<int> piv = rref(a);
    std::vector<bool> is_piv(static_cast<std::size_t>(cols), false);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
    MatX<K> basis(cols, cols - static_cast<int>(piv.size()));
    int k = 0;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[static_cast<std::size_t>(f)]) continue;
        VecX<K> v = VecX<K>::Constant(cols, K(0));
        v(f) = K(1);
        for (std::size_t i = 0; i < piv.size(); ++i) v(piv[i]) = K(0) - a(static_cast<int>(i), f);
        basis.col(k++) = v;
    }
    return basis;
}

// Factors a full-column-rank basis matrix once so that membership tests and
// coordinate extraction against the same span cost one matrix-vector product.
template <class K>
class SpanSolver {
    int n_, k_;
    MatX<K> e_;             // row-reduction operator: e_ * basis = [I_k; 0]
    std::vector<int> rows_; // rows of e_*y holding the coordinates

public:
    explicit SpanSolver(const MatX<K>& basis)
        : n_(static_cast<int>(basis.rows())), k_(static_cast<int>(basis.cols())) {
        MatX<K> aug(n_, k_ + n_);
        aug.leftCols(k_) = basis;
        aug.rightCols(n_) = MatX<K>::Identity(n_, n_);
        MatX<K> work = aug;
        // rref of the augmented matrix reduces the basis block first because
        // its columns come first; full column rank means k_ pivots land there.
        std::vector<int> piv = rref(work);
        int in_basis = 0;
        for (int c : piv)
            if (c < k_) ++in_basis;
        if (in_basis != k_) throw Error("span basis is not linearly independent");
        e_ = work.rightCols(n_);
        rows_.resize(static_cast<std::size_t>(k_));
        for (int i = 0; i < k_; ++i) rows_[static_cast<std::size_t>(i)] = i;
    }

    int ambient_dim() const { return n_; }
    int span_dim() const { return k_; }

    std::optional<VecX<K>> coordinates(const VecX<K>& y) const {
        VecX<K> z = e_ * y;
        for (int i = k_; i < n_; ++i)
            if (!(z(i) == K(0))) return std::nullopt;
        return VecX<K>(z.head(k_));
    }

    bool contains(const VecX<K>& y) const { return coordinates(y).has_value(); }
};

template <class K>
bool span_contains_all(const SpanSolver<K>& s, const MatX<K>& vectors) {
    for (int j = 0; j < vectors.cols(); ++j)
        if (!s.contains(vectors.col(j))) return false;
    return true;
}

// Matrix of op restricted to the span of basis, or nullopt when the span is
// not invariant under op.
template <class K>
std::optional<MatX<K>> restricted_matrix(const MatX<K>& op, const MatX<K>& basis,
                                         const SpanSolver<K>& solver) {
    MatX<K> r(basis.cols(), basis.cols());
    for (int j = 0; j < basis.cols(); ++j) {
        auto coords = solver.coordinates(op * basis.col(j));
        if (!coords) return std::nullopt;
        r.col(j) = *coords;
    }
    return r;
}

// Rescales a rational vector to coprime integer entries, first nonzero > 0.
inline void primitive_scale(VecX<Rat>& v) {
    Int l(1), g(0);
    for (int i = 0; i < v.size(); ++i) {
        if (v(i) == 0) continue;
        l = int_lcm(l, rat_den(v(i)));
        g = int_gcd(g, rat_num(v(i)));
    }
    if (g == 0) return;
    Rat f = Rat(l) / Rat(g < 0 ? -g : g);
    for (int i = 0; i < v.size(); ++i) v(i) *= f;
    for (int i = 0; i < v.size(); ++i) {
        if (v(i) == 0) continue;
        if (v(i) < 0)
            for (int j = 0; j < v.size(); ++j) v(j) = -v(j);
        break;
    }
}

// Rescales so every entry is a polynomial, their gcd is 1, and coefficients
// are jointly primitive integers with positive leading first entry.
inline void primitive_scale(VecX<RatFunc>& v) {
    Poly l(Rat(1));
    bool any = false;
    for (int i = 0; i < v.size(); ++i) {
        if (v(i).is_zero()) continue;
        any = true;
        l = poly_lcm(l, v(i).den());
    }
    if (!any) return;
    RatFunc lf{l};
    std::vector<Poly> nums;
    nums.reserve(static_cast<std::size_t>(v.size()));
    for (int i = 0; i < v.size(); ++i) {
        RatFunc w = v(i) * lf;
        assert(w.den().is_constant());
        nums.push_back(w.num());
    }
    Poly g;
    for (const auto& p : nums) g = poly_gcd(g, p);
    if (g.degree() > 0)
        for (auto& p : nums) p = poly_divmod(p, g).first;
    Int den_l(1), num_g(0);
    for (const auto& p : nums)
        for (const auto& c : p.coeffs()) {
            if (c == 0) continue;
            den_l = int_lcm(den_l, rat_den(c));
            num_g = int_gcd(num_g, rat_num(c));
        }
    Rat f = Rat(den_l) / Rat(num_g < 0 ? -num_g : num_g);
    int lead_sign = 0;
    for (auto& p : nums) {
        p = f * p;
        if (lead_sign == 0 && !p.is_zero()) lead_sign = p.leading() < 0 ? -1 : 1;
    }
    if (lead_sign < 0)
        for (auto& p : nums) p = -p;
    for (int i = 0; i < v.size(); ++i) v(i) = RatFunc(nums[static_cast<std::size_t>(i)]);
}

template <class K>
void primitive_scale_columns(MatX<K>& m) {
    for (int j = 0; j < m.cols(); ++j) {
        VecX<K> c = m.col(j);
        primitive_scale(c);
        m.col(j) = c;
    }
}

// Integer elimination work stays on plain row vectors: cpp_int inside 2D
// Eigen expressions trips a non-SFINAE-safe boost constructor trait, and the
// fraction-free routines are bespoke loops anyway.
using IntRows = std::vector<std::vector<Int>>;

inline IntRows to_int_rows(const Eigen::MatrixXi& m) {
    IntRows r(static_cast<std::size_t>(m.rows()),
              std::vector<Int>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Int(m(i, j));
    return r;
}

// Fraction-free (Bareiss) rank over the integers.
inline int bareiss_rank(IntRows m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    Int prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(r)]);
        auto& pivot_row = m[static_cast<std::size_t>(r)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row = m[static_cast<std::size_t>(i)];
            Int lead = row[static_cast<std::size_t>(c)];
            for (int j = c + 1; j < cols; ++j) {
                auto jj = static_cast<std::size_t>(j);
                row[jj] = (pivot_row[static_cast<std::size_t>(c)] * row[jj] - lead * pivot_row[jj]) / prev;
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = pivot_row[static_cast<std::size_t>(c)];
        ++r;
    }
    return r;
}

// Exact eigenvalues with multiplicities for a symmetric integer matrix, found
// by scanning nullities over the Gershgorin interval. Symmetry guarantees a
// full real spectrum, so a multiplicity shortfall means irrational eigenvalues.
inline std::vector<std::pair<Int, int>> integer_spectrum(const Eigen::MatrixXi& m) {
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw Error("integer_spectrum: matrix not square");
    if (m != m.transpose()) throw Error("integer_spectrum: matrix not symmetric");
    if (n == 0) return {};
    IntRows base = to_int_rows(m);
    Int bound(0);
    for (int i = 0; i < n; ++i) {
        Int s(0);
        for (int j = 0; j < n; ++j) s += mp::abs(base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        if (s > bound) bound = s;
    }
    std::vector<std::pair<Int, int>> spec;
    int total = 0;
    for (Int t = -bound; t <= bound; ++t) {
        IntRows shifted = base;
        for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= t;
        int nullity = n - bareiss_rank(std::move(shifted));
        if (nullity > 0) {
            spec.emplace_back(t, nullity);
            total += nullity;
        }
    }
    if (total != n)
        throw IrrationalSpectrum("only " + std::to_string(total) + " of " + std::to_string(n) +
                                 " eigenvalues are integers");
    return spec;
}

// Characteristic polynomial of an integer matrix by the Faddeev-LeVerrier
// recurrence; every division is exact. Coefficients ascend, leading term 1.
inline std::vector<Int> charpoly_int(const IntRows& m) {
    const int n = static_cast<int>(m.size());
    std::vector<Int> coeff(static_cast<std::size_t>(n) + 1, Int(0));
    coeff[static_cast<std::size_t>(n)] = 1;
    IntRows mk(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
    Int ak(1);
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += ak;
        IntRows next(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                const Int& mil = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
                if (mil == 0) continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        mil * mk[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            }
        mk = std::move(next);
        Int tr(0);
        for (int i = 0; i < n; ++i) tr += mk[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        assert(tr % k == 0);
        ak = -tr / k;
        coeff[static_cast<std::size_t>(n - k)] = ak;
    }
    return coeff;
}

// Splits off integer roots of a monic integer polynomial by synthetic
// division over [-bound, bound]. Second member is the unfactored remainder.
inline std::pair<std::vector<std::pair<Int, int>>, std::vector<Int>>
integer_roots(std::vector<Int> p, const Int& bound) {
    std::vector<std::pair<Int, int>> roots;
    auto eval = [&p](const Int& t) {
        Int acc(0);
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
        return acc;
    };
    for (Int t = -bound; t <= bound && p.size() > 1; ++t) {
        int mult = 0;
        while (p.size() > 1 && eval(t) == 0) {
            // synthetic division by (x - t)
            std::vector<Int> q(p.size() - 1, Int(0));
            Int carry(0);
            for (std::size_t i = p.size(); i-- > 1;) {
                carry = p[i] + carry * t;
                q[i - 1] = carry;
            }
            p = std::move(q);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(t, mult);
    }
    return {std::move(roots), std::move(p)};
}

} // namespace matsuo
