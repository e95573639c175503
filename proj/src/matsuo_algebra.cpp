#include "matsuo/matsuo_algebra.hpp"

#include <utility>

namespace matsuo {
namespace algebra {

template <class K>
MatsuoAlgebra<K>::MatsuoAlgebra(spaces::FischerSpace g, K alpha, std::optional<K> charge)
    : g_(std::move(g)), alpha_(std::move(alpha)), half_alpha_(alpha_ / K(2)),
      charge_(std::move(charge)), n_(g_.points()) {}

template <class K>
const K& MatsuoAlgebra<K>::charge() const {
    if (!charge_) throw ChargeUnset();
    return *charge_;
}

template <class K>
VecX<K> MatsuoAlgebra<K>::point(int i) const {
    if (i < 0 || i >= n_) throw Error("point index out of range");
    VecX<K> v = zero();
    v(i) = K(1);
    return v;
}

template <class K>
VecX<K> MatsuoAlgebra<K>::multiply(const VecX<K>& x, const VecX<K>& y) const {
    if (x.size() != n_ || y.size() != n_) throw Error("element dimension mismatch");
    VecX<K> r = zero();
    for (int i = 0; i < n_; ++i) {
        if (x(i) == K(0)) continue;
        for (int j = 0; j < n_; ++j) {
            if (y(j) == K(0)) continue;
            K c = x(i) * y(j);
            if (i == j) {
                r(i) += c;
            } else if (g_.collinear(i, j)) {
                K h = half_alpha_ * c;
                r(i) += h;
                r(j) += h;
                r(g_.wedge(i, j)) -= h;
            }
        }
    }
    return r;
}

template <class K>
MatX<K> MatsuoAlgebra<K>::ad_matrix(const VecX<K>& x) const {
    if (x.size() != n_) throw Error("element dimension mismatch");
    MatX<K> m = MatX<K>::Constant(n_, n_, K(0));
    // column j is x * e_j, assembled directly from the structure constants
    for (int i = 0; i < n_; ++i) {
        if (x(i) == K(0)) continue;
        m(i, i) += x(i);
        K h = half_alpha_ * x(i);
        for (int j = 0; j < n_; ++j) {
            if (j == i || !g_.collinear(i, j)) continue;
            m(i, j) += h;
            m(j, j) += h;
            m(g_.wedge(i, j), j) -= h;
        }
    }
    return m;
}

template <class K>
bool MatsuoAlgebra<K>::is_idempotent(const VecX<K>& x) const {
    return vec_equal(multiply(x, x), x);
}

template <class K>
VecX<K> MatsuoAlgebra<K>::parabolic_identity(const std::vector<int>& h) const {
    if (!spaces::is_closed_subspace(g_, h)) throw NotClosed("subset is not wedge-closed");
    spaces::FischerSpace sub = spaces::induced_subspace(g_, h);
    VecX<K> id = zero();
    for (const auto& comp : spaces::components(sub)) {
        int k = sub.degree(comp[0]);
        for (int p : comp)
            if (sub.degree(p) != k) throw Error("parabolic component is not regular");
        K denom = K(1) + half_alpha_ * K(k);
        if (denom == K(0))
            throw DegenerateAlpha("alpha = -2/" + std::to_string(k) +
                                  " makes the component subalgebra non-unital");
        K coeff = K(1) / denom;
        for (int p : comp) id(h[static_cast<std::size_t>(p)]) += coeff;
    }
    return id;
}

template <class K>
VecX<K> MatsuoAlgebra<K>::identity_element() const {
    std::vector<int> all(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) all[static_cast<std::size_t>(i)] = i;
    return parabolic_identity(all);
}

template <class K>
K MatsuoAlgebra<K>::gram(const VecX<K>& x, const VecX<K>& y) const {
    if (x.size() != n_ || y.size() != n_) throw Error("element dimension mismatch");
    const K& c = charge();
    K on_point = K(2) * c;
    K on_line = c * alpha_;
    K r(0);
    for (int i = 0; i < n_; ++i) {
        if (x(i) == K(0)) continue;
        for (int j = 0; j < n_; ++j) {
            if (y(j) == K(0)) continue;
            if (i == j)
                r += x(i) * y(j) * on_point;
            else if (g_.collinear(i, j))
                r += x(i) * y(j) * on_line;
        }
    }
    return r;
}

template <class K>
MatX<K> MatsuoAlgebra<K>::gram_matrix() const {
    const K& c = charge();
    K on_point = K(2) * c;
    K on_line = c * alpha_;
    MatX<K> m = MatX<K>::Constant(n_, n_, K(0));
    for (int i = 0; i < n_; ++i) {
        m(i, i) = on_point;
        for (int j = 0; j < n_; ++j)
            if (j != i && g_.collinear(i, j)) m(i, j) = on_line;
    }
    return m;
}

template <class K>
MatX<K> MatsuoAlgebra<K>::radical_basis() const {
    return kernel_basis(gram_matrix());
}

template class MatsuoAlgebra<Rat>;
template class MatsuoAlgebra<RatFunc>;

} // namespace algebra
} // namespace matsuo
