#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matsuo/fischer.hpp"
#include "matsuo/linalg.hpp"

namespace matsuo {
namespace algebra {

// Commutative algebra on the points of a Fischer space over the field K:
// xx = x, xy = 0 for non-collinear points, xy = (alpha/2)(x + y - x^y) for
// collinear ones. Elements are coordinate vectors in the point basis.
//
// The optional charge c turns on the invariant bilinear form with
// (x,x) = 2c, (x,y) = c*alpha on collinear pairs and 0 otherwise.
template <class K>
class MatsuoAlgebra {
    spaces::FischerSpace g_;
    K alpha_;
    K half_alpha_;
    std::optional<K> charge_;
    int n_;

public:
    explicit MatsuoAlgebra(spaces::FischerSpace g, K alpha,
                           std::optional<K> charge = std::nullopt);

    int dim() const { return n_; }
    const spaces::FischerSpace& space() const { return g_; }
    const K& alpha() const { return alpha_; }
    bool has_charge() const { return charge_.has_value(); }
    const K& charge() const;

    VecX<K> zero() const { return VecX<K>::Constant(n_, K(0)); }
    VecX<K> point(int i) const;

    VecX<K> multiply(const VecX<K>& x, const VecX<K>& y) const;
    MatX<K> ad_matrix(const VecX<K>& x) const;
    bool is_idempotent(const VecX<K>& x) const;

    // Identity of the subalgebra spanned by a closed subset h: per connected
    // component, (1/(1 + alpha*k/2)) * (sum of points), summed over the
    // components. Throws NotClosed when h is not wedge-closed, Error when a
    // component is not regular, DegenerateAlpha when alpha = -2/k for some
    // component degree k.
    VecX<K> parabolic_identity(const std::vector<int>& h) const;
    VecX<K> identity_element() const;

    K gram(const VecX<K>& x, const VecX<K>& y) const;
    MatX<K> gram_matrix() const;
    K central_charge(const VecX<K>& e) const { return gram(e, e) / K(2); }
    // Kernel of the form, as matrix columns in the point basis.
    MatX<K> radical_basis() const;
};

template <class K>
bool vec_equal(const VecX<K>& a, const VecX<K>& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

template <class K>
std::vector<std::string> coeff_strings(const VecX<K>& v) {
    std::vector<std::string> r;
    r.reserve(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) r.push_back(k_str(v(i)));
    return r;
}

} // namespace algebra
} // namespace matsuo
