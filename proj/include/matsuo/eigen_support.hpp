#pragma once

#include <Eigen/Core>

#include <boost/multiprecision/traits/is_byte_container.hpp>

// Two-dimensional Eigen expressions typedef const_iterator to void, which the
// primary is_byte_container trait dereferences unconditionally. That turns
// overload resolution of any product against a boost scalar into a hard
// error, so pin the trait to false for matrices before Eigen's operators can
// instantiate it. Products in this codebase keep plain Matrix operands.
namespace Eigen {
template <typename Scalar, int Rows, int Cols, int Options, int MaxRows, int MaxCols>
class Matrix;
}
namespace boost {
namespace multiprecision {
namespace detail {
template <typename Scalar, int Rows, int Cols, int Options, int MaxRows, int MaxCols>
struct is_byte_container<Eigen::Matrix<Scalar, Rows, Cols, Options, MaxRows, MaxCols>>
    : public boost::false_type {};
} // namespace detail
} // namespace multiprecision
} // namespace boost

#include <boost/multiprecision/eigen.hpp>

#include "matsuo/ratfunc.hpp"

namespace Eigen {

template <>
struct NumTraits<matsuo::RatFunc> : GenericNumTraits<matsuo::RatFunc> {
    typedef matsuo::RatFunc Real;
    typedef matsuo::RatFunc NonInteger;
    typedef matsuo::RatFunc Nested;
    typedef matsuo::RatFunc Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 100,
        MulCost = 100
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace matsuo {

template <class K>
using MatX = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using VecX = Eigen::Matrix<K, Eigen::Dynamic, 1>;

// Eigen's operator== routes 2D expressions through overload-resolution paths
// that boost's byte-container trait cannot survive; compare entrywise instead.
template <class K>
bool mat_equal(const MatX<K>& a, const MatX<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

} // namespace matsuo
