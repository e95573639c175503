#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "matsuo/linalg.hpp"

using namespace matsuo;

namespace {

MatX<Rat> rat_mat(std::initializer_list<std::initializer_list<int>> rows) {
    int r = static_cast<int>(rows.size()), c = static_cast<int>(rows.begin()->size());
    MatX<Rat> m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

Eigen::MatrixXi int_mat(std::initializer_list<std::initializer_list<int>> rows) {
    int r = static_cast<int>(rows.size()), c = static_cast<int>(rows.begin()->size());
    Eigen::MatrixXi m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("rref and kernel") {
    MatX<Rat> a = rat_mat({{1, 2, 3}, {2, 4, 6}});
    MatX<Rat> k = kernel_basis(a);
    CHECK(k.cols() == 2);
    for (int j = 0; j < k.cols(); ++j) {
        VecX<Rat> prod = a * k.col(j);
        for (int i = 0; i < prod.size(); ++i) CHECK(prod(i) == 0);
    }
    CHECK(rank_of(a) == 1);
    CHECK(rank_of(rat_mat({{1, 0}, {0, 1}})) == 2);
    CHECK(kernel_basis(rat_mat({{1, 0}, {0, 1}})).cols() == 0);
}

TEST_CASE("span solver") {
    MatX<Rat> basis = rat_mat({{1, 0}, {1, 1}, {0, 1}});
    SpanSolver<Rat> s(basis);
    VecX<Rat> y(3);
    y << Rat(2), Rat(3), Rat(1);
    auto coords = s.coordinates(y);
    REQUIRE(coords.has_value());
    CHECK((*coords)(0) == 2);
    CHECK((*coords)(1) == 1);
    VecX<Rat> out(3);
    out << Rat(1), Rat(1), Rat(1);
    CHECK(!s.contains(out));

    MatX<Rat> dep = rat_mat({{1, 2}, {2, 4}});
    CHECK_THROWS_AS(SpanSolver<Rat>{dep}, Error);
}

TEST_CASE("restricted operator") {
    MatX<Rat> op = rat_mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    MatX<Rat> basis = rat_mat({{1, 0}, {0, 1}, {0, 0}});
    SpanSolver<Rat> s(basis);
    auto r = restricted_matrix(op, basis, s);
    REQUIRE(r.has_value());
    CHECK((*r)(0, 0) == 1);
    CHECK((*r)(1, 1) == 2);
    CHECK((*r)(0, 1) == 0);

    MatX<Rat> rot = rat_mat({{0, 0, -1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(!restricted_matrix(rot, basis, s).has_value());
}

TEST_CASE("primitive scaling") {
    VecX<Rat> v(3);
    v << Rat(1) / Rat(2), Rat(1) / Rat(3), Rat(0);
    primitive_scale(v);
    CHECK(v(0) == 3);
    CHECK(v(1) == 2);
    CHECK(v(2) == 0);

    VecX<Rat> w(2);
    w << Rat(-1) / Rat(2), Rat(-1) / Rat(4);
    primitive_scale(w);
    CHECK(w(0) == 2);
    CHECK(w(1) == 1);

    RatFunc alpha = RatFunc::alpha();
    VecX<RatFunc> f(2);
    f << alpha / (RatFunc(1) + alpha), RatFunc(1) / (RatFunc(1) + alpha);
    primitive_scale(f);
    CHECK(f(0) == alpha);
    CHECK(f(1) == RatFunc(1));
    VecX<RatFunc> g = f;
    primitive_scale(g);
    CHECK(g(0) == f(0));
    CHECK(g(1) == f(1));
}

TEST_CASE("bareiss rank matches field rank") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + trial % 4;
        Eigen::MatrixXi m(n, n);
        MatX<Rat> mr(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int e = entry(rng);
                m(i, j) = e;
                mr(i, j) = Rat(e);
            }
        CHECK(bareiss_rank(to_int_rows(m)) == rank_of(mr));
    }
}

TEST_CASE("integer spectrum") {
    Eigen::MatrixXi k4 = int_mat({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
    auto spec = integer_spectrum(k4);
    REQUIRE(spec.size() == 2);
    CHECK(spec[0].first == -1);
    CHECK(spec[0].second == 3);
    CHECK(spec[1].first == 3);
    CHECK(spec[1].second == 1);

    auto ones = integer_spectrum(int_mat({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    REQUIRE(ones.size() == 2);
    CHECK(ones[0].first == 0);
    CHECK(ones[0].second == 2);
    CHECK(ones[1].first == 3);

    auto zero = integer_spectrum(int_mat({{0, 0}, {0, 0}}));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].second == 2);

    // path on three vertices has eigenvalues 0, +-sqrt(2)
    Eigen::MatrixXi p3 = int_mat({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK_THROWS_AS(integer_spectrum(p3), IrrationalSpectrum);

    Eigen::MatrixXi asym = int_mat({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(integer_spectrum(asym), Error);
}

TEST_CASE("characteristic polynomial and integer roots") {
    IntRows jordan = to_int_rows(int_mat({{2, 1}, {0, 2}}));
    auto cp = charpoly_int(jordan);
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == 4);
    CHECK(cp[1] == -4);
    CHECK(cp[2] == 1);

    auto [roots, residual] = integer_roots(cp, Int(100));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].first == 2);
    CHECK(roots[0].second == 2);
    CHECK(residual.size() == 1);

    std::vector<Int> x2m2{Int(-2), Int(0), Int(1)};
    auto [r2, res2] = integer_roots(x2m2, Int(10));
    CHECK(r2.empty());
    CHECK(res2.size() == 3);

    IntRows comp = to_int_rows(int_mat({{0, 1}, {1, 1}}));
    auto fib = charpoly_int(comp);
    CHECK(fib[0] == -1);
    CHECK(fib[1] == -1);
    CHECK(fib[2] == 1);
}
