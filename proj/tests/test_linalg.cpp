#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cotilt/linalg.hpp"

using namespace cotilt;

static Matrix mat(Index r, Index c, std::initializer_list<long> v)
{
    Matrix m(r, c);
    auto it = v.begin();
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = Scalar(*it++);
    return m;
}

TEST_CASE("rank")
{
    CHECK(rank(identity(2)) == 2);
    CHECK(rank(zeros(3, 3)) == 0);
    CHECK(rank(mat(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(zeros(0, 4)) == 0);
}

TEST_CASE("kernel")
{
    CHECK(kernel_basis(identity(3)).cols() == 0);
    Matrix k = kernel_basis(zeros(2, 3));
    CHECK(k.cols() == 3);
    CHECK(rank(k) == 3);
    Matrix k2 = kernel_basis(mat(2, 2, {1, 2, 2, 4}));
    REQUIRE(k2.cols() == 1);
    // proportional to (2,-1)
    CHECK(k2(0, 0) * Scalar(-1) == k2(1, 0) * Scalar(2));
    CHECK(!k2(1, 0).is_zero());
}

TEST_CASE("solve")
{
    Matrix b = mat(2, 2, {5, 6, 7, 8});
    CHECK(*solve(identity(2), b) == b);
    CHECK(!solve(zeros(2, 2), mat(2, 1, {1, 0})).has_value());
    auto x = solve(mat(2, 2, {1, 1, 0, 1}), mat(2, 1, {3, 1}));
    REQUIRE(x);
    CHECK(*x == mat(2, 1, {2, 1}));
    CHECK_THROWS(solve(identity(2), zeros(3, 1)));
}

TEST_CASE("invertible")
{
    CHECK(is_invertible(identity(3)));
    CHECK(!is_invertible(zeros(2, 3)));
    CHECK(!is_invertible(mat(2, 2, {1, 2, 2, 4})));
    Matrix m = mat(2, 2, {2, 1, 1, 1});
    CHECK(m * inverse(m) == identity(2));
}

TEST_CASE("prime field")
{
    Field f{5};
    Matrix m(2, 2);
    m << f(1), f(2), f(3), f(1);  // det = 1 - 6 = 0 mod 5
    CHECK(rank(m) == 1);
    CHECK(Scalar::from_string("1/2", 5) == f(3));
    CHECK_THROWS(Scalar::from_string("1/5", 5));
}

TEST_CASE("subspace helpers")
{
    Matrix a = mat(3, 2, {1, 0, 0, 1, 0, 0});
    Matrix b = mat(3, 2, {0, 0, 1, 0, 0, 1});
    Matrix i = intersect(a, b);
    CHECK(i.cols() == 1);
    CHECK(in_span(a, i));
    CHECK(in_span(b, i));
    CHECK(span_sum(a, b).cols() == 3);
    CHECK(complement_coordinates(a) == std::vector<Index>{2});
    Matrix l = left_inverse(b);
    CHECK(l * b == identity(2));
}

TEST_CASE("random rank-nullity and solve")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> ent(-3, 3), sz(0, 6);
    for (int t = 0; t < 200; ++t) {
        Index r = sz(rng), c = sz(rng), k = sz(rng);
        // product of random factors gives a controlled low rank
        Matrix f(r, k), g(k, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < k; ++j) f(i, j) = Scalar(ent(rng));
        for (Index i = 0; i < k; ++i)
            for (Index j = 0; j < c; ++j) g(i, j) = Scalar(ent(rng));
        Matrix m = f * g;
        Matrix ker = kernel_basis(m);
        CHECK(rank(m) + ker.cols() == c);
        CHECK(is_zero(m * ker));
        CHECK(rank(ker) == ker.cols());
        Matrix x(c, 1);
        for (Index i = 0; i < c; ++i) x(i, 0) = Scalar(ent(rng));
        auto y = solve(m, Matrix(m * x));
        REQUIRE(y);
        CHECK(m * *y == m * x);
        CHECK(rref(m).r == rref(m).r);
    }
}
