#include <catch_amalgamated.hpp>

#include <random>

#include "eostrata/linalg.hpp"

using namespace eostrata;

namespace {

// Laplace expansion along the first row; independent of the elimination code.
template <typename S>
S laplace(const Matrix<S>& a)
{
    const auto n = a.rows();
    if (n == 0) return S(1);
    if (n == 1) return a(0, 0);
    S total(0);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (is_zero(a(0, j))) continue;
        Matrix<S> minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = a(r, c);
        S term = a(0, j) * laplace<S>(minor);
        total += (j % 2 == 0) ? term : S(-term);
    }
    return total;
}

Matrix<Rational> random_rational(std::mt19937& rng, int rows, int cols, int sparsity)
{
    std::uniform_int_distribution<int> d(-3, 3), z(0, 9);
    Matrix<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = z(rng) < sparsity ? Rational(0) : Rational(d(rng), 1 + z(rng) % 3);
    return m;
}

Matrix<Gf> random_gf(std::mt19937& rng, const FiniteField& f, int rows, int cols)
{
    std::uniform_int_distribution<FiniteField::Code> d(0, f.order() - 1);
    Matrix<Gf> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Gf(f, d(rng));
    return m;
}

}  // namespace

TEST_CASE("determinant matches Laplace expansion", "[linalg]")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 5;
        auto a = random_rational(rng, n, n, trial % 6);
        CHECK(determinant<Rational>(a) == laplace<Rational>(a));
    }
    const auto& f = FiniteField::get(3, 2);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_gf(rng, f, 1 + trial % 4, 1 + trial % 4);
        CHECK(determinant<Gf>(a) == laplace<Gf>(a));
    }
}

TEST_CASE("nullspace, solve and inverse", "[linalg]")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_rational(rng, 3 + trial % 3, 5, 4);
        auto k = nullspace<Rational>(a);
        CHECK(k.cols() + rank<Rational>(a) == a.cols());
        CHECK(is_zero_matrix<Rational>(Matrix<Rational>(a * k)));
        CHECK(rank<Rational>(k) == k.cols());

        Vector<Rational> x0 = random_rational(rng, 5, 1, 2);
        Vector<Rational> b = a * x0;
        auto x = solve<Rational>(a, b);
        REQUIRE(x.has_value());
        CHECK(equal<Rational>(Matrix<Rational>(a * *x), Matrix<Rational>(b)));

        auto sq = random_rational(rng, 4, 4, trial % 5);
        auto inv = inverse<Rational>(sq);
        CHECK(inv.has_value() == !is_zero(determinant<Rational>(sq)));
        if (inv) CHECK(equal<Rational>(Matrix<Rational>(sq * *inv), Matrix<Rational>::Identity(4, 4)));
    }
    Matrix<Rational> a(1, 1);
    a(0, 0) = 0;
    Vector<Rational> b(1);
    b(0) = 1;
    CHECK_FALSE(solve<Rational>(a, b).has_value());
}

TEST_CASE("leading minors match direct determinants", "[linalg]")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_rational(rng, 5, 5, trial % 7);
        auto minors = leading_principal_minors<Rational>(a);
        for (int k = 0; k < 5; ++k) CHECK(minors[k] == laplace<Rational>(Matrix<Rational>(a.topLeftCorner(k + 1, k + 1))));
    }
}

TEST_CASE("subspace operations obey the dimension formula", "[linalg]")
{
    std::mt19937 rng(5);
    const auto& f = FiniteField::get(2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        auto u = Subspace<Gf>::span(random_gf(rng, f, 5, trial % 4));
        auto w = Subspace<Gf>::span(random_gf(rng, f, 5, 1 + trial % 3));
        auto s = u.sum(w), i = u.intersect(w);
        CHECK(s.dim() + i.dim() == u.dim() + w.dim());
        CHECK(s.contains(u));
        CHECK(u.contains(i));
        CHECK(w.contains(i));
        CHECK(u.annihilator().dim() == 5 - u.dim());
        CHECK(u.annihilator().annihilator() == u);
        auto comp = complement_basis<Gf>(u.basis(), 5);
        CHECK(comp.cols() == 5 - u.dim());
        CHECK(u.sum(Subspace<Gf>::span(comp)).dim() == 5);
    }
    CHECK(Subspace<Rational>::span(Matrix<Rational>::Identity(3, 3)) == Subspace<Rational>::whole(3));
}

TEST_CASE("kron matches the entry formula", "[linalg]")
{
    std::mt19937 rng(9);
    auto a = random_rational(rng, 2, 3, 0), b = random_rational(rng, 3, 2, 0);
    auto k = kron<Rational>(a, b);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 2; ++c) CHECK(k(i * 3 + r, j * 2 + c) == a(i, j) * b(r, c));
}
