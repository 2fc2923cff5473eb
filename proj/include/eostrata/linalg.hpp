#pragma once

// Exact linear algebra over a field, templated on the Eigen scalar.
//
// Everything here uses exact zero tests (no pivoting by magnitude), so the
// routines work for Rational and Gf alike.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eostrata/scalar.hpp"

namespace eostrata {

template <typename Scalar>
struct RowEchelon {
    Matrix<Scalar> reduced;           ///< reduced row echelon form
    std::vector<Eigen::Index> pivots; ///< pivot column of each nonzero row
    Scalar determinant_factor;        ///< product of pivots times sign of row swaps
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Scalar>
RowEchelon<Scalar> rref(Matrix<Scalar> a)
{
    RowEchelon<Scalar> out;
    out.determinant_factor = Scalar(1);
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!is_zero(a(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            a.row(pivot).swap(a.row(r));
            out.determinant_factor = -out.determinant_factor;
        }
        const Scalar lead = a(r, c);
        out.determinant_factor *= lead;
        const Scalar inv = Scalar(1) / lead;
        for (Eigen::Index j = c; j < cols; ++j)
            if (!is_zero(a(r, j))) a(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            const Scalar factor = a(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                if (!is_zero(a(r, j))) a(i, j) -= factor * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(a);
    return out;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& a)
{
    return static_cast<Eigen::Index>(rref<Scalar>(a).pivots.size());
}

template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (a.rows() == 0) return Scalar(1);
    auto e = rref<Scalar>(a);
    if (static_cast<Eigen::Index>(e.pivots.size()) < a.rows()) return Scalar(0);
    return e.determinant_factor;
}

/// Basis of the right kernel {x : a x = 0}, one basis vector per column.
template <typename Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& a)
{
    auto e = rref<Scalar>(a);
    const Eigen::Index cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    Matrix<Scalar> basis = Matrix<Scalar>::Zero(cols, cols - static_cast<Eigen::Index>(e.pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        basis(free, k) = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (!is_zero(e.reduced(r, free))) basis(e.pivots[r], k) = -e.reduced(r, free);
        ++k;
    }
    return basis;
}

/// Some solution of a x = b, if one exists.
template <typename Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b)
{
    Matrix<Scalar> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    auto e = rref<Scalar>(aug);
    Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;
        x(e.pivots[r]) = e.reduced(r, a.cols());
    }
    return x;
}

template <typename Scalar>
std::optional<Matrix<Scalar>> inverse(const Matrix<Scalar>& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const Eigen::Index n = a.rows();
    Matrix<Scalar> aug(n, 2 * n);
    aug.leftCols(n) = a;
    aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
    auto e = rref<Scalar>(aug);
    if (static_cast<Eigen::Index>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    return Matrix<Scalar>(e.reduced.rightCols(n));
}

template <typename Scalar>
bool is_invertible(const Matrix<Scalar>& a)
{
    return a.rows() == a.cols() && rank<Scalar>(a) == a.rows();
}

/// Leading principal minors D_1..D_n, by elimination without row exchanges.
/// A zero pivot at step k makes D_k = 0; the remaining minors are then
/// computed directly from their submatrices.
template <typename Scalar>
std::vector<Scalar> leading_principal_minors(const Matrix<Scalar>& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("minors of a non-square matrix");
    const Eigen::Index n = a.rows();
    std::vector<Scalar> minors;
    minors.reserve(n);
    Matrix<Scalar> work = a;
    Scalar running(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Scalar pivot = work(k, k);
        if (is_zero(pivot)) {
            minors.push_back(Scalar(0));
            for (Eigen::Index j = k + 1; j < n; ++j)
                minors.push_back(determinant<Scalar>(a.topLeftCorner(j + 1, j + 1)));
            return minors;
        }
        running *= pivot;
        minors.push_back(running);
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (is_zero(work(i, k))) continue;
            const Scalar factor = work(i, k) / pivot;
            for (Eigen::Index j = k; j < n; ++j)
                if (!is_zero(work(k, j))) work(i, j) -= factor * work(k, j);
        }
    }
    return minors;
}

/// Entrywise Frobenius (identity over Q).
template <typename Scalar>
Matrix<Scalar> frobenius_twist(const Matrix<Scalar>& a)
{
    return a.unaryExpr([](const Scalar& x) { return frobenius(x); });
}

template <typename Scalar>
bool is_zero_matrix(const Matrix<Scalar>& a)
{
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) return false;
    return true;
}

template <typename Scalar>
bool equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

/// Kronecker product.
template <typename Scalar>
Matrix<Scalar> kron(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// --- subspaces ---------------------------------------------------------------

/// A subspace of Scalar^n, held as a canonical basis (columns in reduced echelon
/// form of the transpose), so equal subspaces have equal bases.
template <typename Scalar>
class Subspace {
public:
    Subspace() = default;

    explicit Subspace(Eigen::Index ambient) : ambient_(ambient), basis_(ambient, 0) {}

    /// Span of the columns of `generators`.
    static Subspace span(const Matrix<Scalar>& generators)
    {
        Subspace s(generators.rows());
        if (generators.cols() == 0) return s;
        auto e = rref<Scalar>(Matrix<Scalar>(generators.transpose()));
        const auto r = static_cast<Eigen::Index>(e.pivots.size());
        s.basis_ = e.reduced.topRows(r).transpose();
        return s;
    }

    static Subspace whole(Eigen::Index ambient)
    {
        return span(Matrix<Scalar>::Identity(ambient, ambient));
    }

    Eigen::Index ambient() const { return ambient_; }
    Eigen::Index dim() const { return basis_.cols(); }
    const Matrix<Scalar>& basis() const { return basis_; }

    bool contains(const Vector<Scalar>& v) const
    {
        if (dim() == 0) return is_zero_matrix<Scalar>(Matrix<Scalar>(v));
        Matrix<Scalar> stacked(ambient_, dim() + 1);
        stacked.leftCols(dim()) = basis_;
        stacked.col(dim()) = v;
        return rank<Scalar>(stacked) == dim();
    }

    bool contains(const Subspace& other) const { return sum(other).dim() == dim(); }

    Subspace sum(const Subspace& other) const
    {
        Matrix<Scalar> stacked(ambient_, dim() + other.dim());
        stacked.leftCols(dim()) = basis_;
        stacked.rightCols(other.dim()) = other.basis_;
        return span(stacked);
    }

    Subspace intersect(const Subspace& other) const
    {
        // x = B u = C v  <=>  [B | -C] (u, v) = 0
        Matrix<Scalar> stacked(ambient_, dim() + other.dim());
        stacked.leftCols(dim()) = basis_;
        stacked.rightCols(other.dim()) = -other.basis_;
        Matrix<Scalar> kernel = nullspace<Scalar>(stacked);
        return span(Matrix<Scalar>(basis_ * kernel.topRows(dim())));
    }

    /// Image under a linear map given by a matrix acting on columns.
    Subspace image(const Matrix<Scalar>& map) const { return span(Matrix<Scalar>(map * basis_)); }

    /// Annihilator in the dual space (functionals as column vectors).
    Subspace annihilator() const
    {
        if (dim() == 0) return whole(ambient_);
        return span(nullspace<Scalar>(Matrix<Scalar>(basis_.transpose())));
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && equal<Scalar>(a.basis_, b.basis_);
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Eigen::Index ambient_ = 0;
    Matrix<Scalar> basis_;
};

/// Columns extending `base` (a basis of U) to a basis of the whole space,
/// chosen among the standard basis vectors in increasing order.
template <typename Scalar>
Matrix<Scalar> complement_basis(const Matrix<Scalar>& base, Eigen::Index ambient)
{
    Matrix<Scalar> current = base;
    std::vector<Eigen::Index> picked;
    Eigen::Index r = base.cols() == 0 ? 0 : rank<Scalar>(base);
    for (Eigen::Index i = 0; i < ambient && r < ambient; ++i) {
        Matrix<Scalar> trial(ambient, current.cols() + 1);
        trial.leftCols(current.cols()) = current;
        trial.col(current.cols()) = Matrix<Scalar>::Identity(ambient, ambient).col(i);
        if (rank<Scalar>(trial) > r) {
            current = trial;
            picked.push_back(i);
            ++r;
        }
    }
    Matrix<Scalar> out(ambient, static_cast<Eigen::Index>(picked.size()));
    for (std::size_t k = 0; k < picked.size(); ++k) out.col(k) = Matrix<Scalar>::Identity(ambient, ambient).col(picked[k]);
    return out;
}

using GfMatrix = Matrix<Gf>;
using GfVector = Vector<Gf>;
using GfSubspace = Subspace<Gf>;

}  // namespace eostrata
