// Exact dense linear algebra on Eigen matrices over an exact scalar type.
//
// Every routine pivots on the first nonzero entry in column order, so results
// are reproducible bit for bit.
#pragma once

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cotilt/scalar.hpp"

namespace cotilt {

using Index = Eigen::Index;
template <class T> using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T> using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
using Matrix = Mat<Scalar>;
using Vector = Vec<Scalar>;

namespace detail {
template <class T> inline bool nz(const T& x) { return !(x == T(0)); }
inline bool nz(const Scalar& x) { return !x.is_zero(); }
}  // namespace detail

template <class T> struct Echelon {
    Mat<T> r;                   // reduced row echelon form
    std::vector<Index> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by Gauss-Jordan elimination.
template <class Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m)
{
    using T = typename Derived::Scalar;
    Echelon<T> e{m, {}};
    Mat<T>& a = e.r;
    const Index rows = a.rows(), cols = a.cols();
    Index r = 0;
    std::vector<Index> support;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index piv = -1;
        for (Index i = r; i < rows; ++i)
            if (detail::nz(a(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) a.row(piv).swap(a.row(r));
        if (!(a(r, c) == T(1))) {
            T inv = T(1) / a(r, c);
            for (Index j = c; j < cols; ++j)
                if (detail::nz(a(r, j))) a(r, j) *= inv;
        }
        support.clear();
        for (Index j = c; j < cols; ++j)
            if (detail::nz(a(r, j))) support.push_back(j);
        for (Index i = 0; i < rows; ++i) {
            if (i == r || !detail::nz(a(i, c))) continue;
            T f = a(i, c);
            for (Index j : support) a(i, j) -= f * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<Index>(rref(m).pivots.size());
}

// Columns form a basis of the null space, one per free column, in column order.
template <class Derived>
Mat<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m)
{
    using T = typename Derived::Scalar;
    const Index n = m.cols();
    if (m.rows() == 0) return Mat<T>::Identity(n, n);
    auto e = rref(m);
    std::vector<char> is_piv(n, 0);
    for (Index c : e.pivots) is_piv[c] = 1;
    Mat<T> k = Mat<T>::Zero(n, n - static_cast<Index>(e.pivots.size()));
    Index col = 0;
    for (Index f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        k(f, col) = T(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (detail::nz(e.r(i, f))) k(e.pivots[i], col) = -e.r(i, f);
        ++col;
    }
    return k;
}

// Some x with a*x = b, or nullopt when the system is inconsistent.
template <class DA, class DB>
std::optional<Mat<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
{
    using T = typename DA::Scalar;
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    const Index n = a.cols(), k = b.cols();
    Mat<T> aug(a.rows(), n + k);
    aug << a, b;
    auto e = rref(aug);
    Mat<T> x = Mat<T>::Zero(n, k);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= n) return std::nullopt;
        for (Index j = 0; j < k; ++j) x(e.pivots[i], j) = e.r(i, n + j);
    }
    return x;
}

template <class Derived>
bool is_invertible(const Eigen::MatrixBase<Derived>& m)
{
    return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class Derived>
Mat<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m)
{
    using T = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    auto x = solve(m, Mat<T>::Identity(m.rows(), m.rows()));
    if (!x || rank(m) != m.rows()) throw std::domain_error("inverse: singular matrix");
    return *x;
}

// Indices of a maximal independent set of columns, chosen greedily left to right.
template <class Derived>
std::vector<Index> pivot_columns(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() == 0) return {};
    return rref(m).pivots;
}

// Basis of the column space, made of original columns.
template <class Derived>
Mat<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& m)
{
    auto piv = pivot_columns(m);
    Mat<typename Derived::Scalar> out(m.rows(), static_cast<Index>(piv.size()));
    for (std::size_t j = 0; j < piv.size(); ++j) out.col(j) = m.col(piv[j]);
    return out;
}

// Coordinates not covered by the column span of k: the unit vectors at these
// indices complete the columns of k to a basis.
template <class Derived>
std::vector<Index> complement_coordinates(const Eigen::MatrixBase<Derived>& k)
{
    const Index n = k.rows();
    std::vector<char> hit(n, 0);
    if (k.cols() > 0)
        for (Index c : rref(k.transpose()).pivots) hit[c] = 1;
    std::vector<Index> out;
    for (Index i = 0; i < n; ++i)
        if (!hit[i]) out.push_back(i);
    return out;
}

// l with l*k = 1 for k of full column rank.
template <class Derived>
Mat<typename Derived::Scalar> left_inverse(const Eigen::MatrixBase<Derived>& k)
{
    using T = typename Derived::Scalar;
    const Index n = k.rows(), d = k.cols();
    Mat<T> l = Mat<T>::Zero(d, n);
    if (d == 0) return l;
    auto rows = rref(k.transpose()).pivots;
    if (static_cast<Index>(rows.size()) != d) throw std::domain_error("left_inverse: rank deficient");
    Mat<T> sel(d, d);
    for (Index i = 0; i < d; ++i) sel.row(i) = k.row(rows[i]);
    Mat<T> inv = inverse(sel);
    for (Index i = 0; i < d; ++i) l.col(rows[i]) = inv.col(i);
    return l;
}

// Basis of span(a) + span(b).
template <class DA, class DB>
Mat<typename DA::Scalar> span_sum(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
{
    Mat<typename DA::Scalar> ab(a.rows(), a.cols() + b.cols());
    ab << a, b;
    return column_basis(ab);
}

// Basis of span(a) ∩ span(b); a and b need not have independent columns.
template <class DA, class DB>
Mat<typename DA::Scalar> intersect(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
{
    using T = typename DA::Scalar;
    Mat<T> ab(a.rows(), a.cols() + b.cols());
    ab << a, -b;
    Mat<T> k = kernel_basis(ab);
    Mat<T> v = a * k.topRows(a.cols());
    return column_basis(v);
}

// True when every column of v lies in the span of the columns of a.
template <class DA, class DV>
bool in_span(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DV>& v)
{
    if (v.cols() == 0) return true;
    if (a.cols() == 0) {
        for (Index i = 0; i < v.rows(); ++i)
            for (Index j = 0; j < v.cols(); ++j)
                if (detail::nz(v(i, j))) return false;
        return true;
    }
    return solve(a, v).has_value();
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (detail::nz(m(i, j))) return false;
    return true;
}

inline Matrix zeros(Index r, Index c) { return Matrix::Zero(r, c); }
inline Matrix identity(Index n) { return Matrix::Identity(n, n); }

// Stack the columns of m into one vector.
template <class Derived>
Vec<typename Derived::Scalar> vectorize(const Eigen::MatrixBase<Derived>& m)
{
    Vec<typename Derived::Scalar> v(m.rows() * m.cols());
    Index k = 0;
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) v(k++) = m(i, j);
    return v;
}

}  // namespace cotilt
