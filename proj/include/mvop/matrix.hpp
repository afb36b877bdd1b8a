#pragma once

/**
 * @file matrix.hpp
 * @brief Small dense matrices over exact rings: arithmetic, Gaussian
 * inversion over a field, fraction-free (Bareiss) determinants over a
 * polynomial ring, adjugates, and exact nullspace computation.
 *
 * Sizes here are tiny (at most ~(2*16+1) square), so the only concerns are
 * exactness and clean failure modes, not asymptotics.
 */

#include <functional>
#include <vector>

#include "mvop/poly.hpp"
#include "mvop/scalars.hpp"

namespace mvop {

template <class T>
class Mat {
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;

public:
    Mat() = default;
    Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
    Mat(size_t r, size_t c, std::vector<T> v) : rows_(r), cols_(c), a_(std::move(v)) {
        if (a_.size() != r * c) throw exactness_error("Mat: bad init size");
    }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    T const& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (auto const& v : a_)
            if (!(v == T(0))) return false;
        return true;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    Mat operator+(Mat const& o) const {
        check_same_shape(o);
        Mat r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
        return r;
    }
    Mat operator-(Mat const& o) const { return *this + (-o); }
    Mat operator*(Mat const& o) const {
        if (cols_ != o.rows_) throw exactness_error("Mat: shape mismatch in product");
        Mat r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                T const& aik = (*this)(i, k);
                if (aik == T(0)) continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = r(i, j) + aik * o(k, j);
            }
        return r;
    }
    Mat operator*(T const& s) const {
        Mat r = *this;
        for (auto& v : r.a_) v = v * s;
        return r;
    }
    Mat& operator+=(Mat const& o) { return *this = *this + o; }
    Mat& operator-=(Mat const& o) { return *this = *this - o; }

    bool operator==(Mat const& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(Mat const& o) const { return !(*this == o); }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat<T> submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
        Mat r(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

    template <class F>
    auto map(F&& f) const -> Mat<decltype(f(std::declval<T const&>()))> {
        using U = decltype(f(std::declval<T const&>()));
        Mat<U> r(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    void check_same_shape(Mat const& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw exactness_error("Mat: shape mismatch");
    }
};

template <class T>
inline Mat<T> operator*(T const& s, Mat<T> const& m) { return m * s; }

/// Gauss-Jordan inverse over a field (T must support /, inverse via 1/x).
template <class T>
Mat<T> inverse(Mat<T> const& m) {
    if (m.rows() != m.cols()) throw exactness_error("inverse: not square");
    size_t n = m.rows();
    Mat<T> a = m, inv = Mat<T>::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a(piv, col) == T(0)) ++piv;
        if (piv == n) throw exactness_error("inverse: singular matrix");
        if (piv != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        T d = a(col, col);
        for (size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / d;
            inv(col, j) = inv(col, j) / d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            T f = a(i, col);
            if (f == T(0)) continue;
            for (size_t j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(col, j);
                inv(i, j) = inv(i, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Fraction-free determinant (Bareiss). T needs exact_div-compatible
/// division supplied by the `div` functor (exact by construction).
template <class T, class Div>
T det_bareiss(Mat<T> m, Div div) {
    if (m.rows() != m.cols()) throw exactness_error("det: not square");
    size_t n = m.rows();
    if (n == 0) return T(1);
    T denom(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            size_t piv = k + 1;
            while (piv < n && m(piv, k) == T(0)) ++piv;
            if (piv == n) return T(0);
            for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = div(m(i, j) * m(k, k) - m(i, k) * m(k, j), denom);
        denom = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

template <class K>
Poly<K> det(Mat<Poly<K>> const& m) {
    return det_bareiss(m, [](Poly<K> const& a, Poly<K> const& b) {
        return a.exact_div(b);
    });
}

/// Determinant over a field via plain elimination.
template <class T>
T det_field(Mat<T> m) {
    if (m.rows() != m.cols()) throw exactness_error("det: not square");
    size_t n = m.rows();
    T d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m(piv, col) == T(0)) ++piv;
        if (piv == n) return T(0);
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            d = -d;
        }
        d = d * m(col, col);
        T inv_p = T(1) / m(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            T f = m(i, col) * inv_p;
            if (f == T(0)) continue;
            for (size_t j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return d;
}

/// Adjugate over a commutative ring via cofactors (sizes are tiny).
template <class T>
Mat<T> adjugate(Mat<T> const& m, std::function<T(Mat<T> const&)> detf) {
    size_t n = m.rows();
    if (n != m.cols()) throw exactness_error("adjugate: not square");
    Mat<T> adj(n, n);
    if (n == 1) {
        adj(0, 0) = T(1);
        return adj;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Mat<T> minor(n - 1, n - 1);
            for (size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            T cof = detf(minor);
            if ((i + j) % 2) cof = -cof;
            adj(j, i) = cof;  // transpose of cofactor matrix
        }
    return adj;
}

/// Exact nullspace basis of an r x c matrix over a field; vectors returned
/// as columns (each a vector<T> of length c).
template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
    size_t r = m.rows(), c = m.cols();
    std::vector<long> pivot_col_of_row(r, -1);
    std::vector<bool> is_pivot(c, false);
    size_t row = 0;
    for (size_t col = 0; col < c && row < r; ++col) {
        size_t piv = row;
        while (piv < r && m(piv, col) == T(0)) ++piv;
        if (piv == r) continue;
        if (piv != row)
            for (size_t j = 0; j < c; ++j) std::swap(m(piv, j), m(row, j));
        T inv_p = T(1) / m(row, col);
        for (size_t j = 0; j < c; ++j) m(row, j) = m(row, j) * inv_p;
        for (size_t i = 0; i < r; ++i) {
            if (i == row) continue;
            T f = m(i, col);
            if (f == T(0)) continue;
            for (size_t j = 0; j < c; ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivot_col_of_row[row] = static_cast<long>(col);
        is_pivot[col] = true;
        ++row;
    }
    std::vector<std::vector<T>> basis;
    for (size_t freec = 0; freec < c; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<T> v(c, T(0));
        v[freec] = T(1);
        for (size_t i = 0; i < row; ++i) {
            long pc = pivot_col_of_row[i];
            v[static_cast<size_t>(pc)] = -m(i, freec);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Matrix polynomials: Mat<Poly<K>> plus a few helpers that treat them as
// polynomials with matrix coefficients.
// ---------------------------------------------------------------------------

template <class K>
using MatPoly = Mat<Poly<K>>;

template <class K>
long degree(MatPoly<K> const& m) {
    long d = -1;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree());
    return d;
}

template <class K>
Mat<K> coeff_matrix(MatPoly<K> const& m, long k) {
    Mat<K> r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).coeff(k);
    return r;
}

template <class K>
Mat<K> leading_matrix(MatPoly<K> const& m) { return coeff_matrix(m, degree(m)); }

template <class K>
MatPoly<K> from_const(Mat<K> const& m) {
    return m.map([](K const& v) { return Poly<K>(v); });
}

template <class K>
MatPoly<K> derivative(MatPoly<K> const& m) {
    return m.map([](Poly<K> const& p) { return p.derivative(); });
}

template <class K>
MatPoly<K> reflect(MatPoly<K> const& m) {
    return m.map([](Poly<K> const& p) { return p.reflect(); });
}

template <class K>
MatPoly<K> scale(MatPoly<K> const& m, K const& s) {
    return m.map([&](Poly<K> const& p) { return p * s; });
}

template <class K>
Mat<K> eval(MatPoly<K> const& m, K const& x) {
    return m.map([&](Poly<K> const& p) { return p.eval(x); });
}

/// x^k * identity as a matrix polynomial.
template <class K>
MatPoly<K> monomial_identity(size_t n, long k) {
    MatPoly<K> m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Poly<K>::monomial(k);
    return m;
}

/// Lift entries Rat -> QuadRat (or any convertible pair) entrywise.
template <class K2, class K1>
Mat<K2> lift(Mat<K1> const& m) {
    return m.map([](K1 const& v) { return K2(v); });
}

template <class K2, class K1>
MatPoly<K2> lift_poly(MatPoly<K1> const& m) {
    return m.map([](Poly<K1> const& p) {
        std::vector<K2> c;
        c.reserve(p.coeffs().size());
        for (auto const& v : p.coeffs()) c.emplace_back(v);
        return Poly<K2>(std::move(c));
    });
}

}  // namespace mvop
