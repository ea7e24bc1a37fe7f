#ifndef SCENIC_MATRIX_HPP
#define SCENIC_MATRIX_HPP

#include <complex>
#include <vector>

#include "scenic/intpoly.hpp"

namespace scenic {

/* Minimal dense matrix with value semantics; big enough for the 4n x 4n
 * integer forms and 2n x 2n complex solves that show up here. */
template <typename T>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Matrix transposed() const {
        Matrix m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix m(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const T& v = x(i, k);
                if (v == T(0)) continue;
                for (int j = 0; j < y.cols; ++j) m(i, j) += v * y(k, j);
            }
        return m;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix m(x.rows, x.cols);
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = x.a[i] + y.a[i];
        return m;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix m(x.rows, x.cols);
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = x.a[i] - y.a[i];
        return m;
    }

    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using IntMatrix = Matrix<Int>;
using RMat = Matrix<long double>;
using CMat = Matrix<std::complex<long double>>;

/* Exact determinant by fraction-free (Bareiss) elimination. */
Int bareiss_det(IntMatrix m);

/* Exact characteristic polynomial of a square integer matrix, monic of
 * degree n, by the Faddeev-LeVerrier recurrence (all divisions exact). */
IntPoly char_poly(const IntMatrix& m);

Int trace(const IntMatrix& m);

} // namespace scenic

#endif
