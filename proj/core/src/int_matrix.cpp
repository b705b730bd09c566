#include "milq/int_matrix.hpp"

#include "milq/error.hpp"

#include <utility>

namespace milq {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) {
        Int& x = (*this)(r, c);
        x = -x;
    }
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) {
        Int& x = (*this)(r, c);
        x = -x;
    }
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(b, c) != 0) (*this)(a, c) += f * (*this)(b, c);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Int& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, b) != 0) (*this)(r, a) += f * (*this)(r, b);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw invalid_input("matrix product: inner dimensions differ");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) r(i, j) += aik * b(k, j);
        }
    return r;
}

std::vector<Int> matvec(const IntMatrix& a, const std::vector<Int>& v) {
    if (v.size() != a.cols()) throw invalid_input("matrix-vector product: dimension mismatch");
    std::vector<Int> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && v[j] != 0) r[i] += a(i, j) * v[j];
    return r;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw invalid_input("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            m.swap_rows(piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = num / prev; // exact by Bareiss
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

} // namespace milq
