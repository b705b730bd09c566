#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace milq {

// Exact arbitrary-precision integer. Everything in the library computes over
// this type; nothing is allowed to overflow silently.
using Int = boost::multiprecision::cpp_int;

// Dense row-major integer matrix, 0-based indices. Plain linear algebra
// container; domain-specific matrices (LinkingMatrix) wrap their own type.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);
    // row a += f * row b
    void add_row_multiple(std::size_t a, std::size_t b, const Int& f);
    // col a += f * col b
    void add_col_multiple(std::size_t a, std::size_t b, const Int& f);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Matrix-vector product; v.size() must equal a.cols().
std::vector<Int> matvec(const IntMatrix& a, const std::vector<Int>& v);

// Exact determinant (fraction-free Bareiss elimination). Square input only.
Int determinant(const IntMatrix& a);

} // namespace milq
