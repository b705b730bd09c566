#pragma once

#include "milq/int_matrix.hpp"

#include <cstdint>
#include <vector>

namespace milq {

// Dense GF(2) matrix, rows packed into 64-bit words.
class Mod2Matrix {
public:
    Mod2Matrix() = default;
    Mod2Matrix(std::size_t rows, std::size_t cols);

    // Entrywise reduction mod 2.
    static Mod2Matrix reduce(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);

    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;
};

std::size_t rank_mod2(const Mod2Matrix& m);
std::size_t rank_mod2(const IntMatrix& m);

// Rank of bit rows that each fit in one 64-bit word; the census hot path.
std::size_t rank_of_bit_rows(const std::uint64_t* rows, std::size_t nrows);

} // namespace milq
