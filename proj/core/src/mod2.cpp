#include "milq/mod2.hpp"

#include <bit>

namespace milq {

Mod2Matrix::Mod2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(cols == 0 ? 1 : (cols + 63) / 64), bits_(rows * words_) {}

Mod2Matrix Mod2Matrix::reduce(const IntMatrix& m) {
    Mod2Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) % 2 != 0) out.set(r, c, true);
    return out;
}

bool Mod2Matrix::get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void Mod2Matrix::set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t(1) << (c % 64);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

// Column-sweep Gauss elimination on a working copy.
std::size_t Mod2Matrix::rank() const {
    std::vector<std::uint64_t> work = bits_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t(1) << (c % 64);
        std::size_t piv = rank;
        while (piv < rows_ && !(work[piv * words_ + w] & mask)) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t k = 0; k < words_; ++k)
                std::swap(work[piv * words_ + k], work[rank * words_ + k]);
        for (std::size_t r = rank + 1; r < rows_; ++r)
            if (work[r * words_ + w] & mask)
                for (std::size_t k = 0; k < words_; ++k)
                    work[r * words_ + k] ^= work[rank * words_ + k];
        ++rank;
    }
    return rank;
}

std::size_t rank_mod2(const Mod2Matrix& m) { return m.rank(); }

std::size_t rank_mod2(const IntMatrix& m) { return Mod2Matrix::reduce(m).rank(); }

// XOR-basis elimination, used by the census inner loop. Kept distinct from
// Mod2Matrix::rank so the two paths can cross-check each other in tests.
std::size_t rank_of_bit_rows(const std::uint64_t* rows, std::size_t nrows) {
    std::uint64_t basis[64] = {};
    std::size_t rank = 0;
    for (std::size_t i = 0; i < nrows; ++i) {
        std::uint64_t v = rows[i];
        while (v != 0) {
            const int b = std::countr_zero(v);
            if (basis[b] == 0) {
                basis[b] = v;
                ++rank;
                break;
            }
            v ^= basis[b];
        }
    }
    return rank;
}

} // namespace milq
