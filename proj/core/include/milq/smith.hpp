#pragma once

#include "milq/int_matrix.hpp"

#include <optional>
#include <vector>

namespace milq {

// Smith normal form of an integer matrix M: unimodular left, right with
//   left * M * right = diag(d), padded with zeros off the diagonal.
// d satisfies d[i] >= 0, d[i] | d[i+1] whenever d[i+1] != 0, and all zero
// entries come after all nonzero entries. left_inv and right_inv are the
// exact inverses of left and right, carried along by the elimination; they
// make coset reduction and lattice membership tests cheap.
struct SmithForm {
    std::vector<Int> d; // length min(rows, cols)
    IntMatrix left, left_inv;   // rows x rows
    IntMatrix right, right_inv; // cols x cols
};

SmithForm smith_normal_form(const IntMatrix& m);

// Diagonal only, no transform matrices. Same invariants on d.
std::vector<Int> smith_invariants(const IntMatrix& m);

// Rank over Z = number of nonzero Smith invariants.
std::size_t integer_rank(const IntMatrix& m);

// Decides b in the lattice spanned by the columns of a; on success returns x
// with a*x = b. Precomputes the Smith form once, so repeated queries against
// the same matrix are cheap.
class ColumnLatticeSolver {
public:
    explicit ColumnLatticeSolver(const IntMatrix& a);
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

    const SmithForm& form() const { return snf_; }

private:
    std::size_t rows_, cols_;
    SmithForm snf_;
};

// One-shot convenience wrapper around ColumnLatticeSolver.
std::optional<std::vector<Int>> solve_in_column_lattice(const IntMatrix& a,
                                                        const std::vector<Int>& b);

} // namespace milq
