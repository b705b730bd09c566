#include "milq/smith.hpp"

#include "milq/error.hpp"

#include <algorithm>

namespace milq {
namespace {

// Elimination workspace. Row operations on the working matrix are mirrored on
// `left` (as E*left) and on `left_inv` (as left_inv*E^-1), so
// left * original * right == a and left*left_inv == I hold throughout; columns
// symmetrically. Transform upkeep is skipped entirely when track == false.
struct Workspace {
    IntMatrix a;
    bool track;
    IntMatrix left, left_inv, right, right_inv;

    Workspace(const IntMatrix& m, bool with_transforms) : a(m), track(with_transforms) {
        if (track) {
            left = IntMatrix::identity(a.rows());
            left_inv = IntMatrix::identity(a.rows());
            right = IntMatrix::identity(a.cols());
            right_inv = IntMatrix::identity(a.cols());
        }
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        a.swap_rows(i, j);
        if (track) {
            left.swap_rows(i, j);
            left_inv.swap_cols(i, j);
        }
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        a.swap_cols(i, j);
        if (track) {
            right.swap_cols(i, j);
            right_inv.swap_rows(i, j);
        }
    }

    void negate_row(std::size_t i) {
        a.negate_row(i);
        if (track) {
            left.negate_row(i);
            left_inv.negate_col(i);
        }
    }

    // row i += f * row j
    void add_row(std::size_t i, std::size_t j, const Int& f) {
        a.add_row_multiple(i, j, f);
        if (track) {
            left.add_row_multiple(i, j, f);
            left_inv.add_col_multiple(j, i, -f);
        }
    }

    // col i += f * col j
    void add_col(std::size_t i, std::size_t j, const Int& f) {
        a.add_col_multiple(i, j, f);
        if (track) {
            right.add_col_multiple(i, j, f);
            right_inv.add_row_multiple(j, i, -f);
        }
    }
};

// Minimal-|value| nonzero entry of a[t..row_end) x [t..col_end); early out on
// 1, the smallest possible. False iff the block is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t row_end, std::size_t col_end,
                std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t r = t; r < row_end; ++r)
        for (std::size_t c = t; c < col_end; ++c) {
            const Int& x = a(r, c);
            if (x == 0) continue;
            Int ax = x < 0 ? Int(-x) : x;
            if (!found || ax < best) {
                found = true;
                best = std::move(ax);
                pr = r;
                pc = c;
                if (best == 1) return true;
            }
        }
    return found;
}

// Clears row t and column t within the given block, leaving a lone nonzero
// pivot at (t,t). Division leaves remainders strictly smaller in absolute
// value than the current pivot, so re-picking a minimal pivot terminates.
// Returns false iff the block is entirely zero.
bool eliminate_at(Workspace& ws, std::size_t t, std::size_t row_end, std::size_t col_end) {
    for (;;) {
        std::size_t pr, pc;
        if (!find_pivot(ws.a, t, row_end, col_end, pr, pc)) return false;
        ws.swap_rows(t, pr);
        ws.swap_cols(t, pc);

        bool retry = false;
        for (std::size_t r = t + 1; r < row_end; ++r) {
            if (ws.a(r, t) == 0) continue;
            Int q = ws.a(r, t) / ws.a(t, t);
            if (q != 0) ws.add_row(r, t, -q);
            if (ws.a(r, t) != 0) retry = true;
        }
        if (retry) continue;

        for (std::size_t c = t + 1; c < col_end; ++c) {
            if (ws.a(t, c) == 0) continue;
            Int q = ws.a(t, c) / ws.a(t, t);
            if (q != 0) ws.add_col(c, t, -q);
            if (ws.a(t, c) != 0) retry = true;
        }
        if (!retry) return true;
    }
}

SmithForm smith_core(const IntMatrix& m, bool track) {
    Workspace ws(m, track);
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t mn = std::min(rows, cols);

    std::size_t r = 0; // number of nonzero diagonal entries
    while (r < mn && eliminate_at(ws, r, rows, cols)) ++r;

    for (std::size_t i = 0; i < r; ++i)
        if (ws.a(i, i) < 0) ws.negate_row(i);

    // Enforce the divisibility chain. A violating adjacent pair diag(a,b) is
    // rewritten as diag(gcd, lcm) by re-eliminating the 2x2 block after a
    // column add; sweeps repeat until stable.
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (std::size_t i = 0; i + 1 < r; ++i) {
            if (ws.a(i + 1, i + 1) % ws.a(i, i) == 0) continue;
            ws.add_col(i, i + 1, 1);
            eliminate_at(ws, i, i + 2, i + 2);
            if (ws.a(i, i) < 0) ws.negate_row(i);
            if (ws.a(i + 1, i + 1) < 0) ws.negate_row(i + 1);
            dirty = true;
        }
    }

    SmithForm out;
    out.d.resize(mn);
    for (std::size_t i = 0; i < mn; ++i) out.d[i] = ws.a(i, i);
    if (track) {
        out.left = std::move(ws.left);
        out.left_inv = std::move(ws.left_inv);
        out.right = std::move(ws.right);
        out.right_inv = std::move(ws.right_inv);
    }
    return out;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return smith_core(m, true); }

std::vector<Int> smith_invariants(const IntMatrix& m) { return smith_core(m, false).d; }

std::size_t integer_rank(const IntMatrix& m) {
    auto d = smith_invariants(m);
    std::size_t r = 0;
    for (const Int& x : d)
        if (x != 0) ++r;
    return r;
}

ColumnLatticeSolver::ColumnLatticeSolver(const IntMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), snf_(smith_normal_form(a)) {}

std::optional<std::vector<Int>> ColumnLatticeSolver::solve(const std::vector<Int>& b) const {
    if (b.size() != rows_) throw invalid_input("solve_in_column_lattice: vector length does not match row count");
    std::vector<Int> y = matvec(snf_.left, b);
    std::vector<Int> z(cols_);
    const std::size_t mn = snf_.d.size();
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i < mn && snf_.d[i] != 0) {
            if (y[i] % snf_.d[i] != 0) return std::nullopt;
            z[i] = y[i] / snf_.d[i];
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return matvec(snf_.right, z);
}

std::optional<std::vector<Int>> solve_in_column_lattice(const IntMatrix& a,
                                                        const std::vector<Int>& b) {
    return ColumnLatticeSolver(a).solve(b);
}

} // namespace milq
