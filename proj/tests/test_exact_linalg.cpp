#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <milq/int_matrix.hpp>
#include <milq/mod2.hpp>
#include <milq/smith.hpp>

#include <random>

using milq::Int;
using milq::IntMatrix;
using milq::SmithForm;

namespace {

IntMatrix diag_of(const std::vector<Int>& d, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t t = 0; t < d.size(); ++t) m(t, t) = d[t];
    return m;
}

Int abs_det(const IntMatrix& m) {
    Int d = milq::determinant(m);
    return d < 0 ? -d : d;
}

void check_smith_contract(const IntMatrix& a) {
    const SmithForm f = milq::smith_normal_form(a);
    const std::size_t mn = std::min(a.rows(), a.cols());
    REQUIRE(f.d.size() == mn);

    // Nonnegative diagonal, divisibility chain, trailing zeros.
    for (std::size_t t = 0; t < mn; ++t) CHECK(f.d[t] >= 0);
    for (std::size_t t = 0; t + 1 < mn; ++t) {
        if (f.d[t] == 0)
            CHECK(f.d[t + 1] == 0);
        else
            CHECK(f.d[t + 1] % f.d[t] == 0);
    }

    // left * a * right is the diagonal, and the recorded inverses invert.
    CHECK(f.left * a * f.right == diag_of(f.d, a.rows(), a.cols()));
    CHECK(f.left * f.left_inv == IntMatrix::identity(a.rows()));
    CHECK(f.right * f.right_inv == IntMatrix::identity(a.cols()));
    CHECK(abs_det(f.left) == 1);
    CHECK(abs_det(f.right) == 1);

    CHECK(milq::smith_invariants(a) == f.d);
    CHECK(f.d == oracle::dd_invariant_factors(a));

    std::size_t nonzero = 0;
    for (const Int& v : f.d)
        if (v != 0) ++nonzero;
    CHECK(milq::integer_rank(a) == nonzero);
    CHECK(milq::integer_rank(a) == oracle::bareiss_rank(a));
}

} // namespace

TEST_CASE("smith form of a fixed 2x2 matrix") {
    IntMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 4;
    a(1, 0) = 6;
    a(1, 1) = 8;
    // Invariant factors frozen from the determinantal-divisor oracle:
    // g1 = gcd(2,4,6,8) = 2, g2 = |det| = |16 - 24| = 8, so d = (2, 8/2) = (2, 4).
    const std::vector<Int> expected{2, 4};
    CHECK(oracle::dd_invariant_factors(a) == expected);
    CHECK(milq::smith_invariants(a) == expected);
    check_smith_contract(a);
}

TEST_CASE("smith form edge shapes") {
    check_smith_contract(IntMatrix(0, 0));
    check_smith_contract(IntMatrix(0, 3));
    check_smith_contract(IntMatrix(3, 0));
    check_smith_contract(IntMatrix(4, 4));        // zero matrix
    check_smith_contract(IntMatrix::identity(3)); // already diagonal

    IntMatrix d(2, 2);
    d(0, 0) = 4;
    d(1, 1) = 6; // divisibility violated on the diagonal
    CHECK(milq::smith_invariants(d) == std::vector<Int>{2, 12});
    check_smith_contract(d);

    IntMatrix one(1, 1);
    one(0, 0) = -7;
    CHECK(milq::smith_invariants(one) == std::vector<Int>{7});
    check_smith_contract(one);
}

TEST_CASE("smith form contract on random matrices") {
    std::mt19937_64 rng(20260822u);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    for (int iter = 0; iter < 200; ++iter) {
        const IntMatrix a = oracle::random_int_matrix(rng, dim(rng), dim(rng), -9, 9);
        CAPTURE(iter);
        check_smith_contract(a);
    }
}

TEST_CASE("smith form with large entries needs exact arithmetic") {
    // Rank-1 outer product u v^T with gcd(u) = 1000003 and gcd(v) = 1000033:
    // the invariant factors are (gcd(u) * gcd(v), 0, 0), and the entries are
    // far outside 64-bit range once multiplied.
    std::vector<Int> u{Int(1000003) * 1, Int(1000003) * 2, Int(1000003) * 3};
    std::vector<Int> v{Int(1000033) * 5, Int(1000033) * 7, Int(1000033) * 9};
    IntMatrix a(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) a(r, c) = u[r] * v[c];
    const SmithForm f = milq::smith_normal_form(a);
    CHECK(f.d[0] == Int(1000003) * 1000033);
    CHECK(f.d[1] == 0);
    CHECK(f.d[2] == 0);
    CHECK(f.left * a * f.right == diag_of(f.d, 3, 3));
}

TEST_CASE("integer rank") {
    IntMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 4;
    a(1, 0) = 6;
    a(1, 1) = 8;
    CHECK(milq::integer_rank(a) == 2);

    IntMatrix b(2, 2);
    b(0, 0) = 1;
    b(0, 1) = 2;
    b(1, 0) = 2;
    b(1, 1) = 4;
    CHECK(milq::integer_rank(b) == 1);

    CHECK(milq::integer_rank(IntMatrix(3, 3)) == 0);

    std::mt19937_64 rng(977u);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    for (int iter = 0; iter < 300; ++iter) {
        const IntMatrix m = oracle::random_int_matrix(rng, dim(rng), dim(rng), -9, 9);
        CAPTURE(iter);
        CHECK(milq::integer_rank(m) == oracle::bareiss_rank(m));
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    CHECK(milq::determinant(IntMatrix(0, 0)) == 1);
    CHECK(milq::determinant(IntMatrix::identity(4)) == 1);

    std::mt19937_64 rng(31337u);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = dim(rng);
        const IntMatrix m = oracle::random_int_matrix(rng, n, n, -9, 9);
        CAPTURE(iter);
        CHECK(milq::determinant(m) == oracle::cofactor_det(m));
    }
}

TEST_CASE("rank over GF(2)") {
    IntMatrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 1;
    CHECK(milq::rank_mod2(a) == 1);

    // Full integer rank that collapses mod 2.
    IntMatrix drop(2, 2);
    drop(0, 0) = 1;
    drop(0, 1) = 1;
    drop(1, 0) = 1;
    drop(1, 1) = -1;
    CHECK(milq::integer_rank(drop) == 2);
    CHECK(milq::rank_mod2(drop) == 1);

    IntMatrix b(1, 1);
    b(0, 0) = 2;
    CHECK(milq::rank_mod2(b) == 0);

    CHECK(milq::rank_mod2(IntMatrix::identity(5)) == 5);

    IntMatrix c(2, 2);
    c(0, 0) = 2;
    c(0, 1) = 1;
    c(1, 0) = 1;
    c(1, 1) = 1;
    CHECK(milq::rank_mod2(c) == 2);

    std::mt19937_64 rng(4242u);
    std::uniform_int_distribution<std::size_t> dim(0, 7);
    for (int iter = 0; iter < 300; ++iter) {
        const IntMatrix m = oracle::random_int_matrix(rng, dim(rng), dim(rng), -9, 9);
        CAPTURE(iter);
        CHECK(milq::rank_mod2(m) <= milq::integer_rank(m));
    }
}

TEST_CASE("xor basis rank agrees with the packed-matrix path") {
    std::mt19937_64 rng(555u);
    for (int iter = 0; iter < 200; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(0, 9);
        const std::size_t rows = dim(rng), cols = std::max<std::size_t>(dim(rng), 1);
        std::vector<std::uint64_t> packed(rows, 0);
        milq::Mod2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) {
                    m.set(r, c, true);
                    packed[r] |= std::uint64_t{1} << c;
                }
        CAPTURE(iter);
        CHECK(m.rank() == milq::rank_of_bit_rows(packed.data(), rows));
    }
}

TEST_CASE("column lattice membership") {
    IntMatrix a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;

    auto x = milq::solve_in_column_lattice(a, {Int(4), Int(9)});
    REQUIRE(x.has_value());
    CHECK(milq::matvec(a, *x) == std::vector<Int>{4, 9});

    CHECK_FALSE(milq::solve_in_column_lattice(a, {Int(1), Int(0)}).has_value());
    CHECK_FALSE(milq::solve_in_column_lattice(a, {Int(2), Int(1)}).has_value());

    // The zero matrix spans only the origin.
    IntMatrix z(2, 3);
    CHECK(milq::solve_in_column_lattice(z, {Int(0), Int(0)}).has_value());
    CHECK_FALSE(milq::solve_in_column_lattice(z, {Int(1), Int(0)}).has_value());
}

TEST_CASE("column lattice solver on random systems") {
    std::mt19937_64 rng(60601u);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        const IntMatrix a = oracle::random_int_matrix(rng, rows, cols, -9, 9);
        milq::ColumnLatticeSolver solver(a);
        CAPTURE(iter);

        // Images of integer vectors must come back solvable, with a witness.
        std::vector<Int> x0(cols);
        for (auto& v : x0) v = entry(rng);
        const std::vector<Int> b = milq::matvec(a, x0);
        const auto sol = solver.solve(b);
        REQUIRE(sol.has_value());
        CHECK(milq::matvec(a, *sol) == b);

        // Any reported witness for a random target must actually work.
        std::vector<Int> t(rows);
        for (auto& v : t) v = entry(rng);
        if (const auto w = solver.solve(t)) CHECK(milq::matvec(a, *w) == t);

        // Membership is translation-invariant along the lattice.
        std::vector<Int> shifted(rows);
        for (std::size_t r = 0; r < rows; ++r) shifted[r] = t[r] + b[r];
        CHECK(solver.solve(t).has_value() == solver.solve(shifted).has_value());
    }
}
