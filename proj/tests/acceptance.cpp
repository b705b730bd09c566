// Acceptance harness: one line per criterion, PASS or FAIL, nonzero exit if
// anything fails. All randomness is seeded, all comparisons are exact except
// the pinned wall-clock limits on the census runs (1 s, 1 s, 10 s).

#include "oracles.hpp"

#include <milq/census.hpp>
#include <milq/quotient.hpp>
#include <milq/smith.hpp>
#include <milq/sublink.hpp>
#include <milq/surface_system.hpp>

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using milq::AltVector;
using milq::Int;
using milq::IntMatrix;
using milq::LinkingMatrix;

namespace {

const std::vector<std::uint64_t> kHist4{36, 21, 6, 0, 1};
const std::vector<std::uint64_t> kHist5{132, 450, 180, 165, 46, 40, 0, 10, 0, 0, 1};
const std::vector<std::uint64_t> kHist6{0, 0, 5712, 7920, 8595, 4035, 1627, 3030, 855, 240, 538,
                                        75, 45, 80,   0,    0,    15,   0,    0,    0,   1};

LinkingMatrix trivial_example() {
    return LinkingMatrix::from_entries(5, {
        {0, 1, 1, 0, 0},
        {1, 0, 1, 1, 0},
        {1, 1, 0, 1, 1},
        {0, 1, 1, 0, 1},
        {0, 0, 1, 1, 0},
    });
}

std::string show_hist(const std::vector<std::uint64_t>& h) {
    std::ostringstream out;
    for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
    return out.str();
}

bool census_matches(int n, const std::vector<std::uint64_t>& expect, double limit_s,
                    std::string& detail) {
    const milq::CensusResult r = milq::run_census(n);
    if (r.histogram != expect) {
        detail = "histogram " + show_hist(r.histogram) + " != " + show_hist(expect);
        return false;
    }
    if (!(r.elapsed_seconds < limit_s)) {
        detail = "took " + std::to_string(r.elapsed_seconds) + " s, limit " +
                 std::to_string(limit_s) + " s";
        return false;
    }
    return true;
}

bool criterion_census4(std::string& d) { return census_matches(4, kHist4, 1.0, d); }
bool criterion_census5(std::string& d) { return census_matches(5, kHist5, 1.0, d); }

bool criterion_census6(std::string& d) {
    if (!census_matches(6, kHist6, 10.0, d)) return false;
    // Thread count must not matter, and a single worker must also fit the
    // pinned limit.
    milq::CensusOptions one;
    one.threads = 1;
    const milq::CensusResult serial = milq::run_census(6, one);
    if (serial.histogram != kHist6) {
        d = "single-thread histogram diverged: " + show_hist(serial.histogram);
        return false;
    }
    if (!(serial.elapsed_seconds < 10.0)) {
        d = "single-thread run took " + std::to_string(serial.elapsed_seconds) + " s";
        return false;
    }
    std::uint64_t sum = 0;
    for (const auto c : serial.histogram) sum += c;
    if (sum != 32768) {
        d = "histogram sums to " + std::to_string(sum);
        return false;
    }
    return true;
}

bool criterion_trivial_quotient(std::string& d) {
    const LinkingMatrix lm = trivial_example();
    const milq::AbelianGroup g = milq::quotient_group(lm);
    if (!g.trivial()) {
        d = "group is " + milq::to_string(g);
        return false;
    }
    const AltVector zero(5);
    for (std::size_t pos = 0; pos < milq::triple_count(5); ++pos) {
        const auto t = milq::triple_at(pos, 5);
        if (!milq::classes_equal(lm, AltVector::unit(t.i, t.j, t.k, 5), zero)) {
            d = "basis tensor at position " + std::to_string(pos) + " is not null";
            return false;
        }
    }
    return true;
}

bool criterion_nontriviality6(std::string& d) {
    const milq::CensusResult r = milq::run_census(6);
    if (r.histogram[0] != 0 || r.histogram[1] != 0) {
        d = "found matrices of mod-2 rank below 2";
        return false;
    }
    // Belt and braces: every matrix lands at rank >= 2.
    std::uint64_t above = 0;
    for (std::size_t rank = 2; rank < r.histogram.size(); ++rank) above += r.histogram[rank];
    if (above != r.total) {
        d = "only " + std::to_string(above) + " of " + std::to_string(r.total) + " at rank >= 2";
        return false;
    }
    return true;
}

bool criterion_rank_bound(std::string& d) {
    if (milq::rank_lower_bound(6) != 1) {
        d = "bound(6) != 1";
        return false;
    }
    if (milq::rank_lower_bound(9) < 12) {
        d = "bound(9) fell below 12";
        return false;
    }
    std::mt19937_64 rng(424242u);
    for (int n = 6; n <= 10; ++n) {
        const Int bound = milq::rank_lower_bound(n);
        for (int iter = 0; iter < 500; ++iter) {
            const LinkingMatrix lm = oracle::random_linking_matrix(rng, n, -9, 9);
            if (Int(milq::rank(lm)) < bound) {
                d = "n=" + std::to_string(n) + " iter=" + std::to_string(iter) + " rank " +
                    std::to_string(milq::rank(lm)) + " < bound " + bound.str();
                return false;
            }
        }
    }
    return true;
}

bool criterion_dependencies(std::string& d) {
    std::mt19937_64 rng(1000003u);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const LinkingMatrix lm = oracle::random_linking_matrix(rng, n, -9, 9);
        const milq::DependencyReport r = milq::verify_dependencies(lm);
        if (!r.ok() || r.checked != 2 * static_cast<std::size_t>(n)) {
            d = "iteration " + std::to_string(iter) + ": " +
                std::to_string(r.violations.size()) + " violations";
            return false;
        }
    }
    return true;
}

bool criterion_sublink(std::string& d) {
    std::mt19937_64 rng(88011u);
    for (int iter = 0; iter < 200; ++iter) {
        const LinkingMatrix lm = oracle::random_linking_matrix(rng, 6, -9, 9);
        for (int c = 1; c <= 6; ++c) {
            const milq::SurjectionReport r = milq::verify_surjection(lm, c);
            if (!r.ok()) {
                d = "iteration " + std::to_string(iter) + ", delete " + std::to_string(c) + ": " +
                    std::to_string(r.failures.size()) + " relators missed";
                return false;
            }
        }
    }
    // Exhaustive mod-2 monotonicity across every 6-component matrix and every
    // deletion: the sublink's rank never exceeds the link's.
    for (std::uint64_t mask = 0; mask < milq::mod2_matrix_count(6); ++mask) {
        const std::size_t r6 = milq::mod2_rank_of_mask(mask, 6);
        for (int c = 1; c <= 6; ++c) {
            const std::size_t r5 =
                milq::mod2_rank_of_mask(milq::delete_component_mask(mask, 6, c), 5);
            if (r5 > r6) {
                d = "counter " + std::to_string(mask) + " delete " + std::to_string(c) + ": " +
                    std::to_string(r5) + " > " + std::to_string(r6);
                return false;
            }
        }
    }
    return true;
}

bool criterion_moves(std::string& d) {
    std::mt19937_64 rng(550011u);
    for (int iter = 0; iter < 500; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const milq::SurfaceSystemData f = oracle::random_surface_system(rng, n, 3, 4);
        const auto t = milq::triple_at(rng() % milq::triple_count(n), n);
        const int sign = rng() % 2 ? 1 : -1;
        const milq::SurfaceSystemData moved = milq::borromean_move(f, t.i, t.j, t.k, sign);

        const AltVector before = milq::total_triple_linking(f).rep;
        const AltVector after = milq::total_triple_linking(moved).rep;
        if (after != before + Int(sign) * AltVector::unit(t.i, t.j, t.k, n)) {
            d = "iteration " + std::to_string(iter) + ": representative shifted wrongly";
            return false;
        }
        if (milq::derive_linking_matrix(moved) != milq::derive_linking_matrix(f)) {
            d = "iteration " + std::to_string(iter) + ": derived matrix changed";
            return false;
        }
    }
    return true;
}

bool criterion_realize(std::string& d) {
    std::mt19937_64 rng(314159u);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const LinkingMatrix lm = oracle::random_linking_matrix(rng, n, -4, 4);
        const AltVector target = oracle::random_alt_vector(rng, n, -8, 8);
        const milq::Realization r = milq::realize(lm, target);
        if (milq::derive_linking_matrix(r.system) != lm) {
            d = "iteration " + std::to_string(iter) + ": derived matrix mismatch";
            return false;
        }
        const AltVector got = milq::total_triple_linking(r.system).rep;
        if (!milq::classes_equal(lm, got, target)) {
            d = "iteration " + std::to_string(iter) + ": class mismatch";
            return false;
        }
        Int listed = 0;
        for (const auto& m : r.moves) listed += m.count;
        if (listed != r.total_moves()) {
            d = "iteration " + std::to_string(iter) + ": move ledger inconsistent";
            return false;
        }
    }
    return true;
}

bool criterion_snf_oracle(std::string& d) {
    std::mt19937_64 rng(271828u);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int iter = 0; iter < 300; ++iter) {
        const IntMatrix a = oracle::random_int_matrix(rng, dim(rng), dim(rng), -9, 9);
        const milq::SmithForm f = milq::smith_normal_form(a);
        if (f.d != oracle::dd_invariant_factors(a)) {
            d = "iteration " + std::to_string(iter) + ": invariant factors disagree with oracle";
            return false;
        }
        Int dl = milq::determinant(f.left), dr = milq::determinant(f.right);
        if ((dl != 1 && dl != -1) || (dr != 1 && dr != -1)) {
            d = "iteration " + std::to_string(iter) + ": transform not unimodular";
            return false;
        }
        IntMatrix diag(a.rows(), a.cols());
        for (std::size_t t = 0; t < f.d.size(); ++t) diag(t, t) = f.d[t];
        if (f.left * a * f.right != diag) {
            d = "iteration " + std::to_string(iter) + ": transforms do not reconstruct diag";
            return false;
        }
    }
    return true;
}

struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"census n=4 table, <1s", criterion_census4},
        {"census n=5 table, <1s", criterion_census5},
        {"census n=6 table, <10s, thread-count independent", criterion_census6},
        {"trivial 5x5 quotient and null basis classes", criterion_trivial_quotient},
        {"every 6x6 mod-2 matrix has rank >= 2", criterion_nontriviality6},
        {"cubic rank bound on 2500 random matrices", criterion_rank_bound},
        {"relator dependency identities, 1000 matrices", criterion_dependencies},
        {"sublink surjections and exhaustive monotonicity", criterion_sublink},
        {"Borromean moves shift exactly one coefficient, 500 systems", criterion_moves},
        {"realization round-trip, 100 targets", criterion_realize},
        {"Smith form against determinantal-divisor oracle, 300 matrices", criterion_snf_oracle},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  %2zu. %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    detail.empty() ? "" : "  -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures;
}
