#pragma once

#include "milq/linking_matrix.hpp"

#include <cstdint>
#include <functional>

namespace milq {

// The census walks all symmetric 0/1 matrices with zero diagonal for
// 3 <= n <= 8, indexed by a counter whose bit b is the strictly-upper-
// triangle entry in row-major order: bit 0 = (1,2), bit 1 = (1,3), ...
// Counter 0 is the zero matrix, the last counter is all ones off-diagonal.

std::uint64_t mod2_matrix_count(int n); // 2^C(n,2)
std::size_t pair_bit(int i, int j, int n); // bit of entry (i,j), i < j
LinkingMatrix mod2_matrix_at(std::uint64_t counter, int n);

// mod2_rank of the matrix encoded by the counter, computed entirely on
// packed bits (no big-integer work). Matches mod2_rank(mod2_matrix_at(..)).
std::size_t mod2_rank_of_mask(std::uint64_t mask, int n);

// Counter of delete_component(mod2_matrix_at(mask, n), c) over n-1.
std::uint64_t delete_component_mask(std::uint64_t mask, int n, int c);

struct CensusOptions {
    unsigned threads = 0; // 0 = use hardware concurrency
    // Invoked as (done, total) roughly every 65536 matrices; may be called
    // concurrently from worker threads.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct CensusResult {
    int n = 0;
    std::vector<std::uint64_t> histogram; // index = mod2_rank, size C(n,3)+1
    std::uint64_t total = 0;
    double elapsed_seconds = 0;
};

// Exhaustive mod-2 rank histogram. The counter range is split into
// contiguous chunks, one per worker; the merged result is independent of
// the thread count.
CensusResult run_census(int n, const CensusOptions& opt = {});

// All mod-2 matrices whose quotient is trivial over Z: candidates are the
// counters with mod2_rank 0, each re-verified by an exact integer Smith
// computation (every invariant factor 1).
std::vector<LinkingMatrix> find_trivial_quotients(int n);

// Counters attaining a given mod-2 rank; collects up to `limit` examples.
struct RankMatches {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> examples;
};
RankMatches find_rank_matches(int n, std::size_t rank, std::size_t limit);

} // namespace milq
