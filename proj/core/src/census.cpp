#include "milq/census.hpp"

#include "milq/alt_tensor.hpp"
#include "milq/error.hpp"
#include "milq/mod2.hpp"
#include "milq/quotient.hpp"
#include "milq/smith.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <thread>

namespace milq {
namespace {

void check_census_n(int n) {
    if (n < 3 || n > 8)
        throw invalid_input("census: n must be between 3 and 8 (got " + std::to_string(n) + ")");
}

// One presentation-matrix bit, gated by one counter bit: when mask bit
// `mask_bit` is set, row `row` of the mod-2 presentation gains `col_mask`.
struct Gate {
    std::uint8_t mask_bit;
    std::uint8_t row;
    std::uint64_t col_mask;
};

struct BuildTable {
    int n = 0;
    std::size_t rows = 0;
    std::vector<Gate> gates;
};

BuildTable make_table(int n) {
    BuildTable t;
    t.n = n;
    t.rows = triple_count(n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (j == k) continue;
            const std::size_t col = relator_column(n, j, k);
            for (int i = 1; i <= n; ++i) {
                if (i == j || i == k) continue;
                const auto ct = canonicalize(i, j, k, n);
                t.gates.push_back({std::uint8_t(pair_bit(std::min(i, k), std::max(i, k), n)),
                                   std::uint8_t(basis_position(ct->index)),
                                   std::uint64_t(1) << col});
            }
        }
    return t;
}

const BuildTable& table_for(int n) {
    static const std::array<BuildTable, 6> tables = [] {
        std::array<BuildTable, 6> a;
        for (int n = 3; n <= 8; ++n) a[n - 3] = make_table(n);
        return a;
    }();
    return tables[n - 3];
}

std::size_t rank_of_mask(std::uint64_t mask, const BuildTable& t) {
    std::array<std::uint64_t, 56> rows{}; // C(8,3) at most
    for (const Gate& g : t.gates)
        if ((mask >> g.mask_bit) & 1u) rows[g.row] |= g.col_mask;
    return rank_of_bit_rows(rows.data(), t.rows);
}

} // namespace

std::uint64_t mod2_matrix_count(int n) {
    check_census_n(n);
    return std::uint64_t(1) << (std::size_t(n) * (n - 1) / 2);
}

std::size_t pair_bit(int i, int j, int n) {
    if (i < 1 || j <= i || j > n) throw invalid_input("pair_bit: need 1 <= i < j <= n");
    return std::size_t(i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

LinkingMatrix mod2_matrix_at(std::uint64_t counter, int n) {
    check_census_n(n);
    if (counter >= mod2_matrix_count(n)) throw invalid_input("mod2_matrix_at: counter out of range");
    LinkingMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((counter >> pair_bit(i, j, n)) & 1u) m.set_linking(i, j, 1);
    return m;
}

std::size_t mod2_rank_of_mask(std::uint64_t mask, int n) {
    check_census_n(n);
    const BuildTable& t = table_for(n);
    return t.rows - rank_of_mask(mask, t);
}

std::uint64_t delete_component_mask(std::uint64_t mask, int n, int c) {
    check_census_n(n);
    if (n < 4) throw invalid_input("delete_component_mask: needs n >= 4");
    if (c < 1 || c > n) throw invalid_input("delete_component_mask: component index out of range");
    std::uint64_t out = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == c) continue;
        for (int j = i + 1; j <= n; ++j) {
            if (j == c) continue;
            if ((mask >> pair_bit(i, j, n)) & 1u)
                out |= std::uint64_t(1) << pair_bit(i - (i > c), j - (j > c), n - 1);
        }
    }
    return out;
}

CensusResult run_census(int n, const CensusOptions& opt) {
    check_census_n(n);
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t total = mod2_matrix_count(n);
    const BuildTable& table = table_for(n);

    unsigned threads = opt.threads != 0 ? opt.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (std::uint64_t(threads) > total) threads = unsigned(total);

    std::vector<std::vector<std::uint64_t>> hists(threads,
                                                  std::vector<std::uint64_t>(table.rows + 1));
    std::atomic<std::uint64_t> done{0};

    auto worker = [&](unsigned id, std::uint64_t begin, std::uint64_t end) {
        auto& hist = hists[id];
        std::uint64_t since_report = 0;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            ++hist[table.rows - rank_of_mask(mask, table)];
            if (opt.progress && ++since_report == 65536) {
                since_report = 0;
                opt.progress(done.fetch_add(65536, std::memory_order_relaxed) + 65536, total);
            }
        }
        if (opt.progress && since_report != 0) done.fetch_add(since_report, std::memory_order_relaxed);
    };

    if (threads == 1) {
        worker(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / threads;
        for (unsigned id = 0; id < threads; ++id) {
            const std::uint64_t begin = chunk * id;
            const std::uint64_t end = id + 1 == threads ? total : begin + chunk;
            pool.emplace_back(worker, id, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    CensusResult res;
    res.n = n;
    res.total = total;
    res.histogram.assign(table.rows + 1, 0);
    for (const auto& h : hists)
        for (std::size_t r = 0; r < h.size(); ++r) res.histogram[r] += h[r];
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<LinkingMatrix> find_trivial_quotients(int n) {
    check_census_n(n);
    std::vector<LinkingMatrix> out;
    const std::uint64_t total = mod2_matrix_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (mod2_rank_of_mask(mask, n) != 0) continue;
        // candidate: re-verify over Z
        const LinkingMatrix m = mod2_matrix_at(mask, n);
        const auto d = smith_invariants(presentation_matrix(m));
        bool trivial = true;
        std::size_t ones = 0;
        for (const Int& x : d)
            if (x == 1)
                ++ones;
            else if (x != 0)
                trivial = false;
        if (trivial && ones == triple_count(n)) out.push_back(m);
    }
    return out;
}

RankMatches find_rank_matches(int n, std::size_t rank, std::size_t limit) {
    check_census_n(n);
    RankMatches out;
    const std::uint64_t total = mod2_matrix_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (mod2_rank_of_mask(mask, n) != rank) continue;
        ++out.count;
        if (out.examples.size() < limit) out.examples.push_back(mask);
    }
    return out;
}

} // namespace milq
