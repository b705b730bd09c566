// milq: total Milnor quotient toolkit.
//
// Subcommands:
//   quotient  group structure of Z^C(n,3) modulo the relation lattice
//   triple    evaluate the total triple linking class of surface data
//   realize   build surface data hitting a target class by Borromean moves
//   verify    re-check the relator dependency and sublink surjection identities
//   census    exhaustive mod-2 rank histogram over all 0/1 matrices
//
// Exit codes: 0 success, 1 violated mathematical invariant, 2 bad input.

#include <milq/census.hpp>
#include <milq/error.hpp>
#include <milq/quotient.hpp>
#include <milq/sublink.hpp>
#include <milq/surface_system.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using milq::AltVector;
using milq::Int;
using milq::LinkingMatrix;
using nlohmann::json;

constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;

json json_int(const Int& v) {
    static const Int kSafe = Int(1) << 53;
    if (v > -kSafe && v < kSafe) return static_cast<std::int64_t>(v);
    return v.str();
}

json json_group(const milq::AbelianGroup& g) {
    json factors = json::array();
    for (const Int& f : g.invariant_factors) factors.push_back(json_int(f));
    return {{"free_rank", g.free_rank},
            {"invariant_factors", std::move(factors)},
            {"rendered", milq::to_string(g)}};
}

json json_matrix(const LinkingMatrix& lm) {
    json rows = json::array();
    for (int i = 1; i <= lm.n(); ++i) {
        json row = json::array();
        for (int j = 1; j <= lm.n(); ++j) row.push_back(json_int(lm.entry(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", lm.n()}, {"entries", std::move(rows)}};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw milq::invalid_input("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---- census table rendering ------------------------------------------------

std::string portion_string(std::uint64_t count, std::uint64_t total) {
    if (count == 0) return "0";
    const double r = static_cast<double>(count) / static_cast<double>(total);
    char buf[32];
    if (r >= 0.0095) {
        std::snprintf(buf, sizeof buf, "%.2f", r);
        return std::string(buf).substr(1); // ".56", not "0.56"
    }
    if (r >= 0.00095) {
        std::snprintf(buf, sizeof buf, "%.3f", r);
        return std::string(buf).substr(1);
    }
    std::snprintf(buf, sizeof buf, "%.0e", r);
    return buf;
}

void print_census_table(std::ostream& out, const milq::CensusResult& r) {
    const std::size_t cols = r.histogram.size();
    const std::size_t band = cols <= 11 ? cols : 7;
    for (std::size_t start = 0; start < cols; start += band) {
        const std::size_t stop = std::min(start + band, cols);
        std::vector<std::string> ranks, counts, portions;
        std::vector<std::size_t> width;
        for (std::size_t c = start; c < stop; ++c) {
            ranks.push_back(std::to_string(c));
            counts.push_back(std::to_string(r.histogram[c]));
            portions.push_back(portion_string(r.histogram[c], r.total));
            width.push_back(std::max({ranks.back().size(), counts.back().size(),
                                      portions.back().size()}));
        }
        auto row = [&](const char* label, const std::vector<std::string>& cells) {
            out << label;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                out << "  ";
                out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
            }
            out << "\n";
        };
        row("rank             ", ranks);
        row("occurrences      ", counts);
        row("portion of total ", portions);
        if (stop < cols) out << "\n";
    }
}

// ---- subcommand configs ----------------------------------------------------

struct CommonOpts {
    bool json_out = false;
};

struct QuotientOpts {
    std::string matrix_file;
    bool check_bound = false;
};

struct TripleOpts {
    std::string surface_file;
};

struct RealizeOpts {
    std::string matrix_file;
    std::string target_file;
    std::string output_file = "realized.json";
    std::string log_file;
};

struct VerifyOpts {
    std::string matrix_file;
    bool surjection = false;
    bool dependencies = false;
};

struct CensusOpts {
    int n = 0;
    unsigned threads = 0;
    bool trivial = false;
    int find_rank = -1;
    std::size_t limit = 10;
    bool progress = false;
};

int cmd_quotient(const QuotientOpts& opt, const CommonOpts& common) {
    const LinkingMatrix lm = milq::load_linking_matrix_file(opt.matrix_file);
    const milq::MilnorQuotient q(lm);

    bool bound_checked = false, bound_ok = true;
    Int bound = 0;
    if (opt.check_bound && lm.n() >= 6) {
        bound = milq::rank_lower_bound(lm.n());
        bound_checked = true;
        bound_ok = Int(q.rank()) >= bound;
    }

    if (common.json_out) {
        json j{{"n", lm.n()},
               {"presentation",
                {{"rows", q.presentation().rows()}, {"cols", q.presentation().cols()}}},
               {"group", json_group(q.group())},
               {"rank", q.rank()},
               {"mod2_rank", q.mod2_rank()}};
        if (bound_checked) {
            j["bound"] = json_int(bound);
            j["bound_ok"] = bound_ok;
        }
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << "n: " << lm.n() << "\n"
                  << "presentation: " << q.presentation().rows() << " x "
                  << q.presentation().cols() << "\n"
                  << "group: " << milq::to_string(q.group()) << "\n"
                  << "rank: " << q.rank() << "\n"
                  << "mod2_rank: " << q.mod2_rank() << "\n";
        if (bound_checked)
            std::cout << "rank bound: " << bound << " (" << (bound_ok ? "satisfied" : "VIOLATED")
                      << ")\n";
    }
    if (bound_checked && !bound_ok) {
        std::cerr << "rank " << q.rank() << " fell below the proven bound " << bound << "\n";
        return kExitViolation;
    }
    return 0;
}

int cmd_triple(const TripleOpts& opt, const CommonOpts& common) {
    const milq::SurfaceSystemData f = milq::load_surface_system_file(opt.surface_file);
    const milq::MilnorClass cls = milq::total_triple_linking(f);
    const AltVector reduced = milq::coset_reduce(cls.lambda, cls.rep);
    const int n = f.n;

    if (common.json_out) {
        json triples = json::array();
        for (std::size_t pos = 0; pos < milq::triple_count(n); ++pos) {
            const auto t = milq::triple_at(pos, n);
            const Int m = milq::m_count(f, t.i, t.j, t.k);
            const long long tp = f.triple_point(t.i, t.j, t.k);
            triples.push_back({{"ijk", {t.i, t.j, t.k}},
                               {"m", json_int(m)},
                               {"t", tp},
                               {"coefficient", json_int(cls.rep[pos])}});
        }
        const json j{{"n", n},
                     {"linking_matrix", json_matrix(cls.lambda)},
                     {"triples", std::move(triples)},
                     {"mu_raw", milq::to_string(cls.rep)},
                     {"mu_reduced", milq::to_string(reduced)}};
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << "derived linking matrix:\n" << milq::to_text(cls.lambda) << "triples:\n";
        for (std::size_t pos = 0; pos < milq::triple_count(n); ++pos) {
            const auto t = milq::triple_at(pos, n);
            const Int m = milq::m_count(f, t.i, t.j, t.k);
            const long long tp = f.triple_point(t.i, t.j, t.k);
            std::cout << "  (" << t.i << "," << t.j << "," << t.k << "): m = " << m
                      << ", t = " << tp << ", m-t = " << cls.rep[pos] << "\n";
        }
        std::cout << "mu_raw: " << milq::to_string(cls.rep) << "\n"
                  << "mu_reduced: " << milq::to_string(reduced) << "\n";
    }
    return 0;
}

int cmd_realize(const RealizeOpts& opt, const CommonOpts& common) {
    const LinkingMatrix lm = milq::load_linking_matrix_file(opt.matrix_file);
    const AltVector target = milq::parse_alt_vector(read_text_file(opt.target_file), lm.n());
    const milq::Realization r = milq::realize(lm, target);

    // The emitted data must evaluate back to the requested class; a failure
    // here is a library bug, not a user error.
    const milq::MilnorClass check = milq::total_triple_linking(r.system);
    if (!milq::classes_equal(lm, check.rep, target)) {
        std::cerr << "realized data does not evaluate to the target class\n";
        return kExitViolation;
    }

    {
        std::ofstream out(opt.output_file);
        if (!out) throw milq::invalid_input("cannot write file: " + opt.output_file);
        milq::save_surface_system(r.system, out);
    }

    std::ostringstream log;
    log << "moves: " << r.total_moves() << "\n";
    for (const milq::MoveRecord& m : r.moves)
        log << "  (" << m.i << "," << m.j << "," << m.k << ") sign "
            << (m.sign > 0 ? "+1" : "-1") << " x " << m.count << "\n";

    if (!opt.log_file.empty()) {
        std::ofstream out(opt.log_file);
        if (!out) throw milq::invalid_input("cannot write file: " + opt.log_file);
        out << log.str();
    }

    if (common.json_out) {
        json moves = json::array();
        for (const milq::MoveRecord& m : r.moves)
            moves.push_back({{"ijk", {m.i, m.j, m.k}},
                             {"sign", m.sign},
                             {"count", json_int(m.count)}});
        const json j{{"n", lm.n()},
                     {"output", opt.output_file},
                     {"total_moves", json_int(r.total_moves())},
                     {"moves", std::move(moves)}};
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << "wrote " << opt.output_file << "\n" << log.str();
    }
    return 0;
}

int cmd_verify(const VerifyOpts& opt, const CommonOpts& common) {
    const LinkingMatrix lm = milq::load_linking_matrix_file(opt.matrix_file);
    // Default: run everything that applies.
    const bool run_deps = opt.dependencies || !opt.surjection;
    const bool run_surj = opt.surjection || !opt.dependencies;

    bool all_ok = true;
    json j{{"n", lm.n()}};
    std::ostringstream text;

    if (run_deps) {
        const milq::DependencyReport r = milq::verify_dependencies(lm);
        all_ok = all_ok && r.ok();
        text << "dependencies: " << (r.ok() ? "ok" : "FAILED") << " (" << r.checked
             << " identities)\n";
        for (const auto& v : r.violations)
            text << "  violated: "
                 << (v.kind == milq::DependencyReport::Kind::sum_over_k ? "sum over k, j = "
                                                                        : "weighted sum, k = ")
                 << v.index << ", residual " << milq::to_string(v.residual) << "\n";
        j["dependencies"] = {{"checked", r.checked}, {"ok", r.ok()}};
    }

    if (run_surj) {
        json surjections = json::array();
        if (lm.n() < 4) {
            text << "surjection: skipped (needs n >= 4)\n";
        } else {
            for (int c = 1; c <= lm.n(); ++c) {
                const milq::SurjectionReport r = milq::verify_surjection(lm, c);
                all_ok = all_ok && r.ok();
                text << "surjection c=" << c << ": " << (r.ok() ? "ok" : "FAILED") << " ("
                     << r.checked << " relators)\n";
                for (const auto& f : r.failures)
                    text << "  relator (" << f.j << "," << f.k << ") missed the sublattice\n";
                surjections.push_back(
                    {{"component", c}, {"checked", r.checked}, {"ok", r.ok()}});
            }
        }
        j["surjections"] = std::move(surjections);
    }

    j["ok"] = all_ok;
    text << "result: " << (all_ok ? "ok" : "FAILED") << "\n";
    if (common.json_out)
        std::cout << j.dump(1) << "\n";
    else
        std::cout << text.str();
    return all_ok ? 0 : kExitViolation;
}

int cmd_census(const CensusOpts& opt, const CommonOpts& common) {
    if (opt.find_rank >= 0) {
        const milq::RankMatches m =
            milq::find_rank_matches(opt.n, static_cast<std::size_t>(opt.find_rank), opt.limit);
        if (common.json_out) {
            json examples = json::array();
            for (const std::uint64_t mask : m.examples) examples.push_back(mask);
            std::cout << json{{"n", opt.n},
                              {"rank", opt.find_rank},
                              {"count", m.count},
                              {"examples", std::move(examples)}}
                             .dump(1)
                      << "\n";
        } else {
            std::cout << "matrices with mod-2 rank " << opt.find_rank << ": " << m.count << "\n";
            for (const std::uint64_t mask : m.examples)
                std::cout << "counter " << mask << ":\n"
                          << milq::to_text(milq::mod2_matrix_at(mask, opt.n));
        }
        return 0;
    }

    if (opt.trivial) {
        const auto list = milq::find_trivial_quotients(opt.n);
        if (common.json_out) {
            json matrices = json::array();
            for (const LinkingMatrix& m : list) matrices.push_back(json_matrix(m));
            std::cout << json{{"n", opt.n}, {"count", list.size()}, {"matrices", matrices}}.dump(1)
                      << "\n";
        } else {
            std::cout << "matrices with trivial quotient over Z: " << list.size() << "\n";
            for (const LinkingMatrix& m : list) std::cout << milq::to_text(m) << "\n";
        }
        return 0;
    }

    milq::CensusOptions run;
    run.threads = opt.threads;
    if (opt.progress)
        run.progress = [](std::uint64_t done, std::uint64_t total) {
            std::fprintf(stderr, "\r%llu / %llu", static_cast<unsigned long long>(done),
                         static_cast<unsigned long long>(total));
        };
    const milq::CensusResult r = milq::run_census(opt.n, run);
    if (opt.progress) std::fprintf(stderr, "\n");

    if (common.json_out) {
        json hist = json::object();
        for (std::size_t rank = 0; rank < r.histogram.size(); ++rank)
            if (r.histogram[rank] != 0) hist[std::to_string(rank)] = r.histogram[rank];
        std::cout << json{{"n", r.n},
                          {"histogram", std::move(hist)},
                          {"total", r.total},
                          {"elapsed_seconds", r.elapsed_seconds}}
                         .dump(1)
                  << "\n";
    } else {
        std::cout << "mod-2 rank census, n = " << r.n << ", " << r.total << " matrices, "
                  << r.elapsed_seconds << " s\n";
        print_census_table(std::cout, r);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"total Milnor quotient toolkit"};
    app.require_subcommand(1);
    // Let the global --json flag appear after the subcommand as well.
    app.fallthrough();

    CommonOpts common;
    app.add_flag("--json", common.json_out, "machine-readable JSON output");

    QuotientOpts qopt;
    CLI::App* quotient = app.add_subcommand("quotient", "group structure of a linking matrix");
    quotient->add_option("matrix", qopt.matrix_file, "linking matrix file (text or JSON)")
        ->required();
    quotient->add_flag("--check-bound", qopt.check_bound,
                       "compare rank against the cubic lower bound (n >= 6)");

    TripleOpts topt;
    CLI::App* triple = app.add_subcommand("triple", "total triple linking class of surface data");
    triple->add_option("surface", topt.surface_file, "surface system JSON file")->required();

    RealizeOpts ropt;
    CLI::App* realize = app.add_subcommand("realize", "realize a class by Borromean moves");
    realize->add_option("matrix", ropt.matrix_file, "linking matrix file")->required();
    realize->add_option("target", ropt.target_file, "target class file (tensor text form)")
        ->required();
    realize->add_option("-o,--output", ropt.output_file, "surface system output path");
    realize->add_option("--log", ropt.log_file, "also write the move log to this file");

    VerifyOpts vopt;
    CLI::App* verify = app.add_subcommand("verify", "re-check dependency and sublink identities");
    verify->add_option("matrix", vopt.matrix_file, "linking matrix file")->required();
    verify->add_flag("--dependencies", vopt.dependencies, "only the relator dependencies");
    verify->add_flag("--surjection", vopt.surjection, "only the sublink surjections");

    CensusOpts copt;
    CLI::App* census = app.add_subcommand("census", "exhaustive mod-2 rank histogram");
    census->add_option("-n", copt.n, "number of components (3..8)")->required();
    census->add_option("--threads", copt.threads, "worker threads (default: hardware)");
    census->add_flag("--trivial", copt.trivial, "list matrices with trivial quotient over Z");
    census->add_option("--find-rank", copt.find_rank, "count matrices attaining this mod-2 rank");
    census->add_option("--limit", copt.limit, "example cap for --find-rank (default 10)");
    census->add_flag("--progress", copt.progress, "progress meter on stderr");

    try {
        app.parse(argc, argv);
        if (quotient->parsed()) return cmd_quotient(qopt, common);
        if (triple->parsed()) return cmd_triple(topt, common);
        if (realize->parsed()) return cmd_realize(ropt, common);
        if (verify->parsed()) return cmd_verify(vopt, common);
        if (census->parsed()) return cmd_census(copt, common);
        return kExitBadInput;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    } catch (const milq::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitViolation;
    }
}
