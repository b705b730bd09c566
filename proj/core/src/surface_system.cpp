#include "milq/surface_system.hpp"

#include "milq/error.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace milq {

ClaspWord parse_clasp_word(std::string_view text) {
    ClaspWord w;
    std::istringstream in{std::string(text)};
    std::string tok;
    std::size_t idx = 0;
    while (in >> tok) {
        ++idx;
        auto bad = [&](const std::string& why) -> void {
            throw invalid_input("word token " + std::to_string(idx) + " ('" + tok + "'): " + why);
        };
        if (tok[0] != 'x') bad("expected 'x<index>' or 'x<index>^-1'");
        std::size_t p = 1;
        const std::size_t d0 = p;
        while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
        if (p == d0) bad("expected a component index after 'x'");
        int comp;
        try {
            comp = std::stoi(tok.substr(d0, p - d0));
        } catch (const std::exception&) {
            bad("component index out of range");
            return w; // unreachable
        }
        if (comp == 0) bad("component index must be at least 1");
        int sign = 1;
        if (p < tok.size()) {
            if (tok.compare(p, std::string::npos, "^-1") != 0)
                bad("expected 'x<index>' or 'x<index>^-1'");
            sign = -1;
        }
        w.letters.push_back({comp, sign});
    }
    return w;
}

std::string to_string(const ClaspWord& w) {
    std::ostringstream out;
    bool first = true;
    for (const Letter& l : w.letters) {
        if (!first) out << ' ';
        first = false;
        out << 'x' << l.component;
        if (l.sign < 0) out << "^-1";
    }
    return out.str();
}

Int epsilon(const ClaspWord& w, int i, int j) {
    if (i < 1 || j < 1) throw invalid_input("epsilon: component indices start at 1");
    // Pairs are counted with the earlier letter first, so the j-test runs
    // before the i-count update; a letter never pairs with itself even when
    // i == j.
    Int run_i = 0, total = 0;
    for (const Letter& l : w.letters) {
        if (l.component == j && run_i != 0) total += l.sign > 0 ? run_i : Int(-run_i);
        if (l.component == i) run_i += l.sign;
    }
    return total;
}

namespace {

std::size_t canonical_position(int i, int j, int k, int n, const char* op) {
    if (n < 3) throw invalid_input(std::string(op) + ": needs n >= 3");
    auto ct = canonicalize(i, j, k, n);
    if (!ct || ct->sign != 1 || ct->index.i != i)
        throw invalid_input(std::string(op) + ": (" + std::to_string(i) + "," + std::to_string(j) +
                            "," + std::to_string(k) + ") is not a canonical triple (need i < j < k)");
    return basis_position(ct->index);
}

} // namespace

long long SurfaceSystemData::triple_point(int i, int j, int k) const {
    const std::size_t pos = canonical_position(i, j, k, n, "triple_point");
    auto it = triple_points.find(pos);
    return it == triple_points.end() ? 0 : it->second;
}

void SurfaceSystemData::set_triple_point(int i, int j, int k, long long t) {
    const std::size_t pos = canonical_position(i, j, k, n, "set_triple_point");
    if (t == 0)
        triple_points.erase(pos);
    else
        triple_points[pos] = t;
}

Int m_count(const SurfaceSystemData& f, int i, int j, int k) {
    for (int x : {i, j, k})
        if (x < 1 || x > f.n)
            throw invalid_input("m_count: component index " + std::to_string(x) + " out of range 1.." +
                                std::to_string(f.n));
    if (i == j || j == k || i == k) throw invalid_input("m_count: component indices must be distinct");
    if (f.words.size() != std::size_t(f.n))
        throw invalid_input("m_count: surface data carries " + std::to_string(f.words.size()) +
                            " words for n = " + std::to_string(f.n));
    return epsilon(f.words[k - 1], i, j) + epsilon(f.words[i - 1], j, k) + epsilon(f.words[j - 1], k, i);
}

LinkingMatrix derive_linking_matrix(const SurfaceSystemData& f) {
    if (f.n < 1) throw invalid_input("derive_linking_matrix: n must be positive");
    if (f.words.size() != std::size_t(f.n))
        throw invalid_input("derive_linking_matrix: expected " + std::to_string(f.n) + " words, got " +
                            std::to_string(f.words.size()));
    std::vector<std::vector<Int>> cnt(f.n, std::vector<Int>(f.n));
    for (int i = 0; i < f.n; ++i)
        for (const Letter& l : f.words[i].letters) {
            if (l.component > f.n)
                throw invalid_input("derive_linking_matrix: word " + std::to_string(i + 1) +
                                    " references component " + std::to_string(l.component) +
                                    " but n = " + std::to_string(f.n));
            cnt[i][l.component - 1] += l.sign;
        }
    for (int i = 0; i < f.n; ++i) {
        if (cnt[i][i] != 0) {
            std::ostringstream msg;
            msg << "derive_linking_matrix: word " << i + 1 << " has net exponent " << cnt[i][i]
                << " of its own generator x" << i + 1 << " (must be 0)";
            throw invalid_input(msg.str());
        }
        for (int j = 0; j < i; ++j)
            if (cnt[i][j] != cnt[j][i]) {
                std::ostringstream msg;
                msg << "derive_linking_matrix: asymmetric pair (" << i + 1 << "," << j + 1
                    << "): word " << i + 1 << " carries x" << j + 1 << " with net exponent "
                    << cnt[i][j] << " but word " << j + 1 << " carries x" << i + 1
                    << " with net exponent " << cnt[j][i];
                throw invalid_input(msg.str());
            }
    }
    LinkingMatrix lm(f.n);
    for (int i = 1; i <= f.n; ++i)
        for (int j = 1; j < i; ++j) lm.set_linking(i, j, cnt[i - 1][j - 1]);
    return lm;
}

MilnorClass total_triple_linking(const SurfaceSystemData& f) {
    if (f.n < 3) throw invalid_input("total_triple_linking: needs n >= 3");
    LinkingMatrix lm = derive_linking_matrix(f);
    AltVector rep(f.n);
    for (std::size_t pos = 0; pos < rep.size(); ++pos) {
        const TripleIndex t = triple_at(pos, f.n);
        Int c = m_count(f, t.i, t.j, t.k);
        auto it = f.triple_points.find(pos);
        if (it != f.triple_points.end()) c -= it->second;
        rep[pos] = std::move(c);
    }
    return MilnorClass{std::move(lm), std::move(rep)};
}

namespace {

struct MovePrefixes {
    std::vector<Letter> pi, pj, pk;
};

MovePrefixes move_prefixes(int i, int j, int k, int sign) {
    if (sign == 1)
        return {{{j, 1}, {j, -1}}, {{i, -1}, {k, 1}, {i, 1}, {k, -1}}, {{j, 1}, {j, -1}}};
    return {{{j, -1}, {j, 1}}, {{i, 1}, {k, 1}, {i, -1}, {k, -1}}, {{j, 1}, {j, -1}}};
}

void prepend_copies(ClaspWord& w, const std::vector<Letter>& prefix, const Int& count) {
    if (count == 0) return;
    const std::size_t c = count.convert_to<std::size_t>();
    std::vector<Letter> fresh;
    fresh.reserve(prefix.size() * c + w.letters.size());
    for (std::size_t r = 0; r < c; ++r) fresh.insert(fresh.end(), prefix.begin(), prefix.end());
    fresh.insert(fresh.end(), w.letters.begin(), w.letters.end());
    w.letters = std::move(fresh);
}

// count repetitions of the (i,j,k) move with the given sign
void apply_moves(SurfaceSystemData& f, int i, int j, int k, int sign, const Int& count) {
    const MovePrefixes p = move_prefixes(i, j, k, sign);
    prepend_copies(f.words[i - 1], p.pi, count);
    prepend_copies(f.words[j - 1], p.pj, count);
    prepend_copies(f.words[k - 1], p.pk, count);
}

} // namespace

SurfaceSystemData borromean_move(const SurfaceSystemData& f, int i, int j, int k, int sign) {
    canonical_position(i, j, k, f.n, "borromean_move");
    if (sign != 1 && sign != -1) throw invalid_input("borromean_move: sign must be +1 or -1");
    if (f.words.size() != std::size_t(f.n))
        throw invalid_input("borromean_move: expected " + std::to_string(f.n) + " words, got " +
                            std::to_string(f.words.size()));
    SurfaceSystemData out = f;
    apply_moves(out, i, j, k, sign, 1);
    return out;
}

Int Realization::total_moves() const {
    Int t = 0;
    for (const MoveRecord& m : moves) t += m.count;
    return t;
}

Realization realize(const LinkingMatrix& lm, const AltVector& target) {
    if (target.n() != lm.n())
        throw invalid_input("realize: target dimension does not match the matrix");
    if (lm.n() < 3) throw invalid_input("realize: needs n >= 3");
    const int n = lm.n();

    SurfaceSystemData f;
    f.n = n;
    f.words.resize(n);
    for (int i = 1; i <= n; ++i) {
        auto append_block = [&](int j) {
            const Int& v = lm.entry(i, j);
            if (v == 0) return;
            const int sign = v > 0 ? 1 : -1;
            Int reps = v > 0 ? v : Int(-v);
            const std::size_t r = reps.convert_to<std::size_t>();
            for (std::size_t c = 0; c < r; ++c) f.words[i - 1].letters.push_back({j, sign});
        };
        for (int j = i + 1; j <= n; ++j) append_block(j);
        for (int j = 1; j < i; ++j) append_block(j);
    }

    MilnorQuotient q(lm);
    const AltVector mu0 = total_triple_linking(f).rep;
    const AltVector raw = target - mu0;
    const AltVector reduced = q.reduce(raw);
    auto one_norm = [](const AltVector& v) {
        Int s = 0;
        for (std::size_t p = 0; p < v.size(); ++p) s += v[p] < 0 ? Int(-v[p]) : v[p];
        return s;
    };
    const AltVector& delta = one_norm(reduced) <= one_norm(raw) ? reduced : raw;

    Realization out;
    for (std::size_t pos = 0; pos < delta.size(); ++pos) {
        const Int& c = delta[pos];
        if (c == 0) continue;
        const TripleIndex t = triple_at(pos, n);
        const int sign = c > 0 ? 1 : -1;
        Int count = c > 0 ? c : Int(-c);
        apply_moves(f, t.i, t.j, t.k, sign, count);
        out.moves.push_back({t.i, t.j, t.k, sign, std::move(count)});
    }
    out.system = std::move(f);
    return out;
}

SurfaceSystemData load_surface_system(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw invalid_input(std::string("surface json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("words"))
        throw invalid_input("surface json: expected an object with \"n\" and \"words\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
        throw invalid_input("surface json: \"n\" must be a positive integer");
    SurfaceSystemData f;
    f.n = j["n"].get<int>();
    const auto& words = j["words"];
    if (!words.is_array() || words.size() != std::size_t(f.n))
        throw invalid_input("surface json: \"words\" must be an array of " + std::to_string(f.n) +
                            " strings");
    for (int i = 0; i < f.n; ++i) {
        if (!words[i].is_string())
            throw invalid_input("surface json: word " + std::to_string(i + 1) + " must be a string");
        ClaspWord w;
        try {
            w = parse_clasp_word(words[i].get<std::string>());
        } catch (const invalid_input& e) {
            throw invalid_input("surface json: word " + std::to_string(i + 1) + ": " + e.what());
        }
        for (std::size_t li = 0; li < w.letters.size(); ++li)
            if (w.letters[li].component > f.n)
                throw invalid_input("surface json: word " + std::to_string(i + 1) + " letter " +
                                    std::to_string(li + 1) + " references component " +
                                    std::to_string(w.letters[li].component) + " but n = " +
                                    std::to_string(f.n));
        f.words.push_back(std::move(w));
    }
    if (j.contains("triple_points")) {
        const auto& tps = j["triple_points"];
        if (!tps.is_array()) throw invalid_input("surface json: \"triple_points\" must be an array");
        for (std::size_t e = 0; e < tps.size(); ++e) {
            const auto& tp = tps[e];
            const std::string where = "surface json: triple_points[" + std::to_string(e) + "]";
            if (!tp.is_object() || !tp.contains("ijk") || !tp.contains("t"))
                throw invalid_input(where + ": expected {\"ijk\":[i,j,k],\"t\":value}");
            const auto& ijk = tp["ijk"];
            if (!ijk.is_array() || ijk.size() != 3 || !ijk[0].is_number_integer() ||
                !ijk[1].is_number_integer() || !ijk[2].is_number_integer())
                throw invalid_input(where + ": \"ijk\" must be three integers");
            if (!tp["t"].is_number_integer())
                throw invalid_input(where + ": \"t\" must be an integer");
            const int i = ijk[0].get<int>(), jj = ijk[1].get<int>(), k = ijk[2].get<int>();
            std::size_t pos;
            try {
                pos = canonical_position(i, jj, k, f.n, "triple_points");
            } catch (const invalid_input& ex) {
                throw invalid_input(where + ": " + ex.what());
            }
            if (f.triple_points.count(pos))
                throw invalid_input(where + ": duplicate triple (" + std::to_string(i) + "," +
                                    std::to_string(jj) + "," + std::to_string(k) + ")");
            const long long t = tp["t"].get<long long>();
            if (t != 0) f.triple_points[pos] = t;
        }
    }
    return f;
}

SurfaceSystemData load_surface_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open surface file: " + path);
    return load_surface_system(in);
}

std::string to_json_string(const SurfaceSystemData& f) {
    nlohmann::json j;
    j["n"] = f.n;
    auto words = nlohmann::json::array();
    for (const ClaspWord& w : f.words) words.push_back(to_string(w));
    j["words"] = std::move(words);
    auto tps = nlohmann::json::array();
    for (const auto& [pos, t] : f.triple_points) {
        if (t == 0) continue;
        const TripleIndex ti = triple_at(pos, f.n);
        tps.push_back({{"ijk", {ti.i, ti.j, ti.k}}, {"t", t}});
    }
    j["triple_points"] = std::move(tps);
    return j.dump(1);
}

void save_surface_system(const SurfaceSystemData& f, std::ostream& out) {
    out << to_json_string(f) << '\n';
}

} // namespace milq
