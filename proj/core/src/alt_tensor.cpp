#include "milq/alt_tensor.hpp"

#include "milq/error.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace milq {

std::size_t triple_count(int n) {
    if (n < 3) return 0;
    return std::size_t(n) * (n - 1) * (n - 2) / 6;
}

std::optional<CanonicalTriple> canonicalize(int i, int j, int k, int n) {
    if (n < 3) throw invalid_input("canonicalize: n must be at least 3");
    for (int x : {i, j, k})
        if (x < 1 || x > n)
            throw invalid_input("canonicalize: index " + std::to_string(x) + " out of range 1.." +
                                std::to_string(n));
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (i == j || j == k) return std::nullopt;
    return CanonicalTriple{TripleIndex{i, j, k, n}, sign};
}

std::size_t basis_position(const TripleIndex& t) {
    std::size_t pos = 0;
    for (int a = 1; a < t.i; ++a) pos += std::size_t(t.n - a) * (t.n - a - 1) / 2;
    for (int b = t.i + 1; b < t.j; ++b) pos += std::size_t(t.n - b);
    pos += std::size_t(t.k - t.j - 1);
    return pos;
}

TripleIndex triple_at(std::size_t pos, int n) {
    if (pos >= triple_count(n)) throw invalid_input("triple_at: position out of range");
    for (int i = 1; i <= n - 2; ++i)
        for (int j = i + 1; j <= n - 1; ++j) {
            const std::size_t run = std::size_t(n - j);
            if (pos < run) return TripleIndex{i, j, j + 1 + int(pos), n};
            pos -= run;
        }
    throw std::logic_error("triple_at: unreachable");
}

AltVector::AltVector(int n) : n_(n), c_(triple_count(n)) {
    if (n < 3) throw invalid_input("AltVector: n must be at least 3");
}

AltVector AltVector::unit(int i, int j, int k, int n) {
    AltVector v(n);
    v.add_term(i, j, k, 1);
    return v;
}

Int AltVector::coeff(int i, int j, int k) const {
    auto ct = canonicalize(i, j, k, n_);
    if (!ct) return 0;
    const Int& stored = c_[basis_position(ct->index)];
    return ct->sign > 0 ? stored : Int(-stored);
}

void AltVector::add_term(int i, int j, int k, const Int& c) {
    auto ct = canonicalize(i, j, k, n_);
    if (!ct || c == 0) return;
    Int& slot = c_[basis_position(ct->index)];
    if (ct->sign > 0)
        slot += c;
    else
        slot -= c;
}

bool AltVector::is_zero() const {
    for (const Int& x : c_)
        if (x != 0) return false;
    return true;
}

static void check_same_space(const AltVector& a, const AltVector& b) {
    if (a.n() != b.n()) throw invalid_input("AltVector arithmetic: operands live over different n");
}

AltVector& AltVector::operator+=(const AltVector& o) {
    check_same_space(*this, o);
    for (std::size_t p = 0; p < c_.size(); ++p) c_[p] += o.c_[p];
    return *this;
}

AltVector& AltVector::operator-=(const AltVector& o) {
    check_same_space(*this, o);
    for (std::size_t p = 0; p < c_.size(); ++p) c_[p] -= o.c_[p];
    return *this;
}

AltVector& AltVector::operator*=(const Int& s) {
    for (Int& x : c_) x *= s;
    return *this;
}

AltVector AltVector::operator-() const {
    AltVector r = *this;
    for (Int& x : r.c_) x = -x;
    return r;
}

AltVector operator+(AltVector a, const AltVector& b) { return a += b; }
AltVector operator-(AltVector a, const AltVector& b) { return a -= b; }
AltVector operator*(const Int& s, AltVector a) { return a *= s; }

std::string to_string(const AltVector& v) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t p = 0; p < v.size(); ++p) {
        const Int& c = v[p];
        if (c == 0) continue;
        if (!first) out << ' ';
        first = false;
        const TripleIndex t = triple_at(p, v.n());
        out << (c < 0 ? '-' : '+') << (c < 0 ? Int(-c) : c) << "*X[" << t.i << ',' << t.j << ','
            << t.k << ']';
    }
    if (first) return "0";
    return out.str();
}

namespace {

[[noreturn]] void bad_term(std::size_t idx, const std::string& tok, const std::string& why) {
    throw invalid_input("alt vector term " + std::to_string(idx) + " ('" + tok + "'): " + why);
}

// coefficient '*X[' i ',' j ',' k ']' with optional leading sign
void parse_term(const std::string& tok, std::size_t idx, AltVector& into) {
    std::size_t p = 0;
    int sign = 1;
    if (p < tok.size() && (tok[p] == '+' || tok[p] == '-')) {
        if (tok[p] == '-') sign = -1;
        ++p;
    }
    const std::size_t dig0 = p;
    while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
    if (p == dig0) bad_term(idx, tok, "expected a coefficient");
    Int coeff(tok.substr(dig0, p - dig0));
    if (sign < 0) coeff = -coeff;
    if (tok.compare(p, 3, "*X[") != 0) bad_term(idx, tok, "expected '*X[' after the coefficient");
    p += 3;
    int ijk[3];
    for (int t = 0; t < 3; ++t) {
        const std::size_t d0 = p;
        while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
        if (p == d0) bad_term(idx, tok, "expected an index");
        ijk[t] = std::stoi(tok.substr(d0, p - d0));
        const char sep = (t < 2) ? ',' : ']';
        if (p >= tok.size() || tok[p] != sep) bad_term(idx, tok, "malformed index list");
        ++p;
    }
    if (p != tok.size()) bad_term(idx, tok, "trailing characters");
    if (!(ijk[0] < ijk[1] && ijk[1] < ijk[2]))
        bad_term(idx, tok, "indices must be strictly increasing");
    try {
        into.add_term(ijk[0], ijk[1], ijk[2], coeff);
    } catch (const invalid_input& e) {
        bad_term(idx, tok, e.what());
    }
}

} // namespace

AltVector parse_alt_vector(std::string_view text, int n) {
    AltVector v(n);
    std::istringstream in{std::string(text)};
    std::vector<std::string> toks;
    for (std::string t; in >> t;) toks.push_back(std::move(t));
    if (toks.empty()) throw invalid_input("alt vector: empty input (write '0' for the zero vector)");
    if (toks.size() == 1 && toks[0] == "0") return v;
    for (std::size_t i = 0; i < toks.size(); ++i) parse_term(toks[i], i + 1, v);
    return v;
}

} // namespace milq
