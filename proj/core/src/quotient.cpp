#include "milq/quotient.hpp"

#include "milq/error.hpp"
#include "milq/mod2.hpp"

namespace milq {
namespace {

void require_n3(const LinkingMatrix& lm, const char* op) {
    if (lm.n() < 3)
        throw invalid_input(std::string(op) + ": needs n >= 3 (the tensor space is empty below that)");
}

void require_pair(const LinkingMatrix& lm, int j, int k) {
    if (j < 1 || j > lm.n() || k < 1 || k > lm.n())
        throw invalid_input("relator: pair index out of range");
    if (j == k) throw invalid_input("relator: pair indices must differ");
}

} // namespace

std::size_t relator_count(int n) { return std::size_t(n) * (n - 1); }

std::size_t relator_column(int n, int j, int k) {
    if (j < 1 || j > n || k < 1 || k > n || j == k)
        throw invalid_input("relator_column: bad ordered pair");
    return std::size_t(j - 1) * (n - 1) + (k < j ? k - 1 : k - 2);
}

AltVector relator(const LinkingMatrix& lm, int j, int k) {
    require_n3(lm, "relator");
    require_pair(lm, j, k);
    AltVector v(lm.n());
    for (int i = 1; i <= lm.n(); ++i) {
        if (i == j || i == k) continue;
        v.add_term(i, j, k, lm.entry(i, k));
    }
    return v;
}

IntMatrix presentation_matrix(const LinkingMatrix& lm) {
    require_n3(lm, "presentation_matrix");
    const int n = lm.n();
    IntMatrix p(triple_count(n), relator_count(n));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (j == k) continue;
            const AltVector v = relator(lm, j, k);
            const std::size_t col = relator_column(n, j, k);
            for (std::size_t pos = 0; pos < v.size(); ++pos) p(pos, col) = v[pos];
        }
    return p;
}

AbelianGroup quotient_group(const LinkingMatrix& lm) {
    const IntMatrix p = presentation_matrix(lm);
    return AbelianGroup::from_diagonal(smith_invariants(p), p.rows());
}

std::size_t rank(const LinkingMatrix& lm) { return quotient_group(lm).free_rank; }

std::size_t mod2_rank(const LinkingMatrix& lm) {
    const IntMatrix p = presentation_matrix(lm);
    return p.rows() - rank_mod2(p);
}

Int rank_lower_bound(int n) {
    if (n < 6) throw invalid_input("rank_lower_bound: only defined for n >= 6");
    const Int nn(n);
    const Int num = nn * nn * nn - 9 * nn * nn + 20 * nn - 6;
    if (num % 6 != 0)
        throw std::logic_error("rank_lower_bound: numerator not divisible by 6"); // cannot happen
    return num / 6;
}

AltVector coset_reduce(const LinkingMatrix& lm, const AltVector& v) {
    return MilnorQuotient(lm).reduce(v);
}

bool classes_equal(const LinkingMatrix& lm, const AltVector& v, const AltVector& w) {
    require_n3(lm, "classes_equal");
    if (v.n() != lm.n() || w.n() != lm.n())
        throw invalid_input("classes_equal: vector dimension does not match the matrix");
    return solve_in_column_lattice(presentation_matrix(lm), (v - w).coords()).has_value();
}

DependencyReport verify_dependencies(const LinkingMatrix& lm) {
    require_n3(lm, "verify_dependencies");
    const int n = lm.n();
    DependencyReport rep;
    for (int j = 1; j <= n; ++j) {
        AltVector sum(n);
        for (int k = 1; k <= n; ++k)
            if (k != j) sum += relator(lm, j, k);
        ++rep.checked;
        if (!sum.is_zero())
            rep.violations.push_back({DependencyReport::Kind::sum_over_k, j, sum});
    }
    for (int k = 1; k <= n; ++k) {
        AltVector sum(n);
        for (int j = 1; j <= n; ++j)
            if (j != k) sum += lm.entry(j, k) * relator(lm, j, k);
        ++rep.checked;
        if (!sum.is_zero())
            rep.violations.push_back({DependencyReport::Kind::weighted_sum_over_j, k, sum});
    }
    return rep;
}

bool operator==(const MilnorClass& a, const MilnorClass& b) {
    if (!(a.lambda == b.lambda))
        throw invalid_input("MilnorClass comparison: classes live over different matrices");
    return classes_equal(a.lambda, a.rep, b.rep);
}

MilnorQuotient::MilnorQuotient(LinkingMatrix lm) : lm_(std::move(lm)) {
    require_n3(lm_, "MilnorQuotient");
    pres_ = presentation_matrix(lm_);
    group_ = AbelianGroup::from_diagonal(smith_invariants(pres_), pres_.rows());
    mod2_rank_ = pres_.rows() - rank_mod2(pres_);
}

const SmithForm& MilnorQuotient::snf() const {
    std::call_once(snf_once_, [&] { snf_ = std::make_unique<SmithForm>(smith_normal_form(pres_)); });
    return *snf_;
}

AltVector MilnorQuotient::reduce(const AltVector& v) const {
    if (v.n() != lm_.n())
        throw invalid_input("coset_reduce: vector dimension does not match the matrix");
    const SmithForm& s = snf();
    std::vector<Int> y = matvec(s.left, v.coords());
    const std::size_t mn = s.d.size();
    for (std::size_t i = 0; i < mn; ++i) {
        if (s.d[i] == 0) continue;
        Int r = y[i] % s.d[i];
        if (r < 0) r += s.d[i];
        y[i] = std::move(r);
    }
    const std::vector<Int> c = matvec(s.left_inv, y);
    AltVector out(lm_.n());
    for (std::size_t p = 0; p < c.size(); ++p) out[p] = c[p];
    return out;
}

bool MilnorQuotient::equal(const AltVector& v, const AltVector& w) const {
    if (v.n() != lm_.n() || w.n() != lm_.n())
        throw invalid_input("classes_equal: vector dimension does not match the matrix");
    const SmithForm& s = snf();
    const std::vector<Int> y = matvec(s.left, (v - w).coords());
    const std::size_t mn = s.d.size();
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < mn && s.d[i] != 0) {
            if (y[i] % s.d[i] != 0) return false;
        } else if (y[i] != 0) {
            return false;
        }
    }
    return true;
}

} // namespace milq
