#include "milq/sublink.hpp"

#include "milq/error.hpp"
#include "milq/quotient.hpp"
#include "milq/smith.hpp"

namespace milq {

LinkingMatrix delete_component(const LinkingMatrix& lm, int c) {
    if (lm.n() < 4)
        throw invalid_input("delete_component: needs n >= 4 (deleting would leave no triples)");
    if (c < 1 || c > lm.n()) throw invalid_input("delete_component: component index out of range");
    LinkingMatrix out(lm.n() - 1);
    for (int i = 1; i <= lm.n(); ++i) {
        if (i == c) continue;
        for (int j = 1; j < i; ++j) {
            if (j == c) continue;
            out.set_linking(i - (i > c), j - (j > c), lm.entry(i, j));
        }
    }
    return out;
}

AltVector project(const AltVector& v, int c) {
    if (v.n() < 4) throw invalid_input("project: needs n >= 4");
    if (c < 1 || c > v.n()) throw invalid_input("project: component index out of range");
    AltVector out(v.n() - 1);
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
        if (v[pos] == 0) continue;
        const TripleIndex t = triple_at(pos, v.n());
        if (t.i == c || t.j == c || t.k == c) continue;
        // relabeling preserves the order of the surviving indices
        const TripleIndex m{t.i - (t.i > c), t.j - (t.j > c), t.k - (t.k > c), v.n() - 1};
        out[basis_position(m)] = v[pos];
    }
    return out;
}

SurjectionReport verify_surjection(const LinkingMatrix& lm, int c) {
    if (lm.n() < 4) throw invalid_input("verify_surjection: needs n >= 4");
    if (c < 1 || c > lm.n()) throw invalid_input("verify_surjection: component index out of range");
    const LinkingMatrix sub = delete_component(lm, c);
    const ColumnLatticeSolver solver(presentation_matrix(sub));
    SurjectionReport rep;
    rep.component = c;
    for (int j = 1; j <= lm.n(); ++j)
        for (int k = 1; k <= lm.n(); ++k) {
            if (j == k) continue;
            ++rep.checked;
            const AltVector image = project(relator(lm, j, k), c);
            if (!solver.solve(image.coords())) rep.failures.push_back({j, k});
        }
    return rep;
}

} // namespace milq
