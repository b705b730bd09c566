#pragma once

#include "milq/alt_tensor.hpp"
#include "milq/linking_matrix.hpp"

namespace milq {

// Removes component c (1-based) and relabels the remaining components
// 1..n-1 preserving order. Requires n >= 4 so the result still has triples.
LinkingMatrix delete_component(const LinkingMatrix& lm, int c);

// Projection on tensor coordinates: kills basis triples containing c,
// relabels the rest. v must live over n >= 4.
AltVector project(const AltVector& v, int c);

// Checks that each relator of the full matrix projects into the relation
// lattice of the deleted matrix, i.e. that the quotient map onto the
// sublink's quotient is well defined (and onto, since projection is onto).
struct SurjectionReport {
    int component = 0;
    std::size_t checked = 0;
    struct Failure {
        int j, k;
    };
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

SurjectionReport verify_surjection(const LinkingMatrix& lm, int c);

} // namespace milq
