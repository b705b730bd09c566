#pragma once

#include "milq/int_matrix.hpp"

#include <string>

namespace milq {

// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_t in
// invariant-factor form: every d_i > 1 and d_1 | d_2 | ... | d_t.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;

    bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool operator==(const AbelianGroup&) const = default;

    // Builds the group presented by `generators` generators subject to a
    // relation matrix with Smith diagonal `d` (units dropped, zeros counted
    // into the free rank).
    static AbelianGroup from_diagonal(const std::vector<Int>& d, std::size_t generators);
};

// "Z^3 + Z/2 + Z/6", "Z + Z/4", "Z/2", "trivial"
std::string to_string(const AbelianGroup& g);

} // namespace milq
