#include "milq/abelian_group.hpp"

#include "milq/error.hpp"

#include <sstream>

namespace milq {

AbelianGroup AbelianGroup::from_diagonal(const std::vector<Int>& d, std::size_t generators) {
    if (d.size() > generators)
        throw invalid_input("AbelianGroup::from_diagonal: more diagonal entries than generators");
    AbelianGroup g;
    std::size_t nonzero = 0;
    for (const Int& x : d) {
        if (x == 0) continue;
        ++nonzero;
        if (x < 0) throw invalid_input("AbelianGroup::from_diagonal: negative diagonal entry");
        if (x > 1) g.invariant_factors.push_back(x);
    }
    g.free_rank = generators - nonzero;
    return g;
}

std::string to_string(const AbelianGroup& g) {
    if (g.trivial()) return "trivial";
    std::ostringstream out;
    bool first = true;
    if (g.free_rank > 0) {
        out << 'Z';
        if (g.free_rank > 1) out << '^' << g.free_rank;
        first = false;
    }
    for (const Int& d : g.invariant_factors) {
        if (!first) out << " + ";
        first = false;
        out << "Z/" << d;
    }
    return out.str();
}

} // namespace milq
