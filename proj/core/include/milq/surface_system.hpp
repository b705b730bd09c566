#pragma once

#include "milq/alt_tensor.hpp"
#include "milq/linking_matrix.hpp"
#include "milq/quotient.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

namespace milq {

// One letter x_c^{sign} of a clasp-word.
struct Letter {
    int component; // 1-based
    int sign;      // +1 or -1
    bool operator==(const Letter&) const = default;
};

struct ClaspWord {
    std::vector<Letter> letters;
    bool operator==(const ClaspWord&) const = default;
};

// Whitespace-separated tokens `x<digits>` or `x<digits>^-1`; empty input is
// the empty word. Malformed tokens are reported with their position.
ClaspWord parse_clasp_word(std::string_view text);
std::string to_string(const ClaspWord& w);

// Signed count of (x_i, later x_j) letter pairs: the sum over positions
// p < q with components (i, j) of the product of their signs. i == j is
// allowed; a letter never pairs with itself.
Int epsilon(const ClaspWord& w, int i, int j);

// Combinatorial shadow of a surface system: one clasp-word per component
// plus internal triple point counts (keyed by canonical basis position;
// absent means 0).
struct SurfaceSystemData {
    int n = 0;
    std::vector<ClaspWord> words;
    std::map<std::size_t, long long> triple_points;

    long long triple_point(int i, int j, int k) const;
    void set_triple_point(int i, int j, int k, long long t);

    bool operator==(const SurfaceSystemData&) const = default;
};

// epsilon(w_k,i,j) + epsilon(w_i,j,k) + epsilon(w_j,k,i); indices must be
// distinct and in range.
Int m_count(const SurfaceSystemData& f, int i, int j, int k);

// Reads pairwise linking numbers off the words; errors name the offending
// pair when the counts are asymmetric or a word links itself.
LinkingMatrix derive_linking_matrix(const SurfaceSystemData& f);

// The total triple linking class: coefficient m - t at each canonical
// triple, over the derived matrix.
MilnorClass total_triple_linking(const SurfaceSystemData& f);

// Front-prepends the move words for the canonical triple (i,j,k): sign +1
// gives w_i <- x_j x_j^-1 w_i, w_j <- x_i^-1 x_k x_i x_k^-1 w_j,
// w_k <- x_j x_j^-1 w_k; sign -1 flips the middle word to
// x_i x_k x_i^-1 x_k^-1. Triple points and the derived matrix are unchanged;
// the raw class representative moves by exactly +/- one basis tensor.
SurfaceSystemData borromean_move(const SurfaceSystemData& f, int i, int j, int k, int sign);

// A batch of identical moves on one triple.
struct MoveRecord {
    int i, j, k;
    int sign;
    Int count;
};

struct Realization {
    SurfaceSystemData system;
    std::vector<MoveRecord> moves;
    Int total_moves() const;
};

// Builds surface data with derived matrix lm realizing the given class: a
// base system read off the matrix entries, then signed Borromean moves per
// triple. The correction vector is the difference to the target, taken
// either raw or coset-reduced, whichever needs fewer moves.
Realization realize(const LinkingMatrix& lm, const AltVector& target);

// {"n":3,"words":["x2 x3^-1",...],"triple_points":[{"ijk":[1,2,3],"t":1},...]}
SurfaceSystemData load_surface_system(std::istream& in);
SurfaceSystemData load_surface_system_file(const std::string& path);
void save_surface_system(const SurfaceSystemData& f, std::ostream& out);
std::string to_json_string(const SurfaceSystemData& f);

} // namespace milq
