#pragma once

#include "milq/abelian_group.hpp"
#include "milq/alt_tensor.hpp"
#include "milq/linking_matrix.hpp"
#include "milq/smith.hpp"

#include <memory>
#include <mutex>

namespace milq {

// Number of relators, one per ordered pair (j,k), j != k.
std::size_t relator_count(int n);

// Column of relator (j,k) in the presentation matrix; pairs are ordered
// lexicographically: (1,2),...,(1,n),(2,1),(2,3),...,(n,n-1).
std::size_t relator_column(int n, int j, int k);

// The relation vector attached to the ordered pair (j,k): the sum over
// components i of entry(i,k) times the tensor with indices (i,j,k).
AltVector relator(const LinkingMatrix& lm, int j, int k);

// C(n,3) x n(n-1) matrix whose columns are the relators. Requires n >= 3.
IntMatrix presentation_matrix(const LinkingMatrix& lm);

// The total quotient group Z^C(n,3) / (column lattice of the presentation).
AbelianGroup quotient_group(const LinkingMatrix& lm);

// Free rank of the quotient group.
std::size_t rank(const LinkingMatrix& lm);

// Dimension of the quotient after reducing everything mod 2. Depends only on
// the parity of the entries of the matrix.
std::size_t mod2_rank(const LinkingMatrix& lm);

// Exact lower bound (n^3 - 9n^2 + 20n - 6)/6 on rank for n >= 6; the
// numerator is checked to be divisible by 6.
Int rank_lower_bound(int n);

// Canonical coset representative: torsion coordinates reduced into [0, d),
// free coordinates untouched. Idempotent, and v - coset_reduce(v) always lies
// in the relation lattice.
AltVector coset_reduce(const LinkingMatrix& lm, const AltVector& v);

// True iff v - w lies in the relation lattice (decided by an exact integer
// lattice membership test).
bool classes_equal(const LinkingMatrix& lm, const AltVector& v, const AltVector& w);

// The two linear identities satisfied by the relators of any symmetric
// matrix: for each j the plain sum over k vanishes, and for each k the sum
// over j weighted by entry(j,k) vanishes.
struct DependencyReport {
    enum class Kind { sum_over_k, weighted_sum_over_j };
    struct Violation {
        Kind kind;
        int index; // the fixed j (sum_over_k) or fixed k (weighted_sum_over_j)
        AltVector residual;
    };
    std::size_t checked = 0; // 2n on success
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

DependencyReport verify_dependencies(const LinkingMatrix& lm);

// A class in the total quotient, carried as an explicit representative.
struct MilnorClass {
    LinkingMatrix lambda;
    AltVector rep;
};

// Equality as cosets; comparing classes over different matrices is an error.
bool operator==(const MilnorClass& a, const MilnorClass& b);

// Precomputes the presentation once and answers repeated queries. Transform
// matrices are only computed when reduce/equal first needs them; the lazy
// step is safe for concurrent readers.
class MilnorQuotient {
public:
    explicit MilnorQuotient(LinkingMatrix lm);

    const LinkingMatrix& matrix() const { return lm_; }
    const IntMatrix& presentation() const { return pres_; }
    const AbelianGroup& group() const { return group_; }
    std::size_t rank() const { return group_.free_rank; }
    std::size_t mod2_rank() const { return mod2_rank_; }

    AltVector reduce(const AltVector& v) const;
    bool equal(const AltVector& v, const AltVector& w) const;

private:
    const SmithForm& snf() const;

    LinkingMatrix lm_;
    IntMatrix pres_;
    AbelianGroup group_;
    std::size_t mod2_rank_ = 0;
    mutable std::once_flag snf_once_;
    mutable std::unique_ptr<SmithForm> snf_;
};

} // namespace milq
