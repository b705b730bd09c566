#pragma once

#include "milq/int_matrix.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace milq {

// Canonical basis triple 1 <= i < j < k <= n of the free abelian group of
// alternating 3-tensors. Component indices are 1-based throughout the library.
struct TripleIndex {
    int i, j, k, n;
    bool operator==(const TripleIndex&) const = default;
};

struct CanonicalTriple {
    TripleIndex index;
    int sign; // +1 or -1
};

// C(n,3), the basis size.
std::size_t triple_count(int n);

// Sorts (i,j,k) and reports the permutation sign; nullopt when an index
// repeats (the tensor is zero). Out-of-range indices are an error.
std::optional<CanonicalTriple> canonicalize(int i, int j, int k, int n);

// 0-based rank of a canonical triple in lexicographic order.
std::size_t basis_position(const TripleIndex& t);

// Inverse of basis_position.
TripleIndex triple_at(std::size_t pos, int n);

// Element of Z^C(n,3), coordinates in lexicographic triple order.
class AltVector {
public:
    AltVector() = default;
    explicit AltVector(int n);

    static AltVector unit(int i, int j, int k, int n);

    int n() const { return n_; }
    std::size_t size() const { return c_.size(); }
    const Int& operator[](std::size_t pos) const { return c_[pos]; }
    Int& operator[](std::size_t pos) { return c_[pos]; }

    // Signed coefficient of the (possibly non-canonical) triple (i,j,k);
    // zero for repeated indices.
    Int coeff(int i, int j, int k) const;
    // Adds c times the tensor with indices (i,j,k); a no-op for repeats.
    void add_term(int i, int j, int k, const Int& c);

    bool is_zero() const;

    const std::vector<Int>& coords() const { return c_; }

    AltVector& operator+=(const AltVector& o);
    AltVector& operator-=(const AltVector& o);
    AltVector& operator*=(const Int& s);
    AltVector operator-() const;
    bool operator==(const AltVector&) const = default;

private:
    int n_ = 0;
    std::vector<Int> c_;
};

AltVector operator+(AltVector a, const AltVector& b);
AltVector operator-(AltVector a, const AltVector& b);
AltVector operator*(const Int& s, AltVector a);

// "+1*X[1,2,3] -2*X[1,3,4]"; the zero vector renders as "0".
std::string to_string(const AltVector& v);

// Parses the to_string form. Terms may appear in any order and repeat;
// repeated triples accumulate.
AltVector parse_alt_vector(std::string_view text, int n);

} // namespace milq
