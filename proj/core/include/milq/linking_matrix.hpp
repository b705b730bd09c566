#pragma once

#include "milq/int_matrix.hpp"

#include <iosfwd>
#include <string>

namespace milq {

// Symmetric integer matrix with zero diagonal; entry (i,j) is the pairwise
// linking number of components i and j. Indices are 1-based.
class LinkingMatrix {
public:
    LinkingMatrix() = default;
    explicit LinkingMatrix(int n);

    // Validates symmetry and the zero diagonal; the error message names the
    // first offending entry.
    static LinkingMatrix from_entries(int n, const std::vector<std::vector<Int>>& rows);

    int n() const { return n_; }

    const Int& entry(int i, int j) const;
    // Sets (i,j) and (j,i) together; i == j is an error.
    void set_linking(int i, int j, Int v);

    bool operator==(const LinkingMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<Int> e_;
};

// Text form: first line n, then n rows of n integers.
// JSON form: {"n":5,"entries":[[...],...]}; the loader auto-detects.
LinkingMatrix load_linking_matrix(std::istream& in);
LinkingMatrix load_linking_matrix_file(const std::string& path);
LinkingMatrix parse_linking_matrix(const std::string& text);

std::string to_text(const LinkingMatrix& m);

} // namespace milq
