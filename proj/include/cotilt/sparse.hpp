// Incremental sparse elimination, used for the commutation systems behind Hom.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cotilt/linalg.hpp"

namespace cotilt {

using SparseRow = std::vector<std::pair<int, Scalar>>;  // sorted by column

// Keeps the rows added so far in reduced echelon form, pivoting on the smallest column.
class SparseEliminator {
public:
    explicit SparseEliminator(int ncols) : n_(ncols) {}

    void add(SparseRow row);
    int rank() const { return static_cast<int>(rows_.size()); }
    // Free columns in increasing order; the null space has one basis vector per free column.
    std::vector<int> free_columns() const;
    // Null space vector attached to a free column: 1 there, 0 on other free columns.
    SparseRow null_vector(int free_col) const;

private:
    int n_;
    std::map<int, SparseRow> rows_;  // pivot column -> row with leading coefficient 1
};

}  // namespace cotilt
