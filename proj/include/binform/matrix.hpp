#pragma once

#include <cstddef>
#include <vector>

#include "binform/polynomial.hpp"

namespace binform {

class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Polynomial& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    bool operator==(const PolyMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Polynomial> cells_;
};

// Exact determinant.  Cofactor expansion up to 4x4; fraction-free elimination
// with divisibility-checked exact division above that, the row updates of each
// elimination step running in parallel.
Polynomial determinant(const PolyMatrix& m);

Polynomial determinant_cofactor(const PolyMatrix& m);  // serial reference
Polynomial determinant_bareiss(PolyMatrix m);

// Generalized Laplace expansion along the first top_rows rows: the sum of
// top-minor times bottom-minor products over column subsets.  For stacked
// band matrices (two shifted coefficient blocks) the minors stay tiny where
// elimination entries would swell.
Polynomial determinant_block_laplace(const PolyMatrix& m, std::size_t top_rows);

}  // namespace binform
