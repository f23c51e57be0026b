#pragma once

#include "fstk/rat.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace fstk {

// Sparse matrix over Q. Entries are stored row-major with ascending indices,
// so iteration order is deterministic; absent entries are zero.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rat& v); // erases on v == 0
    void add_to(std::size_t r, std::size_t c, const Rat& v);

    const std::map<std::pair<std::size_t, std::size_t>, Rat>& entries() const {
        return entries_;
    }

    bool is_zero() const { return entries_.empty(); }
    RatMatrix mul(const RatMatrix& other) const;
    RatMatrix operator*(const RatMatrix& other) const { return mul(other); }
    bool operator==(const RatMatrix& other) const;

    // Matrix-vector product with a dense column vector.
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

private:
    std::size_t rows_, cols_;
    std::map<std::pair<std::size_t, std::size_t>, Rat> entries_;
};

// Row echelon data for a matrix, computed by exact Gaussian elimination with
// the normative pivot rule: columns are scanned in increasing order and the
// pivot row for a column is the lowest-index remaining row with a nonzero
// entry there. Rows are fully reduced (RREF), so kernel extraction is
// deterministic.
struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;           // increasing
    std::vector<std::map<std::size_t, Rat>> rows;  // RREF rows, leading 1s
};

Echelon echelon_form(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Basis of the null space as matrix columns. Free columns are taken in
// increasing index order and each basis vector has a unit entry at its free
// position.
RatMatrix kernel_basis(const RatMatrix& m);

// Reduce a dense vector against RREF rows in place; afterwards the vector is
// supported away from the pivot columns. Returns the coefficients used per
// pivot row.
std::vector<Rat> reduce_against(const Echelon& e, std::vector<Rat>& v);

// Solve basis * x = target for each column of target, where the columns of
// `basis` are independent. Throws std::runtime_error if inconsistent.
RatMatrix solve_in_span(const RatMatrix& basis, const RatMatrix& target);

} // namespace fstk
