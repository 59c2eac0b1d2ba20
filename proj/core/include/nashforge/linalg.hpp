#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nashforge/field.hpp"

namespace nashforge {

// Dense matrix over an exact field. Row-major.
class ScalarMatrix {
public:
    ScalarMatrix(const FieldSpec& F, size_t rows, size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(F)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldSpec& field() const { return F_; }

    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    void append_row(const std::vector<Scalar>& row);

    size_t rank() const;

    // Reduced row echelon form in place; returns pivot column per pivot row.
    std::vector<size_t> rref();

    // Basis of the right kernel {v : Av = 0}, echelonized, deterministic.
    std::vector<std::vector<Scalar>> null_space() const;

private:
    FieldSpec F_;
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

// Incremental rank of a stream of sparse rows (column -> value), reducing each
// incoming row against the pivots accumulated so far.
class SparseRank {
public:
    explicit SparseRank(const FieldSpec& F) : F_(F) {}

    // Returns true when the row was independent (rank grew).
    bool add_row(std::map<size_t, Scalar> row);
    size_t rank() const { return pivots_.size(); }

private:
    FieldSpec F_;
    std::map<size_t, std::map<size_t, Scalar>> pivots_;  // leading column -> monic row
};

}  // namespace nashforge
