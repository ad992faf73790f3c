#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "geoconn/field.hpp"

namespace geoconn {

struct RrefResult;

/// Dense matrix over F_q with exact elimination. There is no tolerance
/// anywhere: a pivot is any nonzero entry.
class ExactMatrix {
public:
    ExactMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : f_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(FieldPtr field, std::size_t n);
    static ExactMatrix from_rows(FieldPtr field,
                                 const std::vector<std::vector<Fq>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    Fq at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Fq v) { a_[r * cols_ + c] = v; }

    ExactMatrix transpose() const;
    ExactMatrix multiply(const ExactMatrix& rhs) const;
    std::vector<Fq> apply(const std::vector<Fq>& v) const;

    /// Reduced row-echelon form. Pivot choice is deterministic: leftmost
    /// nonzero column, first available row.
    RrefResult rref() const;
    std::size_t rank() const;

    /// One solution of M x = b if the system is consistent, with free
    /// variables set to 0; nullopt when inconsistent.
    std::optional<std::vector<Fq>> solve(const std::vector<Fq>& b) const;

    /// Basis of the right kernel; empty iff the matrix is injective.
    std::vector<std::vector<Fq>> nullspace_basis() const;

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    FieldPtr f_;
    std::size_t rows_, cols_;
    std::vector<Fq> a_;
};

struct RrefResult {
    ExactMatrix matrix;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Echelonized (rref, zero rows dropped) basis of the span of the given
/// vectors. Canonical: two spanning sets of the same subspace give the
/// same output.
std::vector<std::vector<Fq>> row_span_basis(const FieldPtr& field,
                                            const std::vector<std::vector<Fq>>& vectors,
                                            std::size_t width);

} // namespace geoconn
