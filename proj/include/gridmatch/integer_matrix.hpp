#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gridmatch {

using Integer = mpz_class;

/// Sparse integer matrix in column-major form.  Each column is a list of
/// (row, value) entries sorted by row; stored values are never zero.
class SparseIntMatrix {
public:
    struct Entry {
        std::size_t row;
        Integer value;
    };
    using Column = std::vector<Entry>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;

    /// Writes `value` at (row, col); zero erases the entry.
    void set(std::size_t row, std::size_t col, const Integer& value);
    Integer get(std::size_t row, std::size_t col) const;

    const Column& column(std::size_t col) const { return columns_[col]; }

    /// Replaces a whole column.  Entries must be sorted by row, in range and nonzero.
    void set_column(std::size_t col, Column entries);

    bool is_zero() const { return nonzeros() == 0; }

    /// Matrix product (*this) * rhs.
    SparseIntMatrix multiply(const SparseIntMatrix& rhs) const;

    std::vector<std::vector<Integer>> to_dense() const;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// Invariant factors d_1 | d_2 | ... | d_r, all positive; r is the rank.
struct SnfResult {
    std::vector<Integer> invariant_factors;

    std::size_t rank() const { return invariant_factors.size(); }
    /// The factors exceeding 1.
    std::vector<Integer> torsion() const;
};

/// Smith normal form over the integers (exact, arbitrary precision).
///
/// Sparse elimination: pivots are taken at entries of smallest absolute value,
/// preferring short rows and columns among those.  The pivot row and column
/// are cleared with unimodular operations; a non-dividing remainder becomes
/// the next, strictly smaller pivot.  The resulting diagonal is brought into
/// divisibility-chain form with gcd/lcm exchanges.
SnfResult smith_normal_form(SparseIntMatrix m);

/// Bring an arbitrary list of nonzero diagonal entries into a divisibility
/// chain with the same product structure (used by smith_normal_form).
std::vector<Integer> normalize_diagonal(std::vector<Integer> diagonal);

}  // namespace gridmatch
