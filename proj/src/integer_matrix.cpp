#include "gridmatch/integer_matrix.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>

namespace gridmatch {

std::size_t SparseIntMatrix::nonzeros() const
{
    std::size_t total = 0;
    for (const auto& col : columns_)
        total += col.size();
    return total;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    SparseIntMatrix out(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged dense matrix");
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j] != 0)
                out.columns_[j].push_back({i, Integer(rows[i][j])});
    }
    return out;
}

void SparseIntMatrix::set(std::size_t row, std::size_t col, const Integer& value)
{
    if (row >= rows_ || col >= columns_.size())
        throw std::out_of_range("matrix index out of range");
    auto& column = columns_[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    const bool present = it != column.end() && it->row == row;
    if (value == 0) {
        if (present)
            column.erase(it);
    } else if (present) {
        it->value = value;
    } else {
        column.insert(it, Entry{row, value});
    }
}

Integer SparseIntMatrix::get(std::size_t row, std::size_t col) const
{
    if (row >= rows_ || col >= columns_.size())
        throw std::out_of_range("matrix index out of range");
    const auto& column = columns_[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != column.end() && it->row == row)
        return it->value;
    return 0;
}

void SparseIntMatrix::set_column(std::size_t col, Column entries)
{
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].row >= rows_ || entries[i].value == 0 ||
            (i > 0 && entries[i - 1].row >= entries[i].row))
            throw std::invalid_argument("column entries must be sorted, in range and nonzero");
    }
    columns_.at(col) = std::move(entries);
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& rhs) const
{
    if (cols() != rhs.rows())
        throw std::invalid_argument("matrix shapes do not compose");
    SparseIntMatrix out(rows_, rhs.cols());
    std::vector<Integer> acc(rows_);
    std::vector<bool> touched(rows_, false);
    std::vector<std::size_t> rows_hit;
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        rows_hit.clear();
        for (const auto& [k, b] : rhs.column(j)) {
            for (const auto& [i, a] : columns_[k]) {
                if (!touched[i]) {
                    touched[i] = true;
                    acc[i] = 0;
                    rows_hit.push_back(i);
                }
                acc[i] += a * b;
            }
        }
        std::sort(rows_hit.begin(), rows_hit.end());
        Column column;
        for (std::size_t i : rows_hit) {
            if (acc[i] != 0)
                column.push_back({i, acc[i]});
            touched[i] = false;
        }
        out.columns_[j] = std::move(column);
    }
    return out;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const
{
    std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols()));
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& [i, v] : columns_[j])
            out[i][j] = v;
    return out;
}

std::vector<Integer> SnfResult::torsion() const
{
    std::vector<Integer> out;
    for (const auto& d : invariant_factors)
        if (d > 1)
            out.push_back(d);
    return out;
}

std::vector<Integer> normalize_diagonal(std::vector<Integer> diagonal)
{
    for (auto& d : diagonal) {
        if (d == 0)
            throw std::invalid_argument("diagonal entries must be nonzero");
        d = abs(d);
    }
    // Compare-exchange (gcd, lcm) acts as a selection sort on every prime's
    // exponent at once, which leaves a divisibility chain.
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
            if (diagonal[j] % diagonal[i] == 0)
                continue;
            Integer g = gcd(diagonal[i], diagonal[j]);
            Integer l = diagonal[i] / g * diagonal[j];
            diagonal[i] = std::move(g);
            diagonal[j] = std::move(l);
        }
    }
    return diagonal;
}

namespace {

int compare_abs(const Integer& a, const Integer& b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

class Eliminator {
public:
    explicit Eliminator(SparseIntMatrix m)
        : columns_(m.cols()), row_cols_(m.rows()), col_alive_(m.cols(), true)
    {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            columns_[j] = m.column(j);
            for (const auto& e : columns_[j])
                row_cols_[e.row].push_back(j);
        }
        for (std::size_t r = 0; r < row_cols_.size(); ++r)
            if (!row_cols_[r].empty())
                queue_.push({row_cols_[r].size(), r});
    }

    std::vector<Integer> run()
    {
        while (auto pivot = select_pivot())
            eliminate(pivot->first, pivot->second);
        return std::move(diagonal_);
    }

private:
    using Column = SparseIntMatrix::Column;
    using Candidate = std::pair<std::size_t, std::size_t>;  // (row length, row)

    const Integer* entry(std::size_t row, std::size_t col) const
    {
        const auto& column = columns_[col];
        auto it = std::lower_bound(column.begin(), column.end(), row,
                                   [](const SparseIntMatrix::Entry& e, std::size_t r) { return e.row < r; });
        return it != column.end() && it->row == row ? &it->value : nullptr;
    }

    void drop_from_row(std::size_t row, std::size_t col)
    {
        auto& list = row_cols_[row];
        auto it = std::find(list.begin(), list.end(), col);
        if (it != list.end()) {
            *it = list.back();
            list.pop_back();
        }
    }

    // Shortest pending row that has a unit entry; within it, the unit in the
    // shortest column.  Falls back to a full scan for the smallest entry.
    std::optional<std::pair<std::size_t, std::size_t>> select_pivot()
    {
        while (!queue_.empty()) {
            auto [len, row] = queue_.top();
            queue_.pop();
            if (len == 0 || row_cols_[row].size() != len)
                continue;
            std::optional<std::size_t> best;
            for (std::size_t col : row_cols_[row]) {
                const Integer* v = entry(row, col);
                if (mpz_cmpabs_ui(v->get_mpz_t(), 1) == 0 &&
                    (!best || columns_[col].size() < columns_[*best].size()))
                    best = col;
            }
            if (best)
                return std::pair{row, *best};
        }

        std::optional<std::pair<std::size_t, std::size_t>> best;
        const Integer* best_value = nullptr;
        std::size_t best_cost = 0;
        for (std::size_t col = 0; col < columns_.size(); ++col) {
            if (!col_alive_[col])
                continue;
            for (const auto& e : columns_[col]) {
                const std::size_t cost = (row_cols_[e.row].size() - 1) * (columns_[col].size() - 1);
                const int cmp = best_value ? compare_abs(e.value, *best_value) : -1;
                if (cmp < 0 || (cmp == 0 && cost < best_cost)) {
                    best = std::pair{e.row, col};
                    best_value = &e.value;
                    best_cost = cost;
                }
            }
        }
        return best;
    }

    // target -= q * source, keeping row lists in sync.
    void axpy_column(std::size_t target, const Integer& q, std::size_t source)
    {
        const Column& src = columns_[source];
        Column& dst = columns_[target];
        Column merged;
        merged.reserve(dst.size() + src.size());
        std::size_t a = 0, b = 0;
        while (a < dst.size() || b < src.size()) {
            if (b == src.size() || (a < dst.size() && dst[a].row < src[b].row)) {
                merged.push_back(std::move(dst[a++]));
            } else if (a == dst.size() || src[b].row < dst[a].row) {
                const std::size_t row = src[b].row;
                merged.push_back({row, -q * src[b].value});
                row_cols_[row].push_back(target);
                touch(row);
                ++b;
            } else {
                const std::size_t row = dst[a].row;
                Integer value = dst[a].value - q * src[b].value;
                if (value == 0) {
                    drop_from_row(row, target);
                } else {
                    merged.push_back({row, std::move(value)});
                }
                touch(row);
                ++a;
                ++b;
            }
        }
        dst = std::move(merged);
    }

    void touch(std::size_t row) { dirty_.push_back(row); }

    void flush_dirty()
    {
        std::sort(dirty_.begin(), dirty_.end());
        dirty_.erase(std::unique(dirty_.begin(), dirty_.end()), dirty_.end());
        for (std::size_t row : dirty_)
            if (!row_cols_[row].empty())
                queue_.push({row_cols_[row].size(), row});
        dirty_.clear();
    }

    void eliminate(std::size_t row, std::size_t col)
    {
        while (true) {
            const Integer pivot = *entry(row, col);

            // Column operations clear the pivot row.
            std::optional<std::size_t> smaller;
            Integer smaller_value;
            const std::vector<std::size_t> others = row_cols_[row];
            for (std::size_t j : others) {
                if (j == col)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), entry(row, j)->get_mpz_t(), pivot.get_mpz_t());
                if (q != 0)
                    axpy_column(j, q, col);
                if (const Integer* rem = entry(row, j);
                    rem && (!smaller || compare_abs(*rem, smaller_value) < 0)) {
                    smaller = j;
                    smaller_value = *rem;
                }
            }
            if (smaller) {
                col = *smaller;
                continue;
            }

            // The pivot row is now just the pivot, so row operations against
            // it only change the pivot column.
            std::optional<std::size_t> smaller_row;
            Column& column = columns_[col];
            Column kept;
            for (auto& e : column) {
                if (e.row == row) {
                    kept.push_back(std::move(e));
                    continue;
                }
                Integer rem;
                mpz_tdiv_r(rem.get_mpz_t(), e.value.get_mpz_t(), pivot.get_mpz_t());
                touch(e.row);
                if (rem == 0) {
                    drop_from_row(e.row, col);
                    continue;
                }
                kept.push_back({e.row, std::move(rem)});
            }
            column = std::move(kept);
            for (const auto& e : column)
                if (e.row != row && (!smaller_row || compare_abs(e.value, *entry(*smaller_row, col)) < 0))
                    smaller_row = e.row;
            if (smaller_row) {
                row = *smaller_row;
                continue;
            }

            diagonal_.push_back(abs(pivot));
            row_cols_[row].clear();
            columns_[col].clear();
            col_alive_[col] = false;
            flush_dirty();
            return;
        }
    }

    std::vector<Column> columns_;
    std::vector<std::vector<std::size_t>> row_cols_;
    std::vector<bool> col_alive_;
    std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> queue_;
    std::vector<std::size_t> dirty_;
    std::vector<Integer> diagonal_;
};

}  // namespace

SnfResult smith_normal_form(SparseIntMatrix m)
{
    std::vector<Integer> diagonal = Eliminator(std::move(m)).run();
    std::vector<Integer> units, rest;
    for (auto& d : diagonal)
        (d == 1 ? units : rest).push_back(std::move(d));
    SnfResult out;
    out.invariant_factors = std::move(units);
    for (auto& d : normalize_diagonal(std::move(rest)))
        out.invariant_factors.push_back(std::move(d));
    return out;
}

}  // namespace gridmatch
