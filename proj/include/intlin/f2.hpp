#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace intlin {

/// Matrix over the two-element field; each row is a bit mask.  Column count
/// is capped at 64, which covers every rank this project handles.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, 0) {
        if (cols > 64) throw std::invalid_argument("F2Matrix: more than 64 columns");
    }

    static F2Matrix from_rows(const std::vector<std::uint64_t>& rows, std::size_t cols) {
        F2Matrix m(rows.size(), cols);
        m.rows_ = rows;
        return m;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
    void set(std::size_t i, std::size_t j, bool v) {
        if (v) rows_[i] |= (std::uint64_t{1} << j);
        else rows_[i] &= ~(std::uint64_t{1} << j);
    }
    std::uint64_t row_mask(std::size_t i) const { return rows_[i]; }
    void append_row(std::uint64_t mask) { rows_.push_back(mask); }

    /// Row echelon rank; does not modify this.
    std::size_t rank() const;

    bool operator==(const F2Matrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

private:
    std::size_t cols_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Basis of { x : m x = 0 } over the two-element field, one mask per basis vector.
std::vector<std::uint64_t> f2_nullspace(const F2Matrix& m);

/// Reduced basis of the span of the given masks.
std::vector<std::uint64_t> f2_row_basis(const std::vector<std::uint64_t>& rows);

/// Does the span of basis contain v?  basis need not be reduced.
bool f2_span_contains(const std::vector<std::uint64_t>& basis, std::uint64_t v);

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace intlin
