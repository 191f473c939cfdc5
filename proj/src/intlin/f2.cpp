#include "intlin/f2.hpp"

#include <algorithm>

namespace intlin {

namespace {

// reduced row echelon form in place; returns pivot column per surviving row
std::vector<std::size_t> rref(std::vector<std::uint64_t>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t pi = r;
        while (pi < rows.size() && !(rows[pi] & bit)) ++pi;
        if (pi == rows.size()) continue;
        std::swap(rows[r], rows[pi]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

std::size_t F2Matrix::rank() const {
    std::vector<std::uint64_t> rows = rows_;
    return rref(rows, cols_).size();
}

std::vector<std::uint64_t> f2_nullspace(const F2Matrix& m) {
    std::vector<std::uint64_t> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_mask(i));
    std::vector<std::size_t> pivots = rref(rows, m.cols());

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::uint64_t> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::uint64_t x = std::uint64_t{1} << f;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if ((rows[i] >> f) & 1u) x |= std::uint64_t{1} << pivots[i];
        basis.push_back(x);
    }
    return basis;
}

std::vector<std::uint64_t> f2_row_basis(const std::vector<std::uint64_t>& rows) {
    std::vector<std::uint64_t> w = rows;
    std::size_t cols = 64;
    std::vector<std::size_t> pivots = rref(w, cols);
    (void)pivots;
    return w;
}

bool f2_span_contains(const std::vector<std::uint64_t>& basis, std::uint64_t v) {
    std::vector<std::uint64_t> w = basis;
    std::vector<std::size_t> pivots = rref(w, 64);
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t bit = std::uint64_t{1} << pivots[i];
        if (v & bit) v ^= w[i];
    }
    return v == 0;
}

}  // namespace intlin
