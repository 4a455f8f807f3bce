#ifndef CLIFFPAR_GF2_LINEAR_HPP
#define CLIFFPAR_GF2_LINEAR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace cliffpar {

/// Solves A x = b over GF(2) by Gaussian elimination on packed rows.
///
/// `columns[c]` lists the row indices where column c has a 1; `rhs` lists the
/// rows where b has a 1. Returns one solution (free variables set to 0).
inline std::optional<std::vector<bool>> solve_gf2(std::size_t n_rows,
                                                  const std::vector<std::vector<std::size_t>>& columns,
                                                  const std::vector<std::size_t>& rhs) {
    const std::size_t n_cols = columns.size();
    const std::size_t width = n_cols + 1;
    const std::size_t words = (width + 63) / 64;
    std::vector<std::uint64_t> m(n_rows * words, 0);
    auto flip = [&](std::size_t r, std::size_t c) { m[r * words + c / 64] ^= (std::uint64_t{1} << (c % 64)); };
    auto bit = [&](std::size_t r, std::size_t c) { return (m[r * words + c / 64] >> (c % 64)) & 1U; };
    for (std::size_t c = 0; c < n_cols; ++c)
        for (std::size_t r : columns[c]) flip(r, c);
    for (std::size_t r : rhs) flip(r, n_cols);

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n_cols && rank < n_rows; ++c) {
        std::size_t p = rank;
        while (p < n_rows && bit(p, c) == 0) ++p;
        if (p == n_rows) continue;
        if (p != rank)
            for (std::size_t w = 0; w < words; ++w) std::swap(m[p * words + w], m[rank * words + w]);
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r != rank && bit(r, c) != 0)
                for (std::size_t w = 0; w < words; ++w) m[r * words + w] ^= m[rank * words + w];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < n_rows; ++r)
        if (bit(r, n_cols) != 0) return std::nullopt;

    std::vector<bool> x(n_cols, false);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = bit(r, n_cols) != 0;
    return x;
}

}  // namespace cliffpar

#endif
