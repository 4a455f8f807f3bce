#ifndef CLIFFPAR_LINALG_HPP
#define CLIFFPAR_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cliffpar/fields.hpp"

namespace cliffpar {

template <class E>
using Rows = std::vector<std::vector<E>>;

/// In-place reduced row echelon form; returns the pivot columns.
template <BaseField F>
std::vector<std::size_t> rref(const F& field, Rows<typename F::element>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const auto inv = field.one() / m[r][c];
        for (auto& e : m[r]) e = e * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const auto f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

/// Basis of {x : m x = 0}.
template <BaseField F>
Rows<typename F::element> nullspace(const F& field, Rows<typename F::element> m, std::size_t cols) {
    const auto pivots = rref(field, m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Rows<typename F::element> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::element> v(cols, field.zero());
        v[free] = field.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square matrix, or nothing when singular.
template <BaseField F>
std::optional<Rows<typename F::element>> invert(const F& field, const Rows<typename F::element>& a) {
    const std::size_t n = a.size();
    Rows<typename F::element> aug(n, std::vector<typename F::element>(2 * n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = field.one();
    }
    const auto pivots = rref(field, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Rows<typename F::element> inv(n, std::vector<typename F::element>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

/// Determinant by fraction-tracking elimination.
template <BaseField F>
typename F::element determinant(const F& field, Rows<typename F::element> m) {
    const std::size_t n = m.size();
    auto det = field.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return field.zero();
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        const auto inv = field.one() / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const auto f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

template <BaseField F>
Rows<typename F::element> matmul(const F& field, const Rows<typename F::element>& a, const Rows<typename F::element>& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    Rows<typename F::element> out(n, std::vector<typename F::element>(m, field.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][l] * b[l][j];
        }
    return out;
}

}  // namespace cliffpar

#endif
