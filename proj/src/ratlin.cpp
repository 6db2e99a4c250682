#include "flagcr/ratlin.hpp"

#include <stdexcept>

namespace flagcr {

RatMat rat_identity(std::size_t n) {
    RatMat m(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    RatMat r(a.size(), RatVec(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("rat_mul: dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    }
    return r;
}

RatVec rat_apply(const RatMat& a, const RatVec& v) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = rat_dot(a[i], v);
    return r;
}

RatMat rat_transpose(const RatMat& a) {
    if (a.empty()) return {};
    RatMat t(a[0].size(), RatVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Rat rat_dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rat_dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<std::size_t> rat_rref(RatMat& m) {
    std::vector<std::size_t> piv;
    if (m.empty()) return piv;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    m.resize(r);
    return piv;
}

std::size_t rat_rank(RatMat m) { return rat_rref(m).size(); }

std::optional<RatMat> rat_inverse(const RatMat& m) {
    const std::size_t n = m.size();
    RatMat aug(n, RatVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("rat_inverse: not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rat_rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<RatVec> rat_kernel(const RatMat& a, std::size_t cols) {
    RatMat m = a;
    auto piv = rat_rref(m);
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        RatVec v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b, std::size_t cols) {
    RatMat aug;
    for (std::size_t i = 0; i < a.size(); ++i) {
        RatVec row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    if (aug.empty()) return RatVec(cols);
    auto piv = rat_rref(aug);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    RatVec x(cols);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
    return x;
}

}  // namespace flagcr
