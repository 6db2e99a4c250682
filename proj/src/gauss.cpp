#include "flagcr/gauss.hpp"

#include <stdexcept>

namespace flagcr {

Gauss Gauss::operator/(const Gauss& o) const {
    Rat n = o.norm();
    if (n == 0) throw std::domain_error("Gauss: division by zero");
    Gauss t = *this * o.conj();
    return {t.re / n, t.im / n};
}

std::string Gauss::str() const {
    auto rs = [](const Rat& r) { return r.get_str(); };
    if (im == 0) return rs(re);
    std::string ip = im == 1 ? "i" : im == -1 ? "-i" : rs(im) + "i";
    if (re == 0) return ip;
    return rs(re) + (im > 0 ? "+" : "") + ip;
}

Gauss parse_gauss(const std::string& s0) {
    std::string s;
    for (char c : s0)
        if (c != ' ') s += c;
    if (s.empty()) throw std::invalid_argument("empty number");
    auto rat = [&](const std::string& t) {
        if (t.empty() || t == "+") return Rat(1);
        if (t == "-") return Rat(-1);
        Rat r;
        if (r.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) throw std::invalid_argument("bad number: " + s0);
        r.canonicalize();
        return r;
    };
    if (s.back() != 'i') return Gauss(rat(s));
    std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not the leading one
    std::size_t cut = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            cut = k;
            break;
        }
    if (cut == std::string::npos) return Gauss(0, rat(body));
    return Gauss(rat(body.substr(0, cut)), rat(body.substr(cut)));
}

GVec g_zero(std::size_t n) { return GVec(n); }
GVec g_unit(std::size_t n, std::size_t i) {
    GVec v(n);
    v[i] = 1;
    return v;
}
GVec g_add(const GVec& a, const GVec& b) {
    GVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}
GVec g_sub(const GVec& a, const GVec& b) {
    GVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}
GVec g_scale(const Gauss& c, const GVec& a) {
    GVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}
GVec g_conj(const GVec& a) {
    GVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].conj();
    return r;
}
bool g_is_zero(const GVec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}
GVec g_apply(const GMat& m, const GVec& v) {
    GVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero() && !m[i][j].is_zero()) r[i] += m[i][j] * v[j];
    return r;
}
GMat g_mul(const GMat& a, const GMat& b) {
    std::size_t cols = b.empty() ? 0 : b[0].size();
    GMat r(a.size(), GVec(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}
GMat g_identity(std::size_t n) {
    GMat m(n, GVec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}
GMat g_transpose(const GMat& m) {
    if (m.empty()) return {};
    GMat t(m[0].size(), GVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}
GMat g_conj(const GMat& m) {
    GMat r;
    for (const auto& row : m) r.push_back(g_conj(row));
    return r;
}
GMat g_from_rat(const RatMat& m) {
    GMat r;
    for (const auto& row : m) {
        GVec g;
        for (const auto& x : row) g.emplace_back(x);
        r.push_back(g);
    }
    return r;
}

std::vector<std::size_t> g_rref(GMat& m) {
    std::vector<std::size_t> piv;
    if (m.empty()) return piv;
    std::size_t cols = m[0].size(), row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Gauss inv = Gauss(1) / m[row][c];
        for (auto& x : m[row]) x = x * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].is_zero()) continue;
            Gauss f = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        piv.push_back(c);
        ++row;
    }
    m.resize(row);
    return piv;
}

std::size_t g_rank(GMat m) { return g_rref(m).size(); }

std::vector<GVec> g_kernel(const GMat& a, std::size_t cols) {
    GMat m = a;
    auto piv = g_rref(m);
    std::vector<bool> is_piv(cols);
    for (auto p : piv) is_piv[p] = true;
    std::vector<GVec> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        GVec v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(v);
    }
    return out;
}

std::optional<GVec> g_solve(const GMat& a, const GVec& b, std::size_t cols) {
    GMat m = a;
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto piv = g_rref(m);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    GVec x(cols);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][cols];
    return x;
}

std::optional<GMat> g_inverse(const GMat& m) {
    std::size_t n = m.size();
    GMat a = m;
    for (std::size_t i = 0; i < n; ++i) {
        a[i].resize(2 * n);
        a[i][n + i] = 1;
    }
    auto piv = g_rref(a);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    GMat inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = GVec(a[i].begin() + n, a[i].end());
    return inv;
}

Subspace Subspace::span(const std::vector<GVec>& vs, std::size_t n) {
    Subspace s(n);
    s.rows_ = vs;
    for (const auto& v : vs)
        if (v.size() != n) throw std::invalid_argument("Subspace: vector of wrong length");
    s.pivots_ = g_rref(s.rows_);
    return s;
}

Subspace Subspace::full(std::size_t n) {
    std::vector<GVec> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(g_unit(n, i));
    return span(vs, n);
}

GVec Subspace::reduce(const GVec& v) const {
    GVec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Gauss f = r[pivots_[k]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) r[j] -= f * rows_[k][j];
    }
    return r;
}

std::optional<GVec> Subspace::coords(const GVec& v) const {
    if (!contains(v)) return std::nullopt;
    // echelon rows have a unit at their own pivot and zeros at the others
    GVec c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

bool Subspace::contains(const GVec& v) const { return g_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    for (const auto& v : o.rows_)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
    std::vector<GVec> vs = rows_;
    vs.insert(vs.end(), o.rows_.begin(), o.rows_.end());
    return span(vs, n_);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // a.U = b.V  <=>  (a, b) in ker [U^T | -V^T]
    std::size_t du = dim(), dv = o.dim();
    if (du == 0 || dv == 0) return Subspace(n_);
    GMat m(n_, GVec(du + dv));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < du; ++k) m[i][k] = rows_[k][i];
        for (std::size_t k = 0; k < dv; ++k) m[i][du + k] = -o.rows_[k][i];
    }
    std::vector<GVec> out;
    for (const auto& ab : g_kernel(m, du + dv)) {
        GVec v(n_);
        for (std::size_t k = 0; k < du; ++k)
            if (!ab[k].is_zero()) v = g_add(v, g_scale(ab[k], rows_[k]));
        out.push_back(v);
    }
    return span(out, n_);
}

Subspace Subspace::conj_by(const GMat& c) const {
    std::vector<GVec> vs;
    for (const auto& v : rows_) vs.push_back(g_apply(c, g_conj(v)));
    return span(vs, c.size());
}

Subspace Subspace::image(const GMat& m) const {
    std::vector<GVec> vs;
    for (const auto& v : rows_) vs.push_back(g_apply(m, v));
    return span(vs, m.size());
}

Subspace Subspace::preimage(const GMat& m, const Subspace& target, std::size_t n) {
    // m v reduced modulo target vanishes: linear in v
    std::vector<GVec> cols;
    for (std::size_t j = 0; j < n; ++j) {
        GVec col(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) col[i] = m[i][j];
        cols.push_back(target.reduce(col));
    }
    GMat a(m.size(), GVec(n));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
    return span(g_kernel(a, n), n);
}

}  // namespace flagcr
