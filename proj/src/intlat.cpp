#include "flagcr/intlat.hpp"

#include <sstream>
#include <stdexcept>

namespace flagcr {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& vals)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (vals.size() != rows * cols) throw std::invalid_argument("IntMatrix: size mismatch");
    for (std::size_t k = 0; k < vals.size(); ++k) data_[k] = vals[k];
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: product dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("IntMatrix: vector dimension mismatch");
    IntVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntVec IntMatrix::row(std::size_t i) const {
    return IntVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}
void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}
void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += k * (*this)(b, j);
}
void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += k * (*this)(i, b);
}
void IntMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}
void IntMatrix::negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r < 0) r += abs(m);
    return r;
}

static Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int determinant(const IntMatrix& in) {
    if (in.rows() != in.cols()) throw std::invalid_argument("determinant: not square");
    // Bareiss
    IntMatrix m = in;
    const std::size_t n = m.rows();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

SmithForm smith_normal_form(const IntMatrix& in) {
    SmithForm f{in, IntMatrix::identity(in.rows()), IntMatrix::identity(in.cols()), 0};
    IntMatrix& a = f.S;
    const std::size_t R = a.rows(), C = a.cols();

    auto row_swap = [&](std::size_t x, std::size_t y) { a.swap_rows(x, y); f.U.swap_rows(x, y); };
    auto col_swap = [&](std::size_t x, std::size_t y) { a.swap_cols(x, y); f.V.swap_cols(x, y); };
    auto row_add = [&](std::size_t x, std::size_t y, const Int& k) { a.add_row(x, y, k); f.U.add_row(x, y, k); };
    auto col_add = [&](std::size_t x, std::size_t y, const Int& k) { a.add_col(x, y, k); f.V.add_col(x, y, k); };

    std::size_t t = 0;
    for (; t < R && t < C; ++t) {
        // smallest nonzero pivot in the trailing block
        std::size_t pi = R, pj = C;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (a(i, j) != 0 && (pi == R || abs(a(i, j)) < abs(a(pi, pj)))) { pi = i; pj = j; }
        if (pi == R) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < R; ++i)
                if (a(i, t) != 0) row_add(i, t, -floor_div(a(i, t), a(t, t)));
            for (std::size_t j = t + 1; j < C; ++j)
                if (a(t, j) != 0) col_add(j, t, -floor_div(a(t, j), a(t, t)));
            // remainders left: move the smallest into the pivot and go again
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < R; ++i)
                if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) { bi = i; bj = t; }
            for (std::size_t j = t + 1; j < C; ++j)
                if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) { bi = t; bj = j; }
            for (std::size_t i = t + 1; i < R && !dirty; ++i) dirty = a(i, t) != 0;
            for (std::size_t j = t + 1; j < C && !dirty; ++j) dirty = a(t, j) != 0;
            if (dirty) {
                row_swap(t, bi);
                col_swap(t, bj);
                continue;
            }
            // divisibility of the trailing block
            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) { bad = i; break; }
            if (bad == R) break;
            row_add(t, bad, 1);
        }
        if (a(t, t) < 0) { a.negate_row(t); f.U.negate_row(t); }
    }
    f.rank = t;
    return f;
}

LinearSystem::LinearSystem(const IntMatrix& a) : a_(a), snf_(smith_normal_form(a)) {
    for (std::size_t j = snf_.rank; j < a.cols(); ++j) {
        IntVec k(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) k[i] = snf_.V(i, j);
        kernel_.push_back(std::move(k));
    }
}

std::optional<DiophantineSolution> LinearSystem::solve(const IntVec& b) const {
    if (b.size() != a_.rows()) throw std::invalid_argument("solve: rhs dimension mismatch");
    IntVec c = snf_.U * b;
    IntVec y(a_.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < snf_.rank) {
            const Int& d = snf_.S(i, i);
            if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
            Int q;
            mpz_divexact(q.get_mpz_t(), c[i].get_mpz_t(), d.get_mpz_t());
            y[i] = q;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return DiophantineSolution{snf_.V * y, kernel_};
}

std::optional<IntVec> LinearSystem::solve_mod(const IntVec& b, const Int& m) const {
    if (m < 2) throw std::invalid_argument("solve_mod: modulus must be >= 2");
    if (b.size() != a_.rows()) throw std::invalid_argument("solve_mod: rhs dimension mismatch");
    IntVec c = snf_.U * b;
    IntVec y(a_.cols());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int ci = mod_floor(c[i], m);
        if (i < snf_.rank) {
            Int d = mod_floor(snf_.S(i, i), m);
            Int g = gcd(d, m);
            if (!mpz_divisible_p(ci.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
            Int mg = m / g;
            if (mg == 1) { y[i] = 0; continue; }
            Int inv;
            Int dg = mod_floor(d / g, mg);
            mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), mg.get_mpz_t());
            y[i] = mod_floor((ci / g) * inv, mg);
        } else if (ci != 0) {
            return std::nullopt;
        }
    }
    IntVec x = snf_.V * y;
    for (auto& v : x) v = mod_floor(v, m);
    return x;
}

std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& a, const IntVec& b) {
    return LinearSystem(a).solve(b);
}

std::optional<IntVec> solve_congruence(const IntMatrix& a, const IntVec& b, const Int& m) {
    return LinearSystem(a).solve_mod(b, m);
}

Int lattice_coset_gcd(const std::vector<IntVec>& basis, const IntVec& weight) {
    Int g = 0;
    for (const auto& v : basis) {
        if (v.size() != weight.size()) throw std::invalid_argument("lattice_coset_gcd: dimension mismatch");
        Int s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * weight[i];
        g = gcd(g, s);
    }
    return g;
}

IntMatrix hermite_normal_form(const IntMatrix& in) {
    IntMatrix a = in;
    const std::size_t R = a.rows(), C = a.cols();
    std::size_t r = 0;
    for (std::size_t j = 0; j < C && r < R; ++j) {
        // gcd-reduce column j among rows r..R-1
        for (;;) {
            std::size_t p = R;
            for (std::size_t i = r; i < R; ++i)
                if (a(i, j) != 0 && (p == R || abs(a(i, j)) < abs(a(p, j)))) p = i;
            if (p == R) break;
            a.swap_rows(r, p);
            bool more = false;
            for (std::size_t i = r + 1; i < R; ++i)
                if (a(i, j) != 0) {
                    a.add_row(i, r, -floor_div(a(i, j), a(r, j)));
                    if (a(i, j) != 0) more = true;
                }
            if (!more) break;
        }
        if (r >= R || a(r, j) == 0) continue;
        if (a(r, j) < 0) a.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) a.add_row(i, r, -floor_div(a(i, j), a(r, j)));
        ++r;
    }
    IntMatrix h(r, C);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) h(i, j) = a(i, j);
    return h;
}

bool lattice_contains(const IntMatrix& m, const IntVec& v) {
    IntMatrix h = hermite_normal_form(m);
    IntVec w = v;
    std::size_t r = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (r < h.rows() && h(r, j) != 0) {
            if (!mpz_divisible_p(w[j].get_mpz_t(), h(r, j).get_mpz_t())) return false;
            Int q = w[j] / h(r, j);
            for (std::size_t k = 0; k < w.size(); ++k) w[k] -= q * h(r, k);
            ++r;
        } else if (w[j] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace flagcr
