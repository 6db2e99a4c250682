#pragma once
// Exact arithmetic over Q(i) and subspaces of Q(i)^n in canonical echelon form.

#include "flagcr/ratlin.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flagcr {

struct Gauss {
    Rat re, im;
    Gauss() = default;
    Gauss(long r) : re(r) {}
    Gauss(Rat r, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}
    static Gauss I() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Gauss conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    Gauss operator+(const Gauss& o) const { return {re + o.re, im + o.im}; }
    Gauss operator-(const Gauss& o) const { return {re - o.re, im - o.im}; }
    Gauss operator-() const { return {-re, -im}; }
    Gauss operator*(const Gauss& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Gauss operator/(const Gauss& o) const;
    Gauss& operator+=(const Gauss& o) { re += o.re; im += o.im; return *this; }
    Gauss& operator-=(const Gauss& o) { re -= o.re; im -= o.im; return *this; }
    bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }

    std::string str() const;  // "a", "bi", "a+bi" with rational a, b
};

/// Inverse of str(); accepts "3/2", "-i", "1-2/3i".
Gauss parse_gauss(const std::string& s);

using GVec = std::vector<Gauss>;
using GMat = std::vector<GVec>;  // row-major

GVec g_zero(std::size_t n);
GVec g_unit(std::size_t n, std::size_t i);
GVec g_add(const GVec& a, const GVec& b);
GVec g_sub(const GVec& a, const GVec& b);
GVec g_scale(const Gauss& c, const GVec& a);
GVec g_conj(const GVec& a);
bool g_is_zero(const GVec& a);
GVec g_apply(const GMat& m, const GVec& v);
GMat g_mul(const GMat& a, const GMat& b);
GMat g_identity(std::size_t n);
GMat g_transpose(const GMat& m);
GMat g_conj(const GMat& m);
GMat g_from_rat(const RatMat& m);

std::vector<std::size_t> g_rref(GMat& m);
std::size_t g_rank(GMat m);
std::vector<GVec> g_kernel(const GMat& a, std::size_t cols);
std::optional<GVec> g_solve(const GMat& a, const GVec& b, std::size_t cols);
std::optional<GMat> g_inverse(const GMat& m);

/// Complex subspace of C^n; rows kept in reduced row echelon form, so equality is structural.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t n) : n_(n) {}
    static Subspace span(const std::vector<GVec>& vs, std::size_t n);
    static Subspace full(std::size_t n);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<GVec>& basis() const { return rows_; }

    bool contains(const GVec& v) const;
    bool contains(const Subspace& o) const;
    /// Representative of v modulo the subspace (zero iff contained).
    GVec reduce(const GVec& v) const;
    /// Coefficients of v in basis(); nothing when v is outside.
    std::optional<GVec> coords(const GVec& v) const;

    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// Image under an antilinear map v -> c * conj(v).
    Subspace conj_by(const GMat& c) const;
    Subspace image(const GMat& m) const;
    /// {v : m v in target}
    static Subspace preimage(const GMat& m, const Subspace& target, std::size_t n);

    bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    std::size_t n_ = 0;
    std::vector<GVec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace flagcr
