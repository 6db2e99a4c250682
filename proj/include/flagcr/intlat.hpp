#pragma once
// Exact integer linear algebra over arbitrary-precision integers.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace flagcr {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& vals);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntVec operator*(const IntVec& v) const;
    bool operator==(const IntMatrix& o) const = default;
    IntMatrix transposed() const;
    IntVec row(std::size_t i) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += k * row b
    void add_row(std::size_t a, std::size_t b, const Int& k);
    void add_col(std::size_t a, std::size_t b, const Int& k);
    void negate_row(std::size_t a);
    void negate_col(std::size_t a);

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Determinant by fraction-free elimination (square input only).
Int determinant(const IntMatrix& m);

struct SmithForm {
    IntMatrix S, U, V;  // U*M*V = S
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

struct DiophantineSolution {
    IntVec particular;
    std::vector<IntVec> kernel_basis;
};

/// Reusable solver: one Smith decomposition, many right-hand sides.
class LinearSystem {
public:
    explicit LinearSystem(const IntMatrix& a);
    std::optional<DiophantineSolution> solve(const IntVec& b) const;
    std::optional<IntVec> solve_mod(const IntVec& b, const Int& m) const;
    const std::vector<IntVec>& kernel_basis() const { return kernel_; }
    std::size_t rank() const { return snf_.rank; }

private:
    IntMatrix a_;
    SmithForm snf_;
    std::vector<IntVec> kernel_;
};

std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& a, const IntVec& b);
std::optional<IntVec> solve_congruence(const IntMatrix& a, const IntVec& b, const Int& m);

/// gcd of <weight, k> over the lattice spanned by `basis`; 0 for an empty basis.
Int lattice_coset_gcd(const std::vector<IntVec>& basis, const IntVec& weight);

/// Row-style Hermite normal form of the lattice spanned by the rows (zero rows dropped).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Membership of v in the integer row span of m.
bool lattice_contains(const IntMatrix& m, const IntVec& v);

Int mod_floor(const Int& a, const Int& m);

/// Canonicalized fraction p/q.
inline Rat frac(long p, long q) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace flagcr
