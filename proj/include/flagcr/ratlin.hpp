#pragma once
// Small dense linear algebra over the rationals.

#include "flagcr/intlat.hpp"

#include <optional>
#include <vector>

namespace flagcr {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major list of rows

RatMat rat_identity(std::size_t n);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatVec rat_apply(const RatMat& a, const RatVec& v);
RatMat rat_transpose(const RatMat& a);
Rat rat_dot(const RatVec& a, const RatVec& b);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rat_rref(RatMat& m);
std::size_t rat_rank(RatMat m);
std::optional<RatMat> rat_inverse(const RatMat& m);
/// Basis of {x : a x = 0}.
std::vector<RatVec> rat_kernel(const RatMat& a, std::size_t cols);
/// Some x with a x = b, or nothing when inconsistent.
std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b, std::size_t cols);

}  // namespace flagcr
