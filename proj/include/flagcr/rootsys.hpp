#pragma once
// Root systems in explicit coordinates. Coordinates are stored doubled so
// the half-integer roots of F4 and E6-E8 stay integral.

#include "flagcr/intlat.hpp"
#include "flagcr/ratlin.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace flagcr {

enum class RootType { A, B, C, D, G2, F4, E6, E7, E8 };

using Coords = std::vector<int>;

std::string type_name(RootType t);
RootType parse_type(const std::string& s);

/// Values of E on the simple roots, i.e. coordinates in the fundamental-coweight basis.
struct GradingElement {
    IntVec values;
    bool operator==(const GradingElement&) const = default;
};

class RootSystem {
public:
    RootType type() const { return type_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return dim_; }
    std::size_t size() const { return roots_.size(); }
    std::string label() const;

    const Coords& root(int i) const { return roots_[i]; }
    const std::vector<Coords>& roots() const { return roots_; }
    int index_of(const Coords& c) const;
    int neg(int i) const { return neg_[i]; }
    /// Index of alpha+beta, or -1 when the sum is not a root.
    int sum(int a, int b) const { return sum_[a * roots_.size() + b]; }
    /// Four times the inner product (dot of doubled coordinates).
    int dot4(int a, int b) const { return dot4_[a * roots_.size() + b]; }
    Rat inner(int a, int b) const { return frac(dot4(a, b), 4); }
    int cartan(int a, int b) const { return 2 * dot4(a, b) / dot4(b, b); }  // <a, b^vee>
    bool is_long(int a) const { return dot4(a, a) == max_len4_; }

    const std::vector<int>& simple() const { return simple_; }
    bool is_positive(int a) const { return positive_[a]; }
    /// Coordinates of root a in the simple-root basis.
    const std::vector<int>& coeffs(int a) const { return coeffs_[a]; }
    int height(int a) const;

    /// Fundamental coweights as ambient rational vectors (original scale).
    const std::vector<RatVec>& coweight_basis() const { return coweights_; }

    Int evaluate(int a, const GradingElement& e) const;
    RatVec ambient(int a) const;  // original (undoubled) coordinates

    /// Grading element from an ambient vector H; nullopt unless all alpha(H) are integers.
    std::optional<GradingElement> grading_from_ambient(const RatVec& h) const;
    RatVec grading_to_ambient(const GradingElement& e) const;
    /// Solve (f_k|H) = v_k with H in the span of the roots.
    std::optional<GradingElement> grading_from_pairings(const std::vector<std::pair<RatVec, Rat>>& eqs) const;

    friend std::shared_ptr<const RootSystem> build_root_system(RootType, int);

private:
    void finalize();
    RootType type_{};
    int rank_ = 0, dim_ = 0, max_len4_ = 0;
    std::vector<Coords> roots_;
    std::map<Coords, int> index_;
    std::vector<int> neg_, sum_, dot4_, simple_;
    std::vector<bool> positive_;
    std::vector<std::vector<int>> coeffs_;
    std::vector<RatVec> coweights_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// rank is the Lie rank (A2 has ambient dimension 3). Ignored for exceptional types.
RootSystemPtr build_root_system(RootType t, int rank = 0);
int default_rank(RootType t);

Rat inner(const Coords& a, const Coords& b);

/// Sorted list of root indices.
using RootSet = std::vector<int>;
RootSet make_set(std::vector<int> idx);
RootSet to_set(const RootSystem& r, const std::vector<Coords>& cs);  // throws on non-roots
RootSet negate(const RootSystem& r, const RootSet& q);
RootSet set_union(const RootSet& a, const RootSet& b);
RootSet set_minus(const RootSet& a, const RootSet& b);
bool contains(const RootSet& q, int i);

// Coordinate builders for the notation e_i, beta_{...}, v6, v7 (indices 1-based).
namespace roots {
Coords e(int dim, int i, int scale = 1);
Coords add(const Coords& a, const Coords& b);
Coords sub(const Coords& a, const Coords& b);
Coords neg(const Coords& a);
Coords scale(const Coords& a, int k);
Coords ei_ej(int dim, int i, int j, int si = 1, int sj = 1);
/// beta_0 - sum_{i in I} e_i in R^8: (1/2)(1,...,1) minus the listed unit vectors.
Coords beta(std::initializer_list<int> idx);
Coords beta(const std::vector<int>& idx);
Coords v7();  // e8 - e7
Coords v6();  // e8 - e7 - e6
}  // namespace roots

std::string root_str(const RootSystem& r, int i);
std::string set_str(const RootSystem& r, const RootSet& q);

}  // namespace flagcr
