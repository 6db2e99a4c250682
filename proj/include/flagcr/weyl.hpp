#pragma once
// Weyl group and full automorphism group acting on roots and root sets.

#include "flagcr/rootsys.hpp"

#include <random>
#include <stdexcept>

namespace flagcr {

enum class Group { W, Aut };
std::string group_name(Group g);

struct OrbitBudgetExceeded : std::runtime_error {
    explicit OrbitBudgetExceeded(std::size_t n)
        : std::runtime_error("orbit budget exceeded after " + std::to_string(n) + " sets") {}
};

using Perm = std::vector<int>;

struct GroupElement {
    Perm perm;              // image of each root index
    std::vector<int> word;  // generator indices (simple reflections first, then diagram automorphisms)
};

class Weyl {
public:
    explicit Weyl(RootSystemPtr r);
    /// Shared, lazily built instance per root system.
    static const Weyl& of(const RootSystemPtr& r);

    const RootSystem& system() const { return *r_; }
    const RootSystemPtr& system_ptr() const { return r_; }
    const Perm& simple_reflection(int i) const { return reflections_[i]; }
    /// Non-identity diagram automorphisms as root permutations.
    const std::vector<Perm>& diagram_automorphisms() const { return diagram_; }
    std::vector<Perm> generators(Group g) const;

    Perm reflection_perm(int root) const;
    GroupElement random_element(Group g, std::mt19937_64& rng, int length = 40) const;
    RatMat matrix(const Perm& p) const;  // ambient matrix of the automorphism
    bool in_weyl(const Perm& p) const;
    /// Linear extension of a root-to-root assignment on a spanning family; nullopt unless it permutes the roots.
    std::optional<Perm> extend_isometry(const std::vector<int>& from, const std::vector<int>& to) const;

private:
    RootSystemPtr r_;
    std::vector<Perm> reflections_;
    std::vector<Perm> diagram_;
};

RatVec reflect(const RootSystem& r, int alpha, const RatVec& v);
Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& p);
RootSet apply_perm(const Perm& p, const RootSet& q);

constexpr std::size_t kDefaultOrbitBudget = 1000000;

std::vector<RootSet> orbit(const Weyl& w, const RootSet& q, Group g, std::size_t budget = kDefaultOrbitBudget);
RootSet canonical_form(const Weyl& w, const RootSet& q, Group g, std::size_t budget = kDefaultOrbitBudget);

/// Invariant fingerprint of a root set (equal for equivalent sets).
std::vector<std::vector<int>> fingerprint(const RootSystem& r, const RootSet& q);
bool sets_equivalent(const Weyl& w, const RootSet& a, const RootSet& b, Group g);

}  // namespace flagcr
