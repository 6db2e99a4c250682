#pragma once
// Predicates on root sets Q: the lb conditions, fundamentality, degree
// cosets, and the Z2 / Z4 / Z gradation properties.

#include "flagcr/rootsys.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace flagcr {

bool is_lb(const RootSystem& r, const RootSet& q);
/// Every root lies in the integer span of q.
bool is_fundamental(const RootSystem& r, const RootSet& q);

/// {h : gamma has an expression over q with coefficient sum h} = base + step*Z.
struct DegreeCoset {
    bool empty = true;
    Int base = 0;  // reduced into [0, step) when step > 0
    Int step = 0;

    bool contains(const Int& h) const;
    /// Some element is congruent to t mod m.
    bool contains_mod(const Int& t, const Int& m) const;
    bool singleton() const { return !empty && step == 0; }
    bool operator==(const DegreeCoset&) const = default;
};

/// Integer relations among the roots of q, solved once and reused.
class DegreeMap {
public:
    DegreeMap(const RootSystem& r, const RootSet& q);
    DegreeCoset degree_set(int gamma) const;
    /// gcd of coefficient sums over all integer relations of q.
    const Int& relation_gcd() const { return gcd_; }

private:
    const RootSystem& r_;
    LinearSystem sys_;
    Int gcd_;
};

DegreeCoset degree_set(const RootSystem& r, const RootSet& q, int gamma);
/// Roots of the form +-(b1 - b2) with b1, b2 in q.
RootSet q_star_11(const RootSystem& r, const RootSet& q);
/// Roots whose degree coset contains h.
RootSet q_star(const RootSystem& r, const RootSet& q, const Int& h);

enum class Verdict { Holds, Fails, NotLb, NotFundamental };
std::string verdict_name(Verdict v);

struct Decision {
    Verdict verdict = Verdict::Fails;
    std::optional<GradingElement> witness;
    bool holds() const { return verdict == Verdict::Holds; }
};

struct MethodDisagreement : std::logic_error {
    using std::logic_error::logic_error;
};

/// alpha(E) = 1 mod 2 on q.
Decision is_symmetric(const RootSystem& r, const RootSet& q);
/// alpha(E) = 1 mod 4 on q.
Decision has_weak_j(const RootSystem& r, const RootSet& q);
/// alpha(E) = 1 exactly on q.
Decision has_j(const RootSystem& r, const RootSet& q);

/// Direct check of a witness: alpha(E) = 1 mod m on q (m = 0 means exactly).
bool verify_witness(const RootSystem& r, const RootSet& q, const GradingElement& e, int m);

struct PropertyReport {
    bool is_lb = false;
    bool is_fundamental = false;
    bool symmetric = false;
    bool weak_j = false;
    bool j_property = false;
    std::optional<GradingElement> witness_mod2, witness_mod4, witness_exact;
};

PropertyReport analyze(const RootSystem& r, const RootSet& q);

/// Fixed-width bitset over root indices (E8 has 240 roots).
struct RootBits {
    std::array<std::uint64_t, 4> w{};
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool none() const { return !(w[0] | w[1] | w[2] | w[3]); }
    int count() const;
    int first() const;  // -1 when empty
    RootBits operator&(const RootBits& o) const;
    RootBits operator|(const RootBits& o) const;
    RootBits without(const RootBits& o) const;
    RootSet to_set() const;
    static RootBits of(const RootSet& q);
};

/// Vertices are roots; alpha ~ beta iff beta != -alpha and alpha + beta is not a root.
struct CompatGraph {
    RootBits vertices;
    std::vector<RootBits> adj;  // indexed by root
    bool adjacent(int a, int b) const { return adj[a].test(b); }
};

CompatGraph compat_graph(const RootSystem& r, const std::optional<RootSet>& constraint = std::nullopt);

}  // namespace flagcr
