#pragma once
// Closed root sets adapted to a real form: the conjugation on roots, the
// partition condition Q + conj(Q) = R, and the structures built on it.

#include "flagcr/gauss.hpp"
#include "flagcr/rootsys.hpp"
#include "flagcr/weyl.hpp"

#include <stdexcept>

namespace flagcr {

struct InvalidConjugation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PreconditionViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoRegularVector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Involution of the ambient space permuting the roots; alpha -> conj(alpha).
struct RootConjugation {
    std::string name;
    RatMat sigma;
    Perm induced;  // root index -> index of its conjugate
};

/// Validates sigma^2 = 1, that sigma permutes the roots and preserves the inner product.
RootConjugation make_conjugation(const RootSystem& r, const RatMat& sigma, std::string name = "custom");
/// Compact form: sigma = -Id.
RootConjugation compact_conjugation(const RootSystem& r);
/// sl(n, R) realized by A -> conj(a_{n+1-i, n+1-j}): sigma(v)_k = v_{n+1-k}. Type A only.
RootConjugation a_reverse_conjugation(const RootSystem& r);
/// "compact" or "a-reverse:m=<m>" (the latter requires type A_{2m-1}).
RootConjugation parse_conjugation(const RootSystem& r, const std::string& spec);

/// Every root fixed by the conjugation.
RootSet real_roots(const RootSystem& r, const RootConjugation& c);

bool is_closed(const RootSystem& r, const RootSet& q);
RootSet conjugate(const RootConjugation& c, const RootSet& q);

/// Q closed, Q and conj(Q) disjoint and covering R. A non-closed Q gives false.
bool check_eq_ha(const RootSystem& r, const RootSet& q, const RootConjugation& c);

struct RNSplit {
    RootSet reductive, nilpotent;
};
RNSplit split_r_n(const RootSystem& r, const RootSet& q);

/// Strong orthogonality: no sum and no difference of an a-root and a b-root is a root.
bool strongly_orthogonal(const RootSystem& r, const RootSet& a, const RootSet& b);
/// Closed with P and -P covering R.
bool is_parabolic(const RootSystem& r, const RootSet& p);

struct LemmaReport {
    RootSet q_r, q_n, conj_q_r, parabolic;
    bool closed_qr_conj_q = false;     // Q^r + conj(Q)
    bool closed_qr_conj_qn = false;    // Q^r + conj(Q)^n
    bool strongly_orthogonal = false;  // Q^r vs conj(Q)^r
    bool parabolic_ok = false;         // P = Q + conj(Q)^r
    bool nilradical_ok = false;        // P^n = Q^n
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
/// Throws PreconditionViolation unless check_eq_ha holds.
LemmaReport verify_lemma_lb(const RootSystem& r, const RootSet& q, const RootConjugation& c);

struct AdaptedSystem {
    std::vector<int> simple;  // alpha_1 .. alpha_l in the adapted labelling
    int p = 0;                // alpha_1..alpha_p span Q^r
    RatVec a0, a1;            // ambient vectors; A = a0 + eps * a1
    Rat eps;
    std::vector<std::string> failures;  // empty when all five conditions hold
};
/// Simple system of {alpha : alpha(A0 + eps A1) > 0}, labelled so that the
/// first p roots are simple for Q^r and conj(alpha_i) = -alpha_{l+1-i} for i <= p.
AdaptedSystem adapted_simple_system(const RootSystem& r, const RootSet& q, const RootConjugation& c);
/// Re-checks the five conditions on a labelled simple system; returns the failures.
std::vector<std::string> check_adapted(const RootSystem& r, const RootSet& q, const RootConjugation& c,
                                       const std::vector<int>& simple, int p);

/// The Cartan subalgebra as C^dim (ambient coordinates, original scale);
/// conj(H) = sigma(conj H).
struct MaxStructureReport {
    std::size_t dim_m = 0, expected_dim = 0;
    bool m_in_cartan = false;      // vectors lie in the span of the roots
    bool dim_ok = false;
    bool coroots_in_m = false;     // the Q^r coroot span sits inside m
    bool m_conj_trivial = false;   // m and conj(m) meet in 0
    bool is_subalgebra = false;
    std::size_t cr_dim = 0, cr_codim = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
MaxStructureReport regular_max_structure(const RootSystem& r, const RootConjugation& c, const RootSet& q,
                                         const std::vector<GVec>& m_basis);

}  // namespace flagcr
