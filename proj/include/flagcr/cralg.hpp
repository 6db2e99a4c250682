#pragma once
// CR algebras (g0, q) given by structure constants over Q(i). Real subspaces
// of g0 are carried by their complexifications, which are conj-stable.

#include "flagcr/gauss.hpp"
#include "flagcr/realform.hpp"
#include "flagcr/rootsys.hpp"

#include <map>
#include <stdexcept>

namespace flagcr {

struct LieValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotADerivation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAnAutomorphism : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonExactExponential : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAnIdeal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAHomomorphism : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotCharacteristic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CrPrecondition : PreconditionViolation {
    using PreconditionViolation::PreconditionViolation;
};

/// A complex Lie algebra g with an antilinear involutive automorphism
/// conj(v) = C * conj_entries(v); its fixed points form g0.
class LieAlgebra {
public:
    struct Term {
        std::size_t k;
        Gauss c;
    };
    /// brackets[i][j] lists [e_i, e_j]; validated for antisymmetry, Jacobi and the conj axioms.
    static LieAlgebra create(std::vector<std::string> labels, std::vector<std::vector<GVec>> brackets, GMat conj);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const GMat& conj_matrix() const { return conj_; }

    GVec bracket(const GVec& x, const GVec& y) const;
    GVec basis_bracket(std::size_t i, std::size_t j) const;
    GVec conj(const GVec& v) const;
    Subspace conj(const Subspace& s) const { return s.conj_by(conj_); }
    /// Matrix of ad(x).
    GMat ad(const GVec& x) const;
    /// Span of [a, b].
    Subspace bracket(const Subspace& a, const Subspace& b) const;
    /// Subalgebra generated by s.
    Subspace generated(const Subspace& s) const;
    bool is_subalgebra(const Subspace& s) const;
    bool is_ideal(const Subspace& s) const;
    bool is_conj_stable(const Subspace& s) const { return conj(s) == s; }
    /// Killing form tr(ad x ad y) on the basis.
    GMat killing() const;
    /// The algebra restricted to a subalgebra, in the echelon basis of s.
    LieAlgebra restrict_to(const Subspace& s) const;
    /// Entries of a linear map are checked against the bracket and conj.
    bool is_derivation(const GMat& d) const;
    bool is_automorphism(const GMat& a) const;
    bool commutes_with_conj(const GMat& a) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<Term>>> c_;
    GMat conj_;
};

class CRAlgebra {
public:
    /// Throws LieValidationError unless q is a subalgebra.
    CRAlgebra(LieAlgebra g, Subspace q);
    const LieAlgebra& algebra() const { return g_; }
    const Subspace& q() const { return q_; }
    Subspace qbar() const { return g_.conj(q_); }
    /// Complexified isotropy q and conj(q).
    Subspace q_cap_qbar() const { return q_.intersect(qbar()); }
    Subspace q_plus_qbar() const { return q_ + qbar(); }

private:
    LieAlgebra g_;
    Subspace q_;
};

struct CRDims {
    std::size_t cr_dim = 0, cr_codim = 0;
};
CRDims cr_dim_codim(const CRAlgebra& a);

bool is_fundamental_cr(const CRAlgebra& a);
/// {Z in q : [Z, conj q] in q + conj q}
Subspace levi_kernel(const CRAlgebra& a);
bool is_levi_nondegenerate(const CRAlgebra& a);
/// Largest conj-stable ideal of g inside q and conj(q) (complexified largest ideal of g0 in i0).
Subspace largest_ideal_in_isotropy(const CRAlgebra& a);
bool is_effective(const CRAlgebra& a);

/// Basis of q modulo q and conj(q), chosen from the echelon basis of q.
std::vector<GVec> levi_basis(const CRAlgebra& a);
/// [-i xi([Z_a, conj Z_b])] on levi_basis; xi given by its values on the basis of g.
GMat scalar_levi_form(const CRAlgebra& a, const GVec& xi);
bool is_hermitian(const GMat& m);
/// Class of i[conj Z, Z] modulo q + conj q (reduced representative).
GVec vector_levi_form(const CRAlgebra& a, const GVec& z);

/// J(q) in q and Z - iJZ in q and conj(q), for a derivation J of g0 (complex-linear extension).
bool check_j_property(const CRAlgebra& a, const GMat& j);
/// exp(pi J / 2) for semisimple J with spectrum in iZ; acts by i^k on the ik-eigenspace.
GMat upsilon_from_j(const LieAlgebra& g, const GMat& j);
/// Upsilon(q) = q and Z - i Upsilon Z in q and conj(q), for an automorphism of g0.
bool check_weak_j(const CRAlgebra& a, const GMat& upsilon);

struct SymmetryReport {
    bool involution = false, automorphism = false, preserves_g0 = false;
    bool fixed_in_qnat = false, preserves_q = false, z_plus_lambda_z = false;
    bool grading_q_splits = false, even_q_in_isotropy = false;
    bool brackets_in_isotropy = false;  // [q, q] in q and conj(q); informational, not part of ok()
    bool almost_compact = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
SymmetryReport check_cr_symmetric(const CRAlgebra& a, const GMat& lambda);

/// Negative semidefinite Killing form on i0, with its radical inside the radical of the Killing form.
bool isotropy_almost_compact(const CRAlgebra& a);

struct Fibration {
    bool compatible = false;
    std::optional<CRAlgebra> base, fiber;
};
/// Condition (q and conj q) + a = (q + a) and (conj q + a), with base (g0, q + a) and fiber (a0, q and a).
Fibration fibration_compatible(const CRAlgebra& a, const Subspace& ideal);
/// Asserts compatibility under a weak-J automorphism preserving the ideal; throws on violated preconditions.
bool weak_j_implies_compatible(const CRAlgebra& a, const Subspace& ideal, const GMat& upsilon);

struct Anticanonical {
    Subspace normalizer;  // complexified real normalizer a
    Subspace q_prime;     // q + a
    bool q_prime_real_part_is_a = false, submersion = false, within_normalizer = false;
    bool fiber_identity = false, fiber_levi_flat = false;
    bool a_is_g = false, q_prime_is_g = false, q_is_ideal = false, a_is_ideal = false;
    std::vector<std::string> failures;
};
Anticanonical anticanonical(const CRAlgebra& a);

enum class MorphismKind { NotAMorphism, Morphism, Immersion, Submersion, LocalIsomorphism };
std::string morphism_name(MorphismKind k);
struct MorphismResult {
    MorphismKind kind = MorphismKind::NotAMorphism;
    bool immersion = false, submersion = false;
    Subspace fiber_g, fiber_q;  // complexified g''_0 and q''
};
/// phi: target.dim x source.dim complex matrix of a real homomorphism.
MorphismResult morphism_classify(const CRAlgebra& source, const CRAlgebra& target, const GMat& phi);

struct ClosureExtension {
    CRAlgebra extended;
    MorphismKind kind;
    bool fiber_levi_flat = false;
};
/// (g0, q + i') for a conj-stable i' with q and conj q inside i', [i', i'] in q and conj q, [i', q] in q.
ClosureExtension closure_extension(const CRAlgebra& a, const Subspace& i_prime);

// ---- presets ----

struct Preset {
    std::string name;
    CRAlgebra cr;
    std::map<std::string, Subspace> ideals;
    std::map<std::string, GMat> derivations;  // J candidates
    std::string note;
};

/// Chevalley basis h_1..h_l, e_alpha (root index order) with the compact conjugation e_a -> -e_{-a}, h -> -h.
LieAlgebra chevalley_algebra(const RootSystem& r);
/// q = h + sum over q of root spaces.
CRAlgebra flag_cr_algebra(const RootSystemPtr& r, const RootSet& q);
/// J = -i ad(E) for a grading element E.
GMat flag_derivation(const RootSystem& r, const GradingElement& e);
/// lambda = Ad(exp(i pi E)): (-1)^{alpha(E)} on root spaces.
GMat flag_involution(const RootSystem& r, const GradingElement& e);

/// heisenberg, heisenberg-center, sl2, su2, su2-line, exam-bf, closure-a2,
/// flag:<type>:<label> (label with punctuation dropped, e.g. flag:G2:Q40).
Preset load_preset(const std::string& name);
std::vector<std::string> preset_names();

/// {"dim":n,"labels":[...],"c":[[i,j,k,re,im],...],"conj":[[...]],"q":[[...]],"ideals":{name:[[...]]}}
Preset preset_from_json(const std::string& text);

}  // namespace flagcr
