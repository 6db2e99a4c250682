#pragma once
// Enumeration of maximal lb-sets, the per-type catalogs, the Z2-grading
// tables of E6-E8 and the anchored constructions inside their odd parts.

#include "flagcr/qsets.hpp"
#include "flagcr/weyl.hpp"

#include <functional>
#include <map>

namespace flagcr {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No single extra root keeps q an lb-set.
bool is_maximal_lb(const RootSystem& r, const RootSet& q);
/// No single extra root keeps q lb and symmetric (q assumed fundamental).
bool is_maximal_symmetric(const RootSystem& r, const RootSet& q);
/// Maximality among lb-sets contained in `part`.
bool is_maximal_lb_within(const RootSystem& r, const RootSet& q, const RootSet& part);

/// Property assertions attached to a catalog entry; unset fields are not asserted.
struct Claims {
    std::optional<bool> maximal{}, maximal_symmetric{}, symmetric{}, weak_j{}, j_property{};
    std::optional<bool> maximal_in_part{};  // needs CatalogEntry::part
    std::optional<GradingElement> witness_mod4{}, witness_exact{};
};

struct CatalogEntry {
    std::string label;
    RootSet set;
    std::map<std::string, int> parameters;
    Claims claims;
    std::string source;
    RootSet part;  // ambient subset for maximal_in_part, e.g. an odd part
    // filled in by evaluate_entry
    PropertyReport report;
    bool maximal = false;
    bool maximal_symmetric = false;
    bool maximal_in_part = false;
    std::vector<std::string> failures;
};

struct CatalogClaimFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Computes the report and checks every asserted claim, recording failures.
void evaluate_entry(const RootSystem& r, CatalogEntry& e);
/// Throws CatalogClaimFailed naming the first failing entry.
void require_claims(const std::vector<CatalogEntry>& entries);

/// Every nonempty lb-set inside `constraint` (all roots when absent), each once.
/// Returns false when the budget stopped the walk early.
bool for_each_lb_set(const RootSystem& r, const std::optional<RootSet>& constraint, std::size_t budget,
                     const std::function<void(const RootSet&)>& f);

/// Maximal cliques of the compatibility graph (pivoting Bron-Kerbosch).
bool for_each_maximal_lb_set(const RootSystem& r, const std::optional<RootSet>& constraint, std::size_t budget,
                             const std::function<void(const RootSet&)>& f);

struct EnumerationResult {
    std::vector<CatalogEntry> classes;  // ordered by canonical form
    bool exhaustive = true;
    std::size_t visited = 0;
};

/// Maximal elements of the fundamental lb-sets modulo the group.
EnumerationResult enumerate_maximal(const RootSystemPtr& r, Group g, std::size_t budget = kDefaultOrbitBudget);
/// Maximal elements among symmetric fundamental lb-sets modulo the group.
EnumerationResult enumerate_maximal_symmetric(const RootSystemPtr& r, Group g, std::size_t budget = kDefaultOrbitBudget);

struct ClassRecord {
    RootSet representative;  // canonical form
    std::size_t orbit_size = 0;
    PropertyReport report;
};

/// All fundamental lb-sets modulo the group.
struct Universe {
    std::vector<ClassRecord> classes;
    bool exhaustive = true;
    std::size_t sets_visited = 0;
};
Universe enumerate_universe(const RootSystemPtr& r, Group g, std::size_t budget = kDefaultOrbitBudget);

enum class Which { All, Symmetric };

/// Catalog of maximal sets (All) or maximal symmetric sets (Symmetric).
/// Classical types are generated from the structural parameter families,
/// deduplicated modulo W; printed side constraints are recorded per entry
/// under the parameter "printed_constraints".
std::vector<CatalogEntry> catalog(RootType t, int rank, Which which);

/// Classical parameter audit against the printed side constraints.
struct ParameterAudit {
    std::string family;
    std::vector<std::string> lines;  // human readable findings
    std::size_t tuples = 0, maximal_tuples = 0, classes = 0;
    std::size_t printed_tuples = 0, printed_non_maximal = 0, classes_missed_by_printed = 0;
    std::size_t classes_missed_by_block_rule = 0, block_rule_duplicates = 0;
};
ParameterAudit audit_classical_parameters(RootType t, int n, Which which);

// ---- E-series ----

RootSystemPtr e_series(int ell);
const std::vector<std::pair<int, int>>& xi_pairs();

struct GradingTable {
    int ell = 0, index = 0;
    std::string type_label;
    RootSystemPtr system;
    RootSet r_part, s_part;       // as printed, closed under negation
    std::vector<Coords> closure_added;  // roots added by that closure
    GradingElement e;
};

GradingTable grading_table(int ell, int i);

struct GradingCheck {
    bool ok = true;
    std::vector<std::string> problems;
};
GradingCheck verify_grading(int ell, int i);

/// Orbits of the odd part under the Weyl group of the even part.
std::vector<RootSet> odd_part_orbits(const GradingTable& t);

struct AnchorViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class AnchorOrder { Forward, Reverse };

/// Anchored set inside the odd part of grading (ell, i). Starting from the
/// anchors, each anchor in turn contributes the odd roots positive on it and
/// non-negative on everything collected so far.
RootSet construct_Q(int ell, int i, const std::vector<Coords>& anchors, AnchorOrder order = AnchorOrder::Forward);

/// The printed examples and families for E6-E8 with their asserted properties.
std::vector<CatalogEntry> e_series_catalog(int ell);

/// A constructed set next to the explicit list printed for it.
struct PrintedComparison {
    std::string label;
    int ell = 8;
    RootSet constructed, printed;
    bool equal = false;
    bool printed_subset = false;  // printed list contained in the constructed set
    std::vector<std::string> only_constructed, only_printed;
};
std::vector<PrintedComparison> e_series_printed_sets();

/// The set {beta_0} + {e_i + e_r, beta_ij, beta_rs : i, j <= p < r, s} of E8.
RootSet e8_q_prime(int p);

/// Stratification of the flag structures of one root system.
struct FlagReport {
    std::string label;
    std::vector<CatalogEntry> maximal, maximal_symmetric;
    bool universe_exhaustive = false;
    std::size_t n_classes = 0, n_symmetric = 0, n_weak_j = 0, n_j = 0;
    bool symmetric_equals_j = false, weak_j_equals_j = false;
    std::vector<ClassRecord> classes;  // every fundamental lb-set modulo W
};
/// Throws BudgetExceeded when any of the underlying walks is cut short.
FlagReport classify_flags(RootType t, int rank, std::size_t budget = kDefaultOrbitBudget);

}  // namespace flagcr
