#include "flagcr/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace flagcr {

namespace {

struct SetHash {
    std::size_t operator()(const RootSet& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : s) h = (h ^ std::size_t(x + 1)) * 1099511628211ull;
        return h;
    }
};
using SeenSet = std::unordered_set<RootSet, SetHash>;

bool extends_lb(const RootSystem& r, const RootSet& q, int x) {
    if (contains(q, x)) return false;
    for (int a : q)
        if (r.neg(a) == x || r.sum(a, x) >= 0) return false;
    return true;
}

}  // namespace

bool is_maximal_lb(const RootSystem& r, const RootSet& q) {
    for (std::size_t x = 0; x < r.size(); ++x)
        if (extends_lb(r, q, int(x))) return false;
    return true;
}

bool is_maximal_symmetric(const RootSystem& r, const RootSet& q) {
    for (std::size_t x = 0; x < r.size(); ++x)
        if (extends_lb(r, q, int(x)) && is_symmetric(r, set_union(q, {int(x)})).holds()) return false;
    return true;
}

bool is_maximal_lb_within(const RootSystem& r, const RootSet& q, const RootSet& part) {
    for (int x : part)
        if (extends_lb(r, q, x)) return false;
    return true;
}

void evaluate_entry(const RootSystem& r, CatalogEntry& e) {
    e.failures.clear();
    e.report = analyze(r, e.set);
    e.maximal = e.report.is_lb && is_maximal_lb(r, e.set);
    e.maximal_symmetric = e.report.symmetric && is_maximal_symmetric(r, e.set);
    e.maximal_in_part = !e.part.empty() && e.report.is_lb && is_maximal_lb_within(r, e.set, e.part);
    auto check = [&](const std::optional<bool>& claim, bool actual, const char* what) {
        if (claim && *claim != actual)
            e.failures.push_back(std::string(what) + " claimed " + (*claim ? "true" : "false") + ", found " +
                                 (actual ? "true" : "false"));
    };
    if (!e.report.is_lb) e.failures.push_back("not an lb-set");
    check(e.claims.maximal, e.maximal, "maximal");
    check(e.claims.maximal_symmetric, e.maximal_symmetric, "maximal symmetric");
    check(e.claims.maximal_in_part, e.maximal_in_part, "maximal inside the odd part");
    check(e.claims.symmetric, e.report.symmetric, "symmetric");
    check(e.claims.weak_j, e.report.weak_j, "weak-J");
    check(e.claims.j_property, e.report.j_property, "J");
    if (e.claims.witness_mod4 && !verify_witness(r, e.set, *e.claims.witness_mod4, 4))
        e.failures.push_back("stated mod-4 witness does not satisfy alpha(E) = 1 mod 4");
    if (e.claims.witness_exact && !verify_witness(r, e.set, *e.claims.witness_exact, 0))
        e.failures.push_back("stated J witness does not satisfy alpha(E) = 1");
}

void require_claims(const std::vector<CatalogEntry>& entries) {
    for (const auto& e : entries)
        if (!e.failures.empty()) throw CatalogClaimFailed(e.label + ": " + e.failures.front());
}

bool for_each_lb_set(const RootSystem& r, const std::optional<RootSet>& constraint, std::size_t budget,
                     const std::function<void(const RootSet&)>& f) {
    CompatGraph g = compat_graph(r, constraint);
    std::size_t visited = 0;
    RootSet cur;
    bool complete = true;
    std::function<void(RootBits)> rec = [&](RootBits cand) {
        for (int c = cand.first(); c >= 0 && complete; c = cand.first()) {
            cand.reset(c);
            if (++visited > budget) {
                complete = false;
                return;
            }
            cur.push_back(c);
            f(cur);
            rec(cand & g.adj[c]);
            cur.pop_back();
        }
    };
    rec(g.vertices);
    return complete;
}

bool for_each_maximal_lb_set(const RootSystem& r, const std::optional<RootSet>& constraint, std::size_t budget,
                             const std::function<void(const RootSet&)>& f) {
    CompatGraph g = compat_graph(r, constraint);
    std::size_t visited = 0;
    bool complete = true;
    RootBits cur;
    std::function<void(RootBits, RootBits)> bk = [&](RootBits p, RootBits x) {
        if (!complete) return;
        if (p.none()) {
            if (x.none()) {
                if (++visited > budget) {
                    complete = false;
                    return;
                }
                f(cur.to_set());
            }
            return;
        }
        // pivot with the most neighbours in p
        int pivot = -1, best = -1;
        for (int u : (p | x).to_set()) {
            int c = (p & g.adj[u]).count();
            if (c > best) best = c, pivot = u;
        }
        for (int v : p.without(g.adj[pivot]).to_set()) {
            cur.set(v);
            bk(p & g.adj[v], x & g.adj[v]);
            cur.reset(v);
            p.reset(v);
            x.set(v);
            if (!complete) return;
        }
    };
    bk(g.vertices, RootBits{});
    return complete;
}

namespace {

// Adds the orbit of q to `seen`; returns its canonical form and size, or nullopt if already seen.
std::optional<std::pair<RootSet, std::size_t>> new_class(const Weyl& w, const RootSet& q, Group g, SeenSet& seen) {
    if (seen.count(q)) return std::nullopt;
    auto orb = orbit(w, q, g);
    for (auto& s : orb) seen.insert(s);
    return std::make_pair(*std::min_element(orb.begin(), orb.end()), orb.size());
}

EnumerationResult collect(const RootSystemPtr& r, Group g, std::vector<RootSet> sets, bool exhaustive,
                          std::size_t visited, const std::string& prefix) {
    const Weyl& w = Weyl::of(r);
    SeenSet seen;
    std::vector<RootSet> reps;
    for (const auto& q : sets)
        if (auto c = new_class(w, q, g, seen)) reps.push_back(c->first);
    std::sort(reps.begin(), reps.end());
    EnumerationResult res;
    res.exhaustive = exhaustive;
    res.visited = visited;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        CatalogEntry e;
        e.label = prefix + std::to_string(i + 1);
        e.set = reps[i];
        e.source = "enumeration modulo " + group_name(g);
        evaluate_entry(*r, e);
        res.classes.push_back(std::move(e));
    }
    return res;
}

}  // namespace

EnumerationResult enumerate_maximal(const RootSystemPtr& r, Group g, std::size_t budget) {
    std::vector<RootSet> found;
    std::size_t visited = 0;
    bool done = for_each_maximal_lb_set(*r, std::nullopt, budget, [&](const RootSet& q) {
        ++visited;
        if (is_fundamental(*r, q)) found.push_back(q);
    });
    return collect(r, g, std::move(found), done, visited, r->label() + ":max");
}

EnumerationResult enumerate_maximal_symmetric(const RootSystemPtr& r, Group g, std::size_t budget) {
    // Every symmetric set lies in the odd part of some E mod 2; take maximal cliques there.
    std::vector<RootSet> found;
    std::set<RootSet> odd_parts;
    std::size_t visited = 0;
    bool done = true;
    int n = r->rank();
    for (long mask = 1; mask < (1L << n) && done; ++mask) {
        GradingElement e;
        for (int k = 0; k < n; ++k) e.values.push_back((mask >> k) & 1);
        RootSet odd;
        for (std::size_t a = 0; a < r->size(); ++a)
            if (mod_floor(r->evaluate(int(a), e), 2) == 1) odd.push_back(int(a));
        if (!odd_parts.insert(odd).second) continue;
        done = for_each_maximal_lb_set(*r, odd, budget - std::min(budget, visited), [&](const RootSet& q) {
            ++visited;
            if (is_fundamental(*r, q) && is_maximal_symmetric(*r, q)) found.push_back(q);
        });
    }
    return collect(r, g, std::move(found), done, visited, r->label() + ":sym");
}

Universe enumerate_universe(const RootSystemPtr& r, Group g, std::size_t budget) {
    const Weyl& w = Weyl::of(r);
    SeenSet seen;
    Universe u;
    u.exhaustive = for_each_lb_set(*r, std::nullopt, budget, [&](const RootSet& q) {
        ++u.sets_visited;
        if (!is_fundamental(*r, q)) return;
        if (auto c = new_class(w, q, g, seen)) u.classes.push_back({c->first, c->second, analyze(*r, c->first)});
    });
    std::sort(u.classes.begin(), u.classes.end(),
              [](const ClassRecord& a, const ClassRecord& b) { return a.representative < b.representative; });
    return u;
}

// ---- classical catalogs ----

namespace {

namespace rt = roots;

struct Tuple {
    int i0 = 0;  // 0 when the family has no distinguished short root
    int p = 0;
    std::vector<int> q;  // q_1 .. q_s, ending in n
};

// compositions of n - p into s positive parts, listed as partial sums starting after p
void compositions(int p, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    int last = cur.empty() ? p : cur.back();
    if (last == n) {
        out.push_back(cur);
        return;
    }
    for (int next = last + 1; next <= n; ++next) {
        cur.push_back(next);
        compositions(p, n, cur, out);
        cur.pop_back();
    }
}

std::vector<Tuple> tuples(RootType t, int n, Which which) {
    std::vector<Tuple> out;
    for (int p = 1; p <= n; ++p) {
        std::vector<std::vector<int>> qs;
        std::vector<int> cur;
        compositions(p, n, cur, qs);
        for (auto& q : qs) {
            int s = int(q.size());
            if (s > p) continue;
            if (which == Which::Symmetric && s == 0) continue;
            if (t == RootType::B) {
                for (int i0 = 1; i0 <= p; ++i0) out.push_back({i0, p, q});
            } else {
                out.push_back({0, p, q});
            }
        }
    }
    return out;
}

// q_k with q_0 = p; nullopt outside 0..s
std::optional<int> qk(const Tuple& t, int k) {
    if (k == 0) return t.p;
    if (k < 0 || k > int(t.q.size())) return std::nullopt;
    return t.q[k - 1];
}

// The side constraints exactly as printed; an index outside the range makes the condition false.
bool printed_constraints(RootType type, const Tuple& t) {
    int s = int(t.q.size());
    if (s < 1 || s > t.p) return false;
    for (int i = 2; i <= s; ++i)
        if (!(*qk(t, i) + 2 * *qk(t, i - 2) <= *qk(t, i - 1))) return false;
    if (t.p == 2 && s != 2) return false;
    if (type == RootType::B && t.i0 >= 2) {
        auto a = qk(t, t.i0), b = qk(t, t.i0 - 2), c = qk(t, t.i0 - 1);
        if (!a || !b || !c || !(*a + *b < *c)) return false;
    }
    return true;
}

// Block sizes q_i - q_{i-1} non-increasing.
bool block_rule(const Tuple& t) {
    for (int i = 2; i <= int(t.q.size()); ++i)
        if (*qk(t, i) - *qk(t, i - 1) > *qk(t, i - 1) - *qk(t, i - 2)) return false;
    return true;
}

RootSet tuple_set(const RootSystem& r, RootType type, int n, const Tuple& t, Which which) {
    std::vector<Coords> cs;
    int s = int(t.q.size());
    if (t.i0) cs.push_back(rt::e(n, t.i0));
    if (which == Which::All) {
        for (int i = 1; i <= t.p; ++i)
            for (int j = i + 1; j <= t.p; ++j) cs.push_back(rt::ei_ej(n, i, j));
    } else {
        for (int i = 1; i <= s; ++i)
            for (int j = s + 1; j <= t.p; ++j) cs.push_back(rt::ei_ej(n, i, j));
    }
    for (int i = 1; i <= s; ++i)
        for (int j = *qk(t, i - 1) + 1; j <= *qk(t, i); ++j) {
            cs.push_back(rt::ei_ej(n, i, j));
            cs.push_back(rt::ei_ej(n, i, j, 1, -1));
        }
    (void)type;
    return to_set(r, cs);
}

std::string tuple_label(RootType type, const Tuple& t, Which which) {
    std::string s = which == Which::Symmetric ? "Q'_{" : "Q_{";
    if (type == RootType::B) s += std::to_string(t.i0) + ",";
    s += std::to_string(t.p);
    for (int x : t.q) s += "," + std::to_string(x);
    return s + "}";
}

std::map<std::string, int> tuple_params(const Tuple& t, RootType type) {
    std::map<std::string, int> m;
    if (t.i0) m["i0"] = t.i0;
    m["p"] = t.p;
    m["s"] = int(t.q.size());
    for (std::size_t k = 0; k < t.q.size(); ++k) m["q" + std::to_string(k + 1)] = t.q[k];
    m["printed_constraints"] = printed_constraints(type, t);
    return m;
}

GradingElement ambient_grading(const RootSystem& r, const RatVec& h) {
    auto g = r.grading_from_ambient(h);
    if (!g) throw std::logic_error("ambient vector is not a grading element");
    return *g;
}

CatalogEntry make(const RootSystem& r, std::string label, RootSet set, Claims claims, std::string source,
                  std::map<std::string, int> params = {}) {
    CatalogEntry e;
    e.label = std::move(label);
    e.set = std::move(set);
    e.claims = std::move(claims);
    e.source = std::move(source);
    e.parameters = std::move(params);
    evaluate_entry(r, e);
    return e;
}

// B and D families, deduplicated modulo W, preferring tuples that meet the printed constraints.
std::vector<CatalogEntry> bd_catalog(const RootSystemPtr& rp, RootType type, int n, Which which) {
    const RootSystem& r = *rp;
    const Weyl& w = Weyl::of(rp);
    std::map<RootSet, CatalogEntry> by_class;
    auto consider = [&](CatalogEntry e, bool preferred) {
        if (!is_lb(r, e.set) || !is_fundamental(r, e.set)) return;
        RootSet c = canonical_form(w, e.set, Group::W);
        auto it = by_class.find(c);
        if (it == by_class.end()) {
            by_class.emplace(c, std::move(e));
        } else if (preferred && !it->second.parameters["printed_constraints"]) {
            it->second = std::move(e);
        }
    };
    std::string fam = type_name(type) + std::to_string(n);
    for (const auto& t : tuples(type, n, which)) {
        Claims cl;
        bool printed = printed_constraints(type, t);
        RootSet set = tuple_set(r, type, n, t, which);
        // off-list tuples only count when they really give a maximal set
        if (!printed) {
            bool ok = is_lb(r, set) && is_fundamental(r, set) &&
                      (which == Which::All ? is_maximal_lb(r, set)
                                           : is_symmetric(r, set).holds() && is_maximal_symmetric(r, set));
            if (!ok) continue;
        }
        if (which == Which::All) {
            cl.maximal = true;
        } else {
            cl.maximal_symmetric = true;
            cl.j_property = true;
            // the witness e_h = 1 (h <= s) only makes sense when e_{i0} is among those h
            if (t.i0 <= int(t.q.size())) {
                RatVec h(n, Rat(0));
                for (int k = 0; k < int(t.q.size()); ++k) h[k] = 1;
                cl.witness_exact = ambient_grading(r, h);
            }
        }
        CatalogEntry e;
        e.label = tuple_label(type, t, which);
        e.set = std::move(set);
        e.claims = cl;
        e.source = fam + (which == Which::All ? " maximal family" : " maximal symmetric family");
        e.parameters = tuple_params(t, type);
        consider(std::move(e), printed);
    }
    if (type == RootType::D) {
        std::vector<Coords> qn, qm;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                qn.push_back(rt::ei_ej(n, i, j));
                if (j < n) qm.push_back(rt::ei_ej(n, i, j));
            }
        for (int i = 1; i < n; ++i) qm.push_back(rt::ei_ej(n, i, n, 1, -1));
        Claims a, b;
        if (which == Which::All) {
            b.maximal = true;
        } else {
            RatVec h(n, Rat(1, 2)), hm(n, Rat(1, 2));
            hm[n - 1] = Rat(-1, 2);
            a.witness_exact = ambient_grading(r, h);
            b.witness_exact = ambient_grading(r, hm);
            a.j_property = b.j_property = true;
        }
        CatalogEntry en, em;
        en.label = "Q_{" + std::to_string(n) + "}";
        en.set = to_set(r, qn);
        en.claims = a;
        en.source = fam + " positive-sum set";
        em.label = "Q_{-" + std::to_string(n) + "}";
        em.set = to_set(r, qm);
        em.claims = b;
        em.source = fam + " twisted positive-sum set";
        // Q_n is maximal among symmetric sets; as a maximal lb-set it belongs to the family above
        if (which == Which::Symmetric) consider(std::move(en), true);
        consider(std::move(em), true);
    }
    std::vector<CatalogEntry> out;
    for (auto& [c, e] : by_class) {
        evaluate_entry(r, e);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

namespace {

Coords g2(int a, int b, int c) { return {2 * a, 2 * b, 2 * c}; }

std::vector<CatalogEntry> g2_catalog(const RootSystem& r, Which which) {
    RootSet q1 = to_set(r, {g2(1, 0, -1), g2(2, -1, -1), g2(1, -2, 1)});
    RootSet q2 = to_set(r, {g2(1, 0, -1), g2(2, -1, -1), g2(1, 1, -2)});
    RootSet q0 = to_set(r, {g2(1, 0, -1), g2(2, -1, -1)});
    std::vector<CatalogEntry> out;
    if (which == Which::All) {
        out.push_back(make(r, "Q^4_1", q1, {.maximal = true}, "G2 maximal list"));
        out.push_back(make(r, "Q^4_2", q2, {.maximal = true}, "G2 maximal list"));
    } else {
        out.push_back(make(r, "Q^4_1", q1, {.maximal = true, .symmetric = true}, "G2 symmetric statement"));
        out.push_back(make(r, "Q^4_2", q2, {.maximal = true, .symmetric = false}, "G2 symmetric statement"));
        out.push_back(make(r, "Q^4_0", q0, {.weak_j = true, .j_property = true}, "G2 weak-J statement"));
    }
    return out;
}

std::vector<CatalogEntry> f4_catalog(const RootSystem& r, Which which) {
    auto e = [](int i) { return rt::e(4, i); };
    auto pp = [](int i, int j) { return rt::ei_ej(4, i, j); };
    auto pm = [](int i, int j) { return rt::ei_ej(4, i, j, 1, -1); };
    Coords b0{1, 1, 1, 1}, b4{1, 1, 1, -1};
    std::vector<CatalogEntry> out;
    if (which == Which::All) {
        std::vector<std::pair<std::string, std::vector<Coords>>> lists;
        std::vector<Coords> q14{e(1)}, q134{e(1)}, q234{e(2)};
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                q14.push_back(pp(i, j));
                if (j <= 3) q134.push_back(pp(i, j)), q234.push_back(pp(i, j));
            }
        for (auto* v : {&q134, &q234}) v->insert(v->end(), {pp(1, 4), pm(1, 4)});
        std::vector<Coords> q1234{e(1), pp(1, 2), pp(1, 3), pm(1, 3), pp(2, 4), pm(2, 4)};
        std::vector<Coords> q114{e(1)};
        for (int j = 2; j <= 4; ++j) q114.insert(q114.end(), {pp(1, j), pm(1, j)});
        lists = {{"Q^4_{1,4}", q14}, {"Q^4_{1,3,4}", q134}, {"Q^4_{2,3,4}", q234}, {"Q^4_{1,2,3,4}", q1234}, {"Q^4_{1,1,4}", q114}};
        for (auto& [name, cs] : lists) {
            cs.push_back(b0);
            cs.push_back(b4);
            out.push_back(make(r, name, to_set(r, cs), {.maximal = true}, "F4 maximal list"));
        }
    } else {
        RootSet q = to_set(r, {e(1), b0, b4, pp(1, 3), pm(1, 3), pp(2, 4), pm(2, 4)});
        Claims c{.maximal_symmetric = true, .symmetric = true, .weak_j = true, .j_property = true};
        c.witness_exact = ambient_grading(r, {1, 1, 0, 0});
        out.push_back(make(r, "Q^4'_{1,2,3,4}", q, c, "F4 symmetric statement"));
    }
    return out;
}

std::vector<CatalogEntry> a_catalog(const RootSystem& r, int n, Which which) {
    // rank n - 1 in ambient dimension n
    std::vector<CatalogEntry> out;
    for (int p = 1; p < n; ++p) {
        std::vector<Coords> cs;
        for (int i = 1; i <= p; ++i)
            for (int j = p + 1; j <= n; ++j) cs.push_back(rt::ei_ej(n, i, j, 1, -1));
        Claims c{.maximal = true};
        if (which == Which::Symmetric) {
            c.maximal_symmetric = c.symmetric = c.j_property = true;
            RatVec h(n);
            for (int i = 0; i < n; ++i) h[i] = i < p ? Rat(n - p, n) : Rat(-p, n);
            for (auto& x : h) x.canonicalize();
            c.witness_exact = ambient_grading(r, h);
        }
        out.push_back(make(r, "Q_" + std::to_string(p), to_set(r, cs), c, "A" + std::to_string(n - 1) + " list",
                           {{"p", p}}));
    }
    return out;
}

std::vector<CatalogEntry> c_catalog(const RootSystem& r, int n, Which which) {
    std::vector<Coords> cs;
    for (int i = 1; i <= n; ++i) cs.push_back(rt::e(n, i, 2));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) cs.push_back(rt::ei_ej(n, i, j));
    Claims c{.maximal = true};
    if (which == Which::Symmetric) {
        c.maximal_symmetric = c.symmetric = c.j_property = true;
        c.witness_exact = ambient_grading(r, RatVec(n, Rat(1, 2)));
    }
    return {make(r, "Q_0", to_set(r, cs), c, "C" + std::to_string(n) + " list")};
}

}  // namespace

std::vector<CatalogEntry> catalog(RootType t, int rank, Which which) {
    auto r = build_root_system(t, rank);
    switch (t) {
        case RootType::A: return a_catalog(*r, rank + 1, which);
        case RootType::B:
        case RootType::D: return bd_catalog(r, t, rank, which);
        case RootType::C: return c_catalog(*r, rank, which);
        case RootType::G2: return g2_catalog(*r, which);
        case RootType::F4: return f4_catalog(*r, which);
        case RootType::E6: return e_series_catalog(6);
        case RootType::E7: return e_series_catalog(7);
        case RootType::E8: return e_series_catalog(8);
    }
    return {};
}

ParameterAudit audit_classical_parameters(RootType t, int n, Which which) {
    if (t != RootType::B && t != RootType::D) throw std::invalid_argument("parameter audit applies to B and D");
    auto rp = build_root_system(t, n);
    const RootSystem& r = *rp;
    const Weyl& w = Weyl::of(rp);
    ParameterAudit a;
    a.family = type_name(t) + std::to_string(n) + (which == Which::All ? " maximal" : " maximal symmetric");
    struct ClassInfo {
        bool printed = false;
        int block = 0;
        std::string first;
    };
    std::map<RootSet, ClassInfo> classes;
    for (const auto& tp : tuples(t, n, which)) {
        ++a.tuples;
        RootSet q = tuple_set(r, t, n, tp, which);
        bool ok = is_lb(r, q) && is_fundamental(r, q) &&
                  (which == Which::All ? is_maximal_lb(r, q) : is_symmetric(r, q).holds() && is_maximal_symmetric(r, q));
        bool printed = printed_constraints(t, tp);
        a.printed_tuples += printed;
        if (!ok) {
            if (printed) {
                ++a.printed_non_maximal;
                a.lines.push_back(tuple_label(t, tp, which) + " meets the printed constraints but is not maximal");
            }
            continue;
        }
        ++a.maximal_tuples;
        auto& ci = classes[canonical_form(w, q, Group::W)];
        if (ci.first.empty()) ci.first = tuple_label(t, tp, which);
        ci.printed = ci.printed || printed;
        ci.block += block_rule(tp);
    }
    a.classes = classes.size();
    for (auto& [c, ci] : classes) {
        if (!ci.printed) {
            ++a.classes_missed_by_printed;
            a.lines.push_back("class of " + ci.first + " has no tuple meeting the printed constraints");
        }
        if (ci.block == 0) ++a.classes_missed_by_block_rule;
        if (ci.block > 1) ++a.block_rule_duplicates;
    }
    std::ostringstream s;
    s << a.family << ": " << a.tuples << " tuples, " << a.maximal_tuples << " give maximal sets in " << a.classes
      << " W-classes; printed constraints admit " << a.printed_tuples << " tuples; non-increasing block sizes miss "
      << a.classes_missed_by_block_rule << " classes and repeat " << a.block_rule_duplicates;
    a.lines.insert(a.lines.begin(), s.str());
    return a;
}

FlagReport classify_flags(RootType t, int rank, std::size_t budget) {
    auto r = build_root_system(t, rank);
    FlagReport rep;
    rep.label = r->label();
    bool exceptional_e = t == RootType::E6 || t == RootType::E7 || t == RootType::E8;
    if (exceptional_e) {
        for (auto& e : catalog(t, rank, Which::All)) {
            if (e.maximal_symmetric) rep.maximal_symmetric.push_back(e);
            if (e.maximal) rep.maximal.push_back(e);
        }
        return rep;
    }
    auto m = enumerate_maximal(r, Group::W, budget);
    auto ms = enumerate_maximal_symmetric(r, Group::W, budget);
    Universe u = enumerate_universe(r, Group::W, budget);
    if (!m.exhaustive || !ms.exhaustive || !u.exhaustive)
        throw BudgetExceeded(rep.label + ": enumeration budget of " + std::to_string(budget) + " exhausted");
    rep.maximal = std::move(m.classes);
    rep.maximal_symmetric = std::move(ms.classes);
    rep.universe_exhaustive = u.exhaustive;
    rep.n_classes = u.classes.size();
    rep.symmetric_equals_j = rep.weak_j_equals_j = true;
    for (const auto& c : u.classes) {
        rep.n_symmetric += c.report.symmetric;
        rep.n_weak_j += c.report.weak_j;
        rep.n_j += c.report.j_property;
        if (c.report.symmetric && !c.report.j_property) rep.symmetric_equals_j = false;
        if (c.report.weak_j && !c.report.j_property) rep.weak_j_equals_j = false;
    }
    rep.classes = std::move(u.classes);
    return rep;
}

}  // namespace flagcr
