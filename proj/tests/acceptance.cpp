// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Oracles used here are the naive ones from support.hpp plus a few local ones.

#include "support.hpp"

#include "flagcr/classify.hpp"
#include "flagcr/cralg.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace flagcr;
using namespace testsupport;
namespace rt = flagcr::roots;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

// every fundamental lb-set, via the naive walk
std::vector<RootSet> naive_fundamental(const RootSystem& r) {
    std::vector<RootSet> out;
    testsupport::for_each_lb_set(r, [&](const RootSet& q) {
        if (is_fundamental(r, q)) out.push_back(q);
    });
    return out;
}

// sets whose predicates get re-checked by the hierarchy criterion
struct Evaluated {
    RootSystemPtr system;
    RootSet set;
};
std::vector<Evaluated> g_seen;

void remember(const RootSystemPtr& r, const RootSet& q) { g_seen.push_back({r, q}); }

std::string str(std::size_t n) { return std::to_string(n); }

// ---- 1 ----
Outcome catalog_counts() {
    Outcome o;
    struct Want { RootType t; int n; std::size_t k; };
    for (auto w : std::vector<Want>{{RootType::A, 2, 2}, {RootType::A, 3, 3}, {RootType::C, 2, 1}, {RootType::C, 3, 1},
                                    {RootType::C, 4, 1}, {RootType::G2, 2, 2}, {RootType::F4, 4, 5}}) {
        auto r = build_root_system(w.t, w.n);
        auto t0 = std::chrono::steady_clock::now();
        auto e = enumerate_maximal(r, Group::W);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (const auto& c : e.classes) remember(r, c.set);
        o.note(r->label() + "=" + str(e.classes.size()));
        o.require(e.exhaustive, r->label() + " enumeration exhaustive");
        o.require(e.classes.size() == w.k, r->label() + " count " + str(e.classes.size()) + " != " + str(w.k));
        o.require(s < 60, r->label() + " under 60 s");
    }
    return o;
}

// ---- 2 ----
Outcome g2_stratification() {
    Outcome o;
    auto r = build_root_system(RootType::G2, 2);
    const Weyl& w = Weyl::of(r);
    std::map<std::string, RootSet> named;
    for (const auto& e : catalog(RootType::G2, 2, Which::Symmetric)) named[e.label] = e.set;
    o.require(named.count("Q^4_0") && named.count("Q^4_1") && named.count("Q^4_2"), "G2 catalog names Q^4_0..2");
    if (!o.pass) return o;
    o.require(is_symmetric(*r, named["Q^4_1"]).holds() && brute_grading(*r, named["Q^4_1"], 2), "Q^4_1 symmetric");
    o.require(!is_symmetric(*r, named["Q^4_2"]).holds() && !brute_grading(*r, named["Q^4_2"], 2), "Q^4_2 not symmetric");

    std::size_t weak = 0, j = 0, bad_equiv = 0;
    for (const auto& q : naive_fundamental(*r)) {
        remember(r, q);
        bool wj = brute_grading(*r, q, 4), jj = brute_grading(*r, q, 0);
        o.require(has_weak_j(*r, q).holds() == wj, "weak-J agrees with brute force on " + set_str(*r, q));
        o.require(has_j(*r, q).holds() == jj, "J agrees with brute force on " + set_str(*r, q));
        weak += wj;
        j += jj;
        if (wj && !sets_equivalent(w, q, named["Q^4_0"], Group::Aut)) ++bad_equiv;
    }
    o.note("weak-J sets " + str(weak) + ", J sets " + str(j));
    o.require(weak == j, "weak-J sets equal J sets");
    o.require(weak > 0 && bad_equiv == 0, "every weak-J set equivalent to Q^4_0 (" + str(bad_equiv) + " not)");
    return o;
}

// ---- 3 ----
Outcome f4_collapse() {
    Outcome o;
    auto r = build_root_system(RootType::F4, 4);
    auto ms = enumerate_maximal_symmetric(r, Group::W);
    o.note("maximal symmetric classes " + str(ms.classes.size()));
    o.require(ms.exhaustive, "maximal symmetric enumeration exhaustive");
    o.require(ms.classes.size() == 1, "unique maximal symmetric class");

    auto cat = catalog(RootType::F4, 4, Which::Symmetric);
    o.require(cat.size() == 1 && cat[0].label == "Q^4'_{1,2,3,4}", "catalog lists Q^4'_{1,2,3,4}");
    if (!cat.empty()) {
        auto e = r->grading_from_ambient(RatVec{1, 1, 0, 0});
        o.require(e && verify_witness(*r, cat[0].set, *e, 0), "witness e1,e2 -> 1, e3,e4 -> 0 is exact on Q^4'_{1,2,3,4}");
        bool among = false;
        for (const auto& c : ms.classes) among = among || sets_equivalent(Weyl::of(r), c.set, cat[0].set, Group::W);
        o.require(among, "Q^4'_{1,2,3,4} is a maximal symmetric class");
    }

    std::size_t visited = 0, sym = 0, weak = 0, j = 0;
    bool complete = true;
    std::set<RootSet> done;
    for (const auto& c : ms.classes) {
        complete = flagcr::for_each_lb_set(*r, c.set, 1000000, [&](const RootSet& q) {
            if (!done.insert(q).second || !is_fundamental(*r, q)) return;
            ++visited;
            auto rep = analyze(*r, q);
            if (visited % 97 == 0) remember(r, q);
            sym += rep.symmetric;
            weak += rep.weak_j;
            j += rep.j_property;
        }) && complete;
    }
    o.note("fundamental subsets " + str(visited) + ": symmetric " + str(sym) + ", weak-J " + str(weak) + ", J " + str(j));
    o.require(complete, "subset walk within the 10^6 budget");
    o.require(sym == weak && weak == j, "symmetric = weak-J = J on these subsets");
    return o;
}

// ---- 4 ----
Outcome classical_collapse() {
    Outcome o;
    for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 2}, {RootType::A, 3}, {RootType::A, 4},
                                                             {RootType::B, 2}, {RootType::B, 3}, {RootType::B, 4},
                                                             {RootType::C, 2}, {RootType::C, 3}, {RootType::C, 4},
                                                             {RootType::D, 4}}) {
        auto rep = classify_flags(t, n);
        auto r = build_root_system(t, n);
        std::size_t missing = 0;
        for (const auto& c : rep.classes) {
            remember(r, c.representative);
            if (c.report.symmetric && !c.report.witness_exact) ++missing;
        }
        o.require(rep.universe_exhaustive, rep.label + " exhaustive");
        if (missing) o.require(false, rep.label + ": " + str(missing) + " symmetric classes without a J witness");
    }
    return o;
}

// ---- 5 ----
Outcome e8_examples() {
    Outcome o;
    auto r = e_series(8);
    auto cat = e_series_catalog(8);
    auto find = [&](const std::string& l) -> const CatalogEntry* {
        for (const auto& e : cat)
            if (e.label == l) return &e;
        return nullptr;
    };
    for (int k = 1; k <= 9; ++k) {
        std::string l = "example (" + str(k) + ")";
        const CatalogEntry* e = find(l);
        o.require(e != nullptr, l + " present");
        if (!e) continue;
        remember(r, e->set);
        auto rep = analyze(*r, e->set);
        std::string got = std::string(rep.symmetric ? "s" : "-") + (rep.weak_j ? "w" : "-") + (rep.j_property ? "j" : "-");
        o.note(l + ":" + got);
        if (k == 6) {
            o.require(rep.weak_j && !rep.j_property, l + " weak-J but not J (got " + got + ")");
            auto w = r->grading_from_ambient(RatVec{0, 0, 0, 0, 0, -2, -2, -2});
            o.require(w && verify_witness(*r, e->set, *w, 4), l + " witness e6=e7=e8 -> -2 mod 4");
        } else if (k == 1 || k == 2 || k == 3 || k == 5) {
            o.require(rep.symmetric && !rep.weak_j, l + " symmetric, not weak-J (got " + got + ")");
        } else {
            o.require(rep.j_property, l + " has J (got " + got + ")");
        }
    }
    for (int p = 1; p <= 8; ++p) {
        RootSet q = e8_q_prime(p);
        remember(r, q);
        o.require(is_symmetric(*r, q).holds() == (p % 2 == 0), "Q'_" + str(p) + " symmetric iff p even");
    }
    return o;
}

// ---- 6 ----
Outcome grading_tables() {
    Outcome o;
    for (auto [ell, i] : xi_pairs()) {
        auto g = verify_grading(ell, i);
        o.require(g.ok, "grading (" + str(ell) + "," + str(i) + ")");
    }
    auto named = [&](int ell, int i, const std::vector<std::vector<Coords>>& anchors) {
        auto t = grading_table(ell, i);
        auto orbits = odd_part_orbits(t);
        std::string tag = "(" + str(ell) + "," + str(i) + ")";
        o.require(orbits.size() == 2, tag + " odd part has two orbits, got " + str(orbits.size()));
        for (const auto& a : anchors) {
            RootSet q = construct_Q(ell, i, a);
            remember(t.system, q);
            // the orbit through the first anchor
            int seed = t.system->index_of(a[0]);
            const RootSet* orb = nullptr;
            for (const auto& x : orbits)
                if (contains(x, seed)) orb = &x;
            o.require(orb != nullptr, tag + " first anchor lies in the odd part");
            if (!orb) continue;
            std::string what = tag + " anchored set from " + root_str(*t.system, seed) + " (" + str(q.size()) +
                               " roots) equals its orbit (" + str(orb->size()) + " roots)";
            RootSet miss = set_minus(*orb, q), extra = set_minus(q, *orb);
            if (!miss.empty()) what += ", orbit-only " + set_str(*t.system, miss);
            if (!extra.empty()) what += ", set-only " + set_str(*t.system, extra);
            o.require(*orb == q, what);
        }
    };
    Coords e16p = rt::ei_ej(8, 1, 6), e16m = rt::ei_ej(8, 1, 6, 1, -1);
    named(7, 3, {{rt::v7(), e16p}, {rt::neg(rt::v7()), e16m}});
    named(6, 1, {{rt::beta({6, 7}), rt::neg(rt::beta({1, 8}))}, {rt::neg(rt::beta({6, 7})), rt::beta({1, 8})}});
    return o;
}

// ---- 7 ----
Outcome solver_agreement() {
    Outcome o;
    std::size_t checked = 0, disagreements = 0;
    auto compare = [&](const RootSystemPtr& r, const RootSet& q) {
        ++checked;
        try {
            bool s = is_symmetric(*r, q).holds(), w = has_weak_j(*r, q).holds();
            if (s != brute_grading(*r, q, 2) || w != brute_grading(*r, q, 4)) ++disagreements;
        } catch (const MethodDisagreement& e) {
            ++disagreements;
            o.note(e.what());
        }
    };
    for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 1}, {RootType::A, 2}, {RootType::A, 3},
                                                             {RootType::B, 2}, {RootType::B, 3}, {RootType::C, 3},
                                                             {RootType::G2, 2}}) {
        auto r = build_root_system(t, n);
        for (const auto& q : naive_fundamental(*r)) {
            compare(r, q);
            remember(r, q);
        }
    }
    std::size_t exhaustive = checked;
    std::mt19937_64 rng(20261016);
    for (auto t : {RootType::D, RootType::F4}) {
        auto r = build_root_system(t, 4);
        for (int k = 0; k < 500; ++k) {
            RootSet q = random_lb_fundamental(*r, rng);
            compare(r, q);
            if (k % 10 == 0) remember(r, q);
        }
    }
    o.note(str(exhaustive) + " exhaustive + " + str(checked - exhaustive) + " random sets, " + str(disagreements) +
           " disagreements");
    o.require(disagreements == 0, "zero disagreements");
    return o;
}

// ---- 8 ----

// largest ideal inside s: x with every ad-word image in s (words up to length dim)
std::size_t largest_ideal_dim_by_words(const LieAlgebra& g, const Subspace& s) {
    std::size_t n = g.dim();
    std::vector<GMat> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(g_unit(n, i)));
    GMat rows;
    std::vector<GMat> level{g_identity(n)};
    for (std::size_t len = 0; len <= n; ++len) {
        for (const auto& m : level) {
            std::vector<GVec> cols;
            for (std::size_t j = 0; j < n; ++j) {
                GVec c(n);
                for (std::size_t i = 0; i < n; ++i) c[i] = m[i][j];
                cols.push_back(s.reduce(c));
            }
            for (std::size_t i = 0; i < n; ++i) {
                GVec row(n);
                for (std::size_t j = 0; j < n; ++j) row[j] = cols[j][i];
                if (!g_is_zero(row)) rows.push_back(row);
            }
        }
        g_rref(rows);
        if (len == n) break;
        std::vector<GMat> next;
        for (const auto& m : level)
            for (const auto& a : ads) next.push_back(g_mul(a, m));
        level = std::move(next);
    }
    return n - rows.size();
}

Outcome cralg_oracles() {
    Outcome o;
    auto h = load_preset("heisenberg");
    GMat lf = scalar_levi_form(h.cr, {0, 0, 1});
    o.require(lf.size() == 1 && lf[0][0] == Gauss(-2), "heisenberg Levi form [-2]");

    std::size_t presets = 0;
    for (const auto& name : preset_names()) {
        auto p = load_preset(name);
        if (p.cr.algebra().dim() > 6) continue;
        ++presets;
        std::size_t d = largest_ideal_dim_by_words(p.cr.algebra(), p.cr.q_cap_qbar());
        o.require(is_effective(p.cr) == (d == 0), name + ": is_effective matches word search");
        o.require(largest_ideal_in_isotropy(p.cr).dim() == d, name + ": largest ideal dimension");
    }
    o.note(str(presets) + " presets of dim <= 6");

    auto bf = load_preset("exam-bf");
    o.require(!fibration_compatible(bf.cr, bf.ideals.at("radical")).compatible, "exam-bf radical fibration incompatible");

    std::size_t witnesses = 0;
    for (auto [t, n] : std::vector<std::pair<RootType, int>>{{RootType::A, 2}, {RootType::B, 2}, {RootType::G2, 2},
                                                             {RootType::A, 3}}) {
        auto r = build_root_system(t, n);
        for (const auto& q : naive_fundamental(*r)) {
            auto d = has_j(*r, q);
            if (!d.witness) continue;
            ++witnesses;
            o.require(check_j_property(flag_cr_algebra(r, q), flag_derivation(*r, *d.witness)),
                      r->label() + " witness for " + set_str(*r, q));
        }
    }
    auto f4 = build_root_system(RootType::F4, 4);
    for (const auto& e : catalog(RootType::F4, 4, Which::Symmetric)) {
        auto d = has_j(*f4, e.set);
        if (!d.witness) continue;
        ++witnesses;
        o.require(check_j_property(flag_cr_algebra(f4, e.set), flag_derivation(*f4, *d.witness)), "F4 " + e.label);
    }
    o.note(str(witnesses) + " transplanted J witnesses");
    return o;
}

// ---- 9 ----
Outcome hierarchy() {
    Outcome o;
    std::mt19937_64 rng(9);
    std::size_t sets = 0, orbit_checked = 0, broken = 0, variant = 0;
    std::map<const RootSystem*, std::size_t> per_system;
    for (const auto& [r, q] : g_seen) {
        ++sets;
        auto rep = analyze(*r, q);
        if ((rep.j_property && !rep.weak_j) || (rep.weak_j && !rep.symmetric)) ++broken;
        // orbit invariance on a sample, 50 group elements each
        if (per_system[r.get()]++ % 7 != 0) continue;
        ++orbit_checked;
        const Weyl& w = Weyl::of(r);
        for (int k = 0; k < 50; ++k) {
            RootSet img = apply_perm(w.random_element(Group::W, rng).perm, q);
            std::sort(img.begin(), img.end());
            auto ri = analyze(*r, img);
            if (ri.is_lb != rep.is_lb || ri.is_fundamental != rep.is_fundamental || ri.symmetric != rep.symmetric ||
                ri.weak_j != rep.weak_j || ri.j_property != rep.j_property)
                ++variant;
        }
    }
    o.note(str(sets) + " sets, " + str(orbit_checked) + " orbit-sampled");
    o.require(broken == 0, "J => weak-J => symmetric (" + str(broken) + " violations)");
    o.require(variant == 0, "predicates constant on W-orbits (" + str(variant) + " violations)");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double limit_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{
        {1, "catalog counts", 7 * 60, catalog_counts},
        {2, "G2 stratification", 10, g2_stratification},
        {3, "F4 collapse", 300, f4_collapse},
        {4, "classical J-collapse", 600, classical_collapse},
        {5, "E8 examples", 60, e8_examples},
        {6, "grading tables", 120, grading_tables},
        {7, "solver cross-agreement", 600, solver_agreement},
        {8, "cralg oracle suite", 60, cralg_oracles},
        {9, "hierarchy invariant", 600, hierarchy},
    };
    int failed = 0;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char lim[64];
        std::snprintf(lim, sizeof lim, "runtime %.1f s > %.0f s", s, c.limit_s);
        if (s > c.limit_s) o.require(false, lim);
        std::ostringstream line;
        line << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " [" << c.name << "] ";
        char t[32];
        std::snprintf(t, sizeof t, "(%.1f s)", s);
        line << t;
        for (const auto& n : o.notes) line << " | " << n;
        std::printf("%s\n", line.str().c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", int(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
