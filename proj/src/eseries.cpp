#include "flagcr/classify.hpp"

#include <algorithm>
#include <mutex>

namespace flagcr {

namespace {

namespace rt = roots;

Coords E(int i) { return rt::e(8, i); }
Coords B(std::initializer_list<int> idx) { return rt::beta(idx); }
Coords sum(const Coords& a, const Coords& b) { return rt::add(a, b); }
Coords diff(const Coords& a, const Coords& b) { return rt::sub(a, b); }

void with_neg(std::vector<Coords>& out, const Coords& c) {
    out.push_back(c);
    out.push_back(rt::neg(c));
}

// roots of the system satisfying a predicate on the doubled coordinates
RootSet filter(const RootSystem& r, bool (*pred)(const Coords&)) {
    RootSet s;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (pred(r.root(int(i)))) s.push_back(int(i));
    return s;
}

bool half_integral(const Coords& c) { return std::abs(c[0]) == 1; }

struct Printed {
    std::string label;
    std::vector<Coords> r_part, s_part;  // as printed
    std::vector<std::pair<RatVec, Rat>> e_pairings;
};

RatVec amb(const Coords& c) {
    RatVec v(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) v[k] = Rat(c[k], 2), v[k].canonicalize();
    return v;
}

Printed printed_table(int ell, int idx) {
    Printed p;
    auto& R = p.r_part;
    auto& S = p.s_part;
    auto pm_pairs = [&](std::vector<Coords>& out, int hi) {
        for (int i = 1; i <= hi; ++i)
            for (int j = i + 1; j <= hi; ++j) {
                with_neg(out, sum(E(i), E(j)));
                with_neg(out, diff(E(i), E(j)));
            }
    };
    auto pair_e = [&](int i, Rat v) { p.e_pairings.push_back({amb(E(i)), v}); };
    Rat half(1, 2);
    if (ell == 6 && idx == 1) {
        p.label = "D5";
        pm_pairs(R, 5);
        for (int i = 1; i <= 5; ++i) pair_e(i, 0);
        p.e_pairings.push_back({amb(rt::v6()), 2});
    } else if (ell == 6 && idx == 2) {
        p.label = "A5xA1";
        with_neg(R, B({6, 7}));
        for (int i = 1; i <= 5; ++i) {
            with_neg(R, B({i, 8}));
            for (int j = i + 1; j <= 5; ++j) {
                with_neg(R, diff(E(i), E(j)));
                with_neg(S, sum(E(i), E(j)));
                with_neg(S, B({i, j, 6, 7}));
            }
        }
        for (int i = 1; i <= 5; ++i) pair_e(i, half);
        p.e_pairings.push_back({amb(rt::v6()), Rat(3, 2)});
    } else if (ell == 7 && idx == 1) {
        p.label = "D6xA1";
        pm_pairs(R, 6);
        with_neg(R, rt::v7());
        for (int i = 1; i <= 6; ++i) pair_e(i, 0);
        p.e_pairings.push_back({amb(rt::v7()), 2});
    } else if (ell == 7 && idx == 2) {
        p.label = "A7";
        with_neg(R, rt::v7());
        for (int i = 1; i <= 6; ++i) {
            with_neg(R, B({i, 7}));
            with_neg(R, B({i, 8}));
            for (int j = i + 1; j <= 6; ++j) {
                with_neg(R, diff(E(i), E(j)));
                with_neg(S, sum(E(i), E(j)));
                for (int h = j + 1; h <= 6; ++h) {
                    S.push_back(B({i, j, h, 7}));
                    S.push_back(B({i, j, h, 8}));
                }
            }
        }
        for (int i = 1; i <= 6; ++i) pair_e(i, half);
        p.e_pairings.push_back({amb(rt::v7()), 2});
    } else if (ell == 7 && idx == 3) {
        p.label = "E6";
        R.push_back(B({6, 7}));  // printed without its negative
        with_neg(S, rt::v7());
        with_neg(S, B({6, 8}));
        for (int i = 1; i <= 5; ++i) {
            with_neg(R, B({i, 8}));
            with_neg(S, sum(E(i), E(6)));
            with_neg(S, diff(E(i), E(6)));
            with_neg(S, B({i, 7}));
            for (int j = i + 1; j <= 5; ++j) {
                R.push_back(B({i, j, 6, 7}));
                S.push_back(B({i, j, 6, 8}));
                with_neg(R, sum(E(i), E(j)));
                with_neg(R, diff(E(i), E(j)));
                for (int h = j + 1; h <= 5; ++h) {
                    R.push_back(B({i, j, h, 8}));
                    S.push_back(B({i, j, h, 7}));
                }
            }
        }
        for (int i = 1; i <= 5; ++i) pair_e(i, 0);
        pair_e(6, 1);
        p.e_pairings.push_back({amb(rt::v7()), 1});
    } else if (ell == 8 && idx == 1) {
        p.label = "D8";
        pm_pairs(R, 8);
        for (int i = 1; i <= 7; ++i) pair_e(i, 0);
        pair_e(8, 2);
    } else if (ell == 8 && idx == 2) {
        p.label = "E7xA1";
        with_neg(R, B({}));
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j) {
                with_neg(R, diff(E(i), E(j)));
                with_neg(S, sum(E(i), E(j)));
                with_neg(S, B({i, j}));
                for (int h = j + 1; h <= 8; ++h)
                    for (int k = h + 1; k <= 8; ++k) R.push_back(B({i, j, h, k}));
            }
        for (int i = 1; i <= 8; ++i) pair_e(i, half);
    } else {
        throw std::invalid_argument("no grading (" + std::to_string(ell) + "," + std::to_string(idx) + ")");
    }
    return p;
}

}  // namespace

RootSystemPtr e_series(int ell) {
    static std::mutex m;
    static RootSystemPtr cache[3];
    if (ell < 6 || ell > 8) throw std::invalid_argument("E-series rank must be 6, 7 or 8");
    std::lock_guard<std::mutex> lock(m);
    auto& c = cache[ell - 6];
    if (!c) c = build_root_system(ell == 6 ? RootType::E6 : ell == 7 ? RootType::E7 : RootType::E8);
    return c;
}

const std::vector<std::pair<int, int>>& xi_pairs() {
    static const std::vector<std::pair<int, int>> xi{{6, 1}, {6, 2}, {7, 1}, {7, 2}, {7, 3}, {8, 1}, {8, 2}};
    return xi;
}

GradingTable grading_table(int ell, int i) {
    Printed p = printed_table(ell, i);
    GradingTable t;
    t.ell = ell;
    t.index = i;
    t.type_label = p.label;
    t.system = e_series(ell);
    const RootSystem& r = *t.system;
    auto close = [&](const std::vector<Coords>& cs) {
        RootSet s = to_set(r, cs);
        RootSet closed = set_union(s, negate(r, s));
        for (int x : set_minus(closed, s)) t.closure_added.push_back(r.root(x));
        return closed;
    };
    t.r_part = close(p.r_part);
    // the odd part of D5 and D8 is described as all half-integral roots
    t.s_part = p.s_part.empty() ? filter(r, half_integral) : close(p.s_part);
    auto e = r.grading_from_pairings(p.e_pairings);
    if (!e) throw std::logic_error("grading element not in the coweight lattice");
    t.e = *e;
    return t;
}

GradingCheck verify_grading(int ell, int i) {
    GradingTable t = grading_table(ell, i);
    const RootSystem& r = *t.system;
    GradingCheck c;
    auto fail = [&](std::string s) {
        c.ok = false;
        c.problems.push_back(std::move(s));
    };
    RootSet both;
    std::set_intersection(t.r_part.begin(), t.r_part.end(), t.s_part.begin(), t.s_part.end(), std::back_inserter(both));
    for (int a : both) fail(root_str(r, a) + " listed in both parts");
    RootSet all = set_union(t.r_part, t.s_part);
    for (std::size_t a = 0; a < r.size(); ++a)
        if (!contains(all, int(a))) fail(root_str(r, int(a)) + " missing from both parts");
    for (int a : t.r_part)
        if (mod_floor(r.evaluate(a, t.e), 2) != 0) fail(root_str(r, a) + " is in the even part but alpha(E) is odd");
    for (int a : t.s_part)
        if (mod_floor(r.evaluate(a, t.e), 2) != 1) fail(root_str(r, a) + " is in the odd part but alpha(E) is even");
    return c;
}

std::vector<RootSet> odd_part_orbits(const GradingTable& t) {
    const RootSystemPtr& rp = t.system;
    const Weyl& w = Weyl::of(rp);
    std::vector<Perm> gens;
    for (int a : t.r_part)
        if (rp->is_positive(a)) gens.push_back(w.reflection_perm(a));
    std::vector<RootSet> orbits;
    RootSet done;
    for (int s : t.s_part) {
        if (contains(done, s)) continue;
        std::vector<int> orb{s};
        for (std::size_t h = 0; h < orb.size(); ++h)
            for (const auto& g : gens)
                if (std::find(orb.begin(), orb.end(), g[orb[h]]) == orb.end()) orb.push_back(g[orb[h]]);
        RootSet o = make_set(orb);
        done = set_union(done, o);
        orbits.push_back(o);
    }
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

RootSet construct_Q(int ell, int i, const std::vector<Coords>& anchors, AnchorOrder order) {
    GradingTable t = grading_table(ell, i);
    const RootSystem& r = *t.system;
    std::vector<int> a;
    for (const auto& c : anchors) {
        int k = r.index_of(c);
        if (k < 0 || !contains(t.s_part, k)) throw AnchorViolation("anchor is not in the odd part");
        a.push_back(k);
    }
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = x + 1; y < a.size(); ++y)
            if (r.dot4(a[x], a[y]) < 0) throw AnchorViolation("anchors with a negative inner product");
    if (order == AnchorOrder::Reverse) std::reverse(a.begin(), a.end());
    RootSet q = make_set(a);
    for (int anchor : a) {
        RootSet add;
        for (int s : t.s_part) {
            if (r.dot4(s, anchor) <= 0) continue;
            bool ok = true;
            for (int b : q) ok = ok && r.dot4(s, b) >= 0;
            if (ok) add.push_back(s);
        }
        q = set_union(q, add);
    }
    return q;
}

}  // namespace flagcr

namespace flagcr {

namespace {

Coords Bv(const std::vector<int>& idx) { return rt::beta(idx); }
Coords pp(int i, int j) { return rt::ei_ej(8, i, j); }
Coords pm(int i, int j) { return rt::ei_ej(8, i, j, 1, -1); }
Coords negc(const Coords& c) { return rt::neg(c); }

using Anchors = std::vector<Coords>;

GradingElement ambient_e(const RootSystem& r, const RatVec& h) {
    auto g = r.grading_from_ambient(h);
    if (!g) throw std::logic_error("ambient vector is not a grading element");
    return *g;
}

RatVec all_half() { return RatVec(8, Rat(1, 2)); }

CatalogEntry entry(int ell, int i, std::string label, const Anchors& anchors, Claims claims, std::string source) {
    CatalogEntry e;
    e.label = std::move(label);
    e.set = construct_Q(ell, i, anchors);
    e.claims = std::move(claims);
    e.source = std::move(source);
    e.parameters = {{"ell", ell}, {"i", i}, {"k", int(anchors.size())}};
    e.part = grading_table(ell, i).s_part;
    evaluate_entry(*e_series(ell), e);
    return e;
}

CatalogEntry plain(int ell, std::string label, RootSet set, Claims claims, std::string source) {
    CatalogEntry e;
    e.label = std::move(label);
    e.set = std::move(set);
    e.claims = std::move(claims);
    e.source = std::move(source);
    e.parameters = {{"ell", ell}};
    evaluate_entry(*e_series(ell), e);
    return e;
}

// The odd-part orbit through `seed`.
CatalogEntry orbit_entry(int ell, int i, std::string label, const Coords& seed, Claims claims) {
    GradingTable t = grading_table(ell, i);
    int k = t.system->index_of(seed);
    for (const auto& o : odd_part_orbits(t))
        if (contains(o, k)) {
            CatalogEntry e = plain(ell, std::move(label), o, std::move(claims), "odd-part orbit");
            e.parameters["i"] = i;
            return e;
        }
    throw std::logic_error("seed outside the odd part");
}

// Anchors of the numbered E8 examples.
const std::vector<std::pair<int, Anchors>>& numbered_examples() {
    static const std::vector<std::pair<int, Anchors>> ex{
        {1, {B({}), B({1, 2, 3, 4})}},
        {2, {B({}), B({1, 2, 3, 4}), B({1, 2, 5, 6})}},
        {3, {B({1, 2, 3, 4}), B({1, 3, 5, 6}), B({1, 3, 5, 8})}},
        {4, {B({}), B({1, 2, 3, 4}), B({1, 2, 5, 6}), B({3, 4, 5, 6}), B({1, 3, 5, 7})}},
        {5, {B({}), B({1, 2, 3, 4}), B({1, 2, 5, 6}), B({1, 3, 6, 7}), B({2, 3, 6, 8}), B({2, 3, 5, 7}), B({1, 3, 5, 8})}},
        {6, {B({}), B({1, 2, 6, 7}), B({3, 4, 6, 7}), B({1, 3, 6, 8}), B({2, 4, 6, 8}), B({1, 4, 7, 8}), B({2, 3, 7, 8})}},
        {7, {B({7, 8}), B({5, 6})}},
        {8, {B({7, 8}), B({5, 6}), B({3, 4})}},
        {9, {B({7, 8}), B({5, 6}), B({3, 4}), B({1, 2})}},
    };
    return ex;
}

std::string anchor_label(int ell, int i, const RootSystem& r, const Anchors& a) {
    std::string s = "Q_{" + std::to_string(ell) + "," + std::to_string(i);
    for (const auto& c : a) s += "," + root_str(r, r.index_of(c));
    return s + "}";
}

// every subset of `rest`, in binary order, appended to `head`
std::vector<Anchors> subsets_after(const Anchors& head, const Anchors& rest) {
    std::vector<Anchors> out;
    for (unsigned m = 0; m < (1u << rest.size()); ++m) {
        Anchors a = head;
        for (std::size_t k = 0; k < rest.size(); ++k)
            if (m >> k & 1) a.push_back(rest[k]);
        out.push_back(a);
    }
    return out;
}

}  // namespace

RootSet e8_q_prime(int p) {
    const RootSystem& r = *e_series(8);
    std::vector<Coords> cs{B({})};
    for (int i = 1; i <= p; ++i) {
        for (int j = i + 1; j <= p; ++j) cs.push_back(B({i, j}));
        for (int k = p + 1; k <= 8; ++k) cs.push_back(pp(i, k));
    }
    for (int k = p + 1; k <= 8; ++k)
        for (int s = k + 1; s <= 8; ++s) cs.push_back(B({k, s}));
    return to_set(r, cs);
}

std::vector<CatalogEntry> e_series_catalog(int ell) {
    const RootSystem& r = *e_series(ell);
    std::vector<CatalogEntry> out;
    const Claims single{.maximal_symmetric = true, .symmetric = true, .weak_j = false};
    const std::string single_src = "single-anchor maximal symmetric set";
    const Claims orbit_claim{.maximal = true, .symmetric = true, .weak_j = true, .j_property = true};
    if (ell == 6) {
        out.push_back(entry(6, 2, "Q_{6,2,b4567}", {B({4, 5, 6, 7})}, single, single_src));
        out.push_back(orbit_entry(6, 1, "Q_{6,1,b67,-b18}", B({6, 7}), orbit_claim));
        out.push_back(orbit_entry(6, 1, "Q_{6,1,-b67,b18}", negc(B({6, 7})), orbit_claim));
        Anchors orth{pp(1, 5), pp(2, 4), B({1, 2, 6, 7}), B({4, 5, 6, 7})};
        for (std::size_t k = 1; k <= orth.size(); ++k) {
            Anchors a(orth.begin(), orth.begin() + k);
            out.push_back(entry(6, 2, anchor_label(6, 2, r, a), a, {}, "orthogonal-anchor family"));
        }
    } else if (ell == 7) {
        out.push_back(entry(7, 1, "Q_{7,1,b67}", {B({6, 7})}, single, single_src));
        out.push_back(entry(7, 2, "Q_{7,2,b4567}", {B({4, 5, 6, 7})}, single, single_src));
        Coords v7 = rt::v7();
        out.push_back(orbit_entry(7, 3, "Q_{7,3,v7,e1+e6}", v7, orbit_claim));
        out.push_back(orbit_entry(7, 3, "Q_{7,3,-v7,e1-e6}", negc(v7), orbit_claim));
        for (const auto& a : std::vector<Anchors>{{v7, pm(1, 6)}, {v7, pm(1, 6), pp(1, 6)}})
            out.push_back(entry(7, 3, anchor_label(7, 3, r, a), a, {.maximal_in_part = true}, "maximal symmetric list of the odd part"));
        Anchors orth{B({6, 8}), B({1, 7}), B({2, 5, 6, 7}), B({3, 4, 6, 7})};
        for (std::size_t k = 1; k <= orth.size(); ++k) {
            Anchors a(orth.begin(), orth.begin() + k);
            out.push_back(entry(7, 1, anchor_label(7, 1, r, a), a, {}, "orthogonal-anchor family"));
        }
        for (const auto& a : subsets_after({pp(1, 2), pp(3, 4)}, {pp(5, 6), B({1, 3, 5, 7}), B({1, 4, 6, 7}), B({2, 3, 6, 7}), B({2, 4, 5, 7})}))
            out.push_back(entry(7, 2, anchor_label(7, 2, r, a), a, {}, "orthogonal-anchor family"));
    } else if (ell == 8) {
        out.push_back(entry(8, 1, "Q_{8,1,b0}", {B({})}, single, single_src));
        out.push_back(entry(8, 2, "Q_{8,2,b78}", {B({7, 8})}, single, single_src));
        GradingElement e82 = ambient_e(r, all_half());
        RatVec w6(8, Rat(0));
        w6[5] = w6[6] = w6[7] = -2;
        GradingElement ex6 = ambient_e(r, w6);
        RatVec w81(8, Rat(0));
        w81[7] = 2;
        GradingElement e81 = ambient_e(r, w81);
        for (const auto& [k, a] : numbered_examples()) {
            Claims c;
            switch (k) {
                case 1: case 2: c = {.symmetric = true, .weak_j = false}; break;
                case 3: c = {.symmetric = true, .weak_j = false, .maximal_in_part = true}; break;
                case 4: c = {.j_property = true}; c.witness_exact = e81; break;
                case 5: c = {.maximal = true, .symmetric = true, .weak_j = false}; break;
                case 6: c = {.weak_j = true, .j_property = false, .maximal_in_part = true}; c.witness_mod4 = ex6; break;
                default: c = {.j_property = true, .maximal_in_part = true}; c.witness_exact = e82; break;
            }
            CatalogEntry e = entry(8, k <= 6 ? 1 : 2, "example (" + std::to_string(k) + ")", a, c,
                                   anchor_label(8, k <= 6 ? 1 : 2, r, a));
            e.parameters["example"] = k;
            out.push_back(std::move(e));
        }
        for (int p = 1; p <= 8; ++p) {
            CatalogEntry e = plain(8, "Q'_" + std::to_string(p), e8_q_prime(p), {.symmetric = p % 2 == 0},
                                   "beta_0-positive maximal family");
            e.parameters["p"] = p;
            out.push_back(std::move(e));
        }
        {
            std::vector<Coords> cs{B({}), B({1, 2}), B({1, 3}), B({2, 3}), B({4, 5})};
            for (int j : {4, 5})
                for (int h = 6; h <= 8; ++h) {
                    cs.push_back(B({j, h}));
                    for (int k = h + 1; k <= 8; ++k) cs.push_back(B({h, k}));
                }
            out.push_back(plain(8, "upsilon example", make_set(to_set(r, cs)),
                                {.maximal_symmetric = false, .weak_j = true, .j_property = false}, "weak-J non-J example"));
        }
        Anchors orth{B({1, 2}), B({3, 4}), B({5, 6}), B({7, 8})};
        for (std::size_t k = 1; k <= orth.size(); ++k) {
            Anchors a(orth.begin(), orth.begin() + k);
            out.push_back(entry(8, 2, anchor_label(8, 2, r, a), a, {}, "orthogonal-anchor family"));
        }
        for (const auto& a : subsets_after({B({}), B({1, 2, 3, 4}), B({1, 2, 5, 6})},
                                           {B({1, 2, 7, 8}), B({1, 3, 5, 8}), B({1, 3, 6, 7}), B({2, 3, 5, 7}), B({2, 3, 6, 8})}))
            out.push_back(entry(8, 1, anchor_label(8, 1, r, a), a, {}, "orthogonal-anchor family"));
    } else {
        throw std::invalid_argument("E-series rank must be 6, 7 or 8");
    }
    return out;
}

std::vector<PrintedComparison> e_series_printed_sets() {
    std::vector<PrintedComparison> out;
    auto compare = [&](std::string label, int ell, const RootSet& built, const std::vector<Coords>& printed) {
        const RootSystem& r = *e_series(ell);
        PrintedComparison c;
        c.label = std::move(label);
        c.ell = ell;
        c.constructed = built;
        c.printed = to_set(r, printed);
        c.equal = c.constructed == c.printed;
        for (int x : set_minus(c.constructed, c.printed)) c.only_constructed.push_back(root_str(r, x));
        for (int x : set_minus(c.printed, c.constructed)) c.only_printed.push_back(root_str(r, x));
        c.printed_subset = c.only_printed.empty();
        out.push_back(std::move(c));
    };
    auto q = [](int ell, int i, const Anchors& a) { return construct_Q(ell, i, a); };
    std::vector<Coords> p;

    // single anchors
    p = {negc(pp(4, 5)), B({4, 5, 6, 7})};
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) p.push_back(pp(i, j));
        for (int r : {4, 5}) p.push_back(B({i, r, 6, 7}));
    }
    compare("Q_{6,2,b4567}", 6, q(6, 2, {B({4, 5, 6, 7})}), p);
    p = {B({6, 7}), B({6, 8})};
    for (int i = 1; i <= 5; ++i) {
        p.push_back(B({i, 7}));
        for (int j = i + 1; j <= 5; ++j) p.push_back(B({i, j, 6, 7}));
    }
    compare("Q_{7,1,b67}", 7, q(7, 1, {B({6, 7})}), p);
    p = {B({4, 5, 6, 7}), B({4, 5, 6, 8})};
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) p.push_back(pp(i, j));
        for (int r = 4; r <= 6; ++r)
            for (int s = r + 1; s <= 6; ++s) p.push_back(B({i, r, s, 7}));
    }
    for (int r = 4; r <= 6; ++r)
        for (int s = r + 1; s <= 6; ++s) p.push_back(negc(pp(r, s)));
    compare("Q_{7,2,b4567}", 7, q(7, 2, {B({4, 5, 6, 7})}), p);
    p = {B({})};
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) p.push_back(B({i, j}));
    std::vector<Coords> q81 = p;
    compare("Q_{8,1,b0}", 8, q(8, 1, {B({})}), p);
    p = {B({7, 8}), negc(pp(7, 8))};
    for (int i = 1; i <= 6; ++i) {
        for (int j = i + 1; j <= 6; ++j) p.push_back(pp(i, j));
        for (int r : {7, 8}) p.push_back(pm(i, r)), p.push_back(B({i, r}));
    }
    compare("Q_{8,2,b78}", 8, q(8, 2, {B({7, 8})}), p);

    // identities between constructions
    compare("Q_{8,1,b12,b34,b56,b78} vs Q_{8,1,b0}", 8, q(8, 1, {B({1, 2}), B({3, 4}), B({5, 6}), B({7, 8})}), q81);
    {
        const RootSystem& r = *e_series(8);
        std::vector<Coords> rhs;
        for (int x : q(8, 1, {B({}), B({1, 2, 3, 4}), B({1, 2, 5, 6}), B({1, 2, 7, 8})})) rhs.push_back(r.root(x));
        compare("Q_{8,1,b0,b12} vs Q_{8,1,b0,b1234,b1256,b1278}", 8, q(8, 1, {B({}), B({1, 2})}), rhs);
    }

    // odd-part orbits
    p = {B({6, 7})};
    for (int i = 1; i <= 5; ++i) {
        p.push_back(negc(B({i, 8})));
        for (int j = i + 1; j <= 5; ++j) p.push_back(B({i, j, 6, 7}));
    }
    compare("Q_{6,1,b67,-b18}", 6, q(6, 1, {B({6, 7}), negc(B({1, 8}))}), p);
    p = {negc(B({6, 7}))};
    for (int i = 1; i <= 5; ++i) {
        p.push_back(B({i, 8}));
        for (int j = i + 1; j <= 5; ++j)
            for (int h = j + 1; h <= 5; ++h) p.push_back(B({i, j, h, 8}));
    }
    compare("Q_{6,1,-b67,b18}", 6, q(6, 1, {negc(B({6, 7})), B({1, 8})}), p);
    p = {rt::v7(), negc(B({6, 8}))};
    for (int i = 1; i <= 5; ++i) {
        p.push_back(pp(i, 6));
        p.push_back(rt::add(rt::neg(E(i)), E(6)));
        for (int j = i + 1; j <= 5; ++j)
            for (int h = j + 1; h <= 5; ++h) p.push_back(B({i, j, h, 7}));
    }
    compare("Q_{7,3,v7,e1+e6}", 7, q(7, 3, {rt::v7(), pp(1, 6)}), p);
    p = {negc(rt::v7()), B({6, 8})};
    for (int i = 1; i <= 5; ++i) {
        p.push_back(pm(i, 6));
        p.push_back(negc(pp(i, 6)));
        for (int j = i + 1; j <= 5; ++j) p.push_back(B({i, j, 6, 8}));
    }
    compare("Q_{7,3,-v7,e1-e6}", 7, q(7, 3, {negc(rt::v7()), pm(1, 6)}), p);

    // numbered examples with explicit lists
    const auto& ex = numbered_examples();
    p = {B({}), B({1, 2, 3, 4})};
    for (int i = 1; i <= 4; ++i)
        for (int r = 5; r <= 8; ++r) {
            p.push_back(B({i, r}));
            for (int j = i + 1; j <= 4; ++j)
                for (int h = j + 1; h <= 4; ++h) p.push_back(B({i, j, h, r}));
        }
    compare("example (1)", 8, q(8, 1, ex[0].second), p);
    {
        std::vector<Coords> s{B({}), B({1, 2}), B({1, 2, 3, 4}), B({1, 2, 5, 6})};
        for (int i : {1, 2})
            for (int j : {3, 4})
                for (int h : {5, 6})
                    for (int k : {7, 8})
                        for (const auto& c : {B({i, j}), B({i, h}), B({i, k}), B({j, h}), Bv({1, 2, j, h}), Bv({i, 3, 4, h}), Bv({i, j, 5, 6})})
                            s.push_back(c);
        compare("example (2)", 8, q(8, 1, ex[1].second), s);
    }
    p = {B({}), B({1, 2, 3, 4}), B({1, 3, 5, 6}), B({1, 3, 5, 8}), B({1, 2, 3, 5}), B({2, 3}), B({2, 5}), B({2, 8}), B({3, 5}), B({3, 6}), B({4, 5})};
    for (int i = 2; i <= 8; ++i) p.push_back(B({1, i}));
    compare("example (3)", 8, q(8, 1, ex[2].second), p);
    p = {B({}), B({1, 2}), B({1, 3}), B({2, 3}), B({3, 5}), B({3, 6}), B({1, 2, 3, 4}), B({1, 2, 3, 5}), B({1, 2, 3, 6}),
         B({1, 2, 3, 7}), B({1, 2, 3, 8}), B({1, 2, 5, 6}), B({1, 3, 5, 6}), B({1, 3, 6, 7}), B({2, 3, 5, 6}),
         B({2, 3, 6, 8}), B({1, 3, 6, 8}), B({2, 3, 5, 7}), B({1, 3, 5, 8})};
    compare("example (5)", 8, q(8, 1, ex[4].second), p);
    p = {B({}), B({6, 7}), B({6, 8}), B({7, 8}), B({1, 2, 6, 7}), B({3, 4, 6, 7}), B({1, 3, 6, 8}), B({2, 4, 6, 8}), B({1, 4, 7, 8}), B({2, 3, 7, 8})};
    compare("example (6)", 8, q(8, 1, ex[5].second), p);
    for (int k : {7, 8, 9}) {
        std::vector<std::pair<int, int>> skip{{5, 6}};
        if (k >= 8) skip.push_back({3, 4});
        if (k >= 9) skip.push_back({1, 2});
        std::vector<Coords> s;
        // the printed list for (8) starts from beta_34, beta_56 only
        if (k != 8) s.push_back(B({7, 8}));
        for (auto [a, b] : skip) s.push_back(B({a, b}));
        for (int i = 1; i <= 6; ++i) {
            for (int r : {7, 8}) s.push_back(B({i, r}));
            for (int j = i + 1; j <= 6; ++j)
                if (std::find(skip.begin(), skip.end(), std::make_pair(i, j)) == skip.end()) s.push_back(pp(i, j));
        }
        compare("example (" + std::to_string(k) + ")", 8, q(8, 2, ex[k - 1].second), s);
    }
    return out;
}

}  // namespace flagcr
