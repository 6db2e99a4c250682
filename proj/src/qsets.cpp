#include "flagcr/qsets.hpp"

#include <algorithm>
#include <bit>

namespace flagcr {

bool is_lb(const RootSystem& r, const RootSet& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i; j < q.size(); ++j) {
            if (r.neg(q[i]) == q[j]) return false;
            if (r.sum(q[i], q[j]) >= 0) return false;
        }
    return true;
}

static IntMatrix coefficient_rows(const RootSystem& r, const RootSet& q) {
    IntMatrix c(q.size(), r.rank());
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int j = 0; j < r.rank(); ++j) c(i, j) = r.coeffs(q[i])[j];
    return c;
}

static IntVec coeff_vec(const RootSystem& r, int a) {
    const auto& c = r.coeffs(a);
    return IntVec(c.begin(), c.end());
}

bool is_fundamental(const RootSystem& r, const RootSet& q) {
    if (q.empty()) return false;
    // the span is all of Z^rank iff its Hermite form is the identity
    IntMatrix h = hermite_normal_form(coefficient_rows(r, q));
    return h == IntMatrix::identity(r.rank());
}

bool DegreeCoset::contains(const Int& h) const {
    if (empty) return false;
    if (step == 0) return h == base;
    return mod_floor(h - base, step) == 0;
}

bool DegreeCoset::contains_mod(const Int& t, const Int& m) const {
    if (empty) return false;
    Int g = gcd(step, m);  // gcd(0, m) = m
    return mod_floor(t - base, g) == 0;
}

static IntMatrix relation_matrix(const RootSystem& r, const RootSet& q) {
    return coefficient_rows(r, q).transposed();  // columns are roots of q
}

DegreeMap::DegreeMap(const RootSystem& r, const RootSet& q) : r_(r), sys_(relation_matrix(r, q)) {
    gcd_ = lattice_coset_gcd(sys_.kernel_basis(), IntVec(q.size(), Int(1)));
}

DegreeCoset DegreeMap::degree_set(int gamma) const {
    DegreeCoset c;
    auto sol = sys_.solve(coeff_vec(r_, gamma));
    if (!sol) return c;
    c.empty = false;
    c.step = gcd_;
    for (const auto& k : sol->particular) c.base += k;
    if (c.step > 0) c.base = mod_floor(c.base, c.step);
    return c;
}

DegreeCoset degree_set(const RootSystem& r, const RootSet& q, int gamma) {
    return DegreeMap(r, q).degree_set(gamma);
}

RootSet q_star_11(const RootSystem& r, const RootSet& q) {
    std::vector<int> out;
    for (int a : q)
        for (int b : q) {
            if (a == b) continue;
            int d = r.sum(a, r.neg(b));
            if (d >= 0) {
                out.push_back(d);
                out.push_back(r.neg(d));
            }
        }
    return make_set(out);
}

RootSet q_star(const RootSystem& r, const RootSet& q, const Int& h) {
    DegreeMap dm(r, q);
    RootSet out;
    for (std::size_t g = 0; g < r.size(); ++g)
        if (dm.degree_set(int(g)).contains(h)) out.push_back(int(g));
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::NotLb: return "not-lb";
        case Verdict::NotFundamental: return "not-fundamental";
    }
    return "?";
}

bool verify_witness(const RootSystem& r, const RootSet& q, const GradingElement& e, int m) {
    if (int(e.values.size()) != r.rank()) return false;
    for (int a : q) {
        Int v = r.evaluate(a, e);
        if (m == 0 ? v != 1 : mod_floor(v - 1, m) != 0) return false;
    }
    return true;
}

namespace {

std::optional<Verdict> precondition(const RootSystem& r, const RootSet& q) {
    if (!is_lb(r, q)) return Verdict::NotLb;
    if (!is_fundamental(r, q)) return Verdict::NotFundamental;
    return std::nullopt;
}

// Congruence alpha(E) = 1 mod m on q, solved directly on the simple-root values of E.
std::optional<GradingElement> solve_grading(const RootSystem& r, const RootSet& q, int m) {
    IntMatrix c = coefficient_rows(r, q);
    IntVec ones(q.size(), Int(1));
    if (m == 0) {
        auto s = solve_diophantine(c, ones);
        if (!s) return std::nullopt;
        return GradingElement{s->particular};
    }
    auto s = solve_congruence(c, ones, Int(m));
    if (!s) return std::nullopt;
    return GradingElement{*s};
}

Decision decide_mod(const RootSystem& r, const RootSet& q, int m, int forbidden, const char* name) {
    if (auto p = precondition(r, q)) return {*p, std::nullopt};
    // coset side: no difference of two roots of q may have a degree = forbidden mod m
    DegreeMap dm(r, q);
    bool coset_ok = true;
    for (int g : q_star_11(r, q))
        if (dm.degree_set(g).contains_mod(forbidden, m)) {
            coset_ok = false;
            break;
        }
    auto w = solve_grading(r, q, m);
    if (coset_ok != w.has_value())
        throw MethodDisagreement(std::string(name) + ": coset analysis and congruence solver disagree");
    if (!w) return {Verdict::Fails, std::nullopt};
    if (!verify_witness(r, q, *w, m)) throw MethodDisagreement(std::string(name) + ": witness does not verify");
    return {Verdict::Holds, w};
}

}  // namespace

Decision is_symmetric(const RootSystem& r, const RootSet& q) { return decide_mod(r, q, 2, 1, "is_symmetric"); }

Decision has_weak_j(const RootSystem& r, const RootSet& q) { return decide_mod(r, q, 4, 2, "has_weak_j"); }

Decision has_j(const RootSystem& r, const RootSet& q) {
    if (auto p = precondition(r, q)) return {*p, std::nullopt};
    auto w = solve_grading(r, q, 0);
    DegreeMap dm(r, q);
    bool singletons = true;
    for (std::size_t g = 0; g < r.size() && singletons; ++g) singletons = dm.degree_set(int(g)).singleton();
    if (singletons != w.has_value()) throw MethodDisagreement("has_j: exact solve and degree cosets disagree");
    if (!w) return {Verdict::Fails, std::nullopt};
    if (!verify_witness(r, q, *w, 0)) throw MethodDisagreement("has_j: witness does not verify");
    return {Verdict::Holds, w};
}

PropertyReport analyze(const RootSystem& r, const RootSet& q) {
    PropertyReport p;
    p.is_lb = is_lb(r, q);
    p.is_fundamental = is_fundamental(r, q);
    if (!p.is_lb || !p.is_fundamental) return p;
    auto s = is_symmetric(r, q), w = has_weak_j(r, q), j = has_j(r, q);
    p.symmetric = s.holds();
    p.weak_j = w.holds();
    p.j_property = j.holds();
    p.witness_mod2 = s.witness;
    p.witness_mod4 = w.witness;
    p.witness_exact = j.witness;
    return p;
}

int RootBits::count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
}

int RootBits::first() const {
    for (int i = 0; i < 4; ++i)
        if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
}

RootBits RootBits::operator&(const RootBits& o) const {
    RootBits b;
    for (int i = 0; i < 4; ++i) b.w[i] = w[i] & o.w[i];
    return b;
}

RootBits RootBits::operator|(const RootBits& o) const {
    RootBits b;
    for (int i = 0; i < 4; ++i) b.w[i] = w[i] | o.w[i];
    return b;
}

RootBits RootBits::without(const RootBits& o) const {
    RootBits b;
    for (int i = 0; i < 4; ++i) b.w[i] = w[i] & ~o.w[i];
    return b;
}

RootSet RootBits::to_set() const {
    RootSet s;
    for (int i = 0; i < 4; ++i)
        for (std::uint64_t x = w[i]; x; x &= x - 1) s.push_back(i * 64 + std::countr_zero(x));
    return s;
}

RootBits RootBits::of(const RootSet& q) {
    RootBits b;
    for (int i : q) b.set(i);
    return b;
}

CompatGraph compat_graph(const RootSystem& r, const std::optional<RootSet>& constraint) {
    CompatGraph g;
    g.adj.resize(r.size());
    if (constraint) {
        g.vertices = RootBits::of(*constraint);
    } else {
        for (std::size_t i = 0; i < r.size(); ++i) g.vertices.set(int(i));
    }
    RootSet vs = g.vertices.to_set();
    for (int a : vs)
        for (int b : vs)
            if (a != b && r.neg(a) != b && r.sum(a, b) < 0) g.adj[a].set(b);
    return g;
}

}  // namespace flagcr
