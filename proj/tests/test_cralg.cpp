#include "doctest.h"
#include "support.hpp"

#include "flagcr/classify.hpp"
#include "flagcr/cralg.hpp"

#include <random>

using namespace flagcr;
using namespace testsupport;

namespace {

const Gauss I = Gauss::I();

GVec v3(Gauss a, Gauss b, Gauss c) { return {a, b, c}; }

// ideal generated by x: close span{x} under ad of the basis
Subspace ideal_closure(const LieAlgebra& g, const GVec& x) {
    std::size_t n = g.dim();
    std::vector<GVec> frontier{x}, all{x};
    Subspace cur = Subspace::span({x}, n);
    while (!frontier.empty()) {
        std::vector<GVec> next;
        for (const auto& y : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                GVec z = g.bracket(g_unit(n, i), y);
                if (cur.contains(z)) continue;
                cur = cur + Subspace::span({z}, n);
                next.push_back(z);
            }
        frontier = next;
    }
    return cur;
}

GMat dense_killing(const LieAlgebra& g) {
    std::size_t n = g.dim();
    std::vector<GMat> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(g_unit(n, i)));
    GMat k(n, GVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            GMat p = g_mul(ads[i], ads[j]);
            for (std::size_t t = 0; t < n; ++t) k[i][j] += p[t][t];
        }
    return k;
}

// every E with entries in [0, m)
void for_each_grading(int rank, int m, const std::function<void(const GradingElement&)>& f) {
    std::vector<int> e(rank, 0);
    for (;;) {
        GradingElement g;
        for (int x : e) g.values.push_back(Int(x));
        f(g);
        int i = 0;
        while (i < rank && e[i] == m - 1) e[i++] = 0;
        if (i == rank) return;
        ++e[i];
    }
}

std::vector<RootSet> fundamental_lb_sets(const RootSystem& r) {
    std::vector<RootSet> out;
    for_each_lb_set(r, [&](const RootSet& q) {
        if (is_fundamental(r, q)) out.push_back(q);
    });
    return out;
}

}  // namespace

TEST_CASE("heisenberg: dimensions, Levi form and nondegeneracy") {
    auto p = load_preset("heisenberg");
    const auto& a = p.cr;
    auto d = cr_dim_codim(a);
    CHECK(d.cr_dim == 1);
    CHECK(d.cr_codim == 1);
    CHECK(is_fundamental_cr(a));
    CHECK(is_effective(a));
    CHECK(is_levi_nondegenerate(a));

    // [X + iY, X - iY] = -2i T, so -i xi(.) = -2 for xi(T) = 1
    GVec z = v3(1, I, 0), zb = v3(1, -I, 0);
    CHECK(a.algebra().bracket(z, zb) == v3(0, 0, Gauss(0, -2)));
    GVec xi = v3(0, 0, 1);
    GMat m = scalar_levi_form(a, xi);
    REQUIRE(m.size() == 1);
    CHECK(m[0][0] == Gauss(-2));
    CHECK(is_hermitian(m));

    GMat m2 = scalar_levi_form(a, v3(0, 0, 2));
    CHECK(m2[0][0] == Gauss(-4));

    // i[conj Z, Z] = i * 2i T = -2T
    CHECK(vector_levi_form(a, z) == v3(0, 0, -2));
    Gauss c(2, 3);
    CHECK(vector_levi_form(a, g_scale(c, z)) == g_scale(Gauss(c.norm()), v3(0, 0, -2)));
    CHECK_THROWS_AS(vector_levi_form(a, v3(1, 0, 0)), CrPrecondition);
    CHECK_THROWS_AS(scalar_levi_form(a, v3(1, 0, 0)), NotCharacteristic);
    CHECK_THROWS_AS(scalar_levi_form(a, v3(0, 0, I)), NotCharacteristic);
}

TEST_CASE("heisenberg with the center in q is not effective") {
    auto p = load_preset("heisenberg-center");
    CHECK_FALSE(is_effective(p.cr));
    CHECK(largest_ideal_in_isotropy(p.cr) == Subspace::span({v3(0, 0, 1)}, 3));
    CHECK_FALSE(is_levi_nondegenerate(p.cr));
}

TEST_CASE("largest ideal in the isotropy matches the closure oracle") {
    std::mt19937_64 rng(7);
    for (const auto& name : preset_names()) {
        auto p = load_preset(name);
        const auto& g = p.cr.algebra();
        Subspace iso = p.cr.q_cap_qbar();
        Subspace lib = largest_ideal_in_isotropy(p.cr);
        CAPTURE(name);
        CHECK(g.is_ideal(lib));
        CHECK(iso.contains(lib));
        CHECK(g.is_conj_stable(lib));
        // x lies in the largest ideal iff its generated ideal stays in the isotropy
        std::vector<GVec> probes = iso.basis();
        for (int t = 0; t < 5 && !iso.basis().empty(); ++t) {
            GVec x(g.dim());
            for (const auto& b : iso.basis()) x = g_add(x, g_scale(Gauss(Rat(long(rng() % 7) - 3)), b));
            probes.push_back(x);
        }
        for (const auto& x : probes) CHECK(lib.contains(x) == iso.contains(ideal_closure(g, x)));
    }
}

TEST_CASE("every preset satisfies Jacobi and conj axioms") {
    for (const auto& name : preset_names()) {
        auto p = load_preset(name);
        const auto& g = p.cr.algebra();
        std::size_t n = g.dim();
        CAPTURE(name);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    GVec ei = g_unit(n, i), ej = g_unit(n, j), ek = g_unit(n, k);
                    GVec s = g_add(g.bracket(ei, g.bracket(ej, ek)),
                                   g_add(g.bracket(ej, g.bracket(ek, ei)), g.bracket(ek, g.bracket(ei, ej))));
                    CHECK(g_is_zero(s));
                    CHECK(g.conj(g.bracket(ei, ej)) == g.bracket(g.conj(ei), g.conj(ej)));
                }
        for (std::size_t i = 0; i < n; ++i) CHECK(g.conj(g.conj(g_unit(n, i))) == g_unit(n, i));
    }
}

TEST_CASE("structure constant validation rejects bad tables") {
    const char* bad_jacobi =
        R"({"dim":3,"c":[[0,1,1,1,0],[1,2,0,1,0]],"q":[]})";
    CHECK_THROWS_AS(preset_from_json(bad_jacobi), LieValidationError);
    const char* bad_conj = R"({"dim":2,"c":[],"conj":[[2,0],[0,1]],"q":[]})";
    CHECK_THROWS_AS(preset_from_json(bad_conj), LieValidationError);
    const char* not_sub = R"({"dim":3,"c":[[0,1,2,1,0]],"q":[[1,0,0],[0,1,0]]})";
    CHECK_THROWS_AS(preset_from_json(not_sub), LieValidationError);
}

TEST_CASE("abelian algebra: Levi-flat, degenerate; totally real is vacuously nondegenerate") {
    const char* flat = R"({"dim":2,"labels":["a","b"],"c":[],"q":[[1,"i"]]})";
    auto p = preset_from_json(flat);
    CHECK(cr_dim_codim(p.cr).cr_dim == 1);
    CHECK_FALSE(is_levi_nondegenerate(p.cr));
    CHECK(g_is_zero(vector_levi_form(p.cr, {1, I})));

    const char* real = R"({"dim":2,"c":[],"q":[[1,0]]})";
    auto t = preset_from_json(real);
    CHECK(cr_dim_codim(t.cr).cr_dim == 0);
    CHECK(is_levi_nondegenerate(t.cr));
    CHECK(scalar_levi_form(t.cr, {0, 1}).empty());
}

TEST_CASE("su2: Killing form is -2 on the standard basis and the isotropy is compact") {
    auto p = load_preset("su2");
    const auto& g = p.cr.algebra();
    GMat k = g.killing();
    CHECK(k == dense_killing(g));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(k[i][j] == Gauss(i == j ? -2 : 0));
    CHECK(isotropy_almost_compact(load_preset("su2-line").cr));
    // sl2 with q containing H: the Killing form is positive on H
    const char* split = R"({"dim":3,"labels":["H","E","F"],
        "c":[[0,1,1,2,0],[0,2,2,-2,0],[1,2,0,1,0]],"q":[[1,0,0],[0,1,0]]})";
    auto s = preset_from_json(split);
    CHECK(s.cr.algebra().killing() == dense_killing(s.cr.algebra()));
    CHECK_FALSE(isotropy_almost_compact(s.cr));
    // heisenberg-center: isotropy RT lies in the Killing kernel
    CHECK(isotropy_almost_compact(load_preset("heisenberg-center").cr));
}

TEST_CASE("Chevalley constants are +-(p+1) and the conjugation is compact") {
    for (auto [t, n] : {std::pair{RootType::A, 2}, {RootType::A, 3}, {RootType::B, 2}, {RootType::B, 3},
                        {RootType::C, 3}, {RootType::D, 4}, {RootType::G2, 2}}) {
        auto r = build_root_system(t, n);
        LieAlgebra g = chevalley_algebra(*r);
        std::size_t l = r->rank();
        CAPTURE(r->label());
        REQUIRE(g.dim() == l + r->size());
        for (int a = 0; a < int(r->size()); ++a)
            for (int b = 0; b < int(r->size()); ++b) {
                int s = r->sum(a, b);
                if (s < 0) continue;
                int p = 0;
                for (int x = b; (x = r->sum(x, r->neg(a))) >= 0;) ++p;
                GVec br = g.basis_bracket(l + a, l + b);
                Gauss c = br[l + s];
                CHECK((c == Gauss(p + 1) || c == Gauss(-(p + 1))));
            }
        // Killing form negative definite on the real span of compact vectors i h_k
        GMat k = g.killing();
        for (std::size_t i = 0; i < l; ++i) {
            GVec x = g_scale(I, g_unit(g.dim(), i));
            Gauss v;
            GVec kx = g_apply(k, x);
            for (std::size_t j = 0; j < g.dim(); ++j) v += x[j] * kx[j];
            CHECK(v.re < 0);
            CHECK(v.is_real());
        }
    }
}

TEST_CASE("flag presets agree with the combinatorial predicates") {
    for (auto [t, n] : {std::pair{RootType::A, 2}, {RootType::B, 2}, {RootType::G2, 2}, {RootType::A, 3}}) {
        auto r = build_root_system(t, n);
        for (const auto& q : fundamental_lb_sets(*r)) {
            CRAlgebra a = flag_cr_algebra(r, q);
            PropertyReport rep = analyze(*r, q);
            CAPTURE(set_str(*r, q));
            CHECK(is_fundamental_cr(a) == rep.is_fundamental);
            CHECK(cr_dim_codim(a).cr_dim == q.size());

            bool any_sym = false, any_weak = false;
            for_each_grading(r->rank(), 2, [&](const GradingElement& e) {
                any_sym = any_sym || check_cr_symmetric(a, flag_involution(*r, e)).ok();
            });
            for_each_grading(r->rank(), 4, [&](const GradingElement& e) {
                any_weak = any_weak || check_weak_j(a, upsilon_from_j(a.algebra(), flag_derivation(*r, e)));
            });
            CHECK(any_sym == rep.symmetric);
            CHECK(any_weak == rep.weak_j);
            if (rep.witness_exact) CHECK(check_j_property(a, flag_derivation(*r, *rep.witness_exact)));
            if (rep.witness_mod4)
                CHECK(check_weak_j(a, upsilon_from_j(a.algebra(), flag_derivation(*r, *rep.witness_mod4))));
            if (rep.witness_mod2) {
                auto s = check_cr_symmetric(a, flag_involution(*r, *rep.witness_mod2));
                CHECK(s.ok());
                CHECK(s.almost_compact);
            }
        }
    }
}

TEST_CASE("G2 catalog presets by label") {
    auto p = load_preset("flag:G2:Q40");
    CHECK(is_fundamental_cr(p.cr));
    auto r = build_root_system(RootType::G2, 2);
    // J from the exact witness, when the catalog asserts one
    for (auto& e : catalog(RootType::G2, 2, Which::Symmetric)) {
        std::string label;
        for (char c : e.label)
            if (std::isalnum(static_cast<unsigned char>(c))) label += c;
        auto q = load_preset("flag:G2:" + label);
        CHECK(q.cr.q().dim() == std::size_t(r->rank()) + e.set.size());
        if (e.claims.witness_exact) CHECK(check_j_property(q.cr, q.derivations.at("J")));
    }
    CHECK_THROWS(load_preset("flag:G2:nonsense"));
    CHECK_THROWS(load_preset("nonsense"));
}

TEST_CASE("J-property implies weak-J for the exact exponential") {
    auto check = [](const CRAlgebra& a, const GMat& j) {
        if (!check_j_property(a, j)) return;
        CHECK(check_weak_j(a, upsilon_from_j(a.algebra(), j)));
    };
    auto h = load_preset("heisenberg");
    CHECK(check_j_property(h.cr, h.derivations.at("J")));
    check(h.cr, h.derivations.at("J"));
    auto s = load_preset("su2");
    check(s.cr, s.derivations.at("J"));
    auto r = build_root_system(RootType::B, 3);
    for (const auto& q : fundamental_lb_sets(*r)) {
        auto rep = analyze(*r, q);
        if (!rep.witness_exact) continue;
        CRAlgebra a = flag_cr_algebra(r, q);
        check(a, flag_derivation(*r, *rep.witness_exact));
    }
}

TEST_CASE("trivial failures of the J, weak-J and symmetric checks") {
    auto h = load_preset("heisenberg");
    GMat zero(3, GVec(3));
    CHECK_FALSE(check_j_property(h.cr, zero));
    CHECK_FALSE(check_weak_j(h.cr, g_identity(3)));
    auto rep = check_cr_symmetric(h.cr, g_identity(3));
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.z_plus_lambda_z);
    GMat notder = g_identity(3);
    CHECK_THROWS_AS(check_j_property(h.cr, notder), NotADerivation);
    GMat notaut(3, GVec(3));
    notaut[0][0] = 1;
    CHECK_THROWS_AS(check_weak_j(h.cr, notaut), NotAnAutomorphism);
    // ad(X) is nilpotent: no exact exponential
    CHECK_THROWS_AS(upsilon_from_j(h.cr.algebra(), h.cr.algebra().ad(v3(1, 0, 0))), NonExactExponential);
}

TEST_CASE("J semisimple part passes when J does") {
    // heisenberg plus a central S; J = rotation of (X, Y) plus the commuting nilpotent S -> T
    const char* txt = R"({"dim":4,"labels":["X","Y","T","S"],"c":[[0,1,2,1,0]],"q":[[1,"i",0,0]]})";
    auto p = preset_from_json(txt);
    GMat js(4, GVec(4));
    js[1][0] = 1;
    js[0][1] = -1;
    GMat j = js;
    j[2][3] = 1;
    REQUIRE(p.cr.algebra().is_derivation(j));
    REQUIRE(g_mul(j, js) == g_mul(js, j));
    CHECK(check_j_property(p.cr, j));
    CHECK(check_j_property(p.cr, js));
    CHECK_THROWS_AS(upsilon_from_j(p.cr.algebra(), j), NonExactExponential);
    CHECK(check_weak_j(p.cr, upsilon_from_j(p.cr.algebra(), js)));
}

TEST_CASE("fibrations: trivial ideals, exam-bf and heisenberg center") {
    auto h = load_preset("heisenberg");
    auto f0 = fibration_compatible(h.cr, Subspace(3));
    CHECK(f0.compatible);
    CHECK(f0.base->q() == h.cr.q());
    auto fg = fibration_compatible(h.cr, Subspace::full(3));
    CHECK(fg.compatible);
    CHECK(fg.base->q().dim() == 3);
    auto fc = fibration_compatible(h.cr, h.ideals.at("center"));
    CHECK(fc.compatible);
    REQUIRE(fc.fiber);
    CHECK(fc.fiber->algebra().dim() == 1);
    CHECK(weak_j_implies_compatible(h.cr, h.ideals.at("center"),
                                    upsilon_from_j(h.cr.algebra(), h.derivations.at("J"))));

    auto e = load_preset("exam-bf");
    const Subspace& rad = e.ideals.at("radical");
    // both sides by hand: q and conj q meet in 0, so the left side is V; q + V contains H, E
    Subspace lhs = e.cr.q_cap_qbar() + rad;
    Subspace rhs = (e.cr.q() + rad).intersect(e.cr.qbar() + rad);
    CHECK(lhs.dim() == 2);
    CHECK(rhs.dim() == 4);
    CHECK_FALSE(fibration_compatible(e.cr, rad).compatible);
    CHECK(cr_dim_codim(e.cr).cr_dim == 2);
    CHECK_THROWS_AS(fibration_compatible(e.cr, Subspace::span({GVec{1, 0, 0, 0, 0}}, 5)), NotAnIdeal);
}

TEST_CASE("morphism classification") {
    auto h = load_preset("heisenberg");
    auto id = morphism_classify(h.cr, h.cr, g_identity(3));
    CHECK(id.kind == MorphismKind::LocalIsomorphism);
    auto c = load_preset("heisenberg-center");
    auto sub = morphism_classify(h.cr, c.cr, g_identity(3));
    CHECK(sub.kind == MorphismKind::Submersion);
    CHECK(sub.fiber_g == Subspace::span({v3(0, 0, 1)}, 3));
    auto back = morphism_classify(c.cr, h.cr, g_identity(3));
    CHECK(back.kind == MorphismKind::NotAMorphism);
    auto z = morphism_classify(h.cr, h.cr, GMat(3, GVec(3)));
    CHECK(z.kind == MorphismKind::Morphism);
    GMat bad = g_identity(3);
    bad[2][2] = 2;
    CHECK_THROWS_AS(morphism_classify(h.cr, h.cr, bad), NotAHomomorphism);
}

TEST_CASE("anticanonical construction") {
    auto h = load_preset("heisenberg");
    auto ac = anticanonical(h.cr);
    CHECK(ac.failures.empty());
    CHECK(ac.normalizer == Subspace::span({v3(0, 0, 1)}, 3));
    CHECK(ac.q_prime == load_preset("heisenberg-center").cr.q());
    CHECK_FALSE(ac.q_is_ideal);

    // q an ideal: q' = g
    const char* ideal = R"({"dim":3,"c":[[0,1,2,1,0]],"q":[[0,0,1],[0,1,"i"]]})";
    auto p = preset_from_json(ideal);
    REQUIRE(p.cr.algebra().is_ideal(p.cr.q()));
    auto ai = anticanonical(p.cr);
    CHECK(ai.failures.empty());
    CHECK(ai.q_is_ideal);
    CHECK(ai.q_prime_is_g);
    CHECK(ai.a_is_g);

    // flags: the Cartan algebra normalizes q
    auto r = build_root_system(RootType::A, 2);
    for (const auto& q : fundamental_lb_sets(*r)) {
        auto a = flag_cr_algebra(r, q);
        auto f = anticanonical(a);
        CHECK(f.failures.empty());
        for (int i = 0; i < r->rank(); ++i) CHECK(f.normalizer.contains(g_unit(a.algebra().dim(), i)));
    }
}

TEST_CASE("closure extension: Cartan extension gives a Borel") {
    auto p = load_preset("closure-a2");
    auto r = build_root_system(RootType::A, 2);
    const Subspace& cartan = p.ideals.at("cartan");
    auto ext = closure_extension(p.cr, cartan);
    std::size_t n = p.cr.algebra().dim(), l = r->rank();
    std::vector<GVec> borel;
    for (std::size_t i = 0; i < l; ++i) borel.push_back(g_unit(n, i));
    for (std::size_t a = 0; a < r->size(); ++a)
        if (!r->is_positive(int(a))) borel.push_back(g_unit(n, l + a));
    CHECK(ext.extended.q() == Subspace::span(borel, n));
    CHECK(ext.kind == MorphismKind::Submersion);
    CHECK(ext.fiber_levi_flat);
    // totally complex: q' + conj q' = g
    CHECK(ext.extended.q_plus_qbar().dim() == n);

    auto same = closure_extension(p.cr, p.cr.q_cap_qbar());
    CHECK(same.extended.q() == p.cr.q());
    CHECK(same.kind == MorphismKind::LocalIsomorphism);

    // a root space pair breaks [i', q] in q
    Subspace bad = cartan + Subspace::span({g_unit(n, l + r->simple()[0]), g_unit(n, l + r->neg(r->simple()[0]))}, n);
    CHECK_THROWS_AS(closure_extension(p.cr, bad), PreconditionViolation);
}
