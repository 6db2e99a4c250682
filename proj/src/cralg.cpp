#include "flagcr/cralg.hpp"

#include "flagcr/classify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

namespace flagcr {

namespace {

GVec column(const GMat& m, std::size_t j) {
    GVec c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
    return c;
}

// sign pattern of a real symmetric matrix via congruence
struct Inertia {
    std::size_t pos = 0, neg = 0, zero = 0;
};

Inertia inertia(RatMat m) {
    Inertia out;
    std::size_t n = m.size();
    std::vector<bool> alive(n, true);
    for (std::size_t left = n; left > 0; --left) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i] && m[i][i] != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // no diagonal pivot: fold an off-diagonal entry into the diagonal
            std::size_t a = n, b = n;
            for (std::size_t i = 0; i < n && a == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (alive[i] && alive[j] && i != j && m[i][j] != 0) {
                        a = i;
                        b = j;
                        break;
                    }
            if (a == n) {
                out.zero += left;
                return out;
            }
            for (std::size_t k = 0; k < n; ++k) m[a][k] += m[b][k];
            for (std::size_t k = 0; k < n; ++k) m[k][a] += m[k][b];
            p = a;
        }
        Rat d = m[p][p];
        (d > 0 ? out.pos : out.neg)++;
        alive[p] = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i] || m[i][p] == 0) continue;
            Rat f = m[i][p] / d;
            for (std::size_t j = 0; j < n; ++j)
                if (alive[j]) m[i][j] -= f * m[p][j];
        }
        for (std::size_t j = 0; j < n; ++j)
            if (alive[j]) m[p][j] = m[j][p] = 0;
    }
    return out;
}

// real points of a conj-stable subspace, as a complex-independent list
std::vector<GVec> real_basis(const LieAlgebra& g, const Subspace& s) {
    std::vector<GVec> out;
    Subspace acc(g.dim());
    for (const auto& v : s.basis()) {
        GVec cv = g.conj(v);
        for (GVec u : {g_add(v, cv), g_scale(Gauss::I(), g_sub(v, cv))}) {
            if (g_is_zero(u) || acc.contains(u)) continue;
            acc = acc + Subspace::span({u}, g.dim());
            out.push_back(u);
        }
    }
    return out;
}

Gauss bilinear(const GMat& k, const GVec& x, const GVec& y) {
    Gauss s;
    GVec ky = g_apply(k, y);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * ky[i];
    return s;
}

}  // namespace

// ---- LieAlgebra ----

LieAlgebra LieAlgebra::create(std::vector<std::string> labels, std::vector<std::vector<GVec>> brackets, GMat conj) {
    std::size_t n = labels.size();
    if (brackets.size() != n || conj.size() != n) throw LieValidationError("bracket table or conj has wrong size");
    LieAlgebra g;
    g.labels_ = std::move(labels);
    g.conj_ = std::move(conj);
    g.c_.assign(n, std::vector<std::vector<Term>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (brackets[i].size() != n || g.conj_[i].size() != n) throw LieValidationError("bracket table or conj has wrong size");
        for (std::size_t j = 0; j < n; ++j) {
            if (brackets[i][j].size() != n) throw LieValidationError("bracket value has wrong length");
            for (std::size_t k = 0; k < n; ++k)
                if (!brackets[i][j][k].is_zero()) g.c_[i][j].push_back({k, brackets[i][j][k]});
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!g_is_zero(g_add(brackets[i][j], brackets[j][i])))
                throw LieValidationError("bracket not antisymmetric at " + g.labels_[i] + ", " + g.labels_[j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                GVec ei = g_unit(n, i), ej = g_unit(n, j), ek = g_unit(n, k);
                GVec s = g.bracket(ei, brackets[j][k]);
                s = g_add(s, g.bracket(ej, brackets[k][i]));
                s = g_add(s, g.bracket(ek, brackets[i][j]));
                if (!g_is_zero(s))
                    throw LieValidationError("Jacobi identity fails at " + g.labels_[i] + ", " + g.labels_[j] + ", " +
                                             g.labels_[k]);
            }
    if (g_mul(g.conj_, g_conj(g.conj_)) != g_identity(n)) throw LieValidationError("conj is not an involution");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.conj(brackets[i][j]) != g.bracket(column(g.conj_, i), column(g.conj_, j)))
                throw LieValidationError("conj does not preserve the bracket");
    return g;
}

GVec LieAlgebra::bracket(const GVec& x, const GVec& y) const {
    std::size_t n = dim();
    GVec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Gauss f = x[i] * y[j];
            for (const auto& t : c_[i][j]) r[t.k] += f * t.c;
        }
    }
    return r;
}

GVec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    GVec r(dim());
    for (const auto& t : c_[i][j]) r[t.k] = t.c;
    return r;
}

GVec LieAlgebra::conj(const GVec& v) const { return g_apply(conj_, g_conj(v)); }

GMat LieAlgebra::ad(const GVec& x) const {
    std::size_t n = dim();
    GMat m(n, GVec(n));
    for (std::size_t j = 0; j < n; ++j) {
        GVec c = bracket(x, g_unit(n, j));
        for (std::size_t k = 0; k < n; ++k) m[k][j] = c[k];
    }
    return m;
}

Subspace LieAlgebra::bracket(const Subspace& a, const Subspace& b) const {
    std::vector<GVec> vs;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) vs.push_back(bracket(x, y));
    return Subspace::span(vs, dim());
}

Subspace LieAlgebra::generated(const Subspace& s) const {
    Subspace cur = s;
    for (;;) {
        Subspace next = cur + bracket(cur, cur);
        if (next.dim() == cur.dim()) return cur;
        cur = next;
    }
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
    for (const auto& x : s.basis())
        for (const auto& y : s.basis())
            if (!s.contains(bracket(x, y))) return false;
    return true;
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (const auto& y : s.basis())
            if (!s.contains(bracket(g_unit(dim(), i), y))) return false;
    return true;
}

GMat LieAlgebra::killing() const {
    std::size_t n = dim();
    GMat k(n, GVec(n));
    // tr(ad e_i ad e_j) = sum over l, k of [e_i, e_l]_k [e_j, e_k]_l
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            for (const auto& t : c_[i][l])
                for (std::size_t j = 0; j < n; ++j)
                    for (const auto& u : c_[j][t.k])
                        if (u.k == l) k[i][j] += t.c * u.c;
    return k;
}

LieAlgebra LieAlgebra::restrict_to(const Subspace& s) const {
    if (!is_subalgebra(s)) throw LieValidationError("restriction target is not a subalgebra");
    if (!is_conj_stable(s)) throw LieValidationError("restriction target is not conj-stable");
    const auto& b = s.basis();
    std::size_t m = b.size();
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < m; ++p) labels.push_back("b" + std::to_string(p + 1));
    std::vector<std::vector<GVec>> br(m, std::vector<GVec>(m));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) br[p][q] = *s.coords(bracket(b[p], b[q]));
    GMat c(m, GVec(m));
    for (std::size_t q = 0; q < m; ++q) {
        GVec w = *s.coords(conj(b[q]));
        for (std::size_t p = 0; p < m; ++p) c[p][q] = w[p];
    }
    return create(std::move(labels), std::move(br), std::move(c));
}

bool LieAlgebra::commutes_with_conj(const GMat& a) const { return g_mul(a, conj_) == g_mul(conj_, g_conj(a)); }

bool LieAlgebra::is_derivation(const GMat& d) const {
    std::size_t n = dim();
    if (d.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            GVec lhs = g_apply(d, basis_bracket(i, j));
            GVec rhs = g_add(bracket(column(d, i), g_unit(n, j)), bracket(g_unit(n, i), column(d, j)));
            if (lhs != rhs) return false;
        }
    return commutes_with_conj(d);
}

bool LieAlgebra::is_automorphism(const GMat& a) const {
    std::size_t n = dim();
    if (a.size() != n || !g_inverse(a)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g_apply(a, basis_bracket(i, j)) != bracket(column(a, i), column(a, j))) return false;
    return commutes_with_conj(a);
}

// ---- CR algebras ----

CRAlgebra::CRAlgebra(LieAlgebra g, Subspace q) : g_(std::move(g)), q_(std::move(q)) {
    if (q_.ambient() != g_.dim()) throw LieValidationError("q lives in the wrong ambient space");
    if (!g_.is_subalgebra(q_)) throw LieValidationError("q is not a subalgebra");
}

CRDims cr_dim_codim(const CRAlgebra& a) {
    std::size_t n = a.algebra().dim();
    std::size_t iso = a.q_cap_qbar().dim(), sum = a.q_plus_qbar().dim();
    return {a.q().dim() - iso, n - sum};
}

bool is_fundamental_cr(const CRAlgebra& a) {
    return a.algebra().generated(a.q_plus_qbar()).dim() == a.algebra().dim();
}

Subspace levi_kernel(const CRAlgebra& a) {
    const auto& g = a.algebra();
    const auto& qb = a.q().basis();
    Subspace qbar = a.qbar(), sum = a.q_plus_qbar();
    std::size_t n = g.dim(), m = qb.size();
    // rows: coordinates of [Z, w] mod q + conj q for each w in conj q, as linear forms in Z's coefficients
    GMat rows;
    for (const auto& w : qbar.basis()) {
        std::vector<GVec> img;
        for (const auto& z : qb) img.push_back(sum.reduce(g.bracket(z, w)));
        for (std::size_t k = 0; k < n; ++k) {
            GVec r(m);
            for (std::size_t p = 0; p < m; ++p) r[p] = img[p][k];
            rows.push_back(r);
        }
    }
    std::vector<GVec> out;
    for (const auto& c : g_kernel(rows, m)) {
        GVec z(n);
        for (std::size_t p = 0; p < m; ++p)
            if (!c[p].is_zero()) z = g_add(z, g_scale(c[p], qb[p]));
        out.push_back(z);
    }
    return Subspace::span(out, n);
}

bool is_levi_nondegenerate(const CRAlgebra& a) { return levi_kernel(a) == a.q_cap_qbar(); }

Subspace largest_ideal_in_isotropy(const CRAlgebra& a) {
    const auto& g = a.algebra();
    std::size_t n = g.dim();
    std::vector<GMat> ads;
    for (std::size_t j = 0; j < n; ++j) ads.push_back(g.ad(g_unit(n, j)));
    Subspace cur = a.q_cap_qbar();
    for (;;) {
        Subspace next = cur;
        for (const auto& m : ads) next = next.intersect(Subspace::preimage(m, cur, n));
        if (next.dim() == cur.dim()) return cur;
        cur = next;
    }
}

bool is_effective(const CRAlgebra& a) { return largest_ideal_in_isotropy(a).dim() == 0; }

std::vector<GVec> levi_basis(const CRAlgebra& a) {
    Subspace acc = a.q_cap_qbar();
    std::vector<GVec> out;
    for (const auto& z : a.q().basis()) {
        if (acc.contains(z)) continue;
        acc = acc + Subspace::span({z}, z.size());
        out.push_back(z);
    }
    return out;
}

GMat scalar_levi_form(const CRAlgebra& a, const GVec& xi) {
    const auto& g = a.algebra();
    std::size_t n = g.dim();
    if (xi.size() != n) throw NotCharacteristic("covector has wrong length");
    const GMat& c = g.conj_matrix();
    // real: xi(conj e_j) = conj(xi(e_j))
    for (std::size_t j = 0; j < n; ++j) {
        Gauss s;
        for (std::size_t k = 0; k < n; ++k) s += xi[k] * c[k][j];
        if (!(s == xi[j].conj())) throw NotCharacteristic("covector is not real on g0");
    }
    auto pair = [&](const GVec& v) {
        Gauss s;
        for (std::size_t k = 0; k < n; ++k) s += xi[k] * v[k];
        return s;
    };
    Subspace sum = a.q_plus_qbar();
    for (const auto& v : sum.basis())
        if (!pair(v).is_zero()) throw NotCharacteristic("covector does not vanish on q + conj q");
    auto zs = levi_basis(a);
    GMat m(zs.size(), GVec(zs.size()));
    for (std::size_t p = 0; p < zs.size(); ++p)
        for (std::size_t q = 0; q < zs.size(); ++q)
            m[p][q] = Gauss(0, -1) * pair(g.bracket(zs[p], g.conj(zs[q])));
    return m;
}

bool is_hermitian(const GMat& m) {
    for (std::size_t p = 0; p < m.size(); ++p)
        for (std::size_t q = 0; q < m.size(); ++q)
            if (!(m[p][q] == m[q][p].conj())) return false;
    return true;
}

GVec vector_levi_form(const CRAlgebra& a, const GVec& z) {
    if (!a.q().contains(z)) throw CrPrecondition("vector is not in q");
    const auto& g = a.algebra();
    return a.q_plus_qbar().reduce(g_scale(Gauss::I(), g.bracket(g.conj(z), z)));
}

bool check_j_property(const CRAlgebra& a, const GMat& j) {
    if (!a.algebra().is_derivation(j)) throw NotADerivation("J is not a derivation of g0");
    Subspace iso = a.q_cap_qbar();
    for (const auto& z : a.q().basis()) {
        GVec jz = g_apply(j, z);
        if (!a.q().contains(jz)) return false;
        if (!iso.contains(g_sub(z, g_scale(Gauss::I(), jz)))) return false;
    }
    return true;
}

GMat upsilon_from_j(const LieAlgebra& g, const GMat& j) {
    std::size_t n = g.dim();
    if (j.size() != n) throw NonExactExponential("J has wrong size");
    Rat bound = 0;
    for (const auto& row : j) {
        Rat s = 0;
        for (const auto& x : row) s += abs(x.re) + abs(x.im);
        bound = std::max(bound, s);
    }
    Int b = bound.get_num() / bound.get_den();
    long lim = b.get_si();
    GMat p;  // eigenvectors as rows
    std::vector<Gauss> diag;
    const Gauss powers[4] = {Gauss(1), Gauss::I(), Gauss(-1), Gauss(0, -1)};
    for (long k = -lim; k <= lim; ++k) {
        GMat shifted = j;
        for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= Gauss(0, Rat(k));
        for (auto& v : g_kernel(shifted, n)) {
            p.push_back(v);
            diag.push_back(powers[((k % 4) + 4) % 4]);
        }
    }
    if (p.size() != n) throw NonExactExponential("J is not diagonalizable with spectrum in iZ");
    GMat cols = g_transpose(p);
    auto inv = g_inverse(cols);
    if (!inv) throw NonExactExponential("eigenvectors are dependent");
    GMat d(n, GVec(n));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = diag[i];
    return g_mul(g_mul(cols, d), *inv);
}

bool check_weak_j(const CRAlgebra& a, const GMat& upsilon) {
    if (!a.algebra().is_automorphism(upsilon)) throw NotAnAutomorphism("Upsilon is not an automorphism of g0");
    if (!(a.q().image(upsilon) == a.q())) return false;
    Subspace iso = a.q_cap_qbar();
    for (const auto& z : a.q().basis())
        if (!iso.contains(g_sub(z, g_scale(Gauss::I(), g_apply(upsilon, z))))) return false;
    return true;
}

bool isotropy_almost_compact(const CRAlgebra& a) {
    const auto& g = a.algebra();
    GMat k = g.killing();
    auto us = real_basis(g, a.q_cap_qbar());
    std::size_t m = us.size();
    RatMat gram(m, RatVec(m));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            Gauss v = bilinear(k, us[p], us[q]);
            if (!v.is_real()) throw std::logic_error("Killing form not real on g0");
            gram[p][q] = v.re;
        }
    if (inertia(gram).pos > 0) return false;
    GMat gg = g_from_rat(gram);
    for (const auto& c : g_kernel(gg, m)) {
        GVec x(g.dim());
        for (std::size_t p = 0; p < m; ++p)
            if (!c[p].is_zero()) x = g_add(x, g_scale(c[p], us[p]));
        if (!g_is_zero(g_apply(k, x))) return false;
    }
    return true;
}

SymmetryReport check_cr_symmetric(const CRAlgebra& a, const GMat& lambda) {
    SymmetryReport r;
    const auto& g = a.algebra();
    std::size_t n = g.dim();
    auto fail = [&](bool& flag, bool v, const char* what) {
        flag = v;
        if (!v) r.failures.push_back(what);
    };
    fail(r.involution, lambda.size() == n && g_mul(lambda, lambda) == g_identity(n), "lambda^2 != Id");
    if (!r.involution) return r;
    bool hom = true;
    for (std::size_t i = 0; i < n && hom; ++i)
        for (std::size_t j = i + 1; j < n && hom; ++j)
            hom = g_apply(lambda, g.basis_bracket(i, j)) == g.bracket(column(lambda, i), column(lambda, j));
    fail(r.automorphism, hom, "lambda does not preserve the bracket");
    fail(r.preserves_g0, g.commutes_with_conj(lambda), "lambda does not preserve g0");

    GMat minus = lambda, plus = lambda;
    for (std::size_t i = 0; i < n; ++i) {
        minus[i][i] -= 1;
        plus[i][i] += 1;
    }
    Subspace even = Subspace::span(g_kernel(minus, n), n), odd = Subspace::span(g_kernel(plus, n), n);
    Subspace iso = a.q_cap_qbar();
    fail(r.fixed_in_qnat, g.generated(a.q_plus_qbar()).contains(even), "fixed points of lambda not inside q-natural");
    fail(r.preserves_q, a.q().image(lambda) == a.q(), "lambda(q) != q");
    bool zl = true;
    for (const auto& z : a.q().basis())
        if (!iso.contains(g_add(z, g_apply(lambda, z)))) zl = false;
    fail(r.z_plus_lambda_z, zl, "Z + lambda Z not in the isotropy");
    Subspace qe = a.q().intersect(even), qo = a.q().intersect(odd);
    fail(r.grading_q_splits, qe.dim() + qo.dim() == a.q().dim(), "q does not split along the grading");
    fail(r.even_q_in_isotropy, iso.contains(qe), "even part of q not inside the isotropy");
    // reported only: [h, e_a] breaks it for every flag with a nonempty root set
    r.brackets_in_isotropy = iso.contains(g.bracket(a.q(), a.q()));
    fail(r.almost_compact, isotropy_almost_compact(a), "isotropy is not almost compact");
    return r;
}

Fibration fibration_compatible(const CRAlgebra& a, const Subspace& ideal) {
    const auto& g = a.algebra();
    if (ideal.ambient() != g.dim() || !g.is_ideal(ideal) || !g.is_conj_stable(ideal))
        throw NotAnIdeal("subspace is not a real ideal");
    Fibration f;
    Subspace lhs = a.q_cap_qbar() + ideal;
    Subspace rhs = (a.q() + ideal).intersect(a.qbar() + ideal);
    f.compatible = lhs == rhs;
    if (!f.compatible) return f;
    f.base.emplace(g, a.q() + ideal);
    LieAlgebra sub = g.restrict_to(ideal);
    std::vector<GVec> qa;
    Subspace qa_full = a.q().intersect(ideal);
    for (const auto& v : qa_full.basis()) qa.push_back(*ideal.coords(v));
    f.fiber.emplace(sub, Subspace::span(qa, ideal.dim()));
    return f;
}

bool weak_j_implies_compatible(const CRAlgebra& a, const Subspace& ideal, const GMat& upsilon) {
    if (!check_weak_j(a, upsilon)) throw CrPrecondition("Upsilon does not satisfy the weak-J condition");
    if (!(ideal.image(upsilon) == ideal)) throw CrPrecondition("Upsilon does not preserve the ideal");
    return fibration_compatible(a, ideal).compatible;
}

std::string morphism_name(MorphismKind k) {
    switch (k) {
        case MorphismKind::NotAMorphism: return "not a morphism";
        case MorphismKind::Morphism: return "morphism";
        case MorphismKind::Immersion: return "immersion";
        case MorphismKind::Submersion: return "submersion";
        case MorphismKind::LocalIsomorphism: return "local isomorphism";
    }
    return "?";
}

MorphismResult morphism_classify(const CRAlgebra& source, const CRAlgebra& target, const GMat& phi) {
    const auto& g = source.algebra();
    const auto& h = target.algebra();
    std::size_t n = g.dim(), m = h.dim();
    if (phi.size() != m || (m > 0 && phi[0].size() != n)) throw NotAHomomorphism("map has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g_apply(phi, g.basis_bracket(i, j)) != h.bracket(column(phi, i), column(phi, j)))
                throw NotAHomomorphism("map does not preserve the bracket");
    if (g_mul(phi, g.conj_matrix()) != g_mul(h.conj_matrix(), g_conj(phi)))
        throw NotAHomomorphism("map is not real");
    MorphismResult r;
    Subspace iso_t = target.q_cap_qbar();
    r.fiber_g = Subspace::preimage(phi, iso_t, n);
    r.fiber_q = source.q().intersect(r.fiber_g);
    if (!target.q().contains(source.q().image(phi))) return r;
    r.immersion = r.fiber_g == source.q_cap_qbar() && Subspace::preimage(phi, target.q(), n) == source.q();
    r.submersion = (Subspace::full(n).image(phi) + iso_t).dim() == m &&
                   source.q().image(phi) + iso_t == target.q();
    r.kind = r.immersion && r.submersion ? MorphismKind::LocalIsomorphism
             : r.immersion               ? MorphismKind::Immersion
             : r.submersion              ? MorphismKind::Submersion
                                         : MorphismKind::Morphism;
    return r;
}

Anticanonical anticanonical(const CRAlgebra& a) {
    const auto& g = a.algebra();
    std::size_t n = g.dim();
    Anticanonical r;
    // N(q) = {X : [X, q] in q}
    Subspace norm = Subspace::full(n);
    for (const auto& z : a.q().basis()) {
        GMat m = g.ad(z);  // [z, X]
        norm = norm.intersect(Subspace::preimage(m, a.q(), n));
    }
    r.normalizer = norm.intersect(g.conj(norm));
    r.q_prime = a.q() + r.normalizer;
    CRAlgebra ext(g, r.q_prime);
    auto check = [&](bool& flag, bool v, const char* what) {
        flag = v;
        if (!v) r.failures.push_back(what);
    };
    check(r.q_prime_real_part_is_a, ext.q_cap_qbar() == r.normalizer, "q' and its conjugate do not meet in a");
    check(r.submersion, morphism_classify(a, ext, g_identity(n)).submersion, "identity is not a submersion");
    check(r.within_normalizer, norm.contains(r.q_prime), "q' not inside the normalizer of q");
    check(r.fiber_identity, r.normalizer.intersect(a.q()) == a.q().intersect(ext.qbar()), "a and q differ from q and conj q'");
    Subspace left = a.q().intersect(ext.qbar()), right = a.qbar().intersect(r.q_prime);
    check(r.fiber_levi_flat, a.q_cap_qbar().contains(g.bracket(left, right)), "fiber is not Levi-flat");
    r.a_is_g = r.normalizer.dim() == n;
    r.q_prime_is_g = r.q_prime.dim() == n;
    r.q_is_ideal = g.is_ideal(a.q());
    r.a_is_ideal = g.is_ideal(r.normalizer);
    if (r.a_is_g != r.q_prime_is_g || r.q_prime_is_g != r.q_is_ideal) r.failures.push_back("a = g, q' = g, q ideal disagree");
    if (r.q_is_ideal && !r.a_is_ideal) r.failures.push_back("q ideal but a is not");
    return r;
}

ClosureExtension closure_extension(const CRAlgebra& a, const Subspace& i_prime) {
    const auto& g = a.algebra();
    Subspace iso = a.q_cap_qbar();
    if (!g.is_conj_stable(i_prime)) throw CrPrecondition("i' is not conj-stable");
    if (!i_prime.contains(iso)) throw CrPrecondition("isotropy not inside i'");
    if (!iso.contains(g.bracket(i_prime, i_prime))) throw CrPrecondition("[i', i'] not inside the isotropy");
    if (!a.q().contains(g.bracket(i_prime, a.q()))) throw CrPrecondition("[i', q] not inside q");
    CRAlgebra ext(g, a.q() + i_prime);
    auto m = morphism_classify(a, ext, g_identity(g.dim()));
    const Subspace& fq = m.fiber_q;
    Subspace fqb = g.conj(fq);
    bool flat = (fq + fqb).contains(g.bracket(fq, fqb));
    return {ext, m.kind, flat};
}

// ---- Chevalley construction ----

LieAlgebra chevalley_algebra(const RootSystem& r) {
    int l = r.rank();
    int nr = static_cast<int>(r.size());
    std::size_t n = l + nr;
    auto len = [&](int a) { return Rat(r.dot4(a, a)); };
    std::vector<int> pos;
    for (int a = 0; a < nr; ++a)
        if (r.is_positive(a)) pos.push_back(a);
    std::sort(pos.begin(), pos.end(), [&](int a, int b) {
        return std::pair(r.height(a), a) < std::pair(r.height(b), b);
    });

    std::map<std::pair<int, int>, Rat> npos;
    std::function<Rat(int, int)> N = [&](int a, int b) -> Rat {
        int s = r.sum(a, b);
        if (s < 0) return 0;
        bool pa = r.is_positive(a), pb = r.is_positive(b);
        if (pa && pb) return npos.at({a, b});
        if (!pa && !pb) return -N(r.neg(a), r.neg(b));
        if (!pa) return -N(b, a);
        if (r.is_positive(s)) return len(s) / len(a) * N(b, r.neg(s));
        return len(s) / len(b) * N(r.neg(s), a);
    };

    for (int xi : pos) {
        if (r.height(xi) == 1) continue;
        // extraspecial pair: smallest alpha with xi - alpha positive
        int alpha = -1, beta = -1;
        for (int c : pos) {
            int d = r.sum(xi, r.neg(c));
            if (d >= 0 && r.is_positive(d)) {
                alpha = c;
                beta = d;
                break;
            }
        }
        int p = 0;
        for (int x = beta; (x = r.sum(x, r.neg(alpha))) >= 0;) ++p;
        Rat nab = p + 1;
        npos[{alpha, beta}] = nab;
        npos[{beta, alpha}] = -nab;
        for (int zeta : pos) {
            int eta = r.sum(xi, r.neg(zeta));
            if (eta < 0 || !r.is_positive(eta) || npos.count({zeta, eta})) continue;
            Rat v = 0;
            int bz = r.sum(beta, r.neg(zeta));
            if (bz >= 0) v += N(beta, r.neg(zeta)) * N(alpha, r.neg(eta)) / len(bz);
            int az = r.sum(alpha, r.neg(zeta));
            if (az >= 0) v += N(r.neg(zeta), alpha) * N(beta, r.neg(eta)) / len(az);
            Rat val = len(xi) / nab * v;
            npos[{zeta, eta}] = val;
            npos[{eta, zeta}] = -val;
        }
    }

    std::vector<std::string> labels;
    for (int i = 0; i < l; ++i) labels.push_back("h" + std::to_string(i + 1));
    for (int a = 0; a < nr; ++a) labels.push_back("e[" + root_str(r, a) + "]");
    std::vector<std::vector<GVec>> br(n, std::vector<GVec>(n, GVec(n)));
    const auto& simple = r.simple();
    for (int i = 0; i < l; ++i)
        for (int a = 0; a < nr; ++a) {
            Gauss c(r.cartan(a, simple[i]));
            br[i][l + a][l + a] = c;
            br[l + a][i][l + a] = -c;
        }
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            if (b == r.neg(a)) {
                for (int i = 0; i < l; ++i)
                    br[l + a][l + b][i] = Gauss(Rat(r.coeffs(a)[i]) * len(simple[i]) / len(a));
                continue;
            }
            int s = r.sum(a, b);
            if (s >= 0) br[l + a][l + b][l + s] = Gauss(N(a, b));
        }
    GMat conj(n, GVec(n));
    for (int i = 0; i < l; ++i) conj[i][i] = -1;
    for (int a = 0; a < nr; ++a) conj[l + r.neg(a)][l + a] = -1;
    return LieAlgebra::create(std::move(labels), std::move(br), std::move(conj));
}

CRAlgebra flag_cr_algebra(const RootSystemPtr& r, const RootSet& q) {
    LieAlgebra g = chevalley_algebra(*r);
    std::size_t l = r->rank(), n = g.dim();
    std::vector<GVec> vs;
    for (std::size_t i = 0; i < l; ++i) vs.push_back(g_unit(n, i));
    for (int a : q) vs.push_back(g_unit(n, l + a));
    return CRAlgebra(std::move(g), Subspace::span(vs, n));
}

GMat flag_derivation(const RootSystem& r, const GradingElement& e) {
    std::size_t l = r.rank(), n = l + r.size();
    GMat j(n, GVec(n));
    for (std::size_t a = 0; a < r.size(); ++a) j[l + a][l + a] = Gauss(0, -Rat(r.evaluate(a, e)));
    return j;
}

GMat flag_involution(const RootSystem& r, const GradingElement& e) {
    std::size_t l = r.rank(), n = l + r.size();
    GMat m = g_identity(n);
    for (std::size_t a = 0; a < r.size(); ++a)
        if (mpz_odd_p(r.evaluate(a, e).get_mpz_t())) m[l + a][l + a] = -1;
    return m;
}

// ---- presets ----

namespace {

struct TableBuilder {
    std::size_t n;
    std::vector<std::vector<GVec>> br;
    explicit TableBuilder(std::size_t n) : n(n), br(n, std::vector<GVec>(n, GVec(n))) {}
    void set(std::size_t i, std::size_t j, GVec v) {
        br[j][i] = g_scale(Gauss(-1), v);
        br[i][j] = std::move(v);
    }
};

GVec vec(std::initializer_list<Gauss> xs) { return GVec(xs); }

Preset heisenberg(bool center) {
    TableBuilder t(3);
    t.set(0, 1, vec({0, 0, 1}));
    LieAlgebra g = LieAlgebra::create({"X", "Y", "T"}, t.br, g_identity(3));
    std::vector<GVec> q{vec({1, Gauss::I(), 0})};
    if (center) q.push_back(vec({0, 0, 1}));
    Preset p{center ? "heisenberg-center" : "heisenberg", CRAlgebra(g, Subspace::span(q, 3)), {}, {}, ""};
    p.ideals["center"] = Subspace::span({vec({0, 0, 1})}, 3);
    GMat j(3, GVec(3));
    j[1][0] = 1;
    j[0][1] = -1;
    p.derivations["J"] = j;
    p.note = center ? "isotropy RT is an ideal, so the structure is not effective"
                    : "Levi form [-2] for the covector dual to T";
    return p;
}

Preset sl2() {
    TableBuilder t(3);
    t.set(0, 1, vec({0, 2, 0}));
    t.set(0, 2, vec({0, 0, -2}));
    t.set(1, 2, vec({1, 0, 0}));
    LieAlgebra g = LieAlgebra::create({"H", "E", "F"}, t.br, g_identity(3));
    Subspace q = Subspace::span({vec({1, Gauss::I(), Gauss(0, -1)})}, 3);
    return {"sl2", CRAlgebra(g, q), {}, {}, "q spanned by H + i(E - F)"};
}

Preset su2(bool line) {
    TableBuilder t(3);
    t.set(0, 1, vec({0, 0, 1}));
    t.set(1, 2, vec({1, 0, 0}));
    t.set(2, 0, vec({0, 1, 0}));
    LieAlgebra g = LieAlgebra::create({"u1", "u2", "u3"}, t.br, g_identity(3));
    std::vector<GVec> q{vec({1, Gauss::I(), 0})};
    if (line) q.push_back(vec({0, 0, 1}));
    Preset p{line ? "su2-line" : "su2", CRAlgebra(g, Subspace::span(q, 3)), {}, {}, ""};
    p.note = line ? "q spanned by u1 + i u2 and u3: the sphere as a quotient by a circle"
                  : "q spanned by u1 + i u2";
    GMat j(3, GVec(3));
    j[1][0] = 1;
    j[0][1] = -1;
    p.derivations["J"] = j;
    return p;
}

Preset exam_bf() {
    // sl2 acting on C^2: H(a,b) = (a,-b), E(a,b) = (b,0), F(a,b) = (0,a)
    TableBuilder t(5);
    t.set(0, 1, vec({0, 2, 0, 0, 0}));
    t.set(0, 2, vec({0, 0, -2, 0, 0}));
    t.set(1, 2, vec({1, 0, 0, 0, 0}));
    t.set(0, 3, vec({0, 0, 0, 1, 0}));
    t.set(0, 4, vec({0, 0, 0, 0, -1}));
    t.set(1, 4, vec({0, 0, 0, 1, 0}));
    t.set(2, 3, vec({0, 0, 0, 0, 1}));
    LieAlgebra g = LieAlgebra::create({"H", "E", "F", "v1", "v2"}, t.br, g_identity(5));
    Gauss i = Gauss::I();
    Subspace q = Subspace::span({vec({1, 0, 0, i, Gauss(0, -1)}), vec({0, 1, 0, i, 0})}, 5);
    Preset p{"exam-bf", CRAlgebra(g, q), {}, {}, "ideal radical span{v1, v2} is not compatible"};
    p.ideals["radical"] = Subspace::span({vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 1})}, 5);
    return p;
}

Preset closure_a2() {
    auto r = build_root_system(RootType::A, 2);
    LieAlgebra g = chevalley_algebra(*r);
    std::size_t l = r->rank(), n = g.dim();
    // H = h1 + 2 h2 is regular; q = CH + negative root spaces
    std::vector<GVec> q;
    GVec h(n);
    h[0] = 1;
    h[1] = 2;
    q.push_back(h);
    for (std::size_t a = 0; a < r->size(); ++a)
        if (!r->is_positive(static_cast<int>(a))) q.push_back(g_unit(n, l + a));
    Preset p{"closure-a2", CRAlgebra(g, Subspace::span(q, n)), {}, {}, ""};
    std::vector<GVec> cartan;
    for (std::size_t i = 0; i < l; ++i) cartan.push_back(g_unit(n, i));
    p.ideals["cartan"] = Subspace::span(cartan, n);
    p.note = "extension by the Cartan subalgebra (entry 'cartan', not an ideal) gives a Borel";
    return p;
}

std::string strip_label(const std::string& s) {
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    return out;
}

Preset flag_preset(const std::string& spec) {
    auto c1 = spec.find(':', 5);
    if (c1 == std::string::npos) throw std::invalid_argument("flag preset needs flag:<type>:<label>");
    std::string ty = spec.substr(5, c1 - 5), label = spec.substr(c1 + 1);
    RootType t;
    int rank = 0;
    try {
        t = parse_type(ty);
    } catch (const std::invalid_argument&) {
        std::size_t k = 0;
        while (k < ty.size() && std::isalpha(static_cast<unsigned char>(ty[k]))) ++k;
        if (k == ty.size()) throw;
        t = parse_type(ty.substr(0, k));
        rank = std::stoi(ty.substr(k));
    }
    if (rank == 0) rank = default_rank(t);
    auto r = build_root_system(t, rank);
    if (label == "borel") {
        RootSet q;
        for (std::size_t a = 0; a < r->size(); ++a)
            if (r->is_positive(static_cast<int>(a))) q.push_back(static_cast<int>(a));
        return {spec, flag_cr_algebra(r, q), {}, {}, "positive Borel"};
    }
    for (Which w : {Which::All, Which::Symmetric}) {
        for (auto& e : catalog(t, rank, w)) {
            if (strip_label(e.label) != label) continue;
            Preset p{spec, flag_cr_algebra(r, e.set), {}, {}, e.label + ": " + set_str(*r, e.set)};
            if (e.claims.witness_exact) p.derivations["J"] = flag_derivation(*r, *e.claims.witness_exact);
            return p;
        }
    }
    throw std::invalid_argument("no catalog entry " + label + " for " + ty);
}

Gauss json_number(const nlohmann::json& j) {
    if (j.is_string()) return parse_gauss(j.get<std::string>());
    if (j.is_number_integer()) return Gauss(Rat(j.get<long>()));
    throw std::invalid_argument("numbers must be integers or strings");
}

std::vector<GVec> json_vectors(const nlohmann::json& j, std::size_t n) {
    std::vector<GVec> out;
    for (const auto& row : j) {
        if (row.size() != n) throw std::invalid_argument("vector has wrong length");
        GVec v;
        for (const auto& x : row) v.push_back(json_number(x));
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"heisenberg", "heisenberg-center", "sl2", "su2", "su2-line", "exam-bf", "closure-a2"};
}

Preset load_preset(const std::string& name) {
    if (name == "heisenberg") return heisenberg(false);
    if (name == "heisenberg-center") return heisenberg(true);
    if (name == "sl2") return sl2();
    if (name == "su2") return su2(false);
    if (name == "su2-line") return su2(true);
    if (name == "exam-bf") return exam_bf();
    if (name == "closure-a2") return closure_a2();
    if (name.rfind("flag:", 0) == 0) return flag_preset(name);
    throw std::invalid_argument("unknown preset: " + name);
}

Preset preset_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    if (labels.size() != n) throw std::invalid_argument("labels have wrong length");
    TableBuilder t(n);
    for (const auto& e : j.at("c")) {
        if (e.size() != 5) throw std::invalid_argument("structure constant entries are [i,j,k,re,im]");
        std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>(), k = e[2].get<std::size_t>();
        if (a >= n || b >= n || k >= n) throw std::invalid_argument("structure constant index out of range");
        Gauss c = json_number(e[3]) + json_number(e[4]) * Gauss::I();
        t.br[a][b][k] += c;
        t.br[b][a][k] -= c;
    }
    GMat conj = j.contains("conj") ? json_vectors(j["conj"], n) : g_identity(n);
    LieAlgebra g = LieAlgebra::create(labels, t.br, conj);
    Preset p{j.value("name", std::string("json")), CRAlgebra(g, Subspace::span(json_vectors(j.at("q"), n), n)), {}, {}, ""};
    if (j.contains("ideals"))
        for (auto& [k, v] : j["ideals"].items()) p.ideals[k] = Subspace::span(json_vectors(v, n), n);
    if (j.contains("derivations"))
        for (auto& [k, v] : j["derivations"].items()) p.derivations[k] = json_vectors(v, n);
    return p;
}

}  // namespace flagcr
