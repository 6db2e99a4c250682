#include "flagcr/realform.hpp"

#include <algorithm>
#include <sstream>

namespace flagcr {

namespace {

RatVec to_rat(const Coords& c) {
    RatVec v;
    for (int x : c) v.emplace_back(x);
    return v;
}

Rat pair(const RootSystem& r, int a, const RatVec& h) { return rat_dot(r.ambient(a), h); }

std::string fmt_root(const RootSystem& r, int a) { return root_str(r, a); }

// Coordinates of the root in terms of the given simple roots.
std::optional<RatVec> coefficients(const RootSystem& r, const std::vector<int>& simple, int a) {
    std::size_t d = r.ambient_dim();
    RatMat m(d, RatVec(simple.size()));
    for (std::size_t k = 0; k < simple.size(); ++k) {
        RatVec s = r.ambient(simple[k]);
        for (std::size_t i = 0; i < d; ++i) m[i][k] = s[i];
    }
    return rat_solve(m, r.ambient(a), simple.size());
}

}  // namespace

RootConjugation make_conjugation(const RootSystem& r, const RatMat& sigma, std::string name) {
    std::size_t d = r.ambient_dim();
    if (sigma.size() != d) throw InvalidConjugation("conjugation matrix has wrong size");
    for (const auto& row : sigma)
        if (row.size() != d) throw InvalidConjugation("conjugation matrix has wrong size");
    if (rat_mul(sigma, sigma) != rat_identity(d)) throw InvalidConjugation("conjugation is not an involution");
    RootConjugation c{std::move(name), sigma, Perm(r.size())};
    for (std::size_t i = 0; i < r.size(); ++i) {
        RatVec img = rat_apply(sigma, to_rat(r.root(int(i))));
        Coords ci;
        for (const auto& x : img) {
            if (x.get_den() != 1) throw InvalidConjugation("conjugation does not permute the roots");
            ci.push_back(int(x.get_num().get_si()));
        }
        int j = r.index_of(ci);
        if (j < 0) throw InvalidConjugation("conjugation does not permute the roots");
        c.induced[i] = j;
    }
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r.dot4(c.induced[i], c.induced[j]) != r.dot4(int(i), int(j)))
                throw InvalidConjugation("conjugation does not preserve the inner product");
    return c;
}

RootConjugation compact_conjugation(const RootSystem& r) {
    RatMat s = rat_identity(r.ambient_dim());
    for (auto& row : s)
        for (auto& x : row) x = -x;
    return make_conjugation(r, s, "compact");
}

RootConjugation a_reverse_conjugation(const RootSystem& r) {
    if (r.type() != RootType::A) throw InvalidConjugation("a-reverse needs type A");
    std::size_t n = r.ambient_dim();
    RatMat s(n, RatVec(n));
    for (std::size_t k = 0; k < n; ++k) s[k][n - 1 - k] = 1;
    return make_conjugation(r, s, "a-reverse");
}

RootConjugation parse_conjugation(const RootSystem& r, const std::string& spec) {
    if (spec == "compact") return compact_conjugation(r);
    const std::string pre = "a-reverse";
    if (spec.rfind(pre, 0) == 0) {
        std::string rest = spec.substr(pre.size());
        if (!rest.empty()) {
            if (rest.rfind(":m=", 0) != 0) throw InvalidConjugation("expected a-reverse:m=<m>");
            int m = std::stoi(rest.substr(3));
            if (r.type() != RootType::A || r.rank() != 2 * m - 1)
                throw InvalidConjugation("a-reverse:m=" + std::to_string(m) + " needs A" + std::to_string(2 * m - 1));
        }
        return a_reverse_conjugation(r);
    }
    throw InvalidConjugation("unknown conjugation: " + spec);
}

RootSet real_roots(const RootSystem& r, const RootConjugation& c) {
    RootSet out;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (c.induced[i] == int(i)) out.push_back(int(i));
    return out;
}

bool is_closed(const RootSystem& r, const RootSet& q) {
    for (int a : q)
        for (int b : q) {
            int s = r.sum(a, b);
            if (s >= 0 && !contains(q, s)) return false;
        }
    return true;
}

RootSet conjugate(const RootConjugation& c, const RootSet& q) {
    RootSet out;
    for (int a : q) out.push_back(c.induced[a]);
    std::sort(out.begin(), out.end());
    return out;
}

bool check_eq_ha(const RootSystem& r, const RootSet& q, const RootConjugation& c) {
    if (!is_closed(r, q)) return false;
    for (int a : q)
        if (contains(q, c.induced[a])) return false;
    // disjoint, so covering is a count
    return 2 * q.size() == r.size();
}

RNSplit split_r_n(const RootSystem& r, const RootSet& q) {
    RNSplit s;
    for (int a : q) (contains(q, r.neg(a)) ? s.reductive : s.nilpotent).push_back(a);
    return s;
}

bool strongly_orthogonal(const RootSystem& r, const RootSet& a, const RootSet& b) {
    for (int x : a)
        for (int y : b)
            if (r.sum(x, y) >= 0 || r.sum(x, r.neg(y)) >= 0) return false;
    return true;
}

bool is_parabolic(const RootSystem& r, const RootSet& p) {
    return is_closed(r, p) && set_union(p, negate(r, p)).size() == r.size();
}

LemmaReport verify_lemma_lb(const RootSystem& r, const RootSet& q, const RootConjugation& c) {
    if (!check_eq_ha(r, q, c)) throw PreconditionViolation("Q and its conjugate do not partition the roots");
    LemmaReport rep;
    auto sp = split_r_n(r, q);
    rep.q_r = sp.reductive;
    rep.q_n = sp.nilpotent;
    RootSet cq = conjugate(c, q);
    auto csp = split_r_n(r, cq);
    rep.conj_q_r = csp.reductive;
    rep.closed_qr_conj_q = is_closed(r, set_union(rep.q_r, cq));
    rep.closed_qr_conj_qn = is_closed(r, set_union(rep.q_r, csp.nilpotent));
    rep.strongly_orthogonal = strongly_orthogonal(r, rep.q_r, rep.conj_q_r);
    rep.parabolic = set_union(q, rep.conj_q_r);
    rep.parabolic_ok = is_parabolic(r, rep.parabolic);
    rep.nilradical_ok = split_r_n(r, rep.parabolic).nilpotent == rep.q_n;
    if (!rep.closed_qr_conj_q) rep.failures.push_back("Q^r + conj(Q) is not closed");
    if (!rep.closed_qr_conj_qn) rep.failures.push_back("Q^r + conj(Q)^n is not closed");
    if (!rep.strongly_orthogonal) rep.failures.push_back("Q^r and conj(Q)^r are not strongly orthogonal");
    if (!rep.parabolic_ok) rep.failures.push_back("Q + conj(Q)^r is not parabolic");
    if (!rep.nilradical_ok) rep.failures.push_back("nilradical of Q + conj(Q)^r differs from Q^n");
    return rep;
}

std::vector<std::string> check_adapted(const RootSystem& r, const RootSet& q, const RootConjugation& c,
                                       const std::vector<int>& simple, int p) {
    std::vector<std::string> f;
    int l = r.rank();
    if (int(simple.size()) != l) return {"simple system has the wrong size"};
    auto sp = split_r_n(r, q);
    RootSet parab = set_union(q, split_r_n(r, conjugate(c, q)).reductive);
    // a simple system: every root is a non-negative or non-positive integer combination
    std::vector<RatVec> coef(r.size());
    for (std::size_t a = 0; a < r.size(); ++a) {
        auto x = coefficients(r, simple, int(a));
        if (!x) return {"simple roots do not span the roots"};
        bool pos = true, neg = true;
        for (const auto& v : *x) {
            if (v.get_den() != 1) return {"root " + fmt_root(r, int(a)) + " has non-integral coefficients"};
            pos = pos && v >= 0;
            neg = neg && v <= 0;
        }
        if (!pos && !neg) return {"root " + fmt_root(r, int(a)) + " has mixed-sign coefficients"};
        coef[a] = *x;
    }
    for (int i = 0; i < l; ++i)
        if (!contains(parab, simple[i])) f.push_back("alpha_" + std::to_string(i + 1) + " is not in P");
    for (int i = 0; i < p; ++i)
        if (!contains(sp.reductive, simple[i])) f.push_back("alpha_" + std::to_string(i + 1) + " is not in Q^r");
    for (int b : sp.reductive)
        for (int k = p; k < l; ++k)
            if (coef[b][k] != 0) {
                f.push_back("Q^r root " + fmt_root(r, b) + " is not spanned by alpha_1..alpha_p");
                k = l;
            }
    for (int i = p; i < l - p; ++i)
        if (!contains(sp.nilpotent, simple[i])) f.push_back("alpha_" + std::to_string(i + 1) + " is not in Q^n");
    for (int i = 0; i < l; ++i) {
        const auto& cf = coef[c.induced[simple[i]]];
        if (std::any_of(cf.begin(), cf.end(), [](const Rat& v) { return v > 0; }))
            f.push_back("conj(alpha_" + std::to_string(i + 1) + ") is not negative");
    }
    for (int i = 0; i < p; ++i)
        if (c.induced[simple[i]] != r.neg(simple[l - 1 - i]))
            f.push_back("conj(alpha_" + std::to_string(i + 1) + ") != -alpha_" + std::to_string(l - i));
    return f;
}

AdaptedSystem adapted_simple_system(const RootSystem& r, const RootSet& q, const RootConjugation& c) {
    auto lem = verify_lemma_lb(r, q, c);
    if (!lem.ok()) throw PreconditionViolation("lemma items fail: " + lem.failures.front());
    std::size_t d = r.ambient_dim();
    AdaptedSystem out;

    // A0: sum of the nilradical roots; zero on the Levi roots, positive on the nilradical.
    out.a0 = RatVec(d);
    for (int a : lem.q_n) {
        RatVec v = r.ambient(a);
        for (std::size_t i = 0; i < d; ++i) out.a0[i] += v[i];
    }
    for (std::size_t a = 0; a < r.size(); ++a) {
        Rat v = pair(r, int(a), out.a0);
        bool in_p = contains(lem.parabolic, int(a)), levi = in_p && contains(lem.parabolic, r.neg(int(a)));
        if ((levi && v != 0) || (in_p && !levi && v <= 0) || (!in_p && v >= 0))
            throw std::logic_error("A0 does not define the parabolic set");
    }

    // A1: regular in the (-1)-eigenspace of sigma
    RatMat sp1 = c.sigma;
    for (std::size_t i = 0; i < d; ++i) sp1[i][i] += 1;
    auto ker = rat_kernel(sp1, d);
    bool found = false;
    for (long n = 2; n < 200 && !found; ++n) {
        RatVec v(d);
        Rat w = 1;
        for (const auto& k : ker) {
            for (std::size_t i = 0; i < d; ++i) v[i] += w * k[i];
            w *= n;
        }
        bool regular = true;
        for (std::size_t a = 0; a < r.size() && regular; ++a) regular = pair(r, int(a), v) != 0;
        if (regular) {
            out.a1 = v;
            found = true;
        }
    }
    if (!found) throw NoRegularVector("no regular element in the (-1)-eigenspace of the conjugation");

    Rat maxa1 = 0;
    for (std::size_t a = 0; a < r.size(); ++a) {
        Rat v = abs(pair(r, int(a), out.a1));
        if (v > maxa1) maxa1 = v;
    }
    Int ceil_inv = 1;
    for (int a : lem.q_n) {
        Rat inv = 1 / pair(r, a, out.a0);
        Int cl;
        mpz_cdiv_q(cl.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        if (cl > ceil_inv) ceil_inv = cl;
    }
    out.eps = 1 / (1 + maxa1 * Rat(ceil_inv));
    out.eps.canonicalize();

    RatVec a(d);
    for (std::size_t i = 0; i < d; ++i) a[i] = out.a0[i] + out.eps * out.a1[i];
    RootSet pos;
    for (std::size_t x = 0; x < r.size(); ++x) {
        Rat v = pair(r, int(x), a);
        if (v == 0) throw std::logic_error("A0 + eps A1 is not regular");
        if (v > 0) pos.push_back(int(x));
    }
    std::vector<int> base;
    for (int x : pos) {
        bool decomposable = false;
        for (int y : pos) {
            int z = r.sum(x, r.neg(y));
            if (z >= 0 && contains(pos, z)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) base.push_back(x);
    }
    int l = r.rank();
    std::vector<int> head, mid;
    for (int x : base)
        if (contains(lem.q_r, x)) head.push_back(x);
    out.p = int(head.size());
    std::vector<int> tail(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) tail[i] = r.neg(c.induced[head[i]]);
    for (int x : base)
        if (!contains(head, x) && std::find(tail.begin(), tail.end(), x) == tail.end()) mid.push_back(x);
    out.simple = head;
    out.simple.insert(out.simple.end(), mid.begin(), mid.end());
    for (std::size_t i = head.size(); i-- > 0;) out.simple.push_back(tail[i]);
    if (int(out.simple.size()) != l) out.failures.push_back("labelling does not produce l simple roots");
    else out.failures = check_adapted(r, q, c, out.simple, out.p);
    return out;
}

MaxStructureReport regular_max_structure(const RootSystem& r, const RootConjugation& c, const RootSet& q,
                                         const std::vector<GVec>& m_basis) {
    if (!check_eq_ha(r, q, c)) throw PreconditionViolation("Q and its conjugate do not partition the roots");
    std::size_t d = r.ambient_dim();
    MaxStructureReport rep;
    std::vector<GVec> rootvecs;
    for (std::size_t a = 0; a < r.size(); ++a) {
        GVec v;
        for (const auto& x : r.ambient(int(a))) v.emplace_back(x);
        rootvecs.push_back(v);
    }
    Subspace cartan = Subspace::span(rootvecs, d);
    Subspace m = Subspace::span(m_basis, d);
    rep.dim_m = m.dim();
    rep.expected_dim = std::size_t(r.rank() / 2);
    rep.m_in_cartan = cartan.contains(m);
    rep.dim_ok = rep.dim_m == rep.expected_dim;
    std::vector<GVec> cor;
    for (int a : split_r_n(r, q).reductive) cor.push_back(rootvecs[a]);
    rep.coroots_in_m = m.contains(Subspace::span(cor, d));
    Subspace mbar = m.conj_by(g_from_rat(c.sigma));
    rep.m_conj_trivial = m.intersect(mbar).dim() == 0;
    rep.is_subalgebra = is_closed(r, q) && rep.coroots_in_m;
    // root spaces of Q and conj(Q) are disjoint and fill R
    rep.cr_dim = m.dim() + q.size() - m.intersect(mbar).dim();
    rep.cr_codim = std::size_t(r.rank()) - (m + mbar).dim();
    if (!rep.m_in_cartan) rep.failures.push_back("m is not inside the Cartan subalgebra");
    if (!rep.dim_ok)
        rep.failures.push_back("dim m = " + std::to_string(rep.dim_m) + ", expected " + std::to_string(rep.expected_dim));
    if (!rep.coroots_in_m) rep.failures.push_back("coroots of Q^r are not in m");
    if (!rep.m_conj_trivial) rep.failures.push_back("m meets its conjugate");
    return rep;
}

}  // namespace flagcr
