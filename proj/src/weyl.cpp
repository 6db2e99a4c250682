#include "flagcr/weyl.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <unordered_set>

namespace flagcr {

std::string group_name(Group g) { return g == Group::W ? "weyl" : "aut"; }

Perm compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = int(i);
    return q;
}

RootSet apply_perm(const Perm& p, const RootSet& q) {
    RootSet out;
    out.reserve(q.size());
    for (int i : q) out.push_back(p[i]);
    std::sort(out.begin(), out.end());
    return out;
}

RatVec reflect(const RootSystem& r, int alpha, const RatVec& v) {
    RatVec a = r.ambient(alpha);
    Rat c = 2 * rat_dot(v, a) / rat_dot(a, a);
    RatVec out = v;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= c * a[k];
    return out;
}

Weyl::Weyl(RootSystemPtr r) : r_(std::move(r)) {
    const RootSystem& R = *r_;
    for (int s : R.simple()) reflections_.push_back(reflection_perm(s));

    // diagram automorphisms: permutations of the simple roots preserving the Cartan matrix
    const int rk = R.rank();
    std::map<std::vector<int>, int> by_coeffs;
    for (std::size_t i = 0; i < R.size(); ++i) by_coeffs[R.coeffs(int(i))] = int(i);
    std::vector<int> pi(rk);
    for (int i = 0; i < rk; ++i) pi[i] = i;
    do {
        bool ok = true, trivial = true;
        for (int i = 0; i < rk && ok; ++i) {
            trivial = trivial && pi[i] == i;
            for (int j = 0; j < rk && ok; ++j)
                ok = R.cartan(R.simple()[i], R.simple()[j]) == R.cartan(R.simple()[pi[i]], R.simple()[pi[j]]);
        }
        if (!ok || trivial) continue;
        Perm p(R.size());
        for (std::size_t a = 0; a < R.size(); ++a) {
            std::vector<int> c(rk);
            for (int i = 0; i < rk; ++i) c[pi[i]] = R.coeffs(int(a))[i];
            p[a] = by_coeffs.at(c);
        }
        diagram_.push_back(std::move(p));
    } while (std::next_permutation(pi.begin(), pi.end()));
}

const Weyl& Weyl::of(const RootSystemPtr& r) {
    static std::mutex mu;
    static std::map<const RootSystem*, std::unique_ptr<Weyl>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[r.get()];
    if (!slot) slot = std::make_unique<Weyl>(r);
    return *slot;
}

Perm Weyl::reflection_perm(int root) const {
    const RootSystem& R = *r_;
    Perm p(R.size());
    for (std::size_t b = 0; b < R.size(); ++b) {
        int k = R.cartan(int(b), root);
        p[b] = R.index_of(roots::sub(R.root(int(b)), roots::scale(R.root(root), k)));
    }
    return p;
}

std::vector<Perm> Weyl::generators(Group g) const {
    std::vector<Perm> gens = reflections_;
    if (g == Group::Aut) gens.insert(gens.end(), diagram_.begin(), diagram_.end());
    return gens;
}

GroupElement Weyl::random_element(Group g, std::mt19937_64& rng, int length) const {
    auto gens = generators(g);
    GroupElement e;
    e.perm.resize(r_->size());
    for (std::size_t i = 0; i < e.perm.size(); ++i) e.perm[i] = int(i);
    std::uniform_int_distribution<std::size_t> d(0, gens.size() - 1);
    for (int k = 0; k < length; ++k) {
        std::size_t s = d(rng);
        e.perm = compose(gens[s], e.perm);
        e.word.push_back(int(s));
    }
    return e;
}

RatMat Weyl::matrix(const Perm& p) const {
    const RootSystem& R = *r_;
    const int dim = R.ambient_dim(), rk = R.rank();
    // basis: simple roots, then the orthogonal complement of the root span
    RatMat srows;
    for (int s : R.simple()) srows.push_back(R.ambient(s));
    auto comp = rat_kernel(srows, dim);
    RatMat B(dim, RatVec(dim)), Bimg(dim, RatVec(dim));
    for (int i = 0; i < rk; ++i) {
        RatVec src = R.ambient(R.simple()[i]), dst = R.ambient(p[R.simple()[i]]);
        for (int k = 0; k < dim; ++k) { B[k][i] = src[k]; Bimg[k][i] = dst[k]; }
    }
    for (std::size_t c = 0; c < comp.size(); ++c)
        for (int k = 0; k < dim; ++k) B[k][rk + c] = Bimg[k][rk + c] = comp[c][k];
    auto inv = rat_inverse(B);
    if (!inv) throw std::logic_error("Weyl::matrix: singular basis");
    return rat_mul(Bimg, *inv);
}

bool Weyl::in_weyl(const Perm& p) const {
    const RootSystem& R = *r_;
    Perm psi = p;
    for (std::size_t guard = 0; guard <= R.size(); ++guard) {
        Perm inv = inverse(psi);
        int found = -1;
        for (int i = 0; i < R.rank() && found < 0; ++i)
            if (R.is_positive(inv[R.neg(R.simple()[i])])) found = i;  // -alpha_i lies in psi(P)
        if (found < 0) {
            for (int s : R.simple())
                if (psi[s] != s) return false;
            return true;
        }
        psi = compose(reflections_[found], psi);
    }
    throw std::logic_error("in_weyl: no convergence");
}

std::optional<Perm> Weyl::extend_isometry(const std::vector<int>& from, const std::vector<int>& to) const {
    const RootSystem& R = *r_;
    if (from.size() != to.size()) return std::nullopt;
    for (std::size_t i = 0; i < from.size(); ++i)
        for (std::size_t j = 0; j < from.size(); ++j)
            if (R.dot4(from[i], from[j]) != R.dot4(to[i], to[j])) return std::nullopt;
    // independent subfamily
    std::vector<int> basis, image;
    RatMat acc;
    for (std::size_t i = 0; i < from.size() && int(basis.size()) < R.rank(); ++i) {
        RatMat trial = acc;
        trial.push_back(R.ambient(from[i]));
        if (rat_rank(trial) > acc.size()) {
            acc = std::move(trial);
            basis.push_back(from[i]);
            image.push_back(to[i]);
        }
    }
    if (int(basis.size()) < R.rank()) return std::nullopt;
    const int rk = R.rank();
    RatMat gram(rk, RatVec(rk));
    for (int a = 0; a < rk; ++a)
        for (int b = 0; b < rk; ++b) gram[a][b] = R.inner(basis[a], basis[b]);
    auto ginv = rat_inverse(gram);
    Perm p(R.size());
    for (std::size_t a = 0; a < R.size(); ++a) {
        RatVec pr(rk);
        for (int b = 0; b < rk; ++b) pr[b] = R.inner(int(a), basis[b]);
        RatVec c = rat_apply(*ginv, pr);
        std::vector<Rat> img(R.ambient_dim());
        for (int b = 0; b < rk; ++b)
            for (int k = 0; k < R.ambient_dim(); ++k) img[k] += c[b] * R.root(image[b])[k];
        Coords ic(R.ambient_dim());
        for (int k = 0; k < R.ambient_dim(); ++k) {
            if (img[k].get_den() != 1) return std::nullopt;
            ic[k] = int(img[k].get_num().get_si());
        }
        int j = R.index_of(ic);
        if (j < 0) return std::nullopt;
        p[a] = j;
    }
    for (std::size_t i = 0; i < from.size(); ++i)
        if (p[from[i]] != to[i]) return std::nullopt;
    return p;
}

namespace {

struct SetHash {
    std::size_t operator()(const RootSet& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : s) h = (h ^ std::size_t(x)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

std::vector<RootSet> orbit(const Weyl& w, const RootSet& q, Group g, std::size_t budget) {
    auto gens = w.generators(g);
    std::unordered_set<RootSet, SetHash> seen{q};
    std::vector<RootSet> out{q};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& p : gens) {
            RootSet img = apply_perm(p, out[head]);
            if (seen.insert(img).second) {
                out.push_back(std::move(img));
                if (out.size() > budget) throw OrbitBudgetExceeded(out.size());
            }
        }
    }
    return out;
}

RootSet canonical_form(const Weyl& w, const RootSet& q, Group g, std::size_t budget) {
    auto o = orbit(w, q, g, budget);
    return *std::min_element(o.begin(), o.end());
}

std::vector<std::vector<int>> fingerprint(const RootSystem& r, const RootSet& q) {
    // roots compatible with every element of q (extension candidates)
    std::vector<int> ext;
    for (std::size_t c = 0; c < r.size(); ++c) {
        if (contains(q, int(c))) continue;
        bool ok = true;
        for (int a : q) ok = ok && r.neg(a) != int(c) && r.sum(a, int(c)) < 0;
        if (ok) ext.push_back(int(c));
    }
    std::vector<std::vector<int>> fp;
    for (int a : q) {
        std::vector<int> sig{r.dot4(a, a)};
        std::vector<int> prods;
        for (int b : q) prods.push_back(r.dot4(a, b));
        std::sort(prods.begin(), prods.end());
        sig.insert(sig.end(), prods.begin(), prods.end());
        int sums = 0, pos_ext = 0;
        for (int b : q) sums += r.sum(a, b) >= 0;
        for (int c : ext) pos_ext += r.dot4(a, c) > 0;
        sig.push_back(sums);
        sig.push_back(pos_ext);
        fp.push_back(std::move(sig));
    }
    std::sort(fp.begin(), fp.end());
    fp.push_back({int(q.size()), int(ext.size())});
    return fp;
}

namespace {

std::vector<int> root_signature(const RootSystem& r, const RootSet& q, int a) {
    std::vector<int> sig{r.dot4(a, a)};
    std::vector<int> prods;
    for (int b : q) prods.push_back(r.dot4(a, b));
    std::sort(prods.begin(), prods.end());
    sig.insert(sig.end(), prods.begin(), prods.end());
    return sig;
}

struct IsoSearch {
    const Weyl& w;
    const RootSystem& r;
    Group g;
    const RootSet& target;
    std::vector<int> domain;                // ordered domain roots
    std::vector<std::vector<int>> options;  // candidate images per position
    std::vector<int> image;
    std::vector<bool> used;
    std::size_t q_size;

    bool run(std::size_t pos) {
        if (pos == domain.size()) {
            auto p = w.extend_isometry(domain, image);
            if (!p) return false;
            RootSet src(domain.begin(), domain.begin() + q_size);
            std::sort(src.begin(), src.end());
            if (apply_perm(*p, src) != target) return false;
            return g == Group::Aut || w.in_weyl(*p);
        }
        for (int t : options[pos]) {
            if (used[t]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < pos && ok; ++k) ok = r.dot4(domain[k], domain[pos]) == r.dot4(image[k], t);
            if (!ok) continue;
            used[t] = true;
            image.push_back(t);
            if (run(pos + 1)) return true;
            image.pop_back();
            used[t] = false;
        }
        return false;
    }
};

}  // namespace

bool sets_equivalent(const Weyl& w, const RootSet& a, const RootSet& b, Group g) {
    const RootSystem& r = w.system();
    if (a.size() != b.size()) return false;
    if (fingerprint(r, a) != fingerprint(r, b)) return false;
    if (a == b) return true;

    // order: an independent prefix of a first, then completing roots outside a, then the rest of a
    std::vector<int> indep, rest;
    RatMat acc;
    for (int x : a) {
        RatMat t = acc;
        t.push_back(r.ambient(x));
        if (rat_rank(t) > acc.size()) { acc = std::move(t); indep.push_back(x); }
        else rest.push_back(x);
    }
    std::vector<int> extra;
    for (int s : r.simple()) {
        if (int(acc.size()) == r.rank()) break;
        RatMat t = acc;
        t.push_back(r.ambient(s));
        if (rat_rank(t) > acc.size()) { acc = std::move(t); extra.push_back(s); }
    }
    IsoSearch s{w, r, g, b, {}, {}, {}, std::vector<bool>(r.size(), false), a.size()};
    // the q-part must come first for the source-set reconstruction; extras are pinned afterwards
    s.domain = indep;
    s.domain.insert(s.domain.end(), rest.begin(), rest.end());
    s.domain.insert(s.domain.end(), extra.begin(), extra.end());
    for (std::size_t k = 0; k < s.domain.size(); ++k) {
        int d = s.domain[k];
        std::vector<int> opts;
        if (k < a.size()) {
            auto sig = root_signature(r, a, d);
            for (int t : b)
                if (root_signature(r, b, t) == sig) opts.push_back(t);
        } else {
            for (std::size_t t = 0; t < r.size(); ++t)
                if (r.dot4(int(t), int(t)) == r.dot4(d, d) && !contains(b, int(t))) opts.push_back(int(t));
        }
        s.options.push_back(std::move(opts));
    }
    return s.run(0);
}

}  // namespace flagcr
