#include "flagcr/rootsys.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagcr {

std::string type_name(RootType t) {
    switch (t) {
        case RootType::A: return "A";
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
        case RootType::G2: return "G2";
        case RootType::F4: return "F4";
        case RootType::E6: return "E6";
        case RootType::E7: return "E7";
        case RootType::E8: return "E8";
    }
    return "?";
}

RootType parse_type(const std::string& s) {
    static const std::map<std::string, RootType> names{
        {"A", RootType::A},   {"B", RootType::B},   {"C", RootType::C},   {"D", RootType::D},
        {"G2", RootType::G2}, {"F4", RootType::F4}, {"E6", RootType::E6}, {"E7", RootType::E7},
        {"E8", RootType::E8}};
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown root system type: " + s);
    return it->second;
}

int default_rank(RootType t) {
    switch (t) {
        case RootType::G2: return 2;
        case RootType::F4: return 4;
        case RootType::E6: return 6;
        case RootType::E7: return 7;
        case RootType::E8: return 8;
        default: return 0;
    }
}

std::string RootSystem::label() const {
    switch (type_) {
        case RootType::A: case RootType::B: case RootType::C: case RootType::D:
            return type_name(type_) + std::to_string(rank_);
        default: return type_name(type_);
    }
}

int RootSystem::index_of(const Coords& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int a) const {
    int h = 0;
    for (int c : coeffs_[a]) h += c;
    return h;
}

Int RootSystem::evaluate(int a, const GradingElement& e) const {
    if (e.values.size() != simple_.size()) throw std::invalid_argument("evaluate: grading element has wrong length");
    Int s = 0;
    for (std::size_t i = 0; i < simple_.size(); ++i) s += coeffs_[a][i] * e.values[i];
    return s;
}

RatVec RootSystem::ambient(int a) const {
    RatVec v(dim_);
    for (int k = 0; k < dim_; ++k) v[k] = frac(roots_[a][k], 2);
    return v;
}

std::optional<GradingElement> RootSystem::grading_from_ambient(const RatVec& h) const {
    GradingElement e;
    for (int s : simple_) {
        Rat v = rat_dot(ambient(s), h);
        if (v.get_den() != 1) return std::nullopt;
        e.values.push_back(v.get_num());
    }
    return e;
}

RatVec RootSystem::grading_to_ambient(const GradingElement& e) const {
    RatVec h(dim_);
    for (std::size_t i = 0; i < coweights_.size(); ++i)
        for (int k = 0; k < dim_; ++k) h[k] += coweights_[i][k] * Rat(e.values[i]);
    return h;
}

std::optional<GradingElement> RootSystem::grading_from_pairings(
    const std::vector<std::pair<RatVec, Rat>>& eqs) const {
    // unknowns: coefficients of H on the simple roots
    RatMat a;
    RatVec b;
    for (const auto& [f, v] : eqs) {
        RatVec row;
        for (int s : simple_) row.push_back(rat_dot(f, ambient(s)));
        a.push_back(row);
        b.push_back(v);
    }
    if (rat_rank(a) < simple_.size()) return std::nullopt;
    auto c = rat_solve(a, b, simple_.size());
    if (!c) return std::nullopt;
    RatVec h(dim_);
    for (std::size_t i = 0; i < simple_.size(); ++i) {
        RatVec s = ambient(simple_[i]);
        for (int k = 0; k < dim_; ++k) h[k] += (*c)[i] * s[k];
    }
    return grading_from_ambient(h);
}

Rat inner(const Coords& a, const Coords& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += long(a[i]) * b[i];
    return frac(s, 4);
}

namespace {

void push_pm(std::vector<Coords>& out, const Coords& c) {
    out.push_back(c);
    out.push_back(roots::neg(c));
}

std::vector<Coords> integer_pairs(int dim, int upto, bool both_signs_second = true) {
    std::vector<Coords> out;
    for (int i = 1; i <= upto; ++i)
        for (int j = i + 1; j <= upto; ++j) {
            push_pm(out, roots::ei_ej(dim, i, j, 1, 1));
            if (both_signs_second) push_pm(out, roots::ei_ej(dim, i, j, 1, -1));
        }
    return out;
}

std::vector<Coords> half_roots(int dim, auto keep) {
    std::vector<Coords> out;
    for (int mask = 0; mask < (1 << dim); ++mask) {
        Coords c(dim);
        for (int k = 0; k < dim; ++k) c[k] = (mask >> k) & 1 ? -1 : 1;
        if (keep(c)) out.push_back(c);
    }
    return out;
}

int sign_product(const Coords& c) {
    int p = 1;
    for (int x : c) p *= x > 0 ? 1 : -1;
    return p;
}

}  // namespace

RootSystemPtr build_root_system(RootType t, int rank) {
    auto rs = std::make_shared<RootSystem>();
    RootSystem& R = *rs;
    R.type_ = t;
    std::vector<Coords> list;
    switch (t) {
        case RootType::A: {
            if (rank < 1 || rank > 12) throw std::invalid_argument("A: rank must be in 1..12");
            int n = rank + 1;
            R.dim_ = n;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) push_pm(list, roots::ei_ej(n, i, j, 1, -1));
            break;
        }
        case RootType::B:
        case RootType::C:
        case RootType::D: {
            int lo = t == RootType::D ? 3 : 2;
            if (rank < lo || rank > 12) throw std::invalid_argument(type_name(t) + ": rank out of range");
            R.dim_ = rank;
            list = integer_pairs(rank, rank);
            if (t != RootType::D)
                for (int i = 1; i <= rank; ++i) push_pm(list, roots::e(rank, i, t == RootType::B ? 1 : 2));
            break;
        }
        case RootType::G2: {
            R.dim_ = 3;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    if (i == j) continue;
                    list.push_back(roots::ei_ej(3, i, j, 1, -1));
                    int k = 6 - i - j;
                    list.push_back(roots::sub(roots::sub(roots::e(3, i, 2), roots::e(3, j)), roots::e(3, k)));
                }
            for (int i = 1; i <= 3; ++i) {
                int j = i % 3 + 1, k = j % 3 + 1;
                list.push_back(roots::neg(roots::sub(roots::sub(roots::e(3, i, 2), roots::e(3, j)), roots::e(3, k))));
            }
            break;
        }
        case RootType::F4: {
            R.dim_ = 4;
            list = integer_pairs(4, 4);
            for (int i = 1; i <= 4; ++i) push_pm(list, roots::e(4, i));
            for (auto& c : half_roots(4, [](const Coords&) { return true; })) list.push_back(c);
            break;
        }
        case RootType::E6:
        case RootType::E7:
        case RootType::E8: {
            R.dim_ = 8;
            int m = t == RootType::E8 ? 8 : t == RootType::E7 ? 6 : 5;
            list = integer_pairs(8, m);
            if (t == RootType::E7) push_pm(list, roots::v7());
            auto keep = [t](const Coords& c) {
                if (sign_product(c) != 1) return false;
                if (t == RootType::E7) return c[6] + c[7] == 0;
                if (t == RootType::E6) return c[5] == c[6] && c[6] == -c[7];
                return true;
            };
            for (auto& c : half_roots(8, keep)) list.push_back(c);
            break;
        }
    }
    if (t == RootType::G2) {
        // the loop above produced duplicates of long roots; dedupe
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw std::logic_error("build_root_system: duplicate roots");
    R.roots_ = std::move(list);
    R.finalize();
    return rs;
}

void RootSystem::finalize() {
    const int n = int(roots_.size());
    for (int i = 0; i < n; ++i) index_[roots_[i]] = i;
    neg_.assign(n, -1);
    sum_.assign(std::size_t(n) * n, -1);
    dot4_.assign(std::size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        neg_[i] = index_of(roots::neg(roots_[i]));
        if (neg_[i] < 0) throw std::logic_error("root system not closed under negation");
        for (int j = 0; j < n; ++j) {
            long d = 0;
            for (int k = 0; k < dim_; ++k) d += long(roots_[i][k]) * roots_[j][k];
            dot4_[std::size_t(i) * n + j] = int(d);
            sum_[std::size_t(i) * n + j] = index_of(roots::add(roots_[i], roots_[j]));
        }
        max_len4_ = std::max(max_len4_, dot4(i, i));
    }
    // positive system: first nonzero coordinate positive (a lexicographic order)
    positive_.assign(n, false);
    for (int i = 0; i < n; ++i)
        for (int x : roots_[i])
            if (x != 0) { positive_[i] = x > 0; break; }
    for (int i = 0; i < n; ++i) {
        if (!positive_[i]) continue;
        bool decomposable = false;
        for (int a = 0; a < n && !decomposable; ++a) {
            if (!positive_[a]) continue;
            int b = index_of(roots::sub(roots_[i], roots_[a]));
            decomposable = b >= 0 && positive_[b];
        }
        if (!decomposable) simple_.push_back(i);
    }
    rank_ = int(simple_.size());
    RatMat gram(rank_, RatVec(rank_));
    for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b) gram[a][b] = inner(simple_[a], simple_[b]);
    auto ginv = rat_inverse(gram);
    if (!ginv) throw std::logic_error("simple roots are dependent");
    coeffs_.assign(n, std::vector<int>(rank_));
    for (int i = 0; i < n; ++i) {
        RatVec p(rank_);
        for (int b = 0; b < rank_; ++b) p[b] = inner(i, simple_[b]);
        RatVec c = rat_apply(*ginv, p);
        for (int b = 0; b < rank_; ++b) {
            if (c[b].get_den() != 1) throw std::logic_error("root not integral in simple roots");
            coeffs_[i][b] = int(c[b].get_num().get_si());
        }
    }
    coweights_.assign(rank_, RatVec(dim_));
    for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b) {
            RatVec s = ambient(simple_[b]);
            for (int k = 0; k < dim_; ++k) coweights_[a][k] += (*ginv)[a][b] * s[k];
        }
}

RootSet make_set(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

RootSet to_set(const RootSystem& r, const std::vector<Coords>& cs) {
    std::vector<int> idx;
    for (const auto& c : cs) {
        int i = r.index_of(c);
        if (i < 0) {
            std::ostringstream os;
            os << "not a root of " << r.label() << ": (";
            for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
            os << ") [doubled]";
            throw std::invalid_argument(os.str());
        }
        idx.push_back(i);
    }
    return make_set(std::move(idx));
}

RootSet negate(const RootSystem& r, const RootSet& q) {
    std::vector<int> out;
    for (int i : q) out.push_back(r.neg(i));
    return make_set(std::move(out));
}

RootSet set_union(const RootSet& a, const RootSet& b) {
    RootSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

RootSet set_minus(const RootSet& a, const RootSet& b) {
    RootSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const RootSet& q, int i) { return std::binary_search(q.begin(), q.end(), i); }

namespace roots {

Coords e(int dim, int i, int scale) {
    if (i < 1 || i > dim) throw std::invalid_argument("e_i: index out of range");
    Coords c(dim);
    c[i - 1] = 2 * scale;
    return c;
}

Coords add(const Coords& a, const Coords& b) {
    Coords c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
    return c;
}
Coords sub(const Coords& a, const Coords& b) { return add(a, neg(b)); }
Coords neg(const Coords& a) { return scale(a, -1); }
Coords scale(const Coords& a, int k) {
    Coords c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
    return c;
}

Coords ei_ej(int dim, int i, int j, int si, int sj) {
    return add(e(dim, i, si), e(dim, j, sj));
}

Coords beta(const std::vector<int>& idx) {
    Coords c(8, 1);
    for (int i : idx) c = sub(c, e(8, i));
    return c;
}
Coords beta(std::initializer_list<int> idx) { return beta(std::vector<int>(idx)); }
Coords v7() { return sub(e(8, 8), e(8, 7)); }
Coords v6() { return sub(v7(), e(8, 6)); }

}  // namespace roots

std::string root_str(const RootSystem& r, int i) {
    const Coords& c = r.root(i);
    bool half = std::any_of(c.begin(), c.end(), [](int x) { return x % 2 != 0; });
    std::ostringstream os;
    if (half) {
        os << "1/2(";
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
        os << ')';
        return os.str();
    }
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        int v = c[k] / 2;
        if (v == 0) continue;
        if (v < 0) os << '-';
        else if (!first) os << '+';
        if (std::abs(v) != 1) os << std::abs(v);
        os << 'e' << k + 1;
        first = false;
    }
    return os.str();
}

std::string set_str(const RootSystem& r, const RootSet& q) {
    std::string s = "{";
    for (std::size_t i = 0; i < q.size(); ++i) s += (i ? ", " : "") + root_str(r, q[i]);
    return s + "}";
}

}  // namespace flagcr
