#pragma once
// Brute-force helpers shared by the test binaries. Deliberately naive so they
// can serve as oracles for the library code.

#include "flagcr/qsets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace testsupport {

using namespace flagcr;

inline bool compatible(const RootSystem& r, int a, int b) {
    return a != b && r.neg(a) != b && r.sum(a, b) < 0;
}

/// Every nonempty lb-set, each exactly once (increasing index order).
inline void for_each_lb_set(const RootSystem& r, const std::function<void(const RootSet&)>& f) {
    RootSet cur;
    std::function<void(int)> rec = [&](int from) {
        for (int c = from; c < int(r.size()); ++c) {
            if (r.sum(c, c) >= 0) continue;
            bool ok = true;
            for (int x : cur) ok = ok && compatible(r, x, c);
            if (!ok) continue;
            cur.push_back(c);
            f(cur);
            rec(c + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

/// Random lb-set grown greedily from a shuffled root order, then thinned while staying fundamental.
inline RootSet random_lb_fundamental(const RootSystem& r, std::mt19937_64& g) {
    for (;;) {
        std::vector<int> order(r.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), g);
        RootSet q;
        for (int c : order) {
            bool ok = true;
            for (int x : q) ok = ok && compatible(r, x, c);
            if (ok) q.push_back(c);
        }
        std::sort(q.begin(), q.end());
        if (!is_fundamental(r, q)) continue;
        std::shuffle(order.begin(), order.end(), g);
        int drops = int(g() % (q.size() + 1));
        for (int c : order) {
            if (drops == 0) break;
            if (!contains(q, c)) continue;
            RootSet t = set_minus(q, {c});
            if (is_fundamental(r, t)) {
                q = t;
                --drops;
            }
        }
        return q;
    }
}

/// Exhaustive search for E mod m (m > 0) or for exact E in a box (m == 0).
inline bool brute_grading(const RootSystem& r, const RootSet& q, int m, int box = 6) {
    int n = r.rank();
    int lo = m ? 0 : -box, hi = m ? m - 1 : box;
    std::vector<int> e(n, lo);
    for (;;) {
        bool ok = true;
        for (int a : q) {
            long v = 0;
            for (int i = 0; i < n; ++i) v += long(r.coeffs(a)[i]) * e[i];
            if (m ? ((v - 1) % m + m) % m != 0 : v != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
        int i = 0;
        while (i < n && e[i] == hi) e[i++] = lo;
        if (i == n) return false;
        ++e[i];
    }
}

inline RootSet positive_roots(const RootSystem& r) {
    RootSet p;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r.is_positive(int(i))) p.push_back(int(i));
    return p;
}

}  // namespace testsupport
