#include "doctest.h"
#include "flagcr/weyl.hpp"

#include <algorithm>

using namespace flagcr;
namespace r = flagcr::roots;

namespace {

RootSet random_subset(const RootSystem& R, std::mt19937_64& g, std::size_t k) {
    std::vector<int> all(R.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    std::shuffle(all.begin(), all.end(), g);
    all.resize(k);
    return make_set(all);
}

}  // namespace

TEST_CASE("reflections") {
    auto A2 = build_root_system(RootType::A, 2);
    int a = A2->index_of(r::ei_ej(3, 1, 2, 1, -1));
    int b = A2->index_of(r::ei_ej(3, 2, 3, 1, -1));
    CHECK((reflect(*A2, a, A2->ambient(a)) == A2->ambient(A2->neg(a))));
    RatVec orth{1, 1, 1};
    CHECK(reflect(*A2, a, orth) == orth);
    CHECK((reflect(*A2, a, A2->ambient(b)) == A2->ambient(A2->index_of(r::ei_ej(3, 1, 3, 1, -1)))));
}

TEST_CASE("group matrices are orthogonal and permute the roots") {
    std::mt19937_64 g(5);
    for (auto [t, n] : {std::pair{RootType::A, 3}, {RootType::D, 4}, {RootType::G2, 0}, {RootType::F4, 0}, {RootType::E6, 0}}) {
        auto R = build_root_system(t, n);
        const Weyl& w = Weyl::of(R);
        for (int k = 0; k < 5; ++k) {
            auto e = w.random_element(Group::Aut, g);
            RatMat m = w.matrix(e.perm);
            CHECK((rat_mul(m, rat_transpose(m)) == rat_identity(R->ambient_dim())));
            for (std::size_t a = 0; a < R->size(); ++a)
                CHECK((rat_apply(m, R->ambient(int(a))) == R->ambient(e.perm[a])));
        }
    }
}

TEST_CASE("diagram automorphism group orders") {
    auto order = [](RootType t, int n) { return Weyl::of(build_root_system(t, n)).diagram_automorphisms().size() + 1; };
    CHECK(order(RootType::A, 1) == 1);
    CHECK(order(RootType::A, 3) == 2);
    CHECK(order(RootType::D, 4) == 6);
    CHECK(order(RootType::D, 5) == 2);
    CHECK(order(RootType::E6, 0) == 2);
    CHECK(order(RootType::E7, 0) == 1);
    CHECK(order(RootType::B, 3) == 1);
    CHECK(order(RootType::F4, 0) == 1);
}

TEST_CASE("Weyl group orders from the orbit of a regular set") {
    // the orbit of a positive system has size |W|
    auto size_of = [](RootType t, int n) {
        auto R = build_root_system(t, n);
        RootSet pos;
        for (std::size_t i = 0; i < R->size(); ++i)
            if (R->is_positive(int(i))) pos.push_back(int(i));
        return orbit(Weyl::of(R), pos, Group::W).size();
    };
    CHECK(size_of(RootType::A, 3) == 24);
    CHECK(size_of(RootType::B, 3) == 48);
    CHECK(size_of(RootType::G2, 0) == 12);
    CHECK(size_of(RootType::F4, 0) == 1152);
}

TEST_CASE("canonical forms") {
    auto A2 = build_root_system(RootType::A, 2);
    const Weyl& w = Weyl::of(A2);
    RootSet x{A2->index_of(r::ei_ej(3, 2, 3, 1, -1))}, y{A2->index_of(r::ei_ej(3, 1, 2, 1, -1))};
    CHECK((canonical_form(w, x, Group::W) == canonical_form(w, y, Group::W)));
    auto c = canonical_form(w, x, Group::W);
    CHECK((canonical_form(w, c, Group::W) == c));
}

TEST_CASE("D4: Q_{-4} and Q_4 differ under W but agree under Aut") {
    auto D4 = build_root_system(RootType::D, 4);
    const Weyl& w = Weyl::of(D4);
    std::vector<Coords> qn, qm;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) qn.push_back(r::ei_ej(4, i, j));
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) qm.push_back(r::ei_ej(4, i, j));
        qm.push_back(r::ei_ej(4, i, 4, 1, -1));
    }
    RootSet a = to_set(*D4, qn), b = to_set(*D4, qm);
    CHECK((canonical_form(w, a, Group::W) != canonical_form(w, b, Group::W)));
    CHECK((canonical_form(w, a, Group::Aut) == canonical_form(w, b, Group::Aut)));
    CHECK_FALSE(sets_equivalent(w, a, b, Group::W));
    CHECK(sets_equivalent(w, a, b, Group::Aut));
}

TEST_CASE("A3: Q1 and Q3") {
    auto A3 = build_root_system(RootType::A, 3);
    const Weyl& w = Weyl::of(A3);
    RootSet q1 = to_set(*A3, {r::ei_ej(4, 1, 2, 1, -1), r::ei_ej(4, 1, 3, 1, -1), r::ei_ej(4, 1, 4, 1, -1)});
    RootSet q3 = to_set(*A3, {r::ei_ej(4, 1, 4, 1, -1), r::ei_ej(4, 2, 4, 1, -1), r::ei_ej(4, 3, 4, 1, -1)});
    CHECK(sets_equivalent(w, q1, q1, Group::W));
    CHECK_FALSE(sets_equivalent(w, q1, q3, Group::W));
    CHECK(sets_equivalent(w, q1, q3, Group::Aut));
    // oracle: orbit enumeration
    auto o = orbit(w, q1, Group::W);
    CHECK(std::find(o.begin(), o.end(), q3) == o.end());
    CHECK_FALSE(sets_equivalent(w, q1, RootSet{0, 1}, Group::Aut));
}

TEST_CASE("canonical form is invariant under random group elements") {
    std::mt19937_64 g(17);
    for (auto [t, n] : {std::pair{RootType::A, 3}, {RootType::B, 3}, {RootType::D, 4}, {RootType::G2, 0}, {RootType::F4, 0}}) {
        auto R = build_root_system(t, n);
        const Weyl& w = Weyl::of(R);
        for (int s = 0; s < 4; ++s) {
            RootSet q = random_subset(*R, g, 2 + s);
            for (Group grp : {Group::W, Group::Aut}) {
                auto c = canonical_form(w, q, grp);
                for (int k = 0; k < 50; ++k) {
                    auto e = w.random_element(grp, g);
                    CHECK((canonical_form(w, apply_perm(e.perm, q), grp) == c));
                }
            }
        }
    }
}

TEST_CASE("sets_equivalent agrees with orbit enumeration at rank <= 4") {
    std::mt19937_64 g(23);
    for (auto [t, n] : {std::pair{RootType::A, 2}, {RootType::A, 3}, {RootType::A, 4}, {RootType::B, 2}, {RootType::B, 3},
                        {RootType::C, 3}, {RootType::D, 4}, {RootType::G2, 0}, {RootType::F4, 0}, {RootType::B, 4}}) {
        auto R = build_root_system(t, n);
        CAPTURE(R->label());
        const Weyl& w = Weyl::of(R);
        for (int s = 0; s < 12; ++s) {
            std::size_t k = 1 + s % 4;
            RootSet a = random_subset(*R, g, k);
            // half the time compare with an image, half with a fresh random set
            RootSet b = s % 2 ? apply_perm(w.random_element(Group::Aut, g).perm, a) : random_subset(*R, g, k);
            for (Group grp : {Group::W, Group::Aut}) {
                bool oracle = canonical_form(w, a, grp) == canonical_form(w, b, grp);
                CHECK(sets_equivalent(w, a, b, grp) == oracle);
                if (oracle) CHECK((fingerprint(*R, a) == fingerprint(*R, b)));
            }
        }
    }
}

TEST_CASE("budget is enforced") {
    auto F4 = build_root_system(RootType::F4);
    RootSet pos;
    for (std::size_t i = 0; i < F4->size(); ++i)
        if (F4->is_positive(int(i))) pos.push_back(int(i));
    CHECK_THROWS_AS(orbit(Weyl::of(F4), pos, Group::W, 100), OrbitBudgetExceeded);
}
