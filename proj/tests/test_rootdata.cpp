#include "gradecs/errors.hpp"
#include "gradecs/rootdata.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace gradecs;

namespace {

struct Case {
    TypeLabel t;
    int n;
};

std::vector<Case> all_cases() {
    std::vector<Case> v;
    for (int n = 1; n <= 8; ++n) v.push_back({TypeLabel::A, n});
    for (int n = 2; n <= 8; ++n) v.push_back({TypeLabel::B, n});
    for (int n = 2; n <= 8; ++n) v.push_back({TypeLabel::C, n});
    for (int n = 4; n <= 8; ++n) v.push_back({TypeLabel::D, n});
    for (auto t : {TypeLabel::E6, TypeLabel::E7, TypeLabel::E8, TypeLabel::F4, TypeLabel::G2})
        v.push_back({t, t == TypeLabel::F4 ? 4 : (t == TypeLabel::G2 ? 2 : static_cast<int>(t) + 2)});
    return v;
}

// Number of roots from the standard formulas.
int expected_roots(TypeLabel t, int n) {
    switch (t) {
    case TypeLabel::A: return n * (n + 1);
    case TypeLabel::B:
    case TypeLabel::C: return 2 * n * n;
    case TypeLabel::D: return 2 * n * (n - 1);
    case TypeLabel::E6: return 72;
    case TypeLabel::E7: return 126;
    case TypeLabel::E8: return 240;
    case TypeLabel::F4: return 48;
    case TypeLabel::G2: return 12;
    }
    return 0;
}

} // namespace

TEST_CASE("root datum basics") {
    auto a3 = RootDatum::build(TypeLabel::A, 3);
    CHECK(a3.center().invariant_factors() == IntVec{4});
    CHECK(a3.marks() == IntVec{1, 1, 1});
    CHECK(RootDatum::build(TypeLabel::D, 5).center().invariant_factors() == IntVec{4});
    CHECK(RootDatum::build(TypeLabel::D, 6).center().invariant_factors() == IntVec{2, 2});
    auto e6 = RootDatum::build(TypeLabel::E6, 6);
    CHECK(e6.marks() == IntVec{1, 2, 2, 3, 2, 1});
    CHECK(e6.center().invariant_factors() == IntVec{3});
    CHECK(RootDatum::build(TypeLabel::E7, 7).marks() == IntVec{2, 2, 3, 4, 3, 2, 1});
    CHECK(RootDatum::build(TypeLabel::E8, 8).marks() == IntVec{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(RootDatum::build(TypeLabel::F4, 4).marks() == IntVec{2, 3, 4, 2});
    CHECK(RootDatum::build(TypeLabel::G2, 2).marks() == IntVec{3, 2});
    CHECK(RootDatum::build(TypeLabel::B, 4).marks() == IntVec{1, 2, 2, 2});
    CHECK(RootDatum::build(TypeLabel::C, 4).marks() == IntVec{2, 2, 2, 1});
    CHECK(RootDatum::build(TypeLabel::D, 6).marks() == IntVec{1, 2, 2, 2, 1, 1});
    CHECK_THROWS_AS(RootDatum::build(TypeLabel::D, 3), Error);
    CHECK_THROWS_AS(RootDatum::build(TypeLabel::E6, 7), Error);
}

TEST_CASE("pairing matrices") {
    auto b3 = RootDatum::build(TypeLabel::B, 3);
    CHECK(b3.pairing() == IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
    auto g2 = RootDatum::build(TypeLabel::G2, 2);
    CHECK(g2.pairing()(0, 1) == -3);
    CHECK(b3.dual().type() == TypeLabel::C);
}

TEST_CASE("structural invariants for every type") {
    for (auto [t, n] : all_cases()) {
        CAPTURE(type_name(t, n));
        auto d = RootDatum::build(t, n);
        const auto& P = d.pairing();
        for (int i = 0; i < n; ++i) {
            CHECK(P(i, i) == 2);
            for (int j = 0; j < n; ++j)
                if (i != j) CHECK(P(i, j) <= 0);
        }
        CHECK(static_cast<int>(d.roots().size()) == expected_roots(t, n));
        // center order = det of the Cartan matrix
        CHECK(d.center().order() == std::llabs(determinant(P)));
        // reflections permute roots and square to the identity
        for (std::size_t r = 0; r < d.num_positive(); r += 3) {
            auto S = d.reflection(r);
            CHECK(S * S == IntMatrix::identity(n));
            CHECK(d.act_on_root(S, r) == d.negative(r));
        }
        // coweights are dual to simple roots
        auto w = d.fundamental_coweights();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat s(0);
                for (int k = 0; k < n; ++k) s += w[i][k] * d.roots()[j].functional[k];
                CHECK(s == Rat(i == j ? 1 : 0));
            }
        // double dual
        CHECK(d.dual().dual().pairing() == P);
        CHECK(d.dual().roots().size() == d.roots().size());
    }
}

TEST_CASE("type identification is labeling-invariant") {
    std::mt19937 rng(7);
    for (auto [t, n] : all_cases()) {
        CAPTURE(type_name(t, n));
        auto d = RootDatum::build(t, n);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            IntMatrix Q(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) Q(perm[i], perm[j]) = d.pairing()(i, j);
            auto comps = identify_components(Q);
            REQUIRE(comps.size() == 1);
            CHECK(same_type(comps[0].type, comps[0].rank, t, n));
            // relabeling by the returned labeling recovers a standard pairing
            IntMatrix R(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) R(i, j) = Q(comps[0].labeling[i], comps[0].labeling[j]);
            auto std_type = comps[0].type;
            CHECK(R == RootDatum::build(std_type, n).pairing());
        }
    }
    IntMatrix two_a1 = IntMatrix::identity(2);
    two_a1(0, 0) = two_a1(1, 1) = 2;
    CHECK(identify_components(two_a1).size() == 2);
}

TEST_CASE("signed permutations round trip") {
    for (auto [t, n] : std::vector<Case>{{TypeLabel::A, 4}, {TypeLabel::B, 3}, {TypeLabel::C, 3}, {TypeLabel::D, 4}}) {
        auto d = RootDatum::build(t, n);
        for (int i = 0; i < n; ++i) {
            auto s = as_signed_perm(d, d.simple_reflection(i));
            REQUIRE(s);
            CHECK(coroot_matrix(d, *s) == d.simple_reflection(i));
        }
    }
}
