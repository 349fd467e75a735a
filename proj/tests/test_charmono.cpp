#include "gradecs/charmono.hpp"
#include "gradecs/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace gradecs;

namespace {

std::vector<GradingDescriptor> classical_sweep(int max_rank) {
    std::vector<GradingDescriptor> out;
    auto push = [&](TypeLabel t, int n) {
        for (const auto& d : enumerate_stable_gradings(t, n)) out.push_back(d);
    };
    for (int n = 1; n <= max_rank; ++n) push(TypeLabel::A, n);
    for (int n = 2; n <= max_rank; ++n) push(TypeLabel::B, n), push(TypeLabel::C, n);
    for (int n = 4; n <= max_rank; ++n) push(TypeLabel::D, n);
    return out;
}

CharacterAnalysis analyse(const std::string& key) { return CharacterAnalysis(build_grading(parse_case_key(key))); }

// Closure of monomial generators, by breadth-first multiplication.
std::size_t closure_size(const std::vector<MonomialElement>& gens, int r, std::int64_t m) {
    std::set<MonomialElement> seen{MonomialElement::identity(r)};
    std::vector<MonomialElement> queue{MonomialElement::identity(r)};
    while (!queue.empty()) {
        auto x = queue.back();
        queue.pop_back();
        for (const auto& g : gens) {
            auto y = compose(g, x, m);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return seen.size();
}

std::int64_t image_order(const CharacterAnalysis& ca, const TorusCharacter& chi, const std::vector<TorusElement>& H) {
    std::set<Rat> vals;
    for (const auto& t : H) vals.insert(evaluate(ca.grading().I, chi, t));
    return static_cast<std::int64_t>(vals.size());
}

std::size_t find_reflection(const CharacterAnalysis& ca, char kind) {
    const auto& refl = ca.grading().Wa.reflections();
    for (std::size_t h = 0; h < refl.size(); ++h)
        if (refl[h].hyperplane.kind == kind) return h;
    FAIL("no reflection of the requested kind");
    return 0;
}

Rat center_value(const RootDatum& d, const TorusElement& t, const TorusElement& z, Rat value_at_z) {
    // chi on Z(G) cyclic of order |z|, chi(z) = value_at_z; t is a power of z
    for (std::int64_t k = 0; k < element_order(z); ++k)
        if (scale(k, z) == t) return frac(value_at_z * k);
    (void)d;
    FAIL("element not in the cyclic center");
    return Rat(0);
}

// Orbits of value tables chi(t), t in I, under every element of W_a.
std::size_t brute_force_orbit_count(const CharacterAnalysis& ca) {
    const auto& g = ca.grading();
    const auto elems = g.I.elements();
    std::vector<IntMatrix> ws;
    for (const auto& w : g.Wa.elements()) ws.push_back(g.embed(w));
    std::set<std::vector<Rat>> seen;
    std::size_t orbits = 0;
    for (const auto& k : g.I.characters()) {
        std::vector<Rat> table;
        for (const auto& t : elems) table.push_back(g.I.evaluate(k, t));
        if (seen.count(table)) continue;
        ++orbits;
        for (const auto& w : ws) {
            std::vector<Rat> moved;
            for (const auto& t : elems) moved.push_back(g.I.evaluate(k, act(w, t)));
            seen.insert(moved);
        }
    }
    return orbits;
}

} // namespace

TEST_CASE("character counts") {
    CHECK(enumerate_characters(build_grading(parse_case_key("B:n=4:m=2")).I).size() == 16);
    // D-2, l = 2, r = 2: mu4 x mu2
    auto d2 = build_grading(parse_case_key("D:n=5:m=4"));
    CHECK(enumerate_characters(d2.I).size() == 8);
    CHECK(enumerate_characters(build_grading(parse_case_key("A:n=2:m=3")).I).size() == 3);
    auto chars = enumerate_characters(d2.I);
    for (std::size_t i = 1; i < chars.size(); ++i) CHECK(chars[i - 1].exponents < chars[i].exponents);
    CHECK(chars.front().trivial());
}

TEST_CASE("orbit representatives") {
    SUBCASE("type B") {
        for (int n = 2; n <= 8; ++n)
            for (const auto& d : enumerate_stable_gradings(TypeLabel::B, n)) {
                CharacterAnalysis ca(build_grading(d));
                CHECK_MESSAGE(ca.orbits().size() == static_cast<std::size_t>(d.r / 2 + 2), d.key());
            }
    }
    SUBCASE("type D, r odd") {
        for (int n = 4; n <= 8; ++n)
            for (const auto& d : enumerate_stable_gradings(TypeLabel::D, n))
                if (d.family == Family::D1 && d.r % 2 == 1) {
                    CharacterAnalysis ca(build_grading(d));
                    CHECK_MESSAGE(ca.orbits().size() == static_cast<std::size_t>((d.r - 1) / 2 + 2), d.key());
                }
    }
    SUBCASE("orbit counts against brute force") {
        CHECK(brute_force_orbit_count(analyse("C:n=4:m=4")) == 3);
        CHECK(analyse("C:n=4:m=4").orbits().size() == 3);
        CHECK(analyse("C:n=2:m=4").orbits().size() == brute_force_orbit_count(analyse("C:n=2:m=4")));
        for (const auto& d : classical_sweep(5)) {
            CharacterAnalysis ca(build_grading(d));
            if (ca.grading().Wa.order() > 4000) continue;
            CHECK_MESSAGE(ca.orbits().size() == brute_force_orbit_count(ca), d.key());
        }
    }
    SUBCASE("orbits partition the characters and the trivial one is alone") {
        for (const auto& d : classical_sweep(6)) {
            CharacterAnalysis ca(build_grading(d));
            std::size_t total = 0;
            for (const auto& o : ca.orbits()) {
                total += o.members.size();
                CHECK(ca.grading().Wa.order() % static_cast<std::int64_t>(o.members.size()) == 0);
                for (const auto& x : o.members) CHECK(o.rep.exponents <= x.exponents);
            }
            CHECK(total == static_cast<std::size_t>(ca.grading().I.order()));
            CHECK(ca.orbits().front().rep.trivial());
            CHECK(ca.orbits().front().members.size() == 1);
        }
    }
}

TEST_CASE("rank-one polynomials") {
    SUBCASE("SL(N) inner") {
        for (int N = 2; N <= 9; ++N) {
            auto d = RootDatum::build(TypeLabel::A, N - 1);
            auto z = center_generators(TypeLabel::A, N - 1, 1).front().second;
            for (int k = 0; k < N; ++k) {
                Rat v(k, N);
                auto R = coxeter_monodromy(d, [&](const TorusElement& t) { return center_value(d, t, z, v); });
                const std::int64_t ord = frac(v).denominator();
                auto expect = UnitRootPoly::binomial(ord, Rat(0));
                UnitRootPoly P = expect;
                for (std::int64_t j = 1; j < N / ord; ++j) P = P * expect;
                CHECK_MESSAGE(R == P, "N=" << N << " k=" << k);
            }
        }
    }
    SUBCASE("Spin(2n+1)") {
        for (int n = 2; n <= 8; ++n) {
            auto d = RootDatum::build(TypeLabel::B, n);
            auto z = center_generators(TypeLabel::B, n, 1).front().second;
            auto triv = coxeter_monodromy(d, [](const TorusElement&) { return Rat(0); });
            CHECK(triv == sign_poly(n + 1, n - 1));
            auto R = coxeter_monodromy(d, [&](const TorusElement& t) { return center_value(d, t, z, Rat(1, 2)); });
            // (x^2 - 1)^{[n/2]+1} (x^2 + 1)^{[(n-1)/2]}
            UnitRootPoly P = UnitRootPoly::binomial(2, Rat(0));
            for (int i = 1; i < n / 2 + 1; ++i) P = P * UnitRootPoly::binomial(2, Rat(0));
            for (int i = 0; i < (n - 1) / 2; ++i) P = P * UnitRootPoly::binomial(2, Rat(1, 2));
            CHECK_MESSAGE(R == P, "n=" << n);
        }
    }
    SUBCASE("G2") {
        auto d = RootDatum::build(TypeLabel::G2, 2);
        auto R = coxeter_monodromy(d, [](const TorusElement&) { return Rat(0); });
        CHECK(R == UnitRootPoly::binomial(1, Rat(0)) * UnitRootPoly::binomial(2, Rat(0)) *
                       UnitRootPoly::binomial(3, Rat(0)));
    }
    SUBCASE("twisted") {
        for (int n = 1; n <= 4; ++n) {
            auto d = RootDatum::build(TypeLabel::A, 2 * n);
            CHECK(twisted_coxeter_monodromy(d, 2, [](const TorusElement&) { return Rat(0); }) == sign_poly(n + 1, n));
        }
        for (int n = 4; n <= 8; ++n) {
            auto d = RootDatum::build(TypeLabel::D, n);
            CHECK(twisted_coxeter_monodromy(d, 2, [](const TorusElement&) { return Rat(0); }) == sign_poly(n, 0));
        }
        auto d4 = RootDatum::build(TypeLabel::D, 4);
        CHECK(twisted_coxeter_monodromy(d4, 3, [](const TorusElement&) { return Rat(0); }) ==
              sign_poly(2, 0) * UnitRootPoly::binomial(2, Rat(0)));
    }
}

TEST_CASE("rank-one reductions") {
    SUBCASE("type B, tau_i has I_s = <gamma_r>") {
        auto ca = analyse("B:n=6:m=6");  // l = 3, r = 2
        const auto h = find_reflection(ca, 'd');
        const auto& red = ca.reductions()[h];
        CHECK(red.kind.type == TypeLabel::B);
        CHECK(red.kind.rank == 3);
        CHECK(red.kind.components == 1);
        const auto& named = ca.grading().I.named();
        TorusElement gr = named.back().second;
        CHECK(red.Is.size() == 2);
        CHECK(std::find(red.Is.begin(), red.Is.end(), gr) != red.Is.end());
    }
    SUBCASE("type B, s_ij^(k) with k even has I_s generated by a product of gammas") {
        auto ca = analyse("B:n=6:m=4");  // l = 2, r = 3
        const auto& I = ca.grading().I;
        const auto& refl = ca.grading().Wa.reflections();
        for (std::size_t h = 0; h < refl.size(); ++h) {
            const auto& key = refl[h].hyperplane;
            if (key.kind != 't') continue;
            const auto& red = ca.reductions()[h];
            CHECK(red.kind.type == TypeLabel::A);
            CHECK(red.kind.rank == 1);
            if (key.k % 2 == 0) {
                TorusElement prod(I.dim(), Rat(0));
                for (int a = key.i; a < key.j; ++a) prod = add(prod, I.named()[a].second);
                CHECK(red.Is.size() == 2);
                CHECK(std::find(red.Is.begin(), red.Is.end(), prod) != red.Is.end());
            }
        }
    }
    SUBCASE("outer type A, tau_i has trivial I_s") {
        auto ca = analyse("A:n=5:m=6:r=2:twist=2");  // N = 6 = r d, d = 3
        const auto h = find_reflection(ca, 'd');
        const auto& red = ca.reductions()[h];
        CHECK(red.kind.twist == 2);
        CHECK(red.kind.type == TypeLabel::A);
        CHECK(red.kind.rank % 2 == 0);
        CHECK(red.Is.size() == 1);
    }
    SUBCASE("order-2 reflections follow the two-case rule") {
        for (const auto& d : classical_sweep(6)) {
            CharacterAnalysis ca(build_grading(d));
            const auto& refl = ca.grading().Wa.reflections();
            for (const auto& chars : ca.orbits())
                for (std::size_t h = 0; h < refl.size(); ++h) {
                    if (refl[h].order != 2) continue;
                    auto mono = ca.reflection_monodromy(h, chars.rep);
                    bool trivial_on_Is = image_order(ca, chars.rep, ca.reductions()[h].Is) == 1;
                    CHECK(mono.R == (trivial_on_Is ? sign_poly(2, 0) : sign_poly(1, 1)));
                    if (trivial_on_Is) CHECK(mono.e == 1);
                }
        }
    }
}

TEST_CASE("stabilizer data and M_chi") {
    SUBCASE("trivial character gives W0 = W_a") {
        for (const auto& d : classical_sweep(6)) {
            CharacterAnalysis ca(build_grading(d));
            auto st = ca.stabilizer_data(ca.orbits().front().rep);
            CHECK(st.w0.order() == ca.grading().Wa.order());
            for (const auto& m : st.mono) CHECK(m.e == 1);
        }
    }
    SUBCASE("type B, chi_r has e_s = 2 at tau") {
        auto ca = analyse("B:n=6:m=4");  // l = 2, r = 3
        const auto& I = ca.grading().I;
        TorusCharacter chi_r;
        for (const auto& x : enumerate_characters(I))
            if (x.exponents == IntVec{0, 0, 1}) chi_r = x;
        REQUIRE(!chi_r.coords.empty());
        auto h = find_reflection(ca, 'd');
        auto mono = ca.reflection_monodromy(h, chi_r);
        CHECK(mono.e == 2);
        // (x^2 - 1)^{[l/2]+1} (x^2 + 1)^{[(l-1)/2]} with l = 2
        CHECK(mono.R == UnitRootPoly::binomial(2, Rat(0)) * UnitRootPoly::binomial(2, Rat(0)));
        CHECK(mono.Rbar == sign_poly(2, 0));
        auto st = ca.stabilizer_data(chi_r);
        CHECK(st.w0.name() == "G(2,1,3)");
        CHECK(st.quotient_order() == 2);
        CHECK(ca.build_mchi(st).label == "H^{2,0}(G(2,1,3))");
    }
    SUBCASE("two blocks: the block swap is a reflection fixing chi_1") {
        // gamma_1 and gamma_2 = gamma_r are both fixed by s_12^(a), so s_12 lies in the stabilizer
        auto ca = analyse("B:n=4:m=4");
        const auto& refl = ca.grading().Wa.reflections();
        TorusCharacter chi1;
        for (const auto& x : enumerate_characters(ca.grading().I))
            if (x.exponents == IntVec{1, 0}) chi1 = x;
        for (std::size_t h = 0; h < refl.size(); ++h)
            if (refl[h].hyperplane.kind == 't') CHECK(ca.stabilizing_power(h, chi1) == 1);
        auto st = ca.stabilizer_data(chi1);
        CHECK(st.stabilizer_order == ca.grading().Wa.order());
        CHECK(st.w0.order() == st.stabilizer_order);
    }
    SUBCASE("type C, chi_k") {
        auto ca = analyse("C:n=6:m=4");  // l = 2, r = 3
        for (const auto& o : ca.orbits()) {
            auto st = ca.stabilizer_data(o.rep);
            CHECK(st.quotient_order() == 1);
            std::multiset<std::size_t> sizes;
            for (const auto& b : st.w0.blocks) {
                CHECK(b.c == 4);
                CHECK(b.p == 1);
                sizes.insert(b.coords.size());
            }
            auto mchi = ca.build_mchi(st);
            CHECK(mchi.total_rank == ca.grading().Wa.order());
        }
    }
    SUBCASE("M_chi in rank one") {
        auto ca = analyse("C:n=3:m=6");
        auto st = ca.stabilizer_data(ca.orbits().front().rep);
        auto mchi = ca.build_mchi(st);
        CHECK(mchi.total_rank == 6);
        REQUIRE(mchi.hecke.size() == 1);
        CHECK(mchi.hecke[0].relations.size() == 1);
        CHECK(mchi.hecke[0].relations[0].relation.degree() == 6);
    }
}

TEST_CASE("sweep invariants") {
    for (const auto& d : classical_sweep(6)) {
        CAPTURE(d.key());
        CharacterAnalysis ca(build_grading(d));
        const auto& Wa = ca.grading().Wa;
        const auto& refl = Wa.reflections();
        std::map<std::vector<std::string>, int> seen;
        for (const auto& o : ca.orbits()) {
            auto st = ca.stabilizer_data(o.rep);
            for (std::size_t h = 0; h < refl.size(); ++h) {
                CHECK(st.mono[h].R.degree() == refl[h].order);
                CHECK(st.mono[h].R == st.mono[h].Rbar.compose_power(st.mono[h].e));
                CHECK(st.mono[h].e <= image_order(ca, o.rep, ca.reductions()[h].Is));
            }
            auto mchi = ca.build_mchi(st);
            CHECK(mchi.total_rank == Wa.order());
            CHECK(st.stabilizer_order % st.w0.order() == 0);

            if (Wa.order() <= 3000) {
                std::vector<MonomialElement> gens;
                for (std::size_t h = 0; h < refl.size(); ++h)
                    if (st.mono[h].e < refl[h].order) gens.push_back(power(refl[h].element, st.mono[h].e, Wa.m()));
                CHECK(static_cast<std::int64_t>(closure_size(gens, Wa.r(), Wa.m())) == st.w0.order());
            }
            // every member of the orbit gives the same Hecke data
            auto label = canonical_hecke_product(mchi.hecke);
            for (const auto& x : o.members) {
                auto other = ca.build_mchi(ca.stabilizer_data(x));
                CHECK(canonical_hecke_product(other.hecke) == label);
            }
        }
    }
}

TEST_CASE("exceptional rank one") {
    for (auto [t, n] : {std::pair{TypeLabel::G2, 2}, {TypeLabel::F4, 4}, {TypeLabel::E6, 6}, {TypeLabel::E7, 7},
                        {TypeLabel::E8, 8}}) {
        for (const auto& d : enumerate_stable_gradings(t, n)) {
            CAPTURE(d.key());
            CharacterAnalysis ca(build_grading(d));
            for (const auto& o : ca.orbits()) {
                auto st = ca.stabilizer_data(o.rep);
                auto mchi = ca.build_mchi(st);
                CHECK(mchi.total_rank == ca.grading().Wa.order());
            }
        }
    }
    auto ca = analyse("E:n=7:m=18");
    const auto& red = ca.reductions().front();
    CHECK(red.kind.type == TypeLabel::E7);
    auto triv = ca.reflection_monodromy(0, ca.orbits().front().rep).R;
    CHECK(triv == sign_poly(2, 0) * sign_poly(1, 1) * sign_poly(1, 1) * sign_poly(1, 1) *
                      UnitRootPoly::binomial(3, Rat(0)) * UnitRootPoly::binomial(3, Rat(0)) *
                      UnitRootPoly::binomial(4, Rat(0)));
}
