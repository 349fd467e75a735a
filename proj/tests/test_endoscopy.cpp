#include "gradecs/endoscopy.hpp"
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

// Whole Weyl group as matrices, by closure under simple reflections.
std::set<IntMatrix> weyl_elements(const RootDatum& d) {
    std::vector<IntMatrix> gens;
    for (int i = 0; i < d.rank(); ++i) gens.push_back(d.simple_reflection(i));
    return [&] {
        std::set<IntMatrix> seen{IntMatrix::identity(d.rank())};
        std::vector<IntMatrix> todo{IntMatrix::identity(d.rank())};
        while (!todo.empty()) {
            auto x = todo.back();
            todo.pop_back();
            for (const auto& s : gens) {
                auto y = s * x;
                if (seen.insert(y).second) todo.push_back(y);
            }
        }
        return seen;
    }();
}

// Group generated by the reflections in a root subsystem.
std::set<IntMatrix> reflection_closure(const RootDatum& d, const std::vector<std::size_t>& roots) {
    std::set<IntMatrix> seen{IntMatrix::identity(d.rank())};
    std::vector<IntMatrix> todo{IntMatrix::identity(d.rank())};
    while (!todo.empty()) {
        auto x = todo.back();
        todo.pop_back();
        for (auto a : roots) {
            auto y = d.reflection(a) * x;
            if (seen.insert(y).second) todo.push_back(y);
        }
    }
    return seen;
}

// w acts on X^*(T) (x) Q/Z through the inverse transpose.
bool fixes_dual(const IntMatrix& w, const RatVec& y) {
    auto inv = inverse(to_rat(w));
    RatVec wy = inv->transpose() * y;
    return frac(wy) == frac(y);
}

std::string sorted_components(std::vector<Component> comps) {
    std::vector<std::string> names;
    for (const auto& c : comps) {
        TypeLabel t = c.type;
        if (t == TypeLabel::C && c.rank == 2) t = TypeLabel::B;
        if (t == TypeLabel::D && c.rank == 3) t = TypeLabel::A;
        names.push_back(type_name(t, c.rank));
    }
    std::sort(names.begin(), names.end());
    std::string s;
    for (const auto& n : names) s += n + ";";
    return s;
}

} // namespace

TEST_CASE("dual datum and the dual torus element") {
    for (auto [t, n] : {std::pair{TypeLabel::B, 3}, {TypeLabel::C, 4}, {TypeLabel::G2, 2}, {TypeLabel::F4, 4}}) {
        auto d = RootDatum::build(t, n);
        CHECK(d.dual().dual().pairing() == d.pairing());
    }
    auto ca = analyse("C:n=4:m=4");
    const auto& g = ca.grading();
    auto dd = make_dual(g);
    CHECK(dd.theta == g.theta().transpose());
    for (const auto& chi : enumerate_characters(g.I)) {
        auto y = char_to_dual_torus(g, chi);
        // fixed by the adjoint of theta
        CHECK(frac(to_rat(dd.theta) * y) == y);
        // linking pairing with I recovers chi
        for (const auto& t : g.I.generators()) {
            RatVec lift = t;
            auto mt = to_rat(g.theta() - IntMatrix::identity(g.datum().rank())) * lift;
            Rat s(0);
            for (std::size_t k = 0; k < y.size(); ++k) s += y[k] * mt[k];
            CHECK(frac(s) == evaluate(g.I, chi, t));
        }
        if (chi.trivial()) CHECK(std::all_of(y.begin(), y.end(), [](Rat q) { return q.numerator() == 0; }));
    }
}

TEST_CASE("subsystem Weyl group membership against reflection closure") {
    for (const char* key : {"C:n=3:m=2", "B:n=3:m=6", "A:n=3:m=4", "D:n=4:m=6", "C:n=4:m=4"}) {
        auto ca = analyse(key);
        const auto& d = ca.grading().datum();
        const auto W = weyl_elements(d);
        for (const auto& o : ca.orbits()) {
            auto y = char_to_dual_torus(ca.grading(), o.rep);
            std::vector<std::size_t> psi;
            for (std::size_t a = 0; a < d.roots().size(); ++a) {
                Rat s(0);
                for (int k = 0; k < d.rank(); ++k) s += y[k] * Rat(d.roots()[a].coroot[k]);
                if (is_integral(s)) psi.push_back(a);
            }
            const auto sub = reflection_closure(d, psi);
            for (const auto& w : W) CHECK(in_subsystem_weyl_group(d, psi, w) == (sub.count(w) > 0));
        }
    }
}

TEST_CASE("trivial character: full dual group, W^en = W_a") {
    for (const char* key : {"B:n=4:m=4", "D:n=5:m=8", "A:n=3:m=4", "E:n=6:m=12"}) {
        auto ca = analyse(key);
        auto st = ca.stabilizer_data(ca.orbits().front().rep);
        REQUIRE(st.chi.trivial());
        auto rep = endoscopy_group(ca, st);
        CHECK(rep.dual_roots.size() == ca.grading().datum().roots().size());
        CHECK(rep.component_group_order == std::optional<std::int64_t>(1));
        CHECK(std::all_of(rep.d.begin(), rep.d.end(), [](auto v) { return v == 1; }));
        CHECK(rep.wen.order() == ca.grading().Wa.order());
        for (std::size_t h = 0; h < rep.d.size(); ++h) {
            if (ca.grading().datum().classical()) {
                CHECK(rep.mono2[h] == CheckStatus::pass);
                CHECK(rep.min_mono[h] == CheckStatus::pass);
            } else {
                CHECK(rep.min_mono[h] != CheckStatus::fail);
            }
        }
    }
}

TEST_CASE("Spin(10) Coxeter: order-4 characters have d_s = 4") {
    auto ca = analyse("D:n=5:m=8");
    int seen = 0;
    for (const auto& chi : enumerate_characters(ca.grading().I)) {
        std::set<Rat> vals;
        for (const auto& t : ca.grading().I.elements()) vals.insert(evaluate(ca.grading().I, chi, t));
        if (vals.size() != 4) continue;
        ++seen;
        auto rep = endoscopy_group(ca, ca.stabilizer_data(chi));
        REQUIRE(rep.d.size() == 1);
        CHECK(rep.d[0] == 4);
        CHECK(rep.wen.order() == 2);  // <s^4> in mu_8
        CHECK(rep.mono2[0] == CheckStatus::pass);
        CHECK(rep.min_mono[0] == CheckStatus::pass);
    }
    CHECK(seen == 2);
}

TEST_CASE("Sp(2rl): dual centralizer SO(2kl) x SO(2(r-k)l+1) with two components") {
    auto ca = analyse("C:n=6:m=4");  // l = 2, r = 3
    std::set<int> ks;
    for (const auto& o : ca.orbits()) {
        if (o.rep.trivial()) continue;
        auto st = ca.stabilizer_data(o.rep);
        auto rep = endoscopy_group(ca, st);
        int found = -1;
        for (int k = 1; k <= 3; ++k) {
            std::vector<Component> expect;
            if (2 * k == 2) expect = {{TypeLabel::A, 1, {}}, {TypeLabel::A, 1, {}}};
            else expect = {{TypeLabel::D, 2 * k, {}}};
            if (k < 3) expect.push_back({TypeLabel::B, 2 * (3 - k), {}});
            if (sorted_components(expect) == sorted_components(rep.components)) found = k;
        }
        CHECK(found > 0);
        ks.insert(found);
        CHECK(rep.component_group_order == std::optional<std::int64_t>(2));
        CHECK(st.stabilizer_order / rep.wen.order() == 2);
    }
    CHECK(ks == std::set<int>{1, 2, 3});
}

TEST_CASE("type B chi_r with l odd: tau reflections have d_s = 2") {
    for (const char* key : {"B:n=3:m=6", "B:n=9:m=6"}) {
        auto ca = analyse(key);
        const auto& g = ca.grading();
        // chi_r: value -1 on the last named generator only
        IntVec ex(g.I.named().size(), 0);
        ex.back() = 1;
        std::optional<TorusCharacter> chi;
        for (const auto& c : enumerate_characters(g.I))
            if (c.exponents == ex) chi = c;
        REQUIRE(chi);
        auto st = ca.stabilizer_data(*chi);
        auto rep = endoscopy_group(ca, st);
        const auto& refl = g.Wa.reflections();
        for (std::size_t h = 0; h < refl.size(); ++h) {
            if (refl[h].hyperplane.kind != 'd') continue;
            CHECK(rep.d[h] == 2);
            CHECK(st.mono[h].R.substitute_power(2));
            CHECK(rep.mono2[h] == CheckStatus::pass);
            CHECK(rep.min_mono[h] == CheckStatus::pass);
        }
    }
}

TEST_CASE("oracles: d_s, component group and stabilizer through the dual element") {
    for (const char* key : {"C:n=4:m=4", "B:n=4:m=4", "D:n=4:m=6", "A:n=3:m=4", "C:n=3:m=6", "B:n=3:m=2",
                            "D:n=4:m=8:r=1:twist=2"}) {
        auto ca = analyse(key);
        const auto& g = ca.grading();
        const auto& d = g.datum();
        const auto W = weyl_elements(d);
        std::vector<IntMatrix> wa;
        for (const auto& w : g.Wa.elements()) wa.push_back(g.embed(w));
        for (const auto& o : ca.orbits()) {
            auto st = ca.stabilizer_data(o.rep);
            auto rep = endoscopy_group(ca, st);
            const auto sub = reflection_closure(d, rep.dual_roots);

            std::int64_t wy = 0;
            for (const auto& w : W) wy += fixes_dual(w, rep.y);
            REQUIRE(rep.component_group_order);
            CHECK(*rep.component_group_order * static_cast<std::int64_t>(sub.size()) == wy);

            std::int64_t stab = 0;
            for (const auto& w : wa) stab += fixes_dual(w, rep.y);
            CHECK(stab == st.stabilizer_order);

            for (std::size_t h = 0; h < rep.d.size(); ++h) {
                const auto& S = ca.reflection_matrices()[h];
                IntMatrix P = S;
                std::int64_t k = 1;
                while (!sub.count(P)) P = P * S, ++k;
                CHECK(rep.d[h] == k);
            }
        }
    }
}

TEST_CASE("sweep: e_s | d_s, W^en in W0, and both expectations") {
    std::map<std::string, int> failures;
    for (const auto& desc : classical_sweep(6)) {
        if (desc.type == TypeLabel::A && desc.n > 5) continue;
        CharacterAnalysis ca(build_grading(desc));
        for (const auto& o : ca.orbits()) {
            auto st = ca.stabilizer_data(o.rep);
            auto rep = endoscopy_group(ca, st);
            CHECK_MESSAGE(rep.divisibility, desc.key());
            CHECK(st.w0.order() % rep.wen.order() == 0);
            for (std::size_t h = 0; h < rep.d.size(); ++h) {
                if (rep.mono2[h] != CheckStatus::pass) ++failures[desc.key() + " mono2"];
                if (rep.min_mono[h] != CheckStatus::pass) ++failures[desc.key() + " min_mono"];
            }
        }
    }
    for (const auto& [k, v] : failures) MESSAGE(k << ": " << v);
    CHECK(failures.empty());
}
