#include "gradecs/endoscopy.hpp"

#include "gradecs/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gradecs {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::unchecked: return "unchecked";
    }
    return "unchecked";
}

DualDatum make_dual(const Grading& g) { return DualDatum{g.datum().dual(), g.theta().transpose()}; }

RatVec char_to_dual_torus(const Grading& g, const TorusCharacter& chi) {
    const std::size_t n = static_cast<std::size_t>(g.datum().rank());
    const Weight phi = g.I.weight_of(chi.coords);
    RatMatrix A = to_rat(g.theta().transpose() - IntMatrix::identity(n));
    auto y = solve(A, to_rat(phi));
    if (!y) throw Error(Errc::InfiniteFixedGroup, g.desc().key() + ": transpose of theta has eigenvalue 1");
    return frac(*y);
}

bool in_subsystem_weyl_group(const RootDatum& datum, const std::vector<std::size_t>& subsystem, const IntMatrix& w) {
    std::set<std::size_t> psi(subsystem.begin(), subsystem.end());
    for (auto a : subsystem)
        if (!psi.count(datum.act_on_root(w, a))) return false;
    const auto simple = subsystem_simple_roots(datum, subsystem, false);

    // walk w back to a map preserving the positive roots of the subsystem
    IntMatrix cur = w;
    for (;;) {
        bool moved = false;
        for (auto b : simple) {
            // some positive root of the subsystem lands on -b
            const auto nb = datum.negative(b);
            bool hit = false;
            for (auto a : subsystem)
                if (a < datum.num_positive() && datum.act_on_root(cur, a) == nb) {
                    hit = true;
                    break;
                }
            if (hit) {
                cur = datum.reflection(b) * cur;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return cur == IntMatrix::identity(cur.rows());
}

namespace {

std::int64_t weyl_order_of(const std::vector<Component>& comps) {
    std::int64_t o = 1;
    for (const auto& c : comps) o *= RootDatum::build(c.type, c.rank).weyl_order();
    return o;
}

bool exceptional(TypeLabel t) { return t > TypeLabel::D; }

// Size of the W-orbit of y in X^*(T) (x) Q/Z, or nullopt past the bound.
std::optional<std::int64_t> weight_orbit_size(const RootDatum& datum, const RatVec& y, std::int64_t bound) {
    std::set<RatVec> seen{y};
    std::deque<RatVec> todo{y};
    const std::size_t n = static_cast<std::size_t>(datum.rank());
    while (!todo.empty()) {
        RatVec v = std::move(todo.front());
        todo.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i].numerator() == 0) continue;
            const auto& f = datum.roots()[i].functional;
            RatVec u(n);
            for (std::size_t k = 0; k < n; ++k) u[k] = frac(v[k] - v[i] * Rat(f[k]));
            if (seen.insert(u).second) {
                if (static_cast<std::int64_t>(seen.size()) > bound) return std::nullopt;
                todo.push_back(std::move(u));
            }
        }
    }
    return static_cast<std::int64_t>(seen.size());
}

std::string describe_components(std::vector<Component> comps) {
    if (comps.empty()) return "1";
    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
        return std::pair(a.type, -a.rank) < std::pair(b.type, -b.rank);
    });
    std::string s;
    for (const auto& c : comps) s += (s.empty() ? "" : " x ") + c.name();
    return s;
}

} // namespace

EndoscopyReport endoscopy_group(const CharacterAnalysis& ca, const StabilizerData& st, std::int64_t orbit_bound) {
    const Grading& g = ca.grading();
    const RootDatum& datum = g.datum();
    const std::size_t n = static_cast<std::size_t>(datum.rank());
    const auto& refl = g.Wa.reflections();

    EndoscopyReport rep;
    rep.chi = st.chi;
    rep.y = char_to_dual_torus(g, st.chi);
    for (std::size_t a = 0; a < datum.roots().size(); ++a) {
        Rat s(0);
        for (std::size_t k = 0; k < n; ++k) s += rep.y[k] * Rat(datum.roots()[a].coroot[k]);
        if (is_integral(s)) rep.dual_roots.push_back(a);
    }
    const auto simple = subsystem_simple_roots(datum, rep.dual_roots, true);
    rep.components = identify_components(subsystem_pairing(datum, simple, true));
    rep.dual_type = describe_components(rep.components);

    if (auto orbit = weight_orbit_size(datum, rep.y, orbit_bound)) {
        const std::int64_t stab = datum.weyl_order() / *orbit;
        rep.component_group_order = stab / weyl_order_of(rep.components);
    } else {
        rep.notes.push_back("component group skipped: W-orbit of the dual element exceeds " +
                            std::to_string(orbit_bound));
    }

    bool exc = exceptional(datum.type());
    for (const auto& c : rep.components) exc = exc || exceptional(c.type);

    for (std::size_t h = 0; h < refl.size(); ++h) {
        const IntMatrix& S = ca.reflection_matrices()[h];
        std::int64_t d = refl[h].order;
        IntMatrix P = S;
        for (std::int64_t k = 1; k < refl[h].order; ++k, P = P * S)
            if (in_subsystem_weyl_group(datum, rep.dual_roots, P)) {
                d = k;
                break;
            }
        rep.d.push_back(d);
        const auto& mono = st.mono[h];
        if (d % mono.e) rep.divisibility = false;

        rep.mono2.push_back(mono.R.max_extractable_power() == d ? CheckStatus::pass : CheckStatus::fail);

        CheckStatus mm = CheckStatus::fail;
        std::string why;
        if (auto Rbb = mono.R.substitute_power(d)) {
            std::vector<std::size_t> sub;
            for (auto a : ca.reductions()[h].roots)
                if (std::binary_search(rep.dual_roots.begin(), rep.dual_roots.end(), a)) sub.push_back(a);
            try {
                auto kind = classify_rank_one(datum, g.theta_on_roots, sub, true);
                auto expected = rank_one_polynomial(kind.marks, std::vector<Rat>(kind.marks.size(), Rat(0)));
                if (expected == *Rbb) mm = CheckStatus::pass;
                else why = "expected " + expected.factored() + ", got " + Rbb->factored();
                exc = exc || exceptional(kind.type);
            } catch (const Error& e) {
                if (e.code() != Errc::UnclassifiedRankOne) throw;
                mm = CheckStatus::unchecked;
                why = e.what();
            }
        } else {
            why = "R is not a polynomial in x^" + std::to_string(d);
        }
        if (exc && mm != CheckStatus::unchecked) {
            why = "exceptional; computed " + to_string(mm) + (why.empty() ? "" : " (" + why + ")");
            mm = CheckStatus::unchecked;
        }
        if (!why.empty()) rep.notes.push_back("reflection " + std::to_string(h) + ": " + why);
        rep.min_mono.push_back(mm);
        if (exc && rep.mono2.back() == CheckStatus::fail) rep.mono2.back() = CheckStatus::unchecked;
    }
    rep.wen = reflection_subgroup(g.Wa, rep.d);
    return rep;
}

} // namespace gradecs
