#include "gradecs/verify.hpp"

#include "gradecs/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace gradecs {

namespace {

const Rat kHalf(1, 2);

std::string str(std::int64_t v) { return std::to_string(v); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

// ---- group and Hecke factor descriptions -------------------------------------------------

struct Block {
    std::int64_t c = 1, p = 1;
    int b = 0;
};

Block normalized(Block x) {
    if (x.b == 1) x.c /= x.p, x.p = 1;
    return x;
}

std::int64_t order(Block x) {
    std::int64_t o = 1;
    for (int i = 1; i <= x.b; ++i) o *= x.c * i;
    return x.b ? o / x.p : 1;
}

std::string name(Block x) {
    x = normalized(x);
    return "G(" + str(x.c) + "," + str(x.p) + "," + str(x.b) + ")";
}

std::string decomposition(const std::vector<Block>& blocks) {
    std::vector<std::string> names;
    for (const auto& x : blocks)
        if (order(x) > 1) names.push_back(name(x));
    std::sort(names.begin(), names.end());
    return names.empty() ? "1" : join(names, " x ");
}

std::string decomposition(const ReflectionSubgroup& sub) {
    std::vector<Block> blocks;
    for (const auto& blk : sub.blocks) blocks.push_back({blk.c, blk.p, static_cast<int>(blk.coords.size())});
    return decomposition(blocks);
}

// H^{a,b}(G(c,1,k)) when p = 1, H^{c/2}(G(c,2,k)) when p = 2.
struct HeckeFactor {
    Block g;
    int a = 0, b = 0;
};

std::string signature(Block g, std::set<std::string> rels) {
    if (order(g) == 1) return "";
    return name(g) + "[" + join({rels.begin(), rels.end()}, "|") + "]";
}

std::string hecke_signature(const std::vector<HeckeFactor>& factors) {
    std::vector<std::string> out;
    for (const auto& f : factors) {
        std::set<std::string> rels;
        if (f.g.b >= 2) rels.insert("t:" + sign_poly(2, 0).factored());
        if (f.g.p == 1 && f.g.c > 1) rels.insert("d:" + sign_poly(f.a, f.b).factored());
        if (f.g.p == 2 && f.g.c > 2) rels.insert("d:" + sign_poly(static_cast<int>(f.g.c / 2), 0).factored());
        if (auto s = signature(f.g, rels); !s.empty()) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out.empty() ? "C" : join(out, " (x) ");
}

std::string hecke_signature(const std::vector<HeckePresentation>& factors) {
    std::vector<std::string> out;
    for (const auto& h : factors) {
        std::set<std::string> rels;
        for (const auto& rel : h.relations)
            rels.insert(std::string(rel.orbit.rfind("diagonal", 0) == 0 ? "d:" : "t:") + rel.relation.factored());
        if (auto s = signature({h.m, h.p, h.r}, rels); !s.empty()) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out.empty() ? "C" : join(out, " (x) ");
}

// ---- closed-form lemma data for the classical families ----------------------------------

struct LemmaRow {
    std::string name;
    std::vector<Rat> values;  // on the named generators
    std::vector<Block> w0;
    std::vector<HeckeFactor> hecke;
    std::vector<Block> wen;
    std::int64_t stab_over_w0 = 1, w0_over_wen = 1, pi0 = 1;
};

struct LemmaSpec {
    std::string id;
    IntVec factors;
    IntVec orders;
    std::vector<LemmaRow> rows;
};

std::vector<Rat> one_hot(std::size_t size, int k) {
    std::vector<Rat> v(size, Rat(0));
    if (k >= 1) v[k - 1] = kHalf;
    return v;
}

std::vector<Rat> leading(std::size_t size, int k) {
    std::vector<Rat> v(size, Rat(0));
    for (int i = 0; i < k; ++i) v[i] = kHalf;
    return v;
}

std::optional<LemmaSpec> lemma_spec(const GradingDescriptor& desc) {
    const int r = desc.r;
    const std::int64_t m = desc.m;
    LemmaSpec s;
    auto chi = [](int k) { return "chi_" + std::to_string(k); };
    switch (desc.family) {
    case Family::AOuterN: {
        const int d = desc.block(), l = (d - 1) / 2;
        s.id = "lemma-A1";
        s.factors = IntVec(r - 1, 2);
        s.orders = IntVec(r - 1, 2);
        for (int k = 0; 2 * k <= r; ++k) {
            LemmaRow row{chi(k), one_hot(r - 1, k), {{d, 1, k}, {d, 1, r - k}}, {}, {}, 1, 1, 1};
            row.hecke = {{{d, 1, k}, l + 1, l}, {{d, 1, r - k}, l + 1, l}};
            row.wen = row.w0;
            if (k >= 1 && 2 * k == r) row.stab_over_w0 = 2, row.pi0 = 2;
            s.rows.push_back(row);
        }
        return s;
    }
    case Family::AOuterN1: {
        const int d = desc.block(), l = (d - 1) / 2;
        s.id = "lemma-A2";
        s.factors = IntVec(r, 2);
        s.orders = IntVec(r, 2);
        for (int k = 0; k <= r; ++k) {
            LemmaRow row{chi(k), leading(r, k), {{d, 1, k}, {d, 1, r - k}}, {}, {}, 1, 1, 1};
            row.hecke = {{{d, 1, r - k}, l + 2, l - 1}, {{d, 1, k}, l + 1, l}};
            row.wen = row.w0;
            s.rows.push_back(row);
        }
        return s;
    }
    case Family::B: {
        const int l = desc.block();
        s.id = "lemma-B";
        s.factors = IntVec(r, 2);
        s.orders = IntVec(r, 2);
        for (int k = 0; 2 * k <= r; ++k) {
            LemmaRow row{chi(k), one_hot(r, k), {{m, 1, k}, {m, 1, r - k}}, {}, {}, 1, 1, 1};
            row.hecke = {{{m, 1, k}, l + 1, l - 1}, {{m, 1, r - k}, l + 1, l - 1}};
            row.wen = row.w0;
            if (k >= 1 && 2 * k == r) row.stab_over_w0 = 2, row.pi0 = 2;
            s.rows.push_back(row);
        }
        LemmaRow row{chi(r), one_hot(r, r), {{l, 1, r}}, {{{l, 1, r}, l / 2 + 1, (l - 1) / 2}}, {{l, 1, r}}, 2, 1, 2};
        s.rows.push_back(row);
        return s;
    }
    case Family::C: {
        const int l = desc.block();
        s.id = "lemma-C";
        s.factors = IntVec(r, 2);
        s.orders = IntVec(r, 2);
        for (int k = 0; k <= r; ++k) {
            LemmaRow row{chi(k), l % 2 == 0 ? leading(r, k) : one_hot(r, k), {{m, 1, k}, {m, 1, r - k}}, {}, {},
                         1, 1, 1};
            row.hecke = {{{m, 1, k}, l, l}, {{m, 1, r - k}, l + 1, l - 1}};
            row.wen = {{m, 2, k}, {m, 1, r - k}};
            if (k >= 1) row.w0_over_wen = 2, row.pi0 = 2;
            s.rows.push_back(row);
        }
        return s;
    }
    case Family::D1: {
        const int l = desc.block();
        s.id = "lemma-D1";
        s.factors = IntVec(r, 2);
        s.orders = IntVec(r, 2);
        for (int k = 0; 2 * k <= r; ++k) {
            LemmaRow row{chi(k), one_hot(r, k), {{m, 2, k}, {m, 2, r - k}}, {}, {}, 1, 1, 1};
            row.hecke = {{{m, 2, k}, 0, 0}, {{m, 2, r - k}, 0, 0}};
            row.wen = row.w0;
            if (k >= 1) {
                const bool middle = 2 * k == r;
                row.stab_over_w0 = middle ? 4 : 2;
                row.pi0 = middle ? 4 : 2;
            }
            s.rows.push_back(row);
        }
        auto tail = [&](int k, std::vector<Rat> values) {
            LemmaRow row{chi(k), std::move(values), {{l, 1, r}}, {{{l, 1, r}, (l + 1) / 2, l / 2}}, {}, 1, 1, 1};
            row.wen = {{l, l % 2 ? 1 : 2, r}};
            row.w0_over_wen = l % 2 ? 1 : 2;
            row.stab_over_w0 = r % 2 ? 1 : 2;
            row.pi0 = l % 2 == 0 ? 4 : (r % 2 ? 1 : 2);
            s.rows.push_back(row);
        };
        tail(r, one_hot(r, r));
        if (r % 2 == 0) {
            auto v = one_hot(r, r);
            v[r - 2] = kHalf;
            tail(r + 1, v);
        }
        return s;
    }
    case Family::D2: {
        const int l = desc.block();
        s.id = "lemma-D2";
        const int gens = l % 2 ? r + 1 : r;
        if (l % 2 == 0) {
            s.factors = IntVec(r - 1, 2);
            s.factors.push_back(4);
            s.orders = IntVec(r, 2);
            s.orders.back() = 4;
        } else {
            s.factors = IntVec(r + 1, 2);
            s.orders = IntVec(r + 1, 2);
        }
        for (int k = 0; k <= r; ++k) {
            LemmaRow row{chi(k), one_hot(gens, k), {{m, 1, k}, {m, 1, r - k}}, {}, {}, 1, 1, 1};
            row.hecke = {{{m, 1, k}, l, l}, {{m, 1, r - k}, l + 2, l - 2}};
            row.wen = {{m, 2, k}, {m, 1, r - k}};
            if (k >= 1) row.w0_over_wen = 2, row.pi0 = 2;
            s.rows.push_back(row);
        }
        for (int k = r + 1; k <= (r % 2 ? r + 2 : r + 1); ++k) {
            std::vector<Rat> v(gens, Rat(0));
            if (l % 2 == 0) {
                v[r - 1] = k == r + 1 ? Rat(1, 4) : Rat(3, 4);
            } else {
                v[r] = kHalf;
                if (k == r + 2) v[r - 1] = kHalf;
            }
            LemmaRow row{chi(k), v, {{l, 1, r}}, {}, {}, 1, 1, 1};
            if (l % 2 == 0) row.hecke = {{{l, 1, r}, l / 2, l / 2}};
            else row.hecke = {{{l, 1, r}, (l + 3) / 2, (l - 3) / 2}};
            row.wen = {{l, l % 2 ? 1 : 2, r}};
            row.w0_over_wen = l % 2 ? 1 : 2;
            row.stab_over_w0 = r % 2 ? 2 : 1;
            row.pi0 = l % 2 == 0 ? 4 : (r % 2 ? 2 : 1);
            s.rows.push_back(row);
        }
        return s;
    }
    default: return std::nullopt;
    }
}

// ---- record collection -------------------------------------------------------------------

bool boundary(const std::string& prefix, const std::string& claim) {
    if (claim.rfind(prefix, 0) != 0) return false;
    if (claim.size() == prefix.size()) return true;
    const char c = claim[prefix.size()];
    return c == '.' || c == '-' || prefix.back() == '.' || prefix.back() == '-';
}

// Whether some claim under `group` can be selected by `prefix`.
bool overlaps(const std::string& prefix, const std::string& group) {
    return prefix.empty() || boundary(prefix, group) || boundary(group, prefix);
}

class Emitter {
public:
    Emitter(std::string key, const std::string& prefix) : key_(std::move(key)), prefix_(prefix) {}

    void add(const std::string& claim, const std::string& subject, CheckStatus st, std::string expected,
             std::string actual) {
        if (!claim_selected(prefix_, claim)) return;
        out_.push_back({key_, claim, subject, st, std::move(expected), std::move(actual)});
    }
    void compare(const std::string& claim, const std::string& subject, const std::string& expected,
                 const std::string& actual) {
        add(claim, subject, expected == actual ? CheckStatus::pass : CheckStatus::fail, expected, actual);
    }
    bool wants(const std::string& group) const { return overlaps(prefix_, group); }
    std::vector<VerificationRecord> take() { return std::move(out_); }

private:
    std::string key_;
    const std::string& prefix_;
    std::vector<VerificationRecord> out_;
};

// ---- per-case checks -----------------------------------------------------------------

void check_tau(const Grading& g, Emitter& em) {
    const auto m = static_cast<std::size_t>(g.m());
    for (const auto& orbit : g.root_orbits)
        if (orbit.size() != m) {
            em.add("tau-det", "", CheckStatus::fail, "free root orbits of size " + str(g.m()),
                   "orbit of size " + str(static_cast<std::int64_t>(orbit.size())));
            return;
        }
    const auto gens = g.I.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Rat s(0);
        for (const auto& orbit : g.root_orbits) s += pair(g.datum().roots()[orbit.front()].functional, gens[i]);
        if (frac(s).numerator() != 0) {
            em.add("tau-det", "", CheckStatus::fail, "det = 1 on every generator of I",
                   "det = exp(2 pi i " + to_string(frac(s)) + ") on generator " + str(static_cast<std::int64_t>(i)));
            return;
        }
    }
    em.add("tau-det", "", CheckStatus::pass, "det = 1 on every generator of I",
           "det = 1 on " + str(static_cast<std::int64_t>(gens.size())) + " generators");
}

void check_weyl(const Grading& g, std::int64_t bound, Emitter& em) {
    const std::string expected = "W^theta = W_a, |W_a| = " + str(g.Wa.order());
    if (g.datum().weyl_order() > bound) {
        em.add("weyl-oracle", "", CheckStatus::unchecked, expected,
               "|W| = " + str(g.datum().weyl_order()) + " exceeds the oracle bound " + str(bound));
        return;
    }
    try {
        check_little_weyl_group(g, bound);
        em.add("weyl-oracle", "", CheckStatus::pass, expected, expected);
    } catch (const Error& e) {
        em.add("weyl-oracle", "", CheckStatus::fail, expected, e.what());
    }
}

std::string int_list(const IntVec& v) {
    std::vector<std::string> parts;
    for (auto x : v) parts.push_back(str(x));
    return "[" + join(parts, ",") + "]";
}

std::optional<TorusCharacter> character_with_values(const FiniteAbelianGroup& I, const std::vector<Rat>& values) {
    for (const auto& c : enumerate_characters(I))
        if (c.values == values) return c;
    return std::nullopt;
}

void check_lemma(const CharacterAnalysis& ca, const LemmaSpec& spec, Emitter& em) {
    const auto& g = ca.grading();
    const auto& named = g.I.named();
    if (em.wants(spec.id + ".i")) {
        IntVec orders;
        std::vector<TorusElement> elems;
        bool inside = true;
        for (const auto& [nm, t] : named) {
            orders.push_back(element_order(t));
            elems.push_back(t);
            inside = inside && g.I.contains(t);
        }
        // no named generators: the trivial group
        const auto gen = elems.empty() ? std::int64_t{1} : static_cast<std::int64_t>(generated_subgroup(elems).size());
        const std::string expected = "generated = I, factors " + int_list(spec.factors) + ", orders " +
                                     int_list(spec.orders);
        std::string actual = std::string(inside && gen == g.I.order() ? "generated = I" : "generated != I") +
                             ", factors " + int_list(g.I.invariant_factors()) + ", orders " + int_list(orders);
        if (!inside) actual += " (a generator lies outside I)";
        em.compare(spec.id + ".i", "", expected, actual);
    }

    if (em.wants(spec.id + ".ii")) {
        std::set<std::size_t> seen;
        bool ok = true;
        std::string problem;
        for (const auto& row : spec.rows) {
            auto chi = row.values.size() == named.size() ? character_with_values(g.I, row.values) : std::nullopt;
            if (!chi) {
                ok = false;
                problem = row.name + " is not a character of I";
                break;
            }
            for (std::size_t o = 0; o < ca.orbits().size(); ++o) {
                const auto& mem = ca.orbits()[o].members;
                if (std::find(mem.begin(), mem.end(), *chi) == mem.end()) continue;
                if (!seen.insert(o).second) {
                    ok = false;
                    problem = row.name + " shares an orbit";
                }
            }
        }
        const std::string expected = str(static_cast<std::int64_t>(spec.rows.size())) + " representatives, one per orbit";
        std::string actual = str(static_cast<std::int64_t>(ca.orbits().size())) + " orbits";
        if (!ok) actual += "; " + problem;
        else if (seen.size() == spec.rows.size() && seen.size() == ca.orbits().size()) actual = expected;
        em.compare(spec.id + ".ii", "", expected, actual);
    }

    if (!em.wants(spec.id + ".iii")) return;
    for (const auto& row : spec.rows) {
        auto chi = row.values.size() == named.size() ? character_with_values(g.I, row.values) : std::nullopt;
        if (!chi) {
            em.add(spec.id + ".iii", row.name, CheckStatus::fail, "a character of I", "no such character");
            continue;
        }
        const auto st = ca.stabilizer_data(*chi);
        const auto md = ca.build_mchi(st);
        const auto rep = endoscopy_group(ca, st);
        const std::string id = spec.id + ".iii.";
        em.compare(id + "w0", row.name, decomposition(row.w0), decomposition(st.w0));
        em.compare(id + "hecke", row.name, hecke_signature(row.hecke), hecke_signature(md.hecke));
        em.compare(id + "wen", row.name, decomposition(row.wen), decomposition(rep.wen));
        em.compare(id + "stabilizer", row.name, "|W_chi/W0| = " + str(row.stab_over_w0),
                   "|W_chi/W0| = " + str(st.quotient_order()));
        em.compare(id + "w0-over-wen", row.name, "|W0/Wen| = " + str(row.w0_over_wen),
                   "|W0/Wen| = " + str(st.w0.order() / rep.wen.order()));
        const std::string expected = "|pi0| = " + str(row.pi0);
        if (rep.component_group_order)
            em.compare(id + "component-group", row.name, expected, "|pi0| = " + str(*rep.component_group_order));
        else
            em.add(id + "component-group", row.name, CheckStatus::unchecked, expected, join(rep.notes, "; "));
    }
}

struct Tally {
    std::size_t pass = 0, fail = 0, unchecked = 0;
    std::string first_failure;
    void add(CheckStatus s, const std::string& where) {
        if (s == CheckStatus::pass) ++pass;
        else if (s == CheckStatus::unchecked) ++unchecked;
        else {
            if (!fail) first_failure = where;
            ++fail;
        }
    }
    CheckStatus status() const {
        if (fail) return CheckStatus::fail;
        return unchecked ? CheckStatus::unchecked : CheckStatus::pass;
    }
    std::string text() const {
        std::string s = str(static_cast<std::int64_t>(pass)) + " pass, " + str(static_cast<std::int64_t>(fail)) +
                        " fail, " + str(static_cast<std::int64_t>(unchecked)) + " unchecked";
        return fail ? s + "; first failure: " + first_failure : s;
    }
};

void check_characters(const CharacterAnalysis& ca, Emitter& em) {
    const auto& g = ca.grading();
    const auto& refl = g.Wa.reflections();
    std::map<std::string, Tally> t;
    for (const auto& o : ca.orbits()) {
        const auto st = ca.stabilizer_data(o.rep);
        const std::string who = describe(g.I, o.rep);
        for (std::size_t h = 0; h < refl.size(); ++h) {
            const auto& mono = st.mono[h];
            const std::string at = who + ", reflection " + str(static_cast<std::int64_t>(h));
            t["invariants.degree"].add(mono.R.degree() == refl[h].order ? CheckStatus::pass : CheckStatus::fail, at);
            auto sub = mono.R.substitute_power(mono.e);
            t["invariants.mono1"].add(sub && *sub == mono.Rbar && mono.Rbar.compose_power(mono.e) == mono.R
                                          ? CheckStatus::pass
                                          : CheckStatus::fail,
                                      at);
        }

        const auto md = ca.build_mchi(st);
        std::int64_t hecke_order = 1;
        for (const auto& hp : md.hecke) hecke_order *= order(Block{hp.m, hp.p, hp.r});
        t["invariants.total-rank"].add(md.induction_index * hecke_order == g.Wa.order() ? CheckStatus::pass
                                                                                          : CheckStatus::fail,
                                       who);

        const auto rep = endoscopy_group(ca, st);
        bool contained = st.stabilizer_order % st.w0.order() == 0 && st.w0.order() % rep.wen.order() == 0;
        for (std::size_t h = 0; h < refl.size() && contained; ++h) {
            IntMatrix P = IntMatrix::identity(g.datum().rank());
            for (std::int64_t k = 0; k < st.mono[h].e; ++k) P = P * ca.reflection_matrices()[h];
            contained = pull_back(g.I, o.rep, P) == o.rep;
        }
        t["invariants.containment"].add(contained ? CheckStatus::pass : CheckStatus::fail, who);
        t["invariants.divisibility"].add(rep.divisibility ? CheckStatus::pass : CheckStatus::fail, who);
        for (std::size_t h = 0; h < refl.size(); ++h) {
            const std::string at = who + ", reflection " + str(static_cast<std::int64_t>(h));
            t["expectations.mono2"].add(rep.mono2[h], at + " (d_s = " + str(rep.d[h]) + ", R = " +
                                                          st.mono[h].R.factored() + ")");
            t["expectations.min-mono"].add(rep.min_mono[h], at);
        }
    }
    const std::map<std::string, std::string> expected = {
        {"invariants.degree", "deg R = order(s) for every reflection"},
        {"invariants.mono1", "R(x) = Rbar(x^e) for every reflection"},
        {"invariants.total-rank", "induction index x Hecke rank = |W_a|"},
        {"invariants.containment", "Wen in W0 in W_chi"},
        {"invariants.divisibility", "e_s | d_s"},
        {"expectations.mono2", "d_s = largest extractable power"},
        {"expectations.min-mono", "dual trivial-character polynomial = R at x^(1/d_s)"},
    };
    for (const auto& [claim, what] : expected) {
        const auto& tl = t[claim];
        em.add(claim, "", tl.status(), what, tl.text());
    }
}

std::vector<VerificationRecord> verify_case(const GradingDescriptor& desc, const VerifyOptions& opt) {
    Emitter em(desc.key(), opt.claim_prefix);
    const auto spec = lemma_spec(desc);
    const bool lemma = spec && em.wants(spec->id);
    const bool chars = em.wants("invariants") || em.wants("expectations");
    if (!(lemma || chars || em.wants("tau-det") || em.wants("weyl-oracle"))) return {};

    CharacterAnalysis ca(build_grading(desc));
    if (em.wants("tau-det")) check_tau(ca.grading(), em);
    if (em.wants("weyl-oracle")) check_weyl(ca.grading(), opt.weyl_oracle_bound, em);
    if (lemma) check_lemma(ca, *spec, em);
    if (chars) check_characters(ca, em);
    return em.take();
}

// ---- Table 1 ---------------------------------------------------------------------------

std::string table_row(std::int64_t m, int twist, int r, std::int64_t wm, std::int64_t wp) {
    return "m=" + str(m) + " twist=" + str(twist) + " r=" + str(r) + " W=G(" + str(wm) + "," + str(wp) + "," +
           str(r) + ")";
}

std::vector<std::string> table_rows(TypeLabel t, int n) {
    std::vector<std::string> rows;
    switch (t) {
    case TypeLabel::A:
        rows.push_back(table_row(n + 1, 1, 1, n + 1, 1));
        if (n >= 2) {
            for (int d = 1; d <= n + 1; d += 2)
                if ((n + 1) % d == 0) rows.push_back(table_row(2 * d, 2, (n + 1) / d, d, 1));
            for (int d = 3; d <= n; d += 2)
                if (n % d == 0) rows.push_back(table_row(2 * d, 2, n / d, d, 1));
        }
        break;
    case TypeLabel::B:
    case TypeLabel::C:
        for (int l = 1; l <= n; ++l)
            if (n % l == 0) rows.push_back(table_row(2 * l, 1, n / l, 2 * l, 1));
        break;
    case TypeLabel::D:
        for (int l = 1; l <= n; ++l) {
            if (n % l == 0) rows.push_back(table_row(2 * l, (n / l) % 2 ? 2 : 1, n / l, 2 * l, 2));
            if (l > 1 && (n - 1) % l == 0) rows.push_back(table_row(2 * l, ((n - 1) / l) % 2 ? 1 : 2, (n - 1) / l, 2 * l, 1));
        }
        if (n == 4) rows.push_back(table_row(12, 3, 1, 4, 1));
        break;
    default: break;
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

std::vector<VerificationRecord> verify_table(TypeLabel t, int n, const VerifyOptions& opt) {
    Emitter em(to_string(t).substr(0, 1) + ":n=" + std::to_string(n), opt.claim_prefix);
    std::vector<std::string> got;
    for (const auto& d : enumerate_stable_gradings(t, n))
        got.push_back(table_row(d.m, d.twist, d.weyl_rank(), d.weyl_m(), d.weyl_p()));
    std::sort(got.begin(), got.end());
    em.compare("table", "", join(table_rows(t, n), "; "), join(got, "; "));
    return em.take();
}

// ---- rank-one formulas -----------------------------------------------------------------

UnitRootPoly ipow(const UnitRootPoly& p, int k) {
    UnitRootPoly out;
    for (int i = 0; i < k; ++i) out = out * p;
    return out;
}

UnitRootPoly xk(std::int64_t k, Rat c = Rat(0)) { return UnitRootPoly::binomial(k, c); }

struct RankOneFamily {
    std::string tag;
    TypeLabel type;
    int n;
    int twist;
};

std::vector<RankOneFamily> rank_one_families(int bound) {
    std::vector<RankOneFamily> out;
    for (int n = 1; n <= bound; ++n) out.push_back({"A-inner", TypeLabel::A, n, 1});
    for (int n = 2; n <= bound; ++n) out.push_back({"B", TypeLabel::B, n, 1});
    for (int n = 2; n <= bound; ++n) out.push_back({"C", TypeLabel::C, n, 1});
    for (int n = 4; n <= bound; ++n) out.push_back({n % 2 ? "D-odd" : "D-even", TypeLabel::D, n, 1});
    for (auto [t, n] : {std::pair{TypeLabel::G2, 2}, {TypeLabel::F4, 4}, {TypeLabel::E6, 6}, {TypeLabel::E7, 7},
                        {TypeLabel::E8, 8}})
        if (n <= bound) out.push_back({to_string(t), t, n, 1});
    for (int n = 2; n <= bound; n += 2) out.push_back({"A2-even", TypeLabel::A, n, 2});
    for (int n = 3; n <= bound; n += 2) out.push_back({"A2-odd", TypeLabel::A, n, 2});
    for (int n = 4; n <= bound; ++n) out.push_back({"D2", TypeLabel::D, n, 2});
    if (bound >= 6) out.push_back({"E6-2", TypeLabel::E6, 6, 2});
    if (bound >= 4) out.push_back({"D4-3", TypeLabel::D, 4, 3});
    return out;
}

std::optional<GradingDescriptor> rank_one_grading(const RankOneFamily& f) {
    std::optional<GradingDescriptor> best;
    for (const auto& d : enumerate_stable_gradings(f.type, f.n))
        if (d.rank_one() && d.twist == f.twist && (!best || d.m > best->m)) best = d;
    return best;
}

// Values of chi on the named centre generators, keyed by name.
using CenterValues = std::map<std::string, Rat>;

std::string describe_values(const CenterValues& v) {
    std::vector<std::string> parts;
    bool trivial = true;
    for (const auto& [k, x] : v) {
        parts.push_back("chi(" + k + ")=" + to_string(x));
        trivial = trivial && x.numerator() == 0;
    }
    return trivial ? "trivial" : join(parts, ",");
}

Rat value(const CenterValues& v, const std::string& k) {
    auto it = v.find(k);
    return it == v.end() ? Rat(0) : it->second;
}

// Closed-form monodromy polynomial, or nullopt when the family has no formula for these values.
std::optional<UnitRootPoly> rank_one_formula(const RankOneFamily& f, const CenterValues& v) {
    const int n = f.n;
    const Rat z = value(v, "z");
    const bool triv = describe_values(v) == "trivial";
    const std::string& t = f.tag;
    if (t == "A-inner") {
        const std::int64_t q = z.denominator();
        return ipow(xk(q), static_cast<int>((n + 1) / q));
    }
    if (t == "B") return triv ? sign_poly(n + 1, n - 1) : ipow(xk(2), n / 2 + 1) * ipow(xk(2, kHalf), (n - 1) / 2);
    if (t == "C") return triv ? sign_poly(n + 1, n - 1) : ipow(xk(2), n);
    if (t == "D-odd") {
        const Rat z1 = value(v, "z1");
        if (z1.numerator() == 0) return sign_poly(n + 1, n - 3);
        if (z1.denominator() == 4) return ipow(xk(4), (n - 1) / 2);
        return ipow(xk(2), n - 1);
    }
    if (t == "D-even") {
        const Rat z1 = value(v, "z1"), z2 = value(v, "z2");
        if (z1.numerator() == 0 && z2.numerator() == 0) return sign_poly(n + 1, n - 3);
        if (z1 == kHalf && z2.numerator() == 0) return ipow(xk(2), n - 1);
        return ipow(xk(2), n / 2 + 1) * ipow(xk(2, kHalf), n / 2 - 2);
    }
    if (t == "E6") return triv ? sign_poly(3, 0) * ipow(xk(2), 3) * xk(3) : ipow(xk(3), 2) * xk(6);
    if (t == "E7") return triv ? sign_poly(2, 0) * ipow(xk(2), 3) * ipow(xk(3), 2) * xk(4) : ipow(xk(2), 2) * ipow(xk(4), 2) * xk(6);
    if (t == "G2") return xk(1) * xk(2) * xk(3);
    if (t == "F4") return xk(1) * ipow(xk(2), 2) * xk(3) * xk(4);
    if (t == "E8") return xk(1) * ipow(xk(2), 2) * ipow(xk(3), 2) * ipow(xk(4), 2) * xk(5) * xk(6);
    if (t == "A2-even") return sign_poly(n / 2 + 1, n / 2);
    if (t == "A2-odd") {
        const int k = (n + 1) / 2;
        return triv ? sign_poly(k + 1, k - 2) : sign_poly(k, k - 1);
    }
    if (t == "D2") return triv ? sign_poly(n, 0) : sign_poly((n + 1) / 2, n / 2);
    if (t == "E6-2") return sign_poly(2, 0) * ipow(xk(2), 2) * xk(3);
    if (t == "D4-3") return sign_poly(2, 0) * xk(2);
    return std::nullopt;
}

std::vector<VerificationRecord> verify_rank_one_polynomials(const RankOneFamily& f, const VerifyOptions& opt) {
    const auto desc = rank_one_grading(f);
    if (!desc) return {};
    Emitter em(desc->key(), opt.claim_prefix);
    const std::string claim = "rank-one.polynomial." + f.tag;
    if (!em.wants(claim)) return {};
    if (opt.only_case && !(*opt.only_case == *desc)) return {};

    const auto datum = RootDatum::build(f.type, f.n);
    const auto Z = datum.center();
    const auto gens = center_generators(f.type, f.n, f.twist);
    std::set<CenterValues> seen;
    for (const auto& k : Z.characters()) {
        CenterValues v;
        for (const auto& [nm, t] : gens) v[nm] = Z.evaluate(k, t);
        if (!seen.insert(v).second) continue;
        CenterCharacter chi = [&Z, k](const TorusElement& t) { return Z.evaluate(k, t); };
        const auto R = f.twist == 1 ? coxeter_monodromy(datum, chi) : twisted_coxeter_monodromy(datum, f.twist, chi);
        const auto want = rank_one_formula(f, v);
        if (!want) {
            em.add(claim, describe_values(v), CheckStatus::unchecked, "no closed form", R.factored());
            continue;
        }
        em.compare(claim, describe_values(v), want->factored(), R.factored());
    }
    return em.take();
}

// Type names up to the low-rank coincidences.
std::string normalized_types(const std::vector<std::pair<TypeLabel, int>>& comps) {
    std::vector<std::string> names;
    for (auto [t, n] : comps) {
        if ((t == TypeLabel::B || t == TypeLabel::C || t == TypeLabel::D) && n == 1) {
            if (t != TypeLabel::D) names.push_back("A1");
            continue;
        }
        if (t == TypeLabel::D && n == 2) {
            names.push_back("A1");
            names.push_back("A1");
            continue;
        }
        if (t == TypeLabel::D && n == 3) t = TypeLabel::A;
        if (t == TypeLabel::C && n == 2) t = TypeLabel::B;
        names.push_back(type_name(t, n));
    }
    std::sort(names.begin(), names.end());
    return names.empty() ? "1" : join(names, " x ");
}

struct EndoscopyClaim {
    std::optional<std::int64_t> pi0, d;
    std::optional<std::vector<std::pair<TypeLabel, int>>> dual;
};

std::optional<EndoscopyClaim> endoscopy_expectation(const RankOneFamily& f, const CenterValues& v) {
    const int n = f.n;
    if (describe_values(v) == "trivial") return EndoscopyClaim{1, 1, std::nullopt};
    const std::string& t = f.tag;
    if (t == "A-inner") {
        const std::int64_t q = value(v, "z").denominator();
        return EndoscopyClaim{q, q, std::nullopt};
    }
    if (t == "B") return EndoscopyClaim{2, 2, std::nullopt};
    if (t == "C") return EndoscopyClaim{2, 2, std::vector<std::pair<TypeLabel, int>>{{TypeLabel::D, n}}};
    if (t == "D-odd") {
        const bool four = value(v, "z1").denominator() == 4;
        return EndoscopyClaim{four ? 4 : 2, four ? 4 : 2, std::nullopt};
    }
    if (t == "D-even") return EndoscopyClaim{2, 2, std::nullopt};
    if (t == "E6") return EndoscopyClaim{3, std::nullopt, std::vector<std::pair<TypeLabel, int>>{{TypeLabel::D, 4}}};
    if (t == "E7") return EndoscopyClaim{std::nullopt, std::nullopt, std::vector<std::pair<TypeLabel, int>>{{TypeLabel::E6, 6}}};
    if (t == "A2-odd") return EndoscopyClaim{1, 1, std::nullopt};
    if (t == "D2") return n % 2 ? EndoscopyClaim{1, 1, std::nullopt} : EndoscopyClaim{2, 2, std::nullopt};
    return std::nullopt;
}

std::vector<VerificationRecord> verify_rank_one_endoscopy(const RankOneFamily& f, const VerifyOptions& opt) {
    const auto desc = rank_one_grading(f);
    if (!desc) return {};
    Emitter em(desc->key(), opt.claim_prefix);
    const std::string claim = "rank-one.endoscopy." + f.tag;
    if (!em.wants(claim)) return {};
    if (opt.only_case && !(*opt.only_case == *desc)) return {};

    CharacterAnalysis ca(build_grading(*desc));
    const auto& I = ca.grading().I;
    const auto gens = center_generators(f.type, f.n, f.twist);
    for (const auto& o : ca.orbits()) {
        CenterValues v;
        bool inside = true;
        for (const auto& [nm, t] : gens) {
            inside = inside && I.contains(t);
            if (inside) v[nm] = evaluate(I, o.rep, t);
        }
        if (!inside) {
            em.add(claim, describe(I, o.rep), CheckStatus::fail, "centre generators in I", "generator outside I");
            continue;
        }
        const auto want = endoscopy_expectation(f, v);
        if (!want) continue;
        const auto rep = endoscopy_group(ca, ca.stabilizer_data(o.rep));
        std::vector<std::string> e, a;
        if (want->pi0) {
            e.push_back("pi0=" + str(*want->pi0));
            a.push_back("pi0=" + (rep.component_group_order ? str(*rep.component_group_order) : std::string("?")));
        }
        if (want->d) {
            e.push_back("d=" + str(*want->d));
            a.push_back("d=" + (rep.d.size() == 1 ? str(rep.d.front()) : std::string("?")));
        }
        if (want->dual) {
            std::vector<std::pair<TypeLabel, int>> got;
            for (const auto& c : rep.components) got.push_back({c.type, c.rank});
            e.push_back("dual=" + normalized_types(*want->dual));
            a.push_back("dual=" + normalized_types(got));
        }
        em.compare(claim, describe_values(v), join(e, ", "), join(a, ", "));
    }
    return em.take();
}

} // namespace

std::int64_t weyl_oracle_bound_from_env(std::int64_t fallback) {
    if (const char* s = std::getenv("GRADECS_MAX_WEYL_ORACLE")) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used == std::string(s).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
        throw Error(Errc::InvalidArgument, std::string("GRADECS_MAX_WEYL_ORACLE is not a positive integer: ") + s);
    }
    return fallback;
}

const std::vector<std::string>& claim_catalog() {
    static const std::vector<std::string> ids = {
        "table",     "rank-one.polynomial", "rank-one.endoscopy", "tau-det",  "weyl-oracle", "lemma-A1",
        "lemma-A2",  "lemma-B",             "lemma-C",            "lemma-D1", "lemma-D2",    "invariants",
        "expectations",
    };
    return ids;
}

bool claim_selected(const std::string& prefix, const std::string& claim) {
    return prefix.empty() || boundary(prefix, claim);
}

std::vector<GradingDescriptor> verification_sweep(int rank_bound) {
    std::vector<GradingDescriptor> out;
    auto push = [&](TypeLabel t, int n) {
        for (const auto& d : enumerate_stable_gradings(t, n)) out.push_back(d);
    };
    for (int n = 1; n <= rank_bound; ++n) push(TypeLabel::A, n);
    for (int n = 2; n <= rank_bound; ++n) push(TypeLabel::B, n);
    for (int n = 2; n <= rank_bound; ++n) push(TypeLabel::C, n);
    for (int n = 4; n <= rank_bound; ++n) push(TypeLabel::D, n);
    for (auto [t, n] : {std::pair{TypeLabel::G2, 2}, {TypeLabel::F4, 4}, {TypeLabel::E6, 6}, {TypeLabel::E7, 7},
                        {TypeLabel::E8, 8}})
        if (n <= rank_bound) push(t, n);
    return out;
}

std::vector<VerificationRecord> run_verification(const VerifyOptions& opt) {
    struct Task {
        std::string label;
        std::function<std::vector<VerificationRecord>()> run;
    };
    std::vector<Task> tasks;
    if (!opt.only_case && overlaps(opt.claim_prefix, "table")) {
        for (auto t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D})
            for (int n = t == TypeLabel::A ? 1 : (t == TypeLabel::D ? 4 : 2); n <= opt.rank_bound; ++n)
                tasks.push_back({to_string(t) + ":n=" + std::to_string(n), [t, n, &opt] { return verify_table(t, n, opt); }});
    }
    const auto families = rank_one_families(opt.rank_bound);
    for (const auto& f : families)
        tasks.push_back({"rank-one " + f.tag, [f, &opt] { return verify_rank_one_polynomials(f, opt); }});
    for (const auto& f : families)
        tasks.push_back({"rank-one " + f.tag, [f, &opt] { return verify_rank_one_endoscopy(f, opt); }});
    const auto sweep = opt.only_case ? std::vector<GradingDescriptor>{*opt.only_case} : verification_sweep(opt.rank_bound);
    for (const auto& d : sweep) tasks.push_back({d.key(), [d, &opt] { return verify_case(d, opt); }});

    std::vector<std::vector<VerificationRecord>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) {
            try {
                results[i] = tasks[i].run();
            } catch (const std::exception& e) {
                results[i] = {{tasks[i].label, "internal", "", CheckStatus::fail, "no error", e.what()}};
            }
        }
    };
    unsigned n = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, tasks.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<VerificationRecord> out;
    for (auto& r : results) out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    return out;
}

VerificationSummary summarize(const std::vector<VerificationRecord>& records) {
    VerificationSummary s;
    for (const auto& r : records) {
        if (r.status == CheckStatus::pass) ++s.pass;
        else if (r.status == CheckStatus::fail) ++s.fail;
        else ++s.unchecked;
    }
    return s;
}

} // namespace gradecs
