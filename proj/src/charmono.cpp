#include "gradecs/charmono.hpp"

#include "gradecs/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gradecs {

bool TorusCharacter::trivial() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

Rat evaluate(const FiniteAbelianGroup& I, const TorusCharacter& chi, const TorusElement& t) {
    return I.evaluate(chi.coords, t);
}

TorusCharacter make_character(const FiniteAbelianGroup& I, IntVec coords) {
    TorusCharacter chi;
    chi.coords = std::move(coords);
    for (const auto& [name, t] : I.named()) {
        Rat v = I.evaluate(chi.coords, t);
        chi.values.push_back(v);
        chi.exponents.push_back((v * element_order(t)).numerator());
    }
    return chi;
}

std::vector<TorusCharacter> enumerate_characters(const FiniteAbelianGroup& I) {
    std::vector<TorusCharacter> out;
    for (auto& k : I.characters()) out.push_back(make_character(I, std::move(k)));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.exponents < b.exponents; });
    return out;
}

TorusCharacter pull_back(const FiniteAbelianGroup& I, const TorusCharacter& chi, const IntMatrix& w) {
    IntVec k(I.generators().size());
    for (std::size_t a = 0; a < k.size(); ++a) {
        Rat v = I.evaluate(chi.coords, act(w, I.generators()[a]));
        k[a] = (v * I.invariant_factors()[a]).numerator();
    }
    return make_character(I, std::move(k));
}

std::string describe(const FiniteAbelianGroup& I, const TorusCharacter& chi) {
    std::string s;
    for (std::size_t j = 0; j < I.named().size(); ++j) {
        if (!s.empty()) s += ", ";
        s += I.named()[j].first + "=" + format_root_of_unity(chi.values[j]);
    }
    return s.empty() ? "trivial" : s;
}

std::vector<CharacterOrbit> orbit_representatives(const FiniteAbelianGroup& I, const std::vector<IntMatrix>& gens) {
    auto chars = enumerate_characters(I);
    std::map<IntVec, std::size_t> index;
    for (std::size_t i = 0; i < chars.size(); ++i) index[chars[i].coords] = i;
    std::vector<char> seen(chars.size(), 0);
    std::vector<CharacterOrbit> out;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit{i}, queue{i};
        seen[i] = 1;
        while (!queue.empty()) {
            auto c = queue.back();
            queue.pop_back();
            for (const auto& g : gens) {
                auto j = index.at(pull_back(I, chars[c], g).coords);
                if (!seen[j]) {
                    seen[j] = 1;
                    orbit.push_back(j);
                    queue.push_back(j);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());  // chars are sorted by exponents
        CharacterOrbit o;
        for (auto j : orbit) o.members.push_back(chars[j]);
        o.rep = o.members.front();
        out.push_back(std::move(o));
    }
    return out;
}

// ---- rank-one classification ----

std::string RankOneType::tag() const {
    if (components == 0) return "torus";
    std::string s = components > 1 ? std::to_string(components) + " x " : "";
    s += type_name(type, rank);
    if (twist > 1) return s + "^" + std::to_string(twist) + " twisted Coxeter";
    return s + " Coxeter";
}

std::int64_t RankOneType::coxeter_degree() const {
    return 1 + std::accumulate(marks.begin(), marks.end(), std::int64_t{0});
}

namespace {

std::int64_t pair_roots(const RootDatum& d, std::size_t a, std::size_t b) {
    // <a-check, b>
    const auto& f = d.roots()[b].functional;
    const auto& c = d.roots()[a].coroot;
    std::int64_t s = 0;
    for (std::size_t k = 0; k < f.size(); ++k) s += f[k] * c[k];
    return s;
}

std::vector<std::vector<int>> permutation_orbits(const std::vector<int>& sigma) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(sigma.size(), 0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> o;
        for (int j = static_cast<int>(i); !seen[j]; j = sigma[j]) {
            seen[j] = 1;
            o.push_back(j);
        }
        std::sort(o.begin(), o.end());
        out.push_back(std::move(o));
    }
    return out;
}

} // namespace

std::vector<std::size_t> subsystem_simple_roots(const RootDatum& datum, const std::vector<std::size_t>& subsystem,
                                                bool dual) {
    std::vector<std::size_t> pos;
    for (auto i : subsystem)
        if (i < datum.num_positive()) pos.push_back(i);
    std::sort(pos.begin(), pos.end());
    auto vec = [&](std::size_t i) -> const IntVec& { return dual ? datum.roots()[i].coroot : datum.roots()[i].coeffs; };
    std::set<IntVec> sums;
    for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = a + 1; b < pos.size(); ++b) {
            IntVec v = vec(pos[a]);
            const auto& w = vec(pos[b]);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
            sums.insert(std::move(v));
        }
    std::vector<std::size_t> simple;
    for (auto i : pos)
        if (!sums.count(vec(i))) simple.push_back(i);
    return simple;
}

IntMatrix subsystem_pairing(const RootDatum& datum, const std::vector<std::size_t>& simple, bool dual) {
    const std::size_t q = simple.size();
    IntMatrix P(q, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            P(i, j) = dual ? pair_roots(datum, simple[j], simple[i]) : pair_roots(datum, simple[i], simple[j]);
    return P;
}

RankOneType classify_rank_one(const RootDatum& datum, const std::vector<std::size_t>& theta_on_roots,
                              const std::vector<std::size_t>& subsystem, bool dual) {
    RankOneType out;
    auto simple = subsystem_simple_roots(datum, subsystem, dual);
    if (simple.empty()) return out;

    const std::size_t q = simple.size();
    const IntMatrix P = subsystem_pairing(datum, simple, dual);
    auto comps = identify_components(P);

    std::vector<int> comp_of(q, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int loc : comps[c].labeling) comp_of[loc] = static_cast<int>(c);
    auto component_of_root = [&](std::size_t root) {
        for (std::size_t i = 0; i < q; ++i)
            if (pair_roots(datum, simple[i], root) != 0) return comp_of[i];
        throw Error(Errc::UnclassifiedRankOne, "root outside the subsystem span");
    };

    const int first = comp_of[0];
    std::vector<int> cycle{first};
    for (int c = component_of_root(theta_on_roots[simple[comps[first].labeling[0]]]); c != first;
         c = component_of_root(theta_on_roots[simple[comps[c].labeling[0]]])) {
        if (cycle.size() > comps.size()) throw Error(Errc::UnclassifiedRankOne, "theta does not permute factors");
        cycle.push_back(c);
    }
    if (cycle.size() != comps.size())
        throw Error(Errc::UnclassifiedRankOne, "factors split into several theta-orbits");
    for (std::size_t c = 1; c < comps.size(); ++c)
        if (!same_type(comps[c].type, comps[c].rank, comps[first].type, comps[first].rank))
            throw Error(Errc::UnclassifiedRankOne, "factors of different types");

    const auto& H = comps[first];
    out.components = static_cast<int>(comps.size());
    out.type = H.type;
    out.rank = H.rank;
    out.all_simple = simple;
    for (int loc : H.labeling) out.simple.push_back(simple[loc]);

    // theta^k on the first factor, corrected by Weyl reflections back to the simple system
    std::vector<std::size_t> img = out.simple;
    for (auto& r : img)
        for (int j = 0; j < out.components; ++j) r = theta_on_roots[r];
    for (;;) {
        auto it = std::find_if(img.begin(), img.end(), [&](std::size_t r) { return r >= datum.num_positive(); });
        if (it == img.end()) break;
        IntMatrix s = datum.reflection(*it);
        for (auto& r : img) r = datum.act_on_root(s, r);
    }
    std::vector<int> sigma(out.rank);
    for (int t = 0; t < out.rank; ++t) {
        auto f = std::find(out.simple.begin(), out.simple.end(), img[t]);
        if (f == out.simple.end()) throw Error(Errc::UnclassifiedRankOne, "theta does not preserve the factor");
        sigma[t] = static_cast<int>(f - out.simple.begin());
    }
    out.node_orbits = permutation_orbits(sigma);
    std::size_t ord = 1;
    for (const auto& o : out.node_orbits) ord = std::lcm(ord, o.size());
    out.twist = static_cast<int>(ord);
    std::sort(out.node_orbits.begin(), out.node_orbits.end());
    for (const auto& o : out.node_orbits) out.marks.push_back(twisted_mark(out.type, out.rank, out.twist, o));
    return out;
}

UnitRootPoly rank_one_polynomial(const IntVec& marks, const std::vector<Rat>& values) {
    UnitRootPoly R = UnitRootPoly::binomial(1, Rat(0));
    for (std::size_t i = 0; i < marks.size(); ++i) R = R * UnitRootPoly::binomial(marks[i], frac(-values[i]));
    return R;
}

UnitRootPoly coxeter_monodromy(const RootDatum& datum, const CenterCharacter& chi) {
    std::vector<Rat> v;
    for (const auto& g : center_image_generators(datum, {})) v.push_back(chi(g));
    return rank_one_polynomial(datum.marks(), v);
}

UnitRootPoly twisted_coxeter_monodromy(const RootDatum& datum, int twist, const CenterCharacter& chi) {
    auto orbits = standard_diagram_orbits(datum.type(), datum.rank(), twist);
    IntVec marks;
    std::vector<Rat> v;
    auto gb = center_image_generators(datum, orbits);
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        marks.push_back(twisted_mark(datum.type(), datum.rank(), twist, orbits[o]));
        v.push_back(chi(gb[o]));
    }
    return rank_one_polynomial(marks, v);
}

// ---- reflection subgroups ----

std::int64_t SubgroupBlock::order() const {
    std::int64_t o = 1;
    for (std::size_t i = 0; i < coords.size(); ++i) o *= c * static_cast<std::int64_t>(i + 1);
    return o / p;
}

std::string SubgroupBlock::name() const {
    return "G(" + std::to_string(c) + "," + std::to_string(p) + "," + std::to_string(coords.size()) + ")";
}

std::int64_t ReflectionSubgroup::order() const {
    std::int64_t o = 1;
    for (const auto& b : blocks) o *= b.order();
    return o;
}

std::string ReflectionSubgroup::name() const {
    std::string s;
    for (const auto& b : blocks) {
        if (b.trivial()) continue;
        if (!s.empty()) s += " x ";
        s += b.name();
    }
    return s.empty() ? "1" : s;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

ReflectionSubgroup reflection_subgroup(const ReflectionGroup& Wa, std::vector<std::int64_t> power) {
    const auto& refl = Wa.reflections();
    const std::int64_t M = Wa.m();
    const int r = Wa.r();
    ReflectionSubgroup out;
    out.power = std::move(power);

    std::map<HyperplaneKey, std::size_t> by_key;
    std::vector<std::size_t> live;
    std::vector<MonomialElement> gens;
    for (std::size_t h = 0; h < refl.size(); ++h) {
        by_key[refl[h].hyperplane] = h;
        if (out.power[h] < refl[h].order) {
            live.push_back(h);
            gens.push_back(gradecs::power(refl[h].element, out.power[h], M));
        }
    }

    // hyperplane orbits under conjugation by the generators
    UnionFind hu(refl.size());
    for (const auto& g : gens) {
        auto gi = inverse(g, M);
        for (auto h : live) {
            auto c = compose(compose(g, refl[h].element, M), gi, M);
            auto key = reflection_hyperplane(c, M);
            if (!key || !by_key.count(*key)) throw Error(Errc::OrbitInconsistency, "conjugate is not a reflection");
            auto h2 = by_key.at(*key);
            if (out.power[h2] != out.power[h])
                throw Error(Errc::OrbitInconsistency, "conjugate hyperplanes with different powers");
            hu.unite(h, h2);
        }
    }

    // coordinate blocks from the transposition-like generators
    UnionFind cu(r);
    for (const auto& g : gens)
        for (int i = 0; i < r; ++i)
            if (g.perm[i] != i) cu.unite(i, g.perm[i]);
    std::map<std::size_t, int> block_of_root;
    for (int i = 0; i < r; ++i) {
        auto root = cu.find(i);
        if (!block_of_root.count(root)) {
            block_of_root[root] = static_cast<int>(out.blocks.size());
            out.blocks.push_back({});
        }
        out.blocks[block_of_root[root]].coords.push_back(i);
    }
    std::vector<int> block(r);
    for (int i = 0; i < r; ++i) block[i] = block_of_root[cu.find(i)];

    // gauge each block along a spanning tree; leftover phases and diagonal exponents give (c, p)
    struct Edge { int i, j; std::int64_t k; };
    std::vector<std::vector<Edge>> edges(out.blocks.size());
    std::vector<std::int64_t> diag_gcd(out.blocks.size(), M);
    std::vector<char> has_diag(out.blocks.size(), 0);
    for (const auto& g : gens) {
        int moved = -1;
        for (int i = 0; i < r; ++i)
            if (g.perm[i] != i) {
                moved = i;
                break;
            }
        if (moved < 0) {
            for (int i = 0; i < r; ++i)
                if (g.phases[i] % M) {
                    diag_gcd[block[i]] = std::gcd(diag_gcd[block[i]], g.phases[i] % M);
                    has_diag[block[i]] = 1;
                }
        } else {
            edges[block[moved]].push_back({moved, g.perm[moved], g.phases[moved]});
        }
    }
    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
        std::map<int, std::int64_t> phi;
        phi[out.blocks[b].coords.front()] = 0;
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& e : edges[b]) {
                if (phi.count(e.i) && !phi.count(e.j)) {
                    phi[e.j] = phi[e.i] - e.k;
                    grew = true;
                } else if (phi.count(e.j) && !phi.count(e.i)) {
                    phi[e.i] = phi[e.j] + e.k;
                    grew = true;
                }
            }
        }
        std::int64_t qd = M;
        for (const auto& e : edges[b]) qd = std::gcd(qd, mod_floor(e.k + phi[e.j] - phi[e.i], M));
        const std::int64_t a = diag_gcd[b];
        const std::int64_t q2 = std::gcd(qd, a);
        out.blocks[b].c = M / q2;
        out.blocks[b].p = has_diag[b] ? a / q2 : out.blocks[b].c;
        if (out.blocks[b].coords.size() == 1 && !has_diag[b]) out.blocks[b].c = out.blocks[b].p = 1;
    }

    std::map<std::size_t, std::size_t> orbit_index;
    for (auto h : live) {
        auto root = hu.find(h);
        if (!orbit_index.count(root)) {
            orbit_index[root] = out.hyperplane_orbits.size();
            out.hyperplane_orbits.push_back({});
            out.orbit_block.push_back(block[refl[h].hyperplane.i]);
        }
        out.hyperplane_orbits[orbit_index[root]].push_back(h);
    }
    return out;
}

// ---- per-grading analysis ----

CharacterAnalysis::CharacterAnalysis(Grading g) : g_(std::move(g)) {
    const auto& datum = g_.datum();
    const auto& refl = g_.Wa.reflections();
    const IntMatrix& Th = g_.theta();
    const std::size_t n = static_cast<std::size_t>(datum.rank());
    const IntMatrix Phi = evaluate_poly(cyclotomic_polynomial(g_.m()), Th);

    for (const auto& s : refl) refl_.push_back(g_.Wa.embed(s.element));

    for (std::size_t h = 0; h < refl.size(); ++h) {
        const IntMatrix& S = refl_[h];
        RatMatrix A(2 * n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                A(i, j) = Rat(Phi(i, j));
                A(n + i, j) = Rat(S(i, j) - (i == j ? 1 : 0));
            }
        auto U = nullspace(A);
        RankOneReduction red;
        red.reflection = h;
        red.order = refl[h].order;
        for (std::size_t a = 0; a < datum.roots().size(); ++a) {
            const auto& f = datum.roots()[a].functional;
            bool vanishes = std::all_of(U.begin(), U.end(), [&](const RatVec& u) {
                Rat s(0);
                for (std::size_t k = 0; k < n; ++k) s += u[k] * f[k];
                return s.numerator() == 0;
            });
            if (vanishes) red.roots.push_back(a);
        }
        red.kind = classify_rank_one(datum, g_.theta_on_roots, red.roots, false);
        if (red.kind.coxeter_degree() != red.order)
            throw Error(Errc::DegreeMismatch, g_.desc().key() + ": rank-one factor " + red.kind.tag() +
                                                  " has degree " + std::to_string(red.kind.coxeter_degree()) +
                                                  " at a reflection of order " + std::to_string(red.order));

        // fundamental coweights of the first factor, summed over node orbits and spread over the factors
        const auto& simple = red.kind.simple;
        const std::size_t q = simple.size();
        RatMatrix Pt(q, q);
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j) Pt(j, i) = Rat(pair_roots(datum, simple[i], simple[j]));
        std::vector<IntMatrix> th_pow{IntMatrix::identity(n)};
        for (int j = 1; j < red.kind.components; ++j) th_pow.push_back(Th * th_pow.back());
        for (const auto& orb : red.kind.node_orbits) {
            RatVec v(n, Rat(0));
            for (int t : orb) {
                RatVec e(q, Rat(0));
                e[t] = Rat(1);
                auto c = solve(Pt, e);
                if (!c) throw Error(Errc::UnclassifiedRankOne, "singular Cartan matrix");
                for (std::size_t j = 0; j < q; ++j)
                    for (std::size_t k = 0; k < n; ++k) v[k] += (*c)[j] * Rat(datum.roots()[simple[j]].coroot[k]);
            }
            TorusElement d(n, Rat(0));
            for (const auto& P : th_pow) {
                RatVec w(n, Rat(0));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t k = 0; k < n; ++k) w[i] += Rat(P(i, k)) * v[k];
                d = add(d, frac(w));
            }
            if (!g_.I.contains(d))
                throw Error(Errc::UnclassifiedRankOne, g_.desc().key() + ": rank-one center element outside I");
            red.delta.push_back(d);
        }
        red.Is = generated_subgroup(red.delta);
        if (red.Is.empty()) red.Is.push_back(TorusElement(n, Rat(0)));
        red_.push_back(std::move(red));
    }

    std::vector<IntMatrix> gens;
    for (const auto& s : g_.Wa.generators()) gens.push_back(g_.Wa.embed(s));
    orbits_ = orbit_representatives(g_.I, gens);
}

std::int64_t CharacterAnalysis::stabilizing_power(std::size_t h, const TorusCharacter& chi) const {
    const auto& S = refl_[h];
    IntMatrix P = S;
    for (std::int64_t e = 1;; ++e) {
        if (pull_back(g_.I, chi, P) == chi) return e;
        P = P * S;
        if (e > g_.Wa.reflections()[h].order) throw Error(Errc::InvalidArgument, "reflection order exceeded");
    }
}

ReflectionMonodromy CharacterAnalysis::reflection_monodromy(std::size_t h, const TorusCharacter& chi) const {
    const auto& red = red_[h];
    std::vector<Rat> v;
    for (const auto& d : red.delta) v.push_back(evaluate(g_.I, chi, d));
    ReflectionMonodromy out;
    out.R = rank_one_polynomial(red.kind.marks, v);
    out.e = stabilizing_power(h, chi);
    auto Rbar = out.R.substitute_power(out.e);
    if (!Rbar)
        throw Error(Errc::PowerExtractionFailed,
                    g_.desc().key() + ": " + out.R.factored() + " is not a polynomial in x^" + std::to_string(out.e));
    out.Rbar = *Rbar;
    return out;
}

StabilizerData CharacterAnalysis::stabilizer_data(const TorusCharacter& chi) const {
    StabilizerData st;
    st.chi = chi;
    for (const auto& o : orbits_)
        if (std::find(o.members.begin(), o.members.end(), chi) != o.members.end())
            st.orbit_size = static_cast<std::int64_t>(o.members.size());
    st.stabilizer_order = g_.Wa.order() / st.orbit_size;
    std::vector<std::int64_t> power;
    for (std::size_t h = 0; h < red_.size(); ++h) {
        st.mono.push_back(reflection_monodromy(h, chi));
        power.push_back(st.mono.back().e);
    }
    st.w0 = reflection_subgroup(g_.Wa, std::move(power));
    if (st.stabilizer_order % st.w0.order())
        throw Error(Errc::OrbitInconsistency, g_.desc().key() + ": W0 order does not divide the stabilizer order");
    return st;
}

MchiDescriptor CharacterAnalysis::build_mchi(const StabilizerData& st) const {
    const auto& refl = g_.Wa.reflections();
    MchiDescriptor d;
    d.chi = st.chi;
    d.induction_index = g_.Wa.order() / st.w0.order();
    std::int64_t hecke_order = 1;
    for (std::size_t b = 0; b < st.w0.blocks.size(); ++b) {
        const auto& blk = st.w0.blocks[b];
        if (blk.trivial()) continue;
        std::vector<HeckeRelation> trans, diag;
        for (std::size_t o = 0; o < st.w0.hyperplane_orbits.size(); ++o) {
            if (st.w0.orbit_block[o] != static_cast<int>(b)) continue;
            const auto& orbit = st.w0.hyperplane_orbits[o];
            const auto h0 = orbit.front();
            for (auto h : orbit)
                if (!(st.mono[h].Rbar == st.mono[h0].Rbar))
                    throw Error(Errc::OrbitInconsistency, g_.desc().key() + ": relations differ along a W0 orbit");
            HeckeRelation rel;
            rel.order = refl[h0].order / st.mono[h0].e;
            rel.relation = st.mono[h0].Rbar;
            (refl[h0].hyperplane.kind == 't' ? trans : diag).push_back(std::move(rel));
        }
        for (std::size_t i = 0; i < trans.size(); ++i) trans[i].orbit = "transposition" + std::string(i, '\'');
        for (std::size_t i = 0; i < diag.size(); ++i) diag[i].orbit = "diagonal" + std::string(i, '\'');
        trans.insert(trans.end(), diag.begin(), diag.end());
        auto hp = assemble_hecke(blk.c, blk.p, static_cast<int>(blk.coords.size()), std::move(trans));
        hecke_order *= blk.order();
        d.hecke.push_back(std::move(hp));
    }
    d.label = hecke_product_label(d.hecke);
    d.total_rank = d.induction_index * hecke_order;
    return d;
}

std::string canonical_hecke(const HeckePresentation& h) {
    std::int64_t c = h.m, p = h.p;
    if (h.r == 1) c /= p, p = 1;
    std::int64_t order = 1;
    for (int i = 1; i <= h.r; ++i) order *= c * i;
    if (order / p == 1) return "";
    std::vector<std::string> rels;
    for (const auto& rel : h.relations)
        rels.push_back(std::string(rel.orbit.rfind("diagonal", 0) == 0 ? "d:" : "t:") + rel.relation.factored());
    std::sort(rels.begin(), rels.end());
    std::string s = "G(" + std::to_string(c) + "," + std::to_string(p) + "," + std::to_string(h.r) + ")[";
    for (std::size_t i = 0; i < rels.size(); ++i) s += (i ? "|" : "") + rels[i];
    return s + "]";
}

std::vector<std::string> canonical_hecke_product(const std::vector<HeckePresentation>& factors) {
    std::vector<std::string> out;
    for (const auto& f : factors) {
        auto s = canonical_hecke(f);
        if (!s.empty()) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gradecs
