#include "gradecs/reflgroup.hpp"

#include "gradecs/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gradecs {

MonomialElement MonomialElement::identity(int r) {
    MonomialElement g;
    g.perm.resize(r);
    std::iota(g.perm.begin(), g.perm.end(), 0);
    g.phases.assign(r, 0);
    return g;
}

bool MonomialElement::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (perm[i] != i || phases[i] != 0) return false;
    return true;
}

MonomialElement compose(const MonomialElement& a, const MonomialElement& b, std::int64_t m) {
    const int r = b.rank();
    MonomialElement c;
    c.perm.resize(r);
    c.phases.resize(r);
    for (int i = 0; i < r; ++i) {
        c.perm[i] = a.perm[b.perm[i]];
        c.phases[i] = mod_floor(b.phases[i] + a.phases[b.perm[i]], m);
    }
    return c;
}

MonomialElement inverse(const MonomialElement& g, std::int64_t m) {
    const int r = g.rank();
    MonomialElement h;
    h.perm.resize(r);
    h.phases.resize(r);
    for (int i = 0; i < r; ++i) {
        h.perm[g.perm[i]] = i;
        h.phases[g.perm[i]] = mod_floor(-g.phases[i], m);
    }
    return h;
}

MonomialElement power(const MonomialElement& g, std::int64_t e, std::int64_t m) {
    if (e < 0) return power(inverse(g, m), -e, m);
    MonomialElement acc = MonomialElement::identity(g.rank()), base = g;
    while (e) {
        if (e & 1) acc = compose(acc, base, m);
        base = compose(base, base, m);
        e >>= 1;
    }
    return acc;
}

std::int64_t element_order(const MonomialElement& g, std::int64_t m) {
    MonomialElement x = g;
    std::int64_t k = 1;
    while (!x.is_identity()) {
        x = compose(g, x, m);
        ++k;
    }
    return k;
}

std::string to_string(const MonomialElement& g) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < g.rank(); ++i) os << (i ? " " : "") << g.perm[i] + 1;
    os << " |";
    for (auto c : g.phases) os << ' ' << c;
    os << ']';
    return os.str();
}

MonomialElement transposition(int r, int i, int j, std::int64_t k, std::int64_t m) {
    MonomialElement g = MonomialElement::identity(r);
    std::swap(g.perm[i], g.perm[j]);
    g.phases[i] = mod_floor(k, m);
    g.phases[j] = mod_floor(-k, m);
    return g;
}

MonomialElement diagonal(int r, int i, std::int64_t k, std::int64_t m) {
    MonomialElement g = MonomialElement::identity(r);
    g.phases[i] = mod_floor(k, m);
    return g;
}

std::optional<HyperplaneKey> reflection_hyperplane(const MonomialElement& g, std::int64_t m) {
    std::vector<int> moved;
    for (int i = 0; i < g.rank(); ++i)
        if (g.perm[i] != i) moved.push_back(i);
    if (moved.empty()) {
        int found = -1;
        for (int i = 0; i < g.rank(); ++i)
            if (g.phases[i] != 0) {
                if (found >= 0) return std::nullopt;
                found = i;
            }
        if (found < 0) return std::nullopt;
        return HyperplaneKey{'d', found, found, 0};
    }
    if (moved.size() != 2) return std::nullopt;
    const int i = moved[0], j = moved[1];
    for (int a = 0; a < g.rank(); ++a)
        if (a != i && a != j && g.phases[a] != 0) return std::nullopt;
    if (mod_floor(g.phases[i] + g.phases[j], m) != 0) return std::nullopt;
    return HyperplaneKey{'t', i, j, g.phases[i]};
}

std::string to_string(const HyperplaneKey& h) {
    std::ostringstream os;
    if (h.kind == 'd')
        os << "x" << h.i + 1 << "=0";
    else
        os << "x" << h.j + 1 << "=z^" << h.k << "*x" << h.i + 1;
    return os.str();
}

ReflectionGroup ReflectionGroup::build(std::int64_t m, std::int64_t p, int r) {
    if (p != 1 && p != 2) throw Error(Errc::UnsupportedP, "p = " + std::to_string(p));
    if (m < 1 || r < 1 || m % p != 0) throw Error(Errc::InvalidArgument, "bad G(m,p,r) parameters");
    ReflectionGroup g;
    g.m_ = m;
    g.p_ = p;
    g.r_ = r;
    int next_orbit = 0;
    if (r >= 2) {
        const bool split = p == 2 && r == 2;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                for (std::int64_t k = 0; k < m; ++k)
                    g.reflections_.push_back({transposition(r, i, j, k, m), HyperplaneKey{'t', i, j, k}, 2,
                                              split ? static_cast<int>(k % 2) : 0});
        next_orbit = split ? 2 : 1;
    }
    if (m / p > 1) {
        for (int i = 0; i < r; ++i)
            g.reflections_.push_back({diagonal(r, i, p, m), HyperplaneKey{'d', i, i, 0}, m / p, next_orbit});
        ++next_orbit;
    }
    g.num_orbits_ = next_orbit;
    return g;
}

std::int64_t ReflectionGroup::order() const {
    std::int64_t o = 1;
    for (int i = 0; i < r_; ++i) o *= m_;
    for (int i = 2; i <= r_; ++i) o *= i;
    return o / p_;
}

std::string ReflectionGroup::name() const {
    return "G(" + std::to_string(m_) + "," + std::to_string(p_) + "," + std::to_string(r_) + ")";
}

bool ReflectionGroup::contains(const MonomialElement& g) const {
    if (g.rank() != r_) return false;
    std::int64_t s = 0;
    for (auto c : g.phases) s += c;
    return mod_floor(s, p_) == 0;
}

std::vector<MonomialElement> ReflectionGroup::generators() const {
    std::vector<MonomialElement> gens;
    for (int i = 0; i + 1 < r_; ++i) gens.push_back(transposition(r_, i, i + 1, 0, m_));
    if (p_ == 1) {
        gens.push_back(diagonal(r_, r_ - 1, 1, m_));
    } else {
        if (r_ >= 2) {
            auto t = diagonal(r_, r_ - 2, 1, m_);
            gens.push_back(compose(inverse(t, m_), compose(gens[r_ - 2], t, m_), m_));
        }
        if (m_ > 2) gens.push_back(diagonal(r_, r_ - 1, 2, m_));
    }
    return gens;
}

std::vector<MonomialElement> ReflectionGroup::elements(std::int64_t bound) const {
    if (order() > bound) throw Error(Errc::SizeBoundExceeded, name() + " exceeds enumeration bound");
    std::vector<MonomialElement> out;
    std::vector<int> perm(r_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        IntVec c(r_, 0);
        for (;;) {
            if (contains(MonomialElement{perm, c})) out.push_back(MonomialElement{perm, c});
            int a = r_;
            while (a-- > 0) {
                if (++c[a] < m_) break;
                c[a] = 0;
            }
            if (a < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DistinguishedReflection> reflections_by_enumeration(const std::vector<MonomialElement>& elems,
                                                                std::int64_t m) {
    std::map<HyperplaneKey, std::vector<const MonomialElement*>> by_h;
    for (const auto& g : elems)
        if (auto h = reflection_hyperplane(g, m)) by_h[*h].push_back(&g);
    std::vector<DistinguishedReflection> out;
    for (const auto& [h, list] : by_h) {
        const std::int64_t nH = static_cast<std::int64_t>(list.size()) + 1;
        for (const auto* g : list) {
            // det = sign(perm) * zeta^{sum phases}
            std::int64_t s = std::accumulate(g->phases.begin(), g->phases.end(), std::int64_t{0});
            Rat det = frac(Rat(s, m) + (h.kind == 't' ? Rat(1, 2) : Rat(0)));
            if (det == Rat(1, nH)) out.push_back({*g, h, nH, 0});
        }
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

std::vector<std::vector<HyperplaneKey>> ReflectionGroup::orbits_by_enumeration(std::int64_t bound) const {
    auto elems = elements(bound);
    auto refl = reflections_by_enumeration(elems, m_);
    std::map<HyperplaneKey, int> index;
    for (const auto& d : refl) index.emplace(d.hyperplane, static_cast<int>(index.size()));
    UnionFind uf(index.size());
    for (const auto& d : refl)
        for (const auto& g : generators()) {
            auto c = compose(g, compose(d.element, inverse(g, m_), m_), m_);
            auto h = reflection_hyperplane(c, m_);
            uf.unite(index.at(d.hyperplane), index.at(*h));
        }
    std::map<int, std::vector<HyperplaneKey>> groups;
    for (const auto& [h, i] : index) groups[uf.find(i)].push_back(h);
    std::vector<std::vector<HyperplaneKey>> out;
    for (auto& [root, v] : groups) out.push_back(std::move(v));
    return out;
}

IntMatrix ReflectionGroup::embed(const MonomialElement& g) const {
    if (!embed_) throw Error(Errc::NoEmbeddingAttached, name());
    return embed_(g);
}

TorusElement reflection_action_on_group(const ReflectionGroup& group, const MonomialElement& g,
                                        const TorusElement& x) {
    return act(group.embed(g), x);
}

HeckePresentation assemble_hecke(std::int64_t m, std::int64_t p, int r, std::vector<HeckeRelation> relations) {
    HeckePresentation h;
    h.m = m;
    h.p = p;
    h.r = r;
    if (m < 1 || p < 1 || m % p || r < 1) throw Error(Errc::InvalidArgument, "bad G(m,p,r) parameters");
    h.group = "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(r) + ")";
    for (const auto& rel : relations)
        if (rel.relation.degree() != rel.order)
            throw Error(Errc::DegreeMismatch, rel.orbit + " relation has degree " +
                                                  std::to_string(rel.relation.degree()) + ", expected " +
                                                  std::to_string(rel.order));
    h.relations = std::move(relations);

    bool transpositions_unipotent = true;
    const HeckeRelation* diag = nullptr;
    for (const auto& rel : h.relations) {
        if (rel.orbit == "diagonal")
            diag = &rel;
        else if (!(rel.relation == sign_poly(2, 0)))
            transpositions_unipotent = false;
    }
    if (!transpositions_unipotent) return h;
    auto count = [&](Rat q) {
        auto it = diag->relation.roots().find(q);
        return it == diag->relation.roots().end() ? 0 : it->second;
    };
    if (m == 1) {
        h.label = "H^{1,0}(" + h.group + ")";
    } else if (p == 1 && diag) {
        int a = count(Rat(0)), b = count(Rat(1, 2));
        if (a + b == m)
            h.label = "H^{" + std::to_string(a) + "," + std::to_string(b) + "}(" + h.group + ")";
    } else if (p == 2 && (!diag || count(Rat(0)) == m / 2)) {
        h.label = "H^{" + std::to_string(m / 2) + "}(" + h.group + ")";
    }
    return h;
}

std::string hecke_product_label(const std::vector<HeckePresentation>& factors) {
    if (factors.empty()) return "C";
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += " (x) ";
        if (!f.label.empty()) {
            s += f.label;
            continue;
        }
        s += "H(" + f.group + ";";
        for (const auto& rel : f.relations) s += " " + rel.orbit + ":" + rel.relation.factored();
        s += ")";
    }
    return s;
}

} // namespace gradecs
