#include "gradecs/grading.hpp"

#include "gradecs/cyclotomic.hpp"
#include "gradecs/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gradecs {

std::string family_tag(Family f) {
    switch (f) {
    case Family::AInner: return "A-inner";
    case Family::AOuterN: return "A-outer-rd";
    case Family::AOuterN1: return "A-outer-rd+1";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D1: return "D-rl";
    case Family::D2: return "D-rl+1";
    case Family::D43: return "D4-triality";
    case Family::E62: return "E6-twisted";
    case Family::Exceptional: return "exceptional-coxeter";
    }
    return "?";
}

int GradingDescriptor::block() const {
    switch (family) {
    case Family::AInner: return n + 1;
    case Family::AOuterN:
    case Family::AOuterN1: return static_cast<int>(m / 2);
    case Family::B:
    case Family::C:
    case Family::D1:
    case Family::D2: return static_cast<int>(m / 2);
    default: return 1;
    }
}

int GradingDescriptor::cartan_rank() const {
    if (family == Family::AOuterN && block() == 1) return r - 1;
    return r;
}

std::int64_t GradingDescriptor::weyl_m() const {
    switch (family) {
    case Family::AOuterN:
    case Family::AOuterN1: return m / 2;
    case Family::D43: return 4;
    case Family::E62: return 9;
    default: return m;
    }
}

std::int64_t GradingDescriptor::weyl_p() const { return family == Family::D1 ? 2 : 1; }

namespace {

std::string type_letter(TypeLabel t) { return to_string(t).substr(0, 1); }

} // namespace

std::string GradingDescriptor::key() const {
    std::ostringstream os;
    os << type_letter(type) << ":n=" << n << ":m=" << m << ":r=" << r << ":twist=" << twist;
    return os.str();
}

std::vector<GradingDescriptor> enumerate_stable_gradings(TypeLabel type, int n) {
    std::vector<GradingDescriptor> out;
    if (!valid_type_rank(type, n)) return out;
    auto add = [&](std::int64_t m, int twist, int r, Family f) { out.push_back({type, n, m, twist, r, f}); };
    switch (type) {
    case TypeLabel::A: {
        const int N = n + 1;
        add(N, 1, 1, Family::AInner);
        if (n >= 2) {
            for (int d = 1; d <= N; d += 2)
                if (N % d == 0) add(2 * d, 2, N / d, Family::AOuterN);
            for (int d = 3; d <= n; d += 2)
                if (n % d == 0) add(2 * d, 2, n / d, Family::AOuterN1);
        }
        break;
    }
    case TypeLabel::B:
    case TypeLabel::C:
        for (int l = 1; l <= n; ++l)
            if (n % l == 0) add(2 * l, 1, n / l, type == TypeLabel::B ? Family::B : Family::C);
        break;
    case TypeLabel::D:
        for (int l = 1; l <= n; ++l)
            if (n % l == 0) add(2 * l, (n / l) % 2 ? 2 : 1, n / l, Family::D1);
        for (int l = 2; l <= n - 1; ++l)
            if ((n - 1) % l == 0) add(2 * l, ((n - 1) / l) % 2 ? 1 : 2, (n - 1) / l, Family::D2);
        if (n == 4) add(12, 3, 1, Family::D43);
        break;
    case TypeLabel::E6:
        add(12, 1, 1, Family::Exceptional);
        add(18, 2, 1, Family::E62);
        break;
    case TypeLabel::E7: add(18, 1, 1, Family::Exceptional); break;
    case TypeLabel::E8: add(30, 1, 1, Family::Exceptional); break;
    case TypeLabel::F4: add(12, 1, 1, Family::Exceptional); break;
    case TypeLabel::G2: add(6, 1, 1, Family::Exceptional); break;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.n, a.m, a.twist, a.r, a.family) < std::tie(b.n, b.m, b.twist, b.r, b.family);
    });
    return out;
}

GradingDescriptor parse_case_key(const std::string& key) {
    std::vector<std::string> parts;
    std::stringstream ss(key);
    for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(tok);
    if (parts.size() < 3) throw Error(Errc::InvalidArgument, "case key needs at least T:n=..:m=..");
    std::map<std::string, long long> kv;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto eq = parts[i].find('=');
        if (eq == std::string::npos) throw Error(Errc::InvalidArgument, "malformed field '" + parts[i] + "'");
        try {
            std::size_t used = 0;
            kv[parts[i].substr(0, eq)] = std::stoll(parts[i].substr(eq + 1), &used);
            if (used != parts[i].size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error(Errc::InvalidArgument, "malformed field '" + parts[i] + "'");
        }
    }
    for (const auto& [k, v] : kv)
        if (k != "n" && k != "m" && k != "r" && k != "twist") throw Error(Errc::InvalidArgument, "unknown field " + k);
    if (!kv.count("n") || !kv.count("m")) throw Error(Errc::InvalidArgument, "case key needs n and m");
    const int n = static_cast<int>(kv["n"]);
    auto type = parse_type(parts[0], n);
    if (!type) throw Error(Errc::InvalidType, "unknown type '" + parts[0] + "'");
    if (!valid_type_rank(*type, n)) throw Error(Errc::InvalidType, key);
    std::vector<GradingDescriptor> hits;
    for (const auto& d : enumerate_stable_gradings(*type, n)) {
        if (d.m != kv["m"]) continue;
        if (kv.count("r") && d.r != kv["r"]) continue;
        if (kv.count("twist") && d.twist != kv["twist"]) continue;
        hits.push_back(d);
    }
    if (hits.empty()) throw Error(Errc::InvalidArgument, "no stable grading matches " + key);
    if (hits.size() > 1) throw Error(Errc::InvalidArgument, "ambiguous case key " + key + "; add r= and twist=");
    return hits.front();
}

SignedPerm ClassicalEmbedding::operator()(const MonomialElement& g, std::int64_t m) const {
    const int ne = static_cast<int>(tau.front().image.size());
    SignedPerm id{std::vector<int>(ne), std::vector<int>(ne, 1)};
    std::iota(id.image.begin(), id.image.end(), 0);
    SignedPerm bp = id;
    std::vector<int> pinv(blocks);
    for (int i = 0; i < blocks; ++i) {
        pinv[g.perm[i]] = i;
        for (int a = 0; a < block; ++a) bp.image[i * block + a] = g.perm[i] * block + a;
    }
    SignedPerm D = id;
    std::int64_t total = 0;
    for (int j = 0; j < blocks; ++j) {
        std::int64_t t = mod_floor(g.phases[pinv[j]], m);
        total += t;
        for (std::int64_t k = 0; k < t; ++k) D = compose(tau[j], D);
    }
    SignedPerm res = compose(D, bp);
    if (extra_sign >= 0 && total % 2) {
        SignedPerm t = id;
        t.sign[extra_sign] = -1;
        res = compose(t, res);
    }
    return res;
}

namespace {

SignedPerm identity_perm(int ne) {
    SignedPerm s{std::vector<int>(ne), std::vector<int>(ne, 1)};
    std::iota(s.image.begin(), s.image.end(), 0);
    return s;
}

// Cycle on positions offset..offset+len-1; the wrap-around step carries `wrap_sign`.
SignedPerm block_cycle(int ne, int offset, int len, int wrap_sign) {
    SignedPerm s = identity_perm(ne);
    for (int a = 0; a < len; ++a) s.image[offset + a] = offset + (a + 1) % len;
    s.sign[offset + len - 1] = wrap_sign;
    return s;
}

IntMatrix word_product(const RootDatum& d, const std::vector<int>& word) {
    IntMatrix w = IntMatrix::identity(d.rank());
    for (int i : word) w = w * d.simple_reflection(i);
    return w;
}

IntMatrix diagram_matrix(int n, const std::vector<int>& sigma) {
    IntMatrix M(n, n);
    for (int i = 0; i < n; ++i) M(sigma[i], i) = 1;
    return M;
}

std::string word_string(const std::vector<int>& word) {
    std::string s;
    for (int i : word) s += (s.empty() ? "s" : " s") + std::to_string(i + 1);
    return s;
}

} // namespace

GradedAutomorphism realize_theta(const GradingDescriptor& desc) {
    GradedAutomorphism a;
    a.desc = desc;
    a.datum = RootDatum::build(desc.type, desc.n);
    const int n = desc.n;
    a.diagram = IntMatrix::identity(n);
    IntMatrix th;
    switch (desc.family) {
    case Family::AInner:
    case Family::AOuterN:
    case Family::AOuterN1:
    case Family::B:
    case Family::C:
    case Family::D1:
    case Family::D2: {
        const int ne = static_cast<int>(a.datum.epsilon_coroots().rows());
        ClassicalEmbedding emb;
        emb.block = desc.block();
        emb.blocks = desc.family == Family::AInner ? 1 : desc.r;
        const bool type_a = desc.type == TypeLabel::A;
        for (int j = 0; j < emb.blocks; ++j)
            emb.tau.push_back(block_cycle(ne, j * emb.block, emb.block, type_a ? 1 : -1));
        SignedPerm theta = identity_perm(ne);
        for (const auto& t : emb.tau) theta = compose(t, theta);
        std::ostringstream word;
        if (desc.family == Family::AInner) {
            word << "N-cycle";
        } else if (type_a) {
            for (auto& s : theta.sign) s = -s;
            word << "-(product of " << emb.blocks << " cycles of length " << emb.block << ")";
        } else {
            word << "product of " << emb.blocks << " signed cycles of length " << emb.block;
        }
        if (desc.family == Family::D2) {
            emb.extra_sign = ne - 1;
            theta.sign[ne - 1] = -theta.sign[ne - 1];
            word << " times the sign change of the last coordinate";
        }
        a.eps_theta = theta;
        a.classical = emb;
        a.word = word.str();
        th = coroot_matrix(a.datum, theta);
        a.w = th;
        break;
    }
    case Family::Exceptional: {
        std::vector<int> word(n);
        std::iota(word.begin(), word.end(), 0);
        if (desc.type == TypeLabel::E6) word = {0, 3, 5, 2, 4, 1};
        th = word_product(a.datum, word);
        a.w = th;
        a.word = "Coxeter element " + word_string(word);
        a.cyclic_generator = th;
        break;
    }
    case Family::D43: {
        a.diagram = diagram_matrix(4, {2, 1, 3, 0});
        a.w = word_product(a.datum, {0, 1});
        th = a.w * a.diagram;
        a.word = "s1 s2 * triality";
        a.cyclic_generator = power(th, 3);
        break;
    }
    case Family::E62: {
        a.diagram = diagram_matrix(6, {5, 1, 4, 3, 2, 0});
        a.w = word_product(a.datum, {0, 1, 2, 3});
        th = a.w * a.diagram;
        a.word = "s1 s2 s3 s4 * diagram involution";
        a.cyclic_generator = power(th, 2);
        break;
    }
    }
    a.theta = LatticeAut(th, 10000);
    if (a.theta.order() != desc.m)
        throw Error(Errc::RealizationMismatch, desc.key() + ": theta has order " + std::to_string(a.theta.order()));
    return a;
}

namespace {

TorusElement coroot_product(int n, const std::vector<std::pair<int, Rat>>& factors) {
    TorusElement t(n, Rat(0));
    for (auto [j, v] : factors) t[j - 1] = frac(t[j - 1] + v);
    return t;
}

const Rat kHalf(1, 2);

// prod_{j=1}^{count} coroot_{start + 2j - 1}(-1)
void add_odd_run(std::vector<std::pair<int, Rat>>& f, int start, int count) {
    for (int j = 1; j <= count; ++j) f.push_back({start + 2 * j - 1, kHalf});
}

} // namespace

std::vector<std::pair<std::string, TorusElement>> lemma_generators(const GradingDescriptor& desc) {
    std::vector<std::pair<std::string, TorusElement>> out;
    const int n = desc.n, r = desc.r, l = desc.block();
    auto name = [](int k) { return "gamma" + std::to_string(k); };
    switch (desc.family) {
    case Family::AOuterN: {
        const int d = l;
        for (int k = 1; k <= r - 1; ++k) {
            std::vector<std::pair<int, Rat>> f;
            add_odd_run(f, (k - 1) * d, d);
            out.push_back({name(k), coroot_product(n, f)});
        }
        break;
    }
    case Family::AOuterN1: {
        const int d = l, half = (d - 1) / 2;
        for (int i = 1; i <= r; ++i) {
            std::vector<std::pair<int, Rat>> f;
            add_odd_run(f, (i - 1) * d, half);
            for (int j = i * d; j <= r * d; ++j) f.push_back({j, kHalf});
            out.push_back({name(i), coroot_product(n, f)});
        }
        break;
    }
    case Family::B:
    case Family::C:
    case Family::D1:
    case Family::D2: {
        const bool c_even = desc.family == Family::C && l % 2 == 0;
        for (int k = 1; k <= r - 1; ++k) {
            std::vector<std::pair<int, Rat>> f;
            add_odd_run(f, (k - 1) * l, c_even ? l / 2 : l);
            out.push_back({name(k), coroot_product(n, f)});
        }
        std::vector<std::pair<int, Rat>> f;
        switch (desc.family) {
        case Family::B: f.push_back({r * l, kHalf}); break;
        case Family::C: add_odd_run(f, (r - 1) * l, c_even ? l / 2 : (l + 1) / 2); break;
        case Family::D1:
            f.push_back({r * l - 1, kHalf});
            f.push_back({r * l, kHalf});
            break;
        default:
            if (l % 2 == 0) {
                f.push_back({r * l, Rat(1, 4)});
                f.push_back({r * l + 1, Rat(3, 4)});
                add_odd_run(f, (r - 1) * l, l / 2);
            } else {
                add_odd_run(f, (r - 1) * l, (l + 1) / 2);
                out.push_back({name(r), coroot_product(n, f)});
                f = {{r * l, kHalf}, {r * l + 1, kHalf}};
                out.push_back({name(r + 1), coroot_product(n, f)});
                return out;
            }
        }
        out.push_back({name(r), coroot_product(n, f)});
        break;
    }
    default: break;
    }
    return out;
}

std::vector<std::pair<std::string, TorusElement>> center_generators(TypeLabel type, int n, int twist) {
    std::vector<std::pair<std::string, TorusElement>> out;
    std::vector<std::pair<int, Rat>> f;
    if (twist == 1) {
        switch (type) {
        case TypeLabel::A:
            for (int j = 1; j <= n; ++j) f.push_back({j, Rat(n + 1 - j, n + 1)});
            out.push_back({"z", coroot_product(n, f)});
            break;
        case TypeLabel::B: out.push_back({"z", coroot_product(n, {{n, kHalf}})}); break;
        case TypeLabel::C:
            add_odd_run(f, 0, (n - 1) / 2 + 1);
            out.push_back({"z", coroot_product(n, f)});
            break;
        case TypeLabel::D:
            if (n % 2 == 0) {
                add_odd_run(f, 0, n / 2);
            } else {
                f = {{n - 1, Rat(1, 4)}, {n, Rat(3, 4)}};
                add_odd_run(f, 0, (n - 1) / 2);
            }
            out.push_back({"z1", coroot_product(n, f)});
            out.push_back({"z2", coroot_product(n, {{n - 1, kHalf}, {n, kHalf}})});
            break;
        case TypeLabel::E6:
            out.push_back({"z", coroot_product(6, {{1, Rat(1, 3)}, {3, Rat(2, 3)}, {5, Rat(1, 3)}, {6, Rat(2, 3)}})});
            break;
        case TypeLabel::E7: out.push_back({"z", coroot_product(7, {{2, kHalf}, {5, kHalf}, {7, kHalf}})}); break;
        default: break;
        }
    } else if (twist == 2) {
        if (type == TypeLabel::A && (n + 1) % 2 == 0) {
            add_odd_run(f, 0, (n + 1) / 2);
            out.push_back({"z", coroot_product(n, f)});
        } else if (type == TypeLabel::D) {
            out.push_back({"z2", coroot_product(n, {{n - 1, kHalf}, {n, kHalf}})});
        }
    }
    return out;
}

std::vector<TorusElement> center_image_generators(const RootDatum& datum,
                                                  const std::vector<std::vector<int>>& diagram_orbits) {
    auto w = datum.fundamental_coweights();
    std::vector<TorusElement> out;
    if (diagram_orbits.empty()) {
        for (const auto& v : w) out.push_back(frac(v));
        return out;
    }
    for (const auto& orb : diagram_orbits) {
        TorusElement t(datum.rank(), Rat(0));
        for (int i : orb) t = add(t, frac(w[i]));
        out.push_back(t);
    }
    return out;
}

std::vector<std::vector<int>> standard_diagram_orbits(TypeLabel type, int n, int twist) {
    std::vector<std::vector<int>> orbits;
    if (twist == 1) {
        for (int i = 0; i < n; ++i) orbits.push_back({i});
        return orbits;
    }
    switch (type) {
    case TypeLabel::A:
        for (int i = 0; i < n - 1 - i; ++i) orbits.push_back({i, n - 1 - i});
        if (n % 2) orbits.push_back({n / 2});
        break;
    case TypeLabel::D:
        if (twist == 3) return {{0, 2, 3}, {1}};
        for (int i = 0; i < n - 2; ++i) orbits.push_back({i});
        orbits.push_back({n - 2, n - 1});
        break;
    case TypeLabel::E6: return {{0, 5}, {1}, {2, 4}, {3}};
    default: break;
    }
    return orbits;
}

std::int64_t twisted_mark(TypeLabel type, int n, int twist, const std::vector<int>& orbit) {
    auto has = [&](int i) { return std::find(orbit.begin(), orbit.end(), i) != orbit.end(); };
    if (twist == 1) return RootDatum::build(type, n).marks()[orbit.front()];
    switch (type) {
    case TypeLabel::A:
        if (n % 2 == 0) return 2;
        return (has(0) || (orbit.size() == 1 && orbit.front() == n / 2)) ? 1 : 2;
    case TypeLabel::D:
        if (twist == 3) return has(1) ? 1 : 2;
        return 1;
    case TypeLabel::E6:
        if (has(1)) return 1;
        if (has(2)) return 3;
        return 2;
    default: break;
    }
    throw Error(Errc::InvalidArgument, "no twisted marks for " + type_name(type, n));
}

Grading build_grading(const GradingDescriptor& desc) {
    Grading g;
    g.aut = realize_theta(desc);
    const auto& datum = g.aut.datum;
    const IntMatrix& Th = g.aut.theta.matrix();
    const std::int64_t m = desc.m;
    const int n = datum.rank();

    // Procedure: multiplicity of each primitive d-th root from ker Phi_d(theta)
    std::map<std::int64_t, int> per_root;
    for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d) continue;
        auto M = evaluate_poly(cyclotomic_polynomial(d), Th);
        int ker = n - static_cast<int>(rank(to_rat(M)));
        per_root[d] = ker / static_cast<int>(euler_phi(d));
    }
    g.torus_dims.resize(m);
    for (std::int64_t i = 0; i < m; ++i) g.torus_dims[i] = per_root[m / std::gcd(i, m)];
    if (g.torus_dims[1 % m] != desc.cartan_rank())
        throw Error(Errc::RealizationMismatch, desc.key() + ": zeta_m-eigenspace has dimension " +
                                                   std::to_string(g.torus_dims[1 % m]));

    const std::size_t R = datum.roots().size();
    g.theta_on_roots.resize(R);
    for (std::size_t i = 0; i < R; ++i) g.theta_on_roots[i] = datum.act_on_root(Th, i);
    std::vector<char> seen(R, 0);
    for (std::size_t i = 0; i < R; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit;
        for (std::size_t j = i; !seen[j]; j = g.theta_on_roots[j]) {
            seen[j] = 1;
            orbit.push_back(j);
        }
        if (static_cast<std::int64_t>(orbit.size()) != m)
            throw Error(Errc::RealizationMismatch, desc.key() + ": root orbit of size " + std::to_string(orbit.size()));
        g.root_orbits.push_back(std::move(orbit));
    }
    g.eigenspace_dims.resize(m);
    for (std::int64_t i = 0; i < m; ++i)
        g.eigenspace_dims[i] = g.torus_dims[i] + static_cast<int>(R / m);

    g.I = FiniteAbelianGroup::kernel_of(Th - IntMatrix::identity(n));
    auto named = lemma_generators(desc);
    if (named.empty() && (desc.family == Family::AInner || desc.family == Family::Exceptional))
        named = center_generators(desc.type, n, 1);
    if (named.empty())
        for (std::size_t i = 0; i < g.I.generators().size(); ++i)
            named.push_back({"g" + std::to_string(i + 1), g.I.generators()[i]});
    for (auto& [name, t] : named) g.I.add_named(name, t);

    g.Wa = ReflectionGroup::build(desc.weyl_m(), desc.weyl_p(), desc.r);
    if (g.aut.classical) {
        auto emb = *g.aut.classical;
        auto dat = datum;
        const std::int64_t mw = desc.weyl_m();
        g.Wa.attach_embedding([emb, dat, mw](const MonomialElement& x) { return coroot_matrix(dat, emb(x, mw)); });
    } else {
        auto gen = g.aut.cyclic_generator;
        g.Wa.attach_embedding([gen](const MonomialElement& x) { return power(gen, x.phases[0]); });
    }
    for (const auto& s : g.Wa.generators()) {
        auto M = g.Wa.embed(s);
        if (M * Th != Th * M)
            throw Error(Errc::RealizationMismatch, desc.key() + ": little Weyl group generator does not commute");
    }

    g.diagram_orbits = standard_diagram_orbits(desc.type, n, desc.twist);
    if (desc.rank_one()) {
        if (desc.twist == 1) {
            g.marks_used = datum.marks();
        } else {
            g.marks_used.assign(n, 0);
            for (const auto& orb : g.diagram_orbits)
                for (int i : orb) g.marks_used[i] = twisted_mark(desc.type, n, desc.twist, orb);
        }
    }
    return g;
}

WeylCode Grading::code(const MonomialElement& x) const {
    if (aut.classical) return weyl_code(datum(), (*aut.classical)(x, desc().weyl_m()));
    return weyl_code(datum(), Wa.embed(x));
}

std::vector<WeylCode> little_weyl_group_codes(const Grading& g, std::int64_t bound) {
    std::vector<WeylCode> out;
    for (const auto& x : g.Wa.elements(bound)) out.push_back(g.code(x));
    std::sort(out.begin(), out.end());
    return out;
}

void check_little_weyl_group(const Grading& g, std::int64_t bound) {
    auto oracle = weyl_centralizer_oracle(g.datum(), g.aut.theta, bound);
    auto ours = little_weyl_group_codes(g);
    if (std::adjacent_find(ours.begin(), ours.end()) != ours.end())
        throw Error(Errc::OracleDisagreement, g.desc().key() + ": embedding is not injective");
    if (oracle != ours)
        throw Error(Errc::OracleDisagreement, g.desc().key() + ": |oracle| = " + std::to_string(oracle.size()) +
                                                  ", |W_a| = " + std::to_string(ours.size()));
}

} // namespace gradecs
