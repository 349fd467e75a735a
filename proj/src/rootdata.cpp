#include "gradecs/rootdata.hpp"

#include "gradecs/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

namespace gradecs {

std::string to_string(TypeLabel t) {
    switch (t) {
    case TypeLabel::A: return "A";
    case TypeLabel::B: return "B";
    case TypeLabel::C: return "C";
    case TypeLabel::D: return "D";
    case TypeLabel::E6: return "E6";
    case TypeLabel::E7: return "E7";
    case TypeLabel::E8: return "E8";
    case TypeLabel::F4: return "F4";
    case TypeLabel::G2: return "G2";
    }
    return "?";
}

std::optional<TypeLabel> parse_type(const std::string& s, int rank) {
    if (s == "A") return TypeLabel::A;
    if (s == "B") return TypeLabel::B;
    if (s == "C") return TypeLabel::C;
    if (s == "D") return TypeLabel::D;
    if (s == "E6" || (s == "E" && rank == 6)) return TypeLabel::E6;
    if (s == "E7" || (s == "E" && rank == 7)) return TypeLabel::E7;
    if (s == "E8" || (s == "E" && rank == 8)) return TypeLabel::E8;
    if (s == "F4" || (s == "F" && rank == 4)) return TypeLabel::F4;
    if (s == "G2" || (s == "G" && rank == 2)) return TypeLabel::G2;
    return std::nullopt;
}

bool valid_type_rank(TypeLabel t, int rank) {
    switch (t) {
    case TypeLabel::A: return rank >= 1;
    case TypeLabel::B:
    case TypeLabel::C: return rank >= 2;
    case TypeLabel::D: return rank >= 4;
    case TypeLabel::E6: return rank == 6;
    case TypeLabel::E7: return rank == 7;
    case TypeLabel::E8: return rank == 8;
    case TypeLabel::F4: return rank == 4;
    case TypeLabel::G2: return rank == 2;
    }
    return false;
}

std::string type_name(TypeLabel t, int rank) {
    if (t <= TypeLabel::D) return to_string(t) + std::to_string(rank);
    return to_string(t);
}

LatticeAut::LatticeAut(IntMatrix m, std::int64_t max_order) : m_(std::move(m)) {
    auto d = determinant(m_);
    if (d != 1 && d != -1) throw Error(Errc::InvalidArgument, "lattice map is not invertible");
    const auto id = IntMatrix::identity(m_.rows());
    IntMatrix p = m_;
    for (order_ = 1; p != id; ++order_) {
        if (order_ >= max_order) throw Error(Errc::InvalidArgument, "lattice map of infinite order");
        p = p * m_;
    }
}

namespace {

// Symmetric form (doubled) for the exceptional types in Bourbaki numbering.
IntMatrix exceptional_form(TypeLabel t) {
    auto path = [](int n, std::vector<std::pair<int, int>> edges) {
        IntMatrix B(n, n);
        for (int i = 0; i < n; ++i) B(i, i) = 2;
        for (auto [a, b] : edges) B(a, b) = B(b, a) = -1;
        return B;
    };
    switch (t) {
    case TypeLabel::E6: return path(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
    case TypeLabel::E7: return path(7, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}});
    case TypeLabel::E8: return path(8, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}});
    case TypeLabel::F4:
        return IntMatrix::from_rows({{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
    case TypeLabel::G2: return IntMatrix::from_rows({{2, -3}, {-3, 6}});
    default: break;
    }
    throw Error(Errc::InvalidType, "not exceptional");
}

IntMatrix pairing_from_form(const IntMatrix& B) {
    const std::size_t n = B.rows();
    IntMatrix P(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) P(i, j) = 2 * B(i, j) / B(i, i);
    return P;
}

// Columns: simple coroots (or roots) in epsilon coordinates.
std::pair<IntMatrix, IntMatrix> epsilon_realization(TypeLabel t, int n) {
    const int ne = t == TypeLabel::A ? n + 1 : n;
    IntMatrix co(ne, n), ro(ne, n);
    for (int i = 0; i + 1 < ne && i < n; ++i) {
        co(i, i) = ro(i, i) = 1;
        co(i + 1, i) = ro(i + 1, i) = -1;
    }
    const int last = n - 1;
    switch (t) {
    case TypeLabel::A: break;
    case TypeLabel::B:
        co(last, last) = 2;
        ro(last, last) = 1;
        break;
    case TypeLabel::C:
        co(last, last) = 1;
        ro(last, last) = 2;
        break;
    case TypeLabel::D:
        co(last, last) = ro(last, last) = 1;
        co(last - 1, last) = ro(last - 1, last) = 1;
        break;
    default: break;
    }
    return {co, ro};
}

} // namespace

RootDatum RootDatum::build(TypeLabel type, int rank) {
    if (!valid_type_rank(type, rank))
        throw Error(Errc::InvalidType, to_string(type) + " of rank " + std::to_string(rank));
    RootDatum d;
    d.type_ = type;
    d.rank_ = rank;
    if (type <= TypeLabel::D) {
        auto [co, ro] = epsilon_realization(type, rank);
        d.eps_ = co;
        d.P_ = co.transpose() * ro;
    } else {
        d.P_ = pairing_from_form(exceptional_form(type));
    }
    d.populate();
    return d;
}

RootDatum RootDatum::from_pairing(const IntMatrix& P) {
    auto comps = identify_components(P);
    if (comps.size() != 1) throw Error(Errc::InvalidType, "pairing is not irreducible");
    RootDatum d;
    d.type_ = comps[0].type;
    d.rank_ = comps[0].rank;
    d.P_ = P;
    bool standard = true;
    for (int k = 0; k < d.rank_; ++k) standard = standard && comps[0].labeling[k] == k;
    if (standard && d.type_ <= TypeLabel::D) {
        auto ref = build(d.type_, d.rank_);
        if (ref.P_ == P) d.eps_ = ref.eps_;
    }
    d.populate();
    return d;
}

void RootDatum::populate() {
    const int n = rank_;
    // Procedure: squared lengths propagated along Dynkin edges, one component at a time
    len2_.assign(n, Rat(0));
    for (int s = 0; s < n; ++s) {
        if (len2_[s] != Rat(0)) continue;
        len2_[s] = 1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (j == i || P_(i, j) == 0 || len2_[j] != Rat(0)) continue;
                len2_[j] = len2_[i] * Rat(P_(i, j), P_(j, i));
                queue.push_back(j);
            }
        }
    }
    auto form = [&](const IntVec& a, const IntVec& b) {
        Rat s(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += a[i] * b[j] * len2_[i] * P_(i, j) / 2;
        return s;
    };

    std::set<IntVec> all;
    std::deque<IntVec> queue;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        for (int sgn : {1, -1}) {
            IntVec v = e;
            for (auto& x : v) x *= sgn;
            if (all.insert(v).second) queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        IntVec b = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            std::int64_t c = 0;
            for (int j = 0; j < n; ++j) c += b[j] * P_(i, j);
            if (c == 0) continue;
            IntVec r = b;
            r[i] -= c;
            if (all.insert(r).second) queue.push_back(std::move(r));
        }
    }
    std::vector<IntVec> pos;
    for (const auto& v : all)
        if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) > 0) pos.push_back(v);
    std::sort(pos.begin(), pos.end(), [](const IntVec& a, const IntVec& b) {
        auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
        auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
        return ha != hb ? ha < hb : a > b;
    });
    std::vector<IntVec> ordered = pos;
    for (const auto& v : pos) {
        IntVec w = v;
        for (auto& x : w) x = -x;
        ordered.push_back(std::move(w));
    }
    roots_.clear();
    by_coroot_.clear();
    by_coeffs_.clear();
    for (const auto& b : ordered) {
        Root r;
        r.coeffs = b;
        r.height = static_cast<int>(std::accumulate(b.begin(), b.end(), std::int64_t{0}));
        r.functional.assign(n, 0);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) r.functional[k] += b[j] * P_(k, j);
        Rat l = form(b, b);
        r.coroot.assign(n, 0);
        for (int j = 0; j < n; ++j) {
            Rat c = b[j] * len2_[j] / l;
            if (!is_integral(c)) throw Error(Errc::InvalidType, "non-integral coroot");
            r.coroot[j] = c.numerator();
        }
        by_coroot_[r.coroot] = roots_.size();
        by_coeffs_[r.coeffs] = roots_.size();
        roots_.push_back(std::move(r));
    }
}

std::size_t RootDatum::negative(std::size_t i) const {
    const std::size_t N = num_positive();
    return i < N ? i + N : i - N;
}

std::optional<std::size_t> RootDatum::index_of_coroot(const IntVec& c) const {
    auto it = by_coroot_.find(c);
    if (it == by_coroot_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> RootDatum::index_of_coeffs(const IntVec& c) const {
    auto it = by_coeffs_.find(c);
    if (it == by_coeffs_.end()) return std::nullopt;
    return it->second;
}

IntMatrix RootDatum::simple_reflection(int i) const {
    IntMatrix S = IntMatrix::identity(rank_);
    for (int k = 0; k < rank_; ++k) S(i, k) -= P_(k, i);
    return S;
}

IntMatrix RootDatum::reflection(std::size_t root) const {
    const auto& r = roots_[root];
    IntMatrix S = IntMatrix::identity(rank_);
    for (int a = 0; a < rank_; ++a)
        for (int k = 0; k < rank_; ++k) S(a, k) -= r.coroot[a] * r.functional[k];
    return S;
}

std::size_t RootDatum::act_on_root(const IntMatrix& w, std::size_t root) const {
    auto img = w * roots_[root].coroot;
    auto idx = index_of_coroot(img);
    if (!idx) throw Error(Errc::InvalidArgument, "map does not preserve the root system");
    return *idx;
}

std::vector<RatVec> RootDatum::fundamental_coweights() const {
    auto inv = inverse(to_rat(P_.transpose()));
    std::vector<RatVec> out;
    for (int i = 0; i < rank_; ++i) out.push_back(inv->column(i));
    return out;
}

FiniteAbelianGroup RootDatum::center() const { return FiniteAbelianGroup::kernel_of(P_.transpose()); }

std::int64_t RootDatum::weyl_order() const {
    auto fact = [](int k) {
        std::int64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    switch (type_) {
    case TypeLabel::A: return fact(rank_ + 1);
    case TypeLabel::B:
    case TypeLabel::C: return (std::int64_t{1} << rank_) * fact(rank_);
    case TypeLabel::D: return (std::int64_t{1} << (rank_ - 1)) * fact(rank_);
    case TypeLabel::E6: return 51840;
    case TypeLabel::E7: return 2903040;
    case TypeLabel::E8: return 696729600;
    case TypeLabel::F4: return 1152;
    case TypeLabel::G2: return 12;
    }
    return 0;
}

std::vector<Component> identify_components(const IntMatrix& P) {
    const int n = static_cast<int>(P.rows());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> groups;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        groups.emplace_back();
        std::deque<int> q{s};
        comp[s] = static_cast<int>(groups.size()) - 1;
        while (!q.empty()) {
            int i = q.front();
            q.pop_front();
            groups.back().push_back(i);
            for (int j = 0; j < n; ++j)
                if (j != i && P(i, j) != 0 && comp[j] < 0) {
                    comp[j] = comp[s];
                    q.push_back(j);
                }
        }
        std::sort(groups.back().begin(), groups.back().end());
    }

    std::vector<Component> out;
    for (const auto& g : groups) {
        const int k = static_cast<int>(g.size());
        auto nbrs = [&](int i) {
            std::vector<int> v;
            for (int j : g)
                if (j != i && P(i, j) != 0) v.push_back(j);
            return v;
        };
        // Walk a path starting at `start` away from `prev`.
        auto walk = [&](int start, int prev) {
            std::vector<int> path{start};
            for (;;) {
                int next = -1;
                for (int j : nbrs(path.back()))
                    if (j != prev) next = j;
                if (next < 0) break;
                prev = path.back();
                path.push_back(next);
            }
            return path;
        };
        Component c{TypeLabel::A, k, {}};
        if (k == 1) {
            c.labeling = {g[0]};
            out.push_back(c);
            continue;
        }
        int du = -1, dv = -1, product = 1;
        for (int i : g)
            for (int j : g)
                if (i < j && P(i, j) * P(j, i) > 1) {
                    du = i;
                    dv = j;
                    product = static_cast<int>(P(i, j) * P(j, i));
                }
        if (product == 3) {
            int shrt = std::llabs(P(du, dv)) == 3 ? du : dv;
            c.type = TypeLabel::G2;
            c.labeling = {shrt, shrt == du ? dv : du};
            out.push_back(c);
            continue;
        }
        std::vector<int> ends;
        int branch = -1;
        for (int i : g) {
            auto d = nbrs(i).size();
            if (d == 1) ends.push_back(i);
            if (d == 3) branch = i;
        }
        if (product == 2) {
            // short node s has |<coroot_s, alpha_l>| = 2
            int shrt = std::llabs(P(du, dv)) == 2 ? du : dv;
            int lng = shrt == du ? dv : du;
            if (k == 2) {
                c.type = TypeLabel::B;
                c.labeling = {lng, shrt};
            } else if (nbrs(du).size() == 2 && nbrs(dv).size() == 2) {
                c.type = TypeLabel::F4;
                int start = -1;
                for (int e : ends) {
                    auto path = walk(e, -1);
                    if (path[1] == lng) start = e;
                }
                c.labeling = walk(start, -1);
            } else {
                int end = nbrs(du).size() == 1 ? du : dv;
                int other = ends[0] == end ? ends[1] : ends[0];
                c.type = end == shrt ? TypeLabel::B : TypeLabel::C;
                c.labeling = walk(other, -1);
            }
            out.push_back(c);
            continue;
        }
        if (branch < 0) {
            c.type = TypeLabel::A;
            c.labeling = walk(std::min(ends[0], ends[1]), -1);
            out.push_back(c);
            continue;
        }
        std::vector<std::vector<int>> arms;
        for (int j : nbrs(branch)) arms.push_back(walk(j, branch));
        std::stable_sort(arms.begin(), arms.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        auto a = arms[0].size(), b = arms[1].size(), cc = arms[2].size();
        std::vector<int> lab;
        auto reversed = [](std::vector<int> v) {
            std::reverse(v.begin(), v.end());
            return v;
        };
        if (a == 1 && b == 1) {
            c.type = TypeLabel::D;
            lab = reversed(arms[2]);
            lab.push_back(branch);
            lab.push_back(arms[0][0]);
            lab.push_back(arms[1][0]);
        } else if (a == 1 && b == 2 && cc >= 2 && cc <= 4) {
            c.type = cc == 2 ? TypeLabel::E6 : (cc == 3 ? TypeLabel::E7 : TypeLabel::E8);
            // 1 3 4 5 ... along the long path, 2 on the short arm
            lab = {arms[1][1], arms[0][0], arms[1][0], branch};
            for (int j : arms[2]) lab.push_back(j);
        } else {
            throw Error(Errc::InvalidType, "not a finite Dynkin diagram");
        }
        c.labeling = lab;
        out.push_back(c);
    }
    return out;
}

bool same_type(TypeLabel a, int ra, TypeLabel b, int rb) {
    if (ra != rb) return false;
    auto norm = [](TypeLabel t, int r) {
        if (t == TypeLabel::C && r == 2) return TypeLabel::B;
        if (t == TypeLabel::D && r == 3) return TypeLabel::A;
        if ((t == TypeLabel::B || t == TypeLabel::C) && r == 1) return TypeLabel::A;
        return t;
    };
    return norm(a, ra) == norm(b, rb);
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm c;
    const std::size_t n = b.image.size();
    c.image.resize(n);
    c.sign.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.image[i] = a.image[b.image[i]];
        c.sign[i] = b.sign[i] * a.sign[b.image[i]];
    }
    return c;
}

IntMatrix signed_perm_matrix(const SignedPerm& s) {
    const std::size_t n = s.image.size();
    IntMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i) M(s.image[i], i) = s.sign[i];
    return M;
}

IntVec eps_to_coroot(const RootDatum& datum, const IntVec& v) {
    const int n = datum.rank();
    IntVec c(n);
    std::int64_t prefix = 0;
    for (int k = 0; k < n; ++k) {
        prefix += v[k];
        c[k] = prefix;
    }
    switch (datum.type()) {
    case TypeLabel::A: break;
    case TypeLabel::B:
        if (c[n - 1] % 2) throw Error(Errc::InvalidArgument, "vector outside the coroot lattice");
        c[n - 1] /= 2;
        break;
    case TypeLabel::C: break;
    case TypeLabel::D:
        if (c[n - 1] % 2) throw Error(Errc::InvalidArgument, "vector outside the coroot lattice");
        c[n - 1] /= 2;
        c[n - 2] -= c[n - 1];
        break;
    default: throw Error(Errc::InvalidType, "no epsilon realization");
    }
    return c;
}

IntMatrix coroot_matrix(const RootDatum& datum, const SignedPerm& s) {
    const IntMatrix& E = datum.epsilon_coroots();
    if (E.rows() == 0) throw Error(Errc::InvalidType, "no epsilon realization");
    const int n = datum.rank();
    IntMatrix M(n, n);
    IntVec img(E.rows());
    for (int j = 0; j < n; ++j) {
        std::fill(img.begin(), img.end(), 0);
        for (std::size_t i = 0; i < E.rows(); ++i)
            if (E(i, j)) img[s.image[i]] += s.sign[i] * E(i, j);
        auto c = eps_to_coroot(datum, img);
        for (int k = 0; k < n; ++k) M(k, j) = c[k];
    }
    return M;
}

WeylCode weyl_code(const RootDatum& datum, const IntMatrix& w) {
    WeylCode code = 0;
    for (int j = 0; j < datum.rank(); ++j)
        code |= static_cast<WeylCode>(datum.act_on_root(w, j)) << (8 * j);
    return code;
}

WeylCode weyl_code(const RootDatum& datum, const SignedPerm& s) {
    const IntMatrix& E = datum.epsilon_coroots();
    WeylCode code = 0;
    IntVec img(E.rows());
    for (int j = 0; j < datum.rank(); ++j) {
        std::fill(img.begin(), img.end(), 0);
        for (std::size_t i = 0; i < E.rows(); ++i)
            if (E(i, j)) img[s.image[i]] += s.sign[i] * E(i, j);
        auto idx = datum.index_of_coroot(eps_to_coroot(datum, img));
        if (!idx) throw Error(Errc::InvalidArgument, "not a Weyl group element");
        code |= static_cast<WeylCode>(*idx) << (8 * j);
    }
    return code;
}

std::optional<SignedPerm> as_signed_perm(const RootDatum& datum, const IntMatrix& w) {
    const IntMatrix& E = datum.epsilon_coroots();
    if (E.rows() == 0) return std::nullopt;
    const std::size_t ne = E.rows();
    if (datum.type() != TypeLabel::A) {
        auto T = to_int(to_rat(E * w) * *inverse(to_rat(E)));
        if (!T) return std::nullopt;
        SignedPerm s{std::vector<int>(ne, -1), std::vector<int>(ne, 0)};
        for (std::size_t j = 0; j < ne; ++j)
            for (std::size_t i = 0; i < ne; ++i) {
                auto v = (*T)(i, j);
                if (v == 0) continue;
                if ((v != 1 && v != -1) || s.image[j] >= 0) return std::nullopt;
                s.image[j] = static_cast<int>(i);
                s.sign[j] = static_cast<int>(v);
            }
        for (auto x : s.image)
            if (x < 0) return std::nullopt;
        if (signed_perm_matrix(s) != *T) return std::nullopt;
        return s;
    }
    const IntMatrix Ew = E * w;
    const std::size_t n = w.rows();
    for (int sg : {1, -1}) {
        std::vector<int> image(ne, -1);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            int plus = -1, minus = -1, other = 0;
            for (std::size_t i = 0; i < ne; ++i) {
                auto v = sg * Ew(i, j);
                if (v == 1 && plus < 0)
                    plus = static_cast<int>(i);
                else if (v == -1 && minus < 0)
                    minus = static_cast<int>(i);
                else if (v != 0)
                    ++other;
            }
            if (plus < 0 || minus < 0 || other) {
                ok = false;
                break;
            }
            if (j == 0) image[0] = plus;
            if (image[j] != plus) ok = false;
            image[j + 1] = minus;
        }
        if (!ok) continue;
        std::vector<int> seen(ne, 0);
        for (int x : image) ok = ok && x >= 0 && !seen[x]++;
        if (ok) return SignedPerm{image, std::vector<int>(ne, sg)};
    }
    return std::nullopt;
}

std::int64_t max_weyl_oracle_bound() {
    if (const char* env = std::getenv("GRADECS_MAX_WEYL_ORACLE")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 500000;
}

std::vector<WeylCode> weyl_centralizer_oracle(const RootDatum& datum, const LatticeAut& theta,
                                              std::int64_t bound) {
    if (datum.weyl_order() > bound)
        throw Error(Errc::OracleBoundExceeded,
                    "|W| = " + std::to_string(datum.weyl_order()) + " exceeds " + std::to_string(bound));
    const IntMatrix& Th = theta.matrix();
    std::vector<WeylCode> out;
    std::optional<SignedPerm> T;
    if (datum.classical() && datum.epsilon_coroots().rows() > 0) T = as_signed_perm(datum, Th);
    if (T) {
        const int ne = static_cast<int>(datum.epsilon_coroots().rows());
        const bool signs = datum.type() != TypeLabel::A;
        std::vector<int> perm(ne);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            const int masks = signs ? (1 << ne) : 1;
            for (int mask = 0; mask < masks; ++mask) {
                if (datum.type() == TypeLabel::D && __builtin_popcount(mask) % 2) continue;
                SignedPerm g{perm, std::vector<int>(ne, 1)};
                for (int i = 0; i < ne; ++i)
                    if (mask >> i & 1) g.sign[i] = -1;
                if (compose(g, *T) == compose(*T, g)) out.push_back(weyl_code(datum, g));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::set<IntMatrix> seen{IntMatrix::identity(datum.rank())};
        std::vector<IntMatrix> frontier(seen.begin(), seen.end());
        std::vector<IntMatrix> gens;
        for (int i = 0; i < datum.rank(); ++i) gens.push_back(datum.simple_reflection(i));
        while (!frontier.empty()) {
            std::vector<IntMatrix> next;
            for (const auto& x : frontier)
                for (const auto& s : gens) {
                    auto y = x * s;
                    if (seen.insert(y).second) next.push_back(std::move(y));
                }
            frontier = std::move(next);
        }
        for (const auto& w : seen)
            if (w * Th == Th * w) out.push_back(weyl_code(datum, w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gradecs
