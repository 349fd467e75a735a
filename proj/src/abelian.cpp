#include "gradecs/abelian.hpp"

#include "gradecs/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gradecs {

Rat pair(const Weight& phi, const TorusElement& t) {
    Rat s(0);
    for (std::size_t i = 0; i < phi.size(); ++i) s += phi[i] * t[i];
    return frac(s);
}

TorusElement add(const TorusElement& a, const TorusElement& b) {
    TorusElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = frac(a[i] + b[i]);
    return c;
}

TorusElement scale(std::int64_t k, const TorusElement& a) {
    TorusElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = frac(a[i] * k);
    return c;
}

TorusElement act(const IntMatrix& w, const TorusElement& t) {
    TorusElement c(w.rows(), Rat(0));
    for (std::size_t i = 0; i < w.rows(); ++i) {
        for (std::size_t j = 0; j < w.cols(); ++j) c[i] += w(i, j) * t[j];
        c[i] = frac(c[i]);
    }
    return c;
}

std::int64_t element_order(const TorusElement& t) {
    std::int64_t o = 1;
    for (const auto& q : t) o = std::lcm(o, frac(q).denominator());
    return o;
}

std::vector<TorusElement> generated_subgroup(const std::vector<TorusElement>& gens) {
    if (gens.empty()) return {};
    std::set<TorusElement> seen;
    std::vector<TorusElement> frontier{TorusElement(gens.front().size(), Rat(0))};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<TorusElement> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = add(x, g);
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

FiniteAbelianGroup FiniteAbelianGroup::kernel_of(const IntMatrix& A) {
    // Procedure: U A V = D, then t = V u with D u integral
    auto snf = smith_normal_form(A);
    FiniteAbelianGroup g;
    g.V_ = snf.V;
    g.Vinv_ = snf.V_inv;
    g.diagonal_ = snf.diagonal;
    const std::size_t n = A.cols();
    if (snf.diagonal.size() < n) throw Error(Errc::InfiniteFixedGroup, "matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t d = snf.diagonal[i];
        if (d == 0) throw Error(Errc::InfiniteFixedGroup, "fixed-point group is not finite");
        if (d == 1) continue;
        g.factors_.push_back(d);
        g.slots_.push_back(i);
        TorusElement t(n);
        for (std::size_t r = 0; r < n; ++r) t[r] = frac(Rat(snf.V(r, i), d));
        g.gens_.push_back(std::move(t));
    }
    return g;
}

std::int64_t FiniteAbelianGroup::order() const {
    std::int64_t o = 1;
    for (auto d : factors_) o *= d;
    return o;
}

std::int64_t FiniteAbelianGroup::exponent() const {
    std::int64_t e = 1;
    for (auto d : factors_) e = std::lcm(e, d);
    return e;
}

IntVec FiniteAbelianGroup::coordinates(const TorusElement& t) const {
    IntVec k(factors_.size());
    for (std::size_t a = 0; a < factors_.size(); ++a) {
        const std::size_t i = slots_[a];
        Rat u(0);
        for (std::size_t j = 0; j < dim(); ++j) u += Vinv_(i, j) * t[j];
        Rat scaled = u * factors_[a];
        if (!is_integral(scaled)) throw Error(Errc::InvalidArgument, "element not in group");
        k[a] = mod_floor(scaled.numerator(), factors_[a]);
    }
    return k;
}

bool FiniteAbelianGroup::contains(const TorusElement& t) const {
    // u = V^{-1} t must satisfy d_i u_i in Z for every i (u_i in Z where d_i = 1)
    for (std::size_t i = 0; i < dim(); ++i) {
        Rat u(0);
        for (std::size_t j = 0; j < dim(); ++j) u += Vinv_(i, j) * t[j];
        if (!is_integral(u * diagonal_[i])) return false;
    }
    return true;
}

TorusElement FiniteAbelianGroup::element(const IntVec& coords) const {
    TorusElement t(dim(), Rat(0));
    for (std::size_t a = 0; a < gens_.size(); ++a) t = add(t, scale(coords[a], gens_[a]));
    return t;
}

namespace {

std::vector<IntVec> all_coordinates(const IntVec& factors) {
    std::vector<IntVec> out;
    IntVec k(factors.size(), 0);
    for (;;) {
        out.push_back(k);
        std::size_t a = factors.size();
        while (a-- > 0) {
            if (++k[a] < factors[a]) break;
            k[a] = 0;
        }
        if (a == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

} // namespace

std::vector<TorusElement> FiniteAbelianGroup::elements() const {
    std::vector<TorusElement> out;
    for (const auto& k : all_coordinates(factors_)) out.push_back(element(k));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> FiniteAbelianGroup::characters() const { return all_coordinates(factors_); }

Rat FiniteAbelianGroup::evaluate(const IntVec& chi, const TorusElement& t) const {
    auto k = coordinates(t);
    Rat s(0);
    for (std::size_t a = 0; a < k.size(); ++a) s += Rat(chi[a] * k[a], factors_[a]);
    return frac(s);
}

Weight FiniteAbelianGroup::weight_of(const IntVec& chi) const {
    // phi = k V^{-1} with k placed at the SNF slots
    Weight phi(dim(), 0);
    for (std::size_t a = 0; a < slots_.size(); ++a)
        for (std::size_t j = 0; j < dim(); ++j) phi[j] += chi[a] * Vinv_(slots_[a], j);
    return phi;
}

IntVec FiniteAbelianGroup::character_of(const Weight& phi) const {
    IntVec k(factors_.size());
    for (std::size_t a = 0; a < factors_.size(); ++a) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < dim(); ++j) s += phi[j] * V_(j, slots_[a]);
        k[a] = mod_floor(s, factors_[a]);
    }
    return k;
}

void FiniteAbelianGroup::add_named(std::string name, TorusElement t) {
    named_.emplace_back(std::move(name), frac(t));
}

std::string to_string(const TorusElement& t) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << to_string(t[i]);
    os << ')';
    return os.str();
}

} // namespace gradecs
