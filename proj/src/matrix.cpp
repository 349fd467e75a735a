#include "gradecs/matrix.hpp"

#include "gradecs/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

namespace gradecs {

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

std::optional<IntMatrix> to_int(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).denominator() != 1) return std::nullopt;
            r(i, j) = m(i, j).numerator();
        }
    return r;
}

IntMatrix power(const IntMatrix& m, std::int64_t e) {
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).numerator() == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Rat inv = Rat(1) / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).numerator() == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Rat determinant(const RatMatrix& m) {
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).numerator() == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).numerator() == 0) continue;
            Rat f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::int64_t determinant(const IntMatrix& m) {
    Rat d = determinant(to_rat(m));
    return d.numerator();
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return rref(a).size();
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<RatVec> nullspace(const RatMatrix& m) {
    RatMatrix a = m;
    auto piv = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(a.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    RatVec x(m.cols(), Rat(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
    return x;
}

IntMatrix evaluate_poly(const IntVec& coeffs, const IntMatrix& m) {
    const std::size_t n = m.rows();
    IntMatrix acc(n, n);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeffs[k];
    }
    return acc;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct SmithWork {
    IntMatrix D, U, V, Vi;

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(i, c), D(j, c));
        for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, j));
        for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
        for (std::size_t c = 0; c < Vi.cols(); ++c) std::swap(Vi(i, c), Vi(j, c));
    }
    // row_j += q row_i
    void add_row(std::size_t j, std::size_t i, std::int64_t q) {
        for (std::size_t c = 0; c < D.cols(); ++c) D(j, c) += q * D(i, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U(j, c) += q * U(i, c);
    }
    // col_j += q col_i
    void add_col(std::size_t j, std::size_t i, std::int64_t q) {
        for (std::size_t r = 0; r < D.rows(); ++r) D(r, j) += q * D(r, i);
        for (std::size_t r = 0; r < V.rows(); ++r) V(r, j) += q * V(r, i);
        for (std::size_t c = 0; c < Vi.cols(); ++c) Vi(i, c) -= q * Vi(j, c);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) = -D(i, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()),
                IntMatrix::identity(a.cols())};
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t k = std::min(m, n);
    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            std::size_t pi = m, pj = n;
            std::int64_t best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    std::int64_t v = std::llabs(w.D(i, j));
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;
            if (pi != t) w.swap_rows(pi, t);
            if (pj != t) w.swap_cols(pj, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.D(i, t) == 0) continue;
                w.add_row(i, t, -floor_div(w.D(i, t), w.D(t, t)));
                if (w.D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.D(t, j) == 0) continue;
                w.add_col(j, t, -floor_div(w.D(t, j), w.D(t, t)));
                if (w.D(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (w.D(i, j) % w.D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad != m) {
                w.add_row(t, bad, 1);
                continue;
            }
            break;
        }
        if (w.D(t, t) < 0) w.negate_row(t);
    }
    SmithForm out{w.U, w.V, w.Vi, IntVec(k)};
    for (std::size_t t = 0; t < k; ++t) out.diagonal[t] = w.D(t, t);
    return out;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
    }
    os << ']';
    return os.str();
}

} // namespace gradecs
