#include "gradecs/cyclotomic.hpp"

#include "gradecs/errors.hpp"
#include "gradecs/matrix.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace gradecs {

namespace {

void check_modulus(std::int64_t m) {
    if (m < 1) throw Error(Errc::InvalidArgument, "cyclotomic modulus must be positive");
    if (m > kMaxModulus) throw Error(Errc::ModulusOverflow, "modulus " + std::to_string(m));
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    std::int64_t g = std::gcd(a, b);
    __int128 l = static_cast<__int128>(a / g) * b;
    if (l > kMaxModulus) throw Error(Errc::ModulusOverflow, "lcm of moduli exceeds bound");
    return static_cast<std::int64_t>(l);
}

int moebius(std::int64_t n) {
    int mu = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Multiply or divide (exactly) by x^d - 1; both are linear-time.
void mul_binomial(IntVec& p, std::int64_t d) {
    IntVec out(p.size() + d, 0);
    for (std::size_t e = 0; e < p.size(); ++e) {
        out[e + d] += p[e];
        out[e] -= p[e];
    }
    p = std::move(out);
}

void div_binomial(IntVec& p, std::int64_t d) {
    // q(x) (x^d - 1) = p(x): q[e] = -p[e] + q[e - d]
    IntVec q(p.size() - d, 0);
    for (std::size_t e = 0; e < q.size(); ++e)
        q[e] = -p[e] + (e >= static_cast<std::size_t>(d) ? q[e - d] : 0);
    p = std::move(q);
}

// Reduce an arbitrary power-series prefix to the canonical basis of Q(zeta_m).
std::vector<Rat> reduce(std::vector<Rat> p, std::int64_t m) {
    if (static_cast<std::int64_t>(p.size()) > m) {
        std::vector<Rat> folded(m, Rat(0));
        for (std::size_t e = 0; e < p.size(); ++e) folded[e % m] += p[e];
        p = std::move(folded);
    }
    const IntVec& phi = cyclotomic_polynomial(m);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t e = p.size(); e-- > deg;) {
        Rat c = p[e];
        if (c == Rat(0)) continue;
        for (std::size_t j = 0; j <= deg; ++j) p[e - deg + j] -= c * phi[j];
    }
    p.resize(deg, Rat(0));
    return p;
}

} // namespace

std::int64_t euler_phi(std::int64_t m) {
    std::int64_t result = m;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const IntVec& cyclotomic_polynomial(std::int64_t m) {
    static std::mutex mu;
    static std::unordered_map<std::int64_t, IntVec> cache;
    check_modulus(m);
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    // Procedure: Moebius product over divisors
    IntVec p{1};
    std::vector<std::int64_t> denominators;
    for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d) continue;
        int s = moebius(m / d);
        if (s > 0) mul_binomial(p, d);
        if (s < 0) denominators.push_back(d);
    }
    for (auto d : denominators) div_binomial(p, d);
    return cache.emplace(m, std::move(p)).first->second;
}

CycloNum::CycloNum(std::int64_t modulus, std::vector<Rat> coeffs) : modulus_(modulus) {
    check_modulus(modulus);
    coeffs_ = reduce(std::move(coeffs), modulus);
}

CycloNum CycloNum::rational(Rat q, std::int64_t modulus) {
    return CycloNum(modulus, std::vector<Rat>{q});
}

CycloNum CycloNum::zeta(std::int64_t modulus, std::int64_t power) {
    check_modulus(modulus);
    std::int64_t e = mod_floor(power, modulus);
    std::vector<Rat> c(e + 1, Rat(0));
    c[e] = 1;
    return CycloNum(modulus, std::move(c));
}

CycloNum CycloNum::root_of_unity(Rat q) {
    Rat f = frac(q);
    return zeta(f.denominator(), f.numerator());
}

bool CycloNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& q) { return q == Rat(0); });
}

std::optional<Rat> CycloNum::as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != Rat(0)) return std::nullopt;
    return coeffs_.empty() ? Rat(0) : coeffs_[0];
}

CycloNum CycloNum::coerce(std::int64_t L) const {
    if (L == modulus_) return *this;
    if (L % modulus_ != 0) throw Error(Errc::InvalidArgument, "coercion target not a multiple");
    const std::int64_t s = L / modulus_;
    std::vector<Rat> c(s * (coeffs_.size() - 1) + 1, Rat(0));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) c[e * s] = coeffs_[e];
    return CycloNum(L, std::move(c));
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    const std::int64_t L = checked_lcm(a.modulus_, b.modulus_);
    CycloNum x = a.coerce(L), y = b.coerce(L);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

CycloNum operator-(const CycloNum& a) {
    CycloNum x = a;
    for (auto& q : x.coeffs_) q = -q;
    return x;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    const std::int64_t L = checked_lcm(a.modulus_, b.modulus_);
    CycloNum x = a.coerce(L), y = b.coerce(L);
    std::vector<Rat> c(x.coeffs_.size() + y.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == Rat(0)) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return CycloNum(L, std::move(c));
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    const std::int64_t L = checked_lcm(a.modulus_, b.modulus_);
    return a.coerce(L).coeffs_ == b.coerce(L).coeffs_;
}

CycloNum CycloNum::inv() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    const std::size_t n = coeffs_.size();
    // Procedure: solve (a * b = 1) with the multiplication matrix of a
    RatMatrix mat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> shifted(j + n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) shifted[i + j] = coeffs_[i];
        auto col = reduce(std::move(shifted), modulus_);
        for (std::size_t i = 0; i < n; ++i) mat(i, j) = col[i];
    }
    RatVec e(n, Rat(0));
    e[0] = 1;
    auto sol = solve(mat, e);
    return CycloNum(modulus_, *sol);
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        Rat c = coeffs_[e];
        if (c == Rat(0)) continue;
        bool neg = c < 0;
        Rat a = neg ? -c : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << gradecs::to_string(a);
            continue;
        }
        if (a != Rat(1)) os << gradecs::to_string(a) << '*';
        os << "E(" << modulus_ << ')';
        if (e > 1) os << '^' << e;
    }
    if (first) os << '0';
    return os.str();
}

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::mul: return a * b;
    case ArithOp::inv: return a.inv();
    }
    return a;
}

CycloPoly::CycloPoly(std::vector<CycloNum> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void CycloPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    modulus_ = 1;
    for (const auto& c : coeffs_) modulus_ = checked_lcm(modulus_, c.modulus());
    for (auto& c : coeffs_) c = c.coerce(modulus_);
}

CycloPoly CycloPoly::constant(const CycloNum& c) { return CycloPoly({c}); }

CycloPoly CycloPoly::monomial(const CycloNum& c, std::size_t degree) {
    std::vector<CycloNum> v(degree + 1, CycloNum::rational(0, c.modulus()));
    v[degree] = c;
    return CycloPoly(std::move(v));
}

CycloPoly CycloPoly::binomial(std::size_t k, const CycloNum& c) {
    std::vector<CycloNum> v(k + 1, CycloNum::rational(0, c.modulus()));
    v[k] = CycloNum::rational(1, c.modulus());
    v[0] = v[0] - c;
    return CycloPoly(std::move(v));
}

CycloNum CycloPoly::coeff(std::size_t e) const {
    if (e < coeffs_.size()) return coeffs_[e];
    return CycloNum::rational(0, modulus_);
}

CycloPoly CycloPoly::monic() const {
    if (is_zero()) return *this;
    CycloNum s = coeffs_.back().inv();
    std::vector<CycloNum> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c * s);
    return CycloPoly(std::move(v));
}

CycloPoly CycloPoly::compose_power(std::int64_t d) const {
    if (is_zero()) return *this;
    std::vector<CycloNum> v(d * degree() + 1, CycloNum::rational(0, modulus_));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) v[e * d] = coeffs_[e];
    return CycloPoly(std::move(v));
}

CycloPoly operator+(const CycloPoly& a, const CycloPoly& b) {
    std::vector<CycloNum> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t e = 0; e < v.size(); ++e) v[e] = a.coeff(e) + b.coeff(e);
    return CycloPoly(std::move(v));
}

CycloPoly operator-(const CycloPoly& a, const CycloPoly& b) {
    std::vector<CycloNum> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t e = 0; e < v.size(); ++e) v[e] = a.coeff(e) - b.coeff(e);
    return CycloPoly(std::move(v));
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
    if (a.is_zero() || b.is_zero()) return CycloPoly();
    const std::int64_t L = checked_lcm(a.modulus_, b.modulus_);
    std::vector<CycloNum> v(a.coeffs_.size() + b.coeffs_.size() - 1, CycloNum::rational(0, L));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return CycloPoly(std::move(v));
}

bool operator==(const CycloPoly& a, const CycloPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t e = 0; e < a.coeffs_.size(); ++e)
        if (!(a.coeffs_[e] == b.coeffs_[e])) return false;
    return true;
}

std::string CycloPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = coeffs_.size(); e-- > 0;) {
        const CycloNum& c = coeffs_[e];
        if (c.is_zero()) continue;
        std::string mono = e == 0 ? "" : (e == 1 ? "x" : "x^" + std::to_string(e));
        auto q = c.as_rational();
        if (q) {
            bool neg = *q < 0;
            Rat a = neg ? -*q : *q;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            if (a != Rat(1) || mono.empty()) os << gradecs::to_string(a);
            os << mono;
        } else {
            os << (first ? "" : " + ") << '(' << c.to_string() << ')' << mono;
        }
        first = false;
    }
    return os.str();
}

std::optional<CycloPoly> poly_substitute_power(const CycloPoly& R, std::int64_t d) {
    if (d < 1) throw Error(Errc::InvalidArgument, "substitution power must be positive");
    if (R.is_zero()) return R;
    std::vector<CycloNum> v(R.degree() / d + 1, CycloNum::rational(0, R.modulus()));
    for (std::size_t e = 0; e < R.coeffs().size(); ++e) {
        if (R.coeffs()[e].is_zero()) continue;
        if (static_cast<std::int64_t>(e) % d != 0) return std::nullopt;
        v[e / d] = R.coeffs()[e];
    }
    return CycloPoly(std::move(v));
}

std::int64_t max_extractable_power(const CycloPoly& R) {
    std::int64_t g = 0;
    std::int64_t e0 = -1;
    for (std::size_t e = 0; e < R.coeffs().size(); ++e) {
        if (R.coeffs()[e].is_zero()) continue;
        if (e0 < 0)
            e0 = static_cast<std::int64_t>(e);
        else
            g = std::gcd(g, static_cast<std::int64_t>(e) - e0);
    }
    return g == 0 ? 1 : g;
}

UnitRootPoly UnitRootPoly::binomial(std::int64_t k, Rat c) {
    UnitRootPoly p;
    Rat base = frac(c);
    for (std::int64_t j = 0; j < k; ++j) p.roots_[frac((base + j) / k)] += 1;
    return p;
}

int UnitRootPoly::degree() const {
    int d = 0;
    for (const auto& [q, mult] : roots_) d += mult;
    return d;
}

UnitRootPoly operator*(const UnitRootPoly& a, const UnitRootPoly& b) {
    UnitRootPoly p = a;
    for (const auto& [q, mult] : b.roots_) p.roots_[q] += mult;
    return p;
}

CycloPoly UnitRootPoly::expand() const {
    std::int64_t L = 1;
    for (const auto& [q, mult] : roots_) L = checked_lcm(L, q.denominator());
    std::vector<CycloNum> coeffs{CycloNum::rational(1, L)};
    for (const auto& [q, mult] : roots_) {
        CycloNum z = CycloNum::zeta(L, (q * L).numerator());
        for (int t = 0; t < mult; ++t) {
            std::vector<CycloNum> next(coeffs.size() + 1, CycloNum::rational(0, L));
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] = next[i + 1] + coeffs[i];
                next[i] = next[i] - z * coeffs[i];
            }
            coeffs = std::move(next);
        }
    }
    return CycloPoly(std::move(coeffs));
}

std::optional<UnitRootPoly> UnitRootPoly::substitute_power(std::int64_t d) const {
    if (d < 1) throw Error(Errc::InvalidArgument, "substitution power must be positive");
    UnitRootPoly g;
    for (const auto& [q, mult] : roots_) {
        Rat y = frac(q * d);
        for (std::int64_t j = 0; j < d; ++j) {
            auto it = roots_.find(frac((y + j) / d));
            if (it == roots_.end() || it->second != mult) return std::nullopt;
        }
        g.roots_[y] = mult;
    }
    return g;
}

UnitRootPoly UnitRootPoly::compose_power(std::int64_t d) const {
    UnitRootPoly p;
    for (const auto& [y, mult] : roots_)
        for (std::int64_t j = 0; j < d; ++j) p.roots_[frac((y + j) / d)] += mult;
    return p;
}

std::int64_t UnitRootPoly::max_extractable_power() const {
    const int deg = degree();
    for (int d = deg; d > 1; --d)
        if (deg % d == 0 && substitute_power(d)) return d;
    return 1;
}

std::vector<UnitRootPoly::Factor> UnitRootPoly::binomial_factors() const {
    std::map<Rat, int> left = roots_;
    std::map<std::pair<std::int64_t, Rat>, int> found;
    auto remaining = [&] {
        int d = 0;
        for (const auto& [q, m] : left) d += m;
        return d;
    };
    while (remaining() > 0) {
        bool extracted = false;
        for (std::int64_t k = remaining(); k >= 1 && !extracted; --k) {
            for (const auto& [q, mult] : left) {
                if (mult == 0) continue;
                Rat c = frac(q * k);
                int times = -1;
                for (std::int64_t j = 0; j < k; ++j) {
                    auto it = left.find(frac((c + j) / k));
                    int have = it == left.end() ? 0 : it->second;
                    times = times < 0 ? have : std::min(times, have);
                }
                if (times <= 0) continue;
                for (std::int64_t j = 0; j < k; ++j) left[frac((c + j) / k)] -= times;
                found[{k, c}] += times;
                extracted = true;
                break;
            }
        }
    }
    std::vector<Factor> out;
    for (const auto& [key, mult] : found) out.push_back({key.first, key.second, mult});
    return out;
}

std::string format_root_of_unity(Rat c) {
    c = frac(c);
    if (c == Rat(0)) return "1";
    if (c == Rat(1, 2)) return "-1";
    if (c == Rat(1, 4)) return "i";
    if (c == Rat(3, 4)) return "-i";
    std::string s = "E(" + std::to_string(c.denominator()) + ")";
    if (c.numerator() != 1) s += "^" + std::to_string(c.numerator());
    return s;
}

std::string UnitRootPoly::factored() const {
    auto factors = binomial_factors();
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (const auto& f : factors) {
        os << "(x";
        if (f.k > 1) os << '^' << f.k;
        Rat c = f.c;
        if (c == Rat(0))
            os << " - 1";
        else if (c == Rat(1, 2))
            os << " + 1";
        else if (c == Rat(1, 4))
            os << " - i";
        else if (c == Rat(3, 4))
            os << " + i";
        else
            os << " - " << format_root_of_unity(c);
        os << ')';
        if (f.multiplicity > 1) os << '^' << f.multiplicity;
    }
    return os.str();
}

UnitRootPoly sign_poly(int a, int b) {
    UnitRootPoly p;
    for (int i = 0; i < a; ++i) p = p * UnitRootPoly::binomial(1, Rat(0));
    for (int i = 0; i < b; ++i) p = p * UnitRootPoly::binomial(1, Rat(1, 2));
    return p;
}

} // namespace gradecs
