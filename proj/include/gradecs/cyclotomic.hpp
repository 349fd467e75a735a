#pragma once

#include "gradecs/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gradecs {

// Largest cyclotomic modulus accepted before ModulusOverflow.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

std::int64_t euler_phi(std::int64_t m);
// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const IntVec& cyclotomic_polynomial(std::int64_t m);

// Element of Q(zeta_M) in the power basis 1, z, ..., z^{phi(M)-1}, z = exp(2 pi i / M).
class CycloNum {
public:
    CycloNum() : modulus_(1), coeffs_{Rat(0)} {}
    CycloNum(std::int64_t modulus, std::vector<Rat> coeffs);

    static CycloNum rational(Rat q, std::int64_t modulus = 1);
    static CycloNum zeta(std::int64_t modulus, std::int64_t power = 1);
    // exp(2 pi i q)
    static CycloNum root_of_unity(Rat q);

    std::int64_t modulus() const noexcept { return modulus_; }
    std::span<const Rat> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const;
    std::optional<Rat> as_rational() const;

    // Same field element written in Q(zeta_L); requires modulus() | L.
    CycloNum coerce(std::int64_t L) const;
    CycloNum inv() const;

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a);
    friend bool operator==(const CycloNum& a, const CycloNum& b);

    std::string to_string() const;

private:
    std::int64_t modulus_;
    std::vector<Rat> coeffs_;
};

enum class ArithOp { add, mul, inv };
// inv ignores b.
CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, ArithOp op);

// Univariate polynomial over Q(zeta_M), lowest degree first, all coefficients in one modulus.
class CycloPoly {
public:
    CycloPoly() = default;
    explicit CycloPoly(std::vector<CycloNum> coeffs);

    static CycloPoly constant(const CycloNum& c);
    static CycloPoly monomial(const CycloNum& c, std::size_t degree);
    // x^k - c
    static CycloPoly binomial(std::size_t k, const CycloNum& c);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t modulus() const noexcept { return modulus_; }
    const std::vector<CycloNum>& coeffs() const noexcept { return coeffs_; }
    CycloNum coeff(std::size_t e) const;

    CycloPoly monic() const;
    // R(x^d)
    CycloPoly compose_power(std::int64_t d) const;

    friend CycloPoly operator+(const CycloPoly& a, const CycloPoly& b);
    friend CycloPoly operator-(const CycloPoly& a, const CycloPoly& b);
    friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);
    friend bool operator==(const CycloPoly& a, const CycloPoly& b);

    std::string to_string() const;

private:
    void normalize();
    std::int64_t modulus_ = 1;
    std::vector<CycloNum> coeffs_;
};

// g with g(x^d) = R(x); nullopt stands for NotAPowerPoly.
std::optional<CycloPoly> poly_substitute_power(const CycloPoly& R, std::int64_t d);
// gcd of exponent gaps in the support; 1 for a single-term polynomial.
std::int64_t max_extractable_power(const CycloPoly& R);

// Monic polynomial whose roots are roots of unity, kept as a multiset of exponents q in [0,1)
// (root exp(2 pi i q)). Exact, cheap to manipulate, expands to CycloPoly on demand.
class UnitRootPoly {
public:
    UnitRootPoly() = default;
    // x^k - exp(2 pi i c)
    static UnitRootPoly binomial(std::int64_t k, Rat c);

    const std::map<Rat, int>& roots() const noexcept { return roots_; }
    int degree() const;
    CycloPoly expand() const;
    // g with g(x^d) = this, if it exists.
    std::optional<UnitRootPoly> substitute_power(std::int64_t d) const;
    // this(x^d)
    UnitRootPoly compose_power(std::int64_t d) const;
    std::int64_t max_extractable_power() const;

    // Greedy product of binomials (x^k - c), largest k first; canonical ordering by (k, c).
    struct Factor {
        std::int64_t k;
        Rat c;
        int multiplicity;
    };
    std::vector<Factor> binomial_factors() const;
    std::string factored() const;

    friend UnitRootPoly operator*(const UnitRootPoly& a, const UnitRootPoly& b);
    friend bool operator==(const UnitRootPoly&, const UnitRootPoly&) = default;

private:
    std::map<Rat, int> roots_;
};

// (x-1)^a (x+1)^b
UnitRootPoly sign_poly(int a, int b);
std::string format_root_of_unity(Rat c);

} // namespace gradecs
