#include "gradecs/cyclotomic.hpp"
#include "gradecs/errors.hpp"

#include <doctest.h>

#include <random>

using namespace gradecs;

namespace {

// Independent check: evaluate the expanded polynomial term by term.
std::map<int, Rat> rational_coeffs(const CycloPoly& p) {
    std::map<int, Rat> out;
    for (int e = 0; e <= p.degree(); ++e)
        if (auto q = p.coeff(e).as_rational(); q && *q != Rat(0)) out[e] = *q;
    return out;
}

CycloNum random_num(std::mt19937& rng, std::int64_t m) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Rat> c(m);
    for (auto& q : c) q = Rat(coef(rng), 1 + (rng() % 3));
    return CycloNum(m, c);
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntVec{-1, 1});
    CHECK(cyclotomic_polynomial(4) == IntVec{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == IntVec{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == IntVec{1, 0, -1, 0, 1});
    for (std::int64_t m = 1; m <= 40; ++m)
        CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(m).size()) == euler_phi(m) + 1);
}

TEST_CASE("basic arithmetic") {
    auto z4 = CycloNum::zeta(4);
    CHECK(cyclo_arith(z4, z4, ArithOp::mul) == CycloNum::rational(-1));
    auto z3 = CycloNum::zeta(3);
    CHECK(cyclo_arith(z3, z3 * z3, ArithOp::add) == CycloNum::rational(-1));
    CHECK(cyclo_arith(CycloNum::zeta(8), {}, ArithOp::inv) == CycloNum::zeta(8, 7));
    CHECK_THROWS_AS(CycloNum::rational(0, 5).inv(), Error);
    CHECK(CycloNum::zeta(6, 3) == CycloNum::rational(-1, 1));
    CHECK(CycloNum::zeta(12, 3) == CycloNum::zeta(4));
    CHECK((CycloNum::zeta(3) + CycloNum::zeta(4)).modulus() == 12);
    CHECK(CycloNum::root_of_unity(Rat(3, 4)) == CycloNum::zeta(4, 3));
}

TEST_CASE("modulus guard") {
    CHECK_THROWS_AS(CycloNum::zeta(kMaxModulus + 1), Error);
    try {
        (void)(CycloNum::zeta(65537) * CycloNum::zeta(65539));
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ModulusOverflow);
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(20240611);
    for (std::int64_t m : {3, 4, 5, 8, 9, 12}) {
        for (int it = 0; it < 20; ++it) {
            auto a = random_num(rng, m), b = random_num(rng, m), c = random_num(rng, m);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inv() == CycloNum::rational(1, m));
        }
    }
}

TEST_CASE("power substitution") {
    SUBCASE("(x^2-1)^n at d=2") {
        for (int n = 1; n <= 4; ++n) {
            UnitRootPoly R = UnitRootPoly();
            for (int i = 0; i < n; ++i) R = R * UnitRootPoly::binomial(2, 0);
            auto g = poly_substitute_power(R.expand(), 2);
            REQUIRE(g);
            CHECK(*g == sign_poly(n, 0).expand());
        }
    }
    SUBCASE("x^2-1 at d=4") {
        CHECK_FALSE(poly_substitute_power(UnitRootPoly::binomial(2, 0).expand(), 4));
        CHECK_FALSE(UnitRootPoly::binomial(2, 0).substitute_power(4));
    }
    SUBCASE("(x^4-1)^2 at d=4 by brute-force expansion") {
        // (x^4-1)^2 = x^8 - 2x^4 + 1
        auto R = UnitRootPoly::binomial(4, 0) * UnitRootPoly::binomial(4, 0);
        auto coeffs = rational_coeffs(R.expand());
        CHECK(coeffs == std::map<int, Rat>{{0, 1}, {4, -2}, {8, 1}});
        auto g = poly_substitute_power(R.expand(), 4);
        REQUIRE(g);
        CHECK(rational_coeffs(*g) == std::map<int, Rat>{{0, 1}, {1, -2}, {2, 1}});
        CHECK(*R.substitute_power(4) == sign_poly(2, 0));
    }
    CHECK_THROWS_AS(poly_substitute_power(CycloPoly::binomial(1, CycloNum::rational(1)), 0), Error);
}

TEST_CASE("max extractable power") {
    for (int m = 1; m <= 6; ++m) CHECK(sign_poly(m, 0).max_extractable_power() == 1);
    for (int n = 3; n <= 9; n += 2) {
        UnitRootPoly R;
        for (int i = 0; i < (n - 1) / 2; ++i) R = R * UnitRootPoly::binomial(4, 0);
        CHECK(max_extractable_power(R.expand()) == 4);
        CHECK(R.max_extractable_power() == 4);
    }
    for (int n = 2; n <= 8; ++n) {
        UnitRootPoly R;
        for (int i = 0; i < n / 2 + 1; ++i) R = R * UnitRootPoly::binomial(2, 0);
        for (int i = 0; i < (n - 1) / 2; ++i) R = R * UnitRootPoly::binomial(2, Rat(1, 2));
        // support gcd of the expansion, computed directly
        std::int64_t g = 0;
        for (auto [e, q] : rational_coeffs(R.expand())) g = std::gcd<std::int64_t>(g, e);
        CHECK(max_extractable_power(R.expand()) == g);
        CHECK(R.max_extractable_power() == 2);
    }
    CHECK(max_extractable_power(CycloPoly::monomial(CycloNum::rational(1), 5)) == 1);
}

TEST_CASE("properties: round trip and scalar invariance") {
    std::vector<UnitRootPoly> samples = {
        UnitRootPoly::binomial(6, 0) * UnitRootPoly::binomial(3, Rat(1, 3)),
        UnitRootPoly::binomial(4, Rat(1, 2)) * UnitRootPoly::binomial(2, 0),
        UnitRootPoly::binomial(12, Rat(1, 5)),
        sign_poly(2, 3),
    };
    for (const auto& R : samples) {
        auto P = R.expand();
        std::int64_t D = max_extractable_power(P);
        CHECK(D == R.max_extractable_power());
        for (std::int64_t d = 1; d <= D; ++d) {
            if (D % d) continue;
            auto g = poly_substitute_power(P, d);
            REQUIRE(g);
            CHECK(g->compose_power(d) == P);
            CHECK(R.substitute_power(d)->compose_power(d) == R);
        }
        auto scaled = P * CycloPoly::constant(CycloNum::zeta(7, 2) * CycloNum::rational(Rat(-3, 2)));
        CHECK(max_extractable_power(scaled) == D);
        CHECK(scaled.monic() == P);
    }
}

TEST_CASE("factored printing") {
    CHECK(sign_poly(2, 1).factored() == "(x - 1)(x^2 - 1)");
    CHECK(sign_poly(0, 3).factored() == "(x + 1)^3");
    CHECK((UnitRootPoly::binomial(2, 0) * UnitRootPoly::binomial(2, Rat(1, 2))).factored() == "(x^4 - 1)");
    CHECK(UnitRootPoly::binomial(3, Rat(1, 3)).factored() == "(x^3 - E(3))");
    CHECK(UnitRootPoly::binomial(1, Rat(1, 4)).factored() == "(x - i)");
    CHECK(UnitRootPoly().factored() == "1");
}
