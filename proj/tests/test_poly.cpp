#include <random>

#include "doctest.h"
#include "lip/poly.hpp"

using namespace lip;

namespace {

Poly random_poly(const FieldPtr& f, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<Elem> coeff(0, f->q() - 1);
    std::vector<Elem> c(deg(rng) + 1);
    for (Elem& x : c) x = coeff(rng);
    return Poly(f, std::move(c));
}

} // namespace

TEST_CASE("ring arithmetic basics") {
    auto f2 = Field::make(2, 1);
    Poly x1(f2, {1, 1}); // x + 1
    CHECK(x1 * Poly::constant(f2, 1) == x1);
    CHECK(x1 * x1 == Poly(f2, {1, 0, 1})); // (x+1)^2 = x^2+1 in char 2

    auto f5 = Field::make(5, 1);
    Poly f(f5, {2, 0, 0, 1}); // x^3 + 2
    Poly g(f5, {2, 0, 1});    // x^2 + 2
    auto [quot, rem] = f.divrem(g);
    CHECK(quot == Poly(f5, {0, 1}));
    CHECK(rem == Poly(f5, {2, 3}));
    CHECK(quot * g + rem == f);
    CHECK_THROWS_AS(f.divrem(Poly::zero(f5)), DivisionByZeroPoly);
}

TEST_CASE("divrem round-trips on randomized pairs") {
    std::mt19937 rng(11);
    auto f7 = Field::make(7, 1);
    for (int trial = 0; trial < 200; ++trial) {
        Poly f = random_poly(f7, 6, rng);
        Poly g = random_poly(f7, 4, rng);
        if (g.is_zero()) continue;
        auto [q, r] = f.divrem(g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("gcd and lcm") {
    auto f5 = Field::make(5, 1);
    Poly a(f5, {2, 0, 1});    // x^2 + 2
    Poly b(f5, {3, 0, 1});    // x^2 + 3
    Poly c(f5, {1, 1, 1});    // x^2 + x + 1
    CHECK(poly_gcd(a * b, a * c) == a);
    CHECK(poly_gcd(a, a) == a.monic());
    CHECK(poly_gcd(a, Poly::zero(f5)) == a.monic());
    CHECK_THROWS_AS(poly_gcd(Poly::zero(f5), Poly::zero(f5)), BothZero);

    // two distinct irreducibles are coprime
    CHECK(poly_gcd(a, b) == Poly::constant(f5, 1));

    auto f2 = Field::make(2, 1);
    CHECK(poly_lcm(Poly(f2, {1, 1}), Poly(f2, {1, 1, 1})) == Poly(f2, {1, 0, 0, 1}));
    CHECK(poly_lcm(a, Poly::constant(f5, 1)) == a.monic());
    CHECK_THROWS_AS(poly_lcm(a, Poly::zero(f5)), ZeroInput);
}

TEST_CASE("gcd and lcm degree identity on random pairs") {
    std::mt19937 rng(5);
    auto f3 = Field::make(3, 1);
    for (int trial = 0; trial < 200; ++trial) {
        Poly f = random_poly(f3, 5, rng);
        Poly g = random_poly(f3, 5, rng);
        if (f.is_zero() || g.is_zero()) continue;
        Poly d = poly_gcd(f, g);
        Poly m = poly_lcm(f, g);
        CHECK(d.divides(f));
        CHECK(d.divides(g));
        CHECK(f.divides(m));
        CHECK(g.divides(m));
        CHECK(d.degree() + m.degree() == f.degree() + g.degree());
        CHECK(d * m == (f * g).monic());
    }
}

TEST_CASE("evaluation") {
    auto f5 = Field::make(5, 1);
    CHECK(Poly::constant(f5, 4).eval(2) == 4);
    CHECK(Poly(f5, {2, 0, 1}).eval(1) == 3);
    Poly roots = poly_from_roots(f5, {1, 2, 4});
    for (Elem r : {1, 2, 4}) CHECK(roots.eval(r) == 0);
    CHECK(roots.eval(0) != 0);
}

TEST_CASE("irreducibility") {
    auto f2 = Field::make(2, 1);
    CHECK(Poly(f2, {1, 1, 1}).is_irreducible());
    CHECK(!Poly(f2, {1, 0, 1}).is_irreducible()); // (x+1)^2
    auto f3 = Field::make(3, 1);
    CHECK(Poly(f3, {1, 0, 1}).is_irreducible());
    CHECK_THROWS_AS(Poly::constant(f3, 1).is_irreducible(), DegreeZeroInput);
}

TEST_CASE("lexicographic irreducible enumeration") {
    auto f2 = Field::make(2, 1);
    auto cubics = irreducibles(f2, 3, 100);
    REQUIRE(cubics.size() == 2);
    CHECK(cubics[0] == Poly(f2, {1, 1, 0, 1})); // x^3 + x + 1
    CHECK(cubics[1] == Poly(f2, {1, 0, 1, 1})); // x^3 + x^2 + 1

    auto f3 = Field::make(3, 1);
    auto quads = irreducibles(f3, 2, 100);
    CHECK(quads.front() == Poly(f3, {1, 0, 1})); // x^2 + 1 comes first

    // all linear monics are irreducible
    for (auto q : {2u, 3u, 4u}) {
        auto f = Field::make(q == 4 ? 2 : q, q == 4 ? 2 : 1);
        CHECK(irreducibles(f, 1, f->q() + 5).size() == f->q());
    }
}

TEST_CASE("moebius counting matches closed forms and enumeration") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);

    for (long long q : {2, 3, 4, 5, 7, 8, 9}) {
        CHECK(count_irreducibles(q, 1) == q);
        CHECK(count_irreducibles(q, 2) == (q * q - q) / 2);
    }
    CHECK(count_irreducibles(2, 3) == 2);
    CHECK_THROWS_AS(count_irreducibles(2, 0), NonPositiveDegree);

    // exhaustive cross-check against the enumerator
    for (auto [p, e] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                        {7, 1}, {2, 3}, {3, 2}}) {
        auto f = Field::make(p, e);
        for (std::uint32_t n = 1; n <= 4; ++n) {
            auto all = irreducibles(f, n, 1u << 20);
            CHECK(static_cast<long long>(all.size()) == count_irreducibles(f->q(), n));
        }
    }
}

TEST_CASE("every small field has at least three irreducibles per degree") {
    for (auto [p, e] : {std::pair<int, int>{3, 1}, {2, 2}, {5, 1}, {7, 1},
                        {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        auto f = Field::make(p, e);
        for (long long n = 1; n <= 6; ++n)
            CHECK(count_irreducibles(f->q(), n) >= 3);
    }
}

TEST_CASE("textual form") {
    auto f5 = Field::make(5, 1);
    CHECK(Poly(f5, {2, 3, 1}).to_string() == "2 + 3*x + x^2");
    CHECK(Poly::zero(f5).to_string() == "0");
}
