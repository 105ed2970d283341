#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "pimshort/bounds.hpp"
#include "pimshort/errors.hpp"

#include <cmath>

using namespace pimshort;

TEST_CASE("zeta at small integers")
{
    CHECK(std::fabs(zeta(2) - oracle::zeta2()) < 1e-9);
    CHECK(std::fabs(zeta(2) - 1.644934067) < 1e-9);
    CHECK(std::fabs(zeta(3) - oracle::apery_zeta3()) < 1e-9);
    CHECK(std::fabs(zeta(3) - 1.202056903) < 1e-9);
    CHECK(std::fabs(zeta(4) - oracle::zeta4()) < 1e-14);
    CHECK(std::fabs(zeta(2) - oracle::zeta2()) < 1e-14);
    CHECK(std::fabs(zeta(3) - oracle::apery_zeta3()) < 1e-14);
}

TEST_CASE("zeta decreases to 1")
{
    double previous = zeta(2);
    for (unsigned s = 3; s <= 80; ++s) {
        const double z = zeta(s);
        CHECK(z >= 1.0);
        if (s <= 40)
            CHECK(z > 1.0);
        CHECK(z <= previous);
        previous = z;
    }
    CHECK(zeta(60) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("zeta rejects unsupported arguments")
{
    CHECK_THROWS_AS(zeta(2, 16), UnsupportedPrecisionError);
    CHECK_THROWS_AS(zeta(1), DomainError);
    CHECK_NOTHROW(zeta(2, 15));
}

TEST_CASE("r = 2 exponents specialize to the corollary values")
{
    const auto e = bound_exponents(2);
    CHECK(e.main_x == Rational{1, 8});
    CHECK(e.main_y == Rational{3, 8});
    CHECK(e.tail_y == Rational{4, 5});
    CHECK(e.mid_x == Rational{-1, 126});
    CHECK(e.lemma_x == Rational{1, 5});
    CHECK(corollary_mid_exponent_differs(2));
    CHECK_FALSE(corollary_mid_exponent_differs(3));

    const auto e3 = bound_exponents(3);
    CHECK(e3.main_x == Rational{1, 9});
    CHECK(e3.main_y == Rational{2, 9});
    CHECK(e3.mid_x == Rational{-1, 330});
    CHECK(e3.tail_y == Rational{5, 6});
}

TEST_CASE("bound_breakdown closed forms at r = 2")
{
    const double x = 1e11, y = 1e6;
    const auto b = bound_breakdown(2, x, y);
    CHECK(b.term_main == doctest::Approx(std::pow(x * y * y * y, 1.0 / 8)).epsilon(1e-12));
    CHECK(b.term_mid == doctest::Approx(y * std::pow(x, -1.0 / 126)).epsilon(1e-12));
    CHECK(b.term_tail == doctest::Approx(std::pow(y, 0.8)).epsilon(1e-12));
    CHECK(b.r_lemma == doctest::Approx(std::pow(x, 0.2) + b.term_mid + b.term_tail));
    CHECK(theorem_bound(2, x, y) ==
          doctest::Approx(b.term_main + b.term_mid + b.term_tail));
}

TEST_CASE("term_main meets x^(1/(2r+1)) at y = x^(1/(2r+1))")
{
    for (const unsigned r : {2u, 3u, 4u})
        for (const double x : {1e6, 1e9, 1e12}) {
            const double y = std::pow(x, 1.0 / (2 * r + 1));
            CHECK(bound_breakdown(r, x, y).term_main ==
                  doctest::Approx(y).epsilon(1e-12));
        }
}

TEST_CASE("terms are positive, nondecreasing in y and dominate above the threshold")
{
    for (const unsigned r : {2u, 3u, 5u})
        for (const double x : {1e4, 1e8, 1e13}) {
            const double lo = std::pow(x, 1.0 / (2 * r + 1));
            BoundBreakdown prev = bound_breakdown(r, x, 1.5);
            for (double y = 2; y < x; y *= 1.7) {
                const auto b = bound_breakdown(r, x, y);
                CHECK(b.term_main > 0);
                CHECK(b.term_mid > 0);
                CHECK(b.term_tail > 0);
                CHECK(b.term_main >= prev.term_main);
                CHECK(b.term_mid >= prev.term_mid);
                CHECK(b.term_tail >= prev.term_tail);
                if (y >= lo)
                    CHECK(b.term_main >= lo * (1 - 1e-12));
                prev = b;
            }
        }
}

TEST_CASE("domain errors and admissibility")
{
    CHECK_THROWS_AS(bound_breakdown(2, 10, 10), DomainError);
    CHECK_THROWS_AS(bound_breakdown(2, 10, 0), DomainError);
    CHECK_THROWS_AS(bound_breakdown(1, 10, 2), DomainError);

    CHECK(admissible(2, 1e11, 1e6, 0.01));
    CHECK_FALSE(admissible(2, 100, 10, 0.01));
    // upper end y <= 2^-16 x at r = 2
    CHECK(admissible(2, 65536.0 * 1e6, 1e6, 0.0));
    CHECK_FALSE(admissible(2, 65536.0 * 1e6 - 1, 1e6, 0.0));
}

TEST_CASE("Rational normalizes")
{
    CHECK(Rational::make(2, -4) == Rational{-1, 2});
    CHECK(Rational::make(6, 8).value() == 0.75);
    CHECK_THROWS_AS(Rational::make(1, 0), DomainError);
}
