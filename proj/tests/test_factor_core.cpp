#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "pimshort/errors.hpp"
#include "pimshort/factor_core.hpp"

#include <random>

using namespace pimshort;

namespace {

Factorization pp(std::vector<PrimePower> pairs) { return Factorization(std::move(pairs)); }

bool same(const Factorization& f, const oracle::Pairs& o)
{
    if (f.size() != o.size())
        return false;
    for (std::size_t i = 0; i < o.size(); ++i)
        if (f.pairs()[i].prime != o[i].first || f.pairs()[i].exponent != o[i].second)
            return false;
    return true;
}

// h by summing over every divisor of n, with the inverse of mu_r taken from
// its defining recursion.
std::int64_t h_brute(const ExponentRule& rule, std::uint64_t k, std::uint64_t n,
                     const std::vector<std::int64_t>& inv)
{
    std::int64_t s = 0;
    for (const auto d : oracle::divisors(n))
        if (oracle::f_value(n / d, [&](unsigned e) { return rule.g(e); }) == k)
            s += inv[d];
    return s;
}

} // namespace

TEST_CASE("factorize examples")
{
    CHECK(factorize(12) == pp({{2, 2}, {3, 1}}));
    CHECK(factorize(1).empty());
    CHECK(factorize(8633) == pp({{89, 1}, {97, 1}}));
    CHECK_THROWS_AS(factorize(0), DomainError);
    CHECK_THROWS_AS(factorize(kMaxFactorizable), RangeError);
}

TEST_CASE("factorize agrees with plain trial division")
{
    for (std::uint64_t n = 1; n <= 20000; ++n)
        REQUIRE(same(factorize(n), oracle::factor(n)));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1, std::uint64_t{1} << 40);
    for (int i = 0; i < 200; ++i) {
        const auto n = dist(rng);
        const auto f = factorize(n);
        CHECK(f.value() == n);
        for (const auto& q : f.pairs())
            CHECK(oracle::factor(q.prime).size() == 1);
    }
    // a semiprime whose factors lie past the cached prime table
    const std::uint64_t p = 4194319, q = 4194329;
    CHECK(factorize(p * q) == pp({{p, 1}, {q, 1}}));
}

TEST_CASE("Factorization rejects malformed pair lists")
{
    CHECK_THROWS_AS(pp({{3, 1}, {2, 1}}), DomainError);
    CHECK_THROWS_AS(pp({{2, 0}}), DomainError);
}

TEST_CASE("integer roots")
{
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(99) == 9);
    CHECK(isqrt(100) == 10);
    CHECK(isqrt((std::uint64_t{1} << 62) - 1) == (std::uint64_t{1} << 31) - 1);
    CHECK(iroot(1000, 3) == 10);
    CHECK(iroot(999, 3) == 9);
    CHECK(iroot(std::uint64_t{1} << 62, 2) == std::uint64_t{1} << 31);
}

TEST_CASE("primes_up_to")
{
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(10000).size() == 1229);
}

TEST_CASE("eval_f")
{
    const auto abelian = build_rule("abelian");
    CHECK(eval_f(abelian, factorize(72)) == 6);
    CHECK(eval_f(abelian, factorize(1)) == 1);
    CHECK(eval_f(abelian, factorize(2 * 3 * 5 * 7 * 11)) == 1);
    CHECK(eval_f(build_rule("plane"), factorize(1)) == 1);

    const auto big = pp({{2, 65}});
    CHECK_THROWS_AS(eval_f(abelian, big), RangeError);
}

TEST_CASE("mu_r and s_r")
{
    CHECK(mu_r(factorize(12), 2) == 0);
    CHECK(s_r(factorize(72), 2) == 1);
    CHECK(s_r(factorize(1), 3) == 1);
    CHECK(mu_r(factorize(1), 3) == 1);
    CHECK(mu_r(factorize(12), 3) == 1);
    CHECK(s_r(factorize(12), 2) == 0);
}

TEST_CASE("mu_r_inverse case table")
{
    CHECK(mu_r_inverse(pp({{5, 1}}), 2) == -1);
    CHECK(mu_r_inverse(pp({{5, 2}}), 2) == 1);
    CHECK(mu_r_inverse(pp({{2, 2}, {3, 3}}), 2) == -1);
    CHECK(mu_r_inverse(pp({{2, 2}}), 3) == 0);

    for (const unsigned r : {2u, 3u, 4u}) {
        const auto inv = oracle::mu_r_inverse_table(3000, r);
        for (std::uint64_t n = 1; n <= 3000; ++n)
            REQUIRE(mu_r_inverse(factorize(n), r) == inv[n]);
    }
}

TEST_CASE("h_value examples")
{
    const auto abelian = build_rule("abelian");
    CHECK(h_value(abelian, 2, factorize(4)) == 1);
    CHECK(h_value(abelian, 2, factorize(1)) == 0);
    CHECK(h_value(abelian, 1, factorize(6)) == 0);
    CHECK(h_value(abelian, 1, factorize(1)) == 1);
}

TEST_CASE("h_value matches the brute-force divisor sum")
{
    constexpr std::uint64_t N = 2000;
    for (const auto& name : {"abelian", "plane", "expdiv", "powerdiv-r:3"}) {
        const auto rule = build_rule(name);
        const auto inv = oracle::mu_r_inverse_table(N, rule.r());
        for (std::uint64_t k = 1; k <= 6; ++k)
            for (std::uint64_t n = 1; n <= N; ++n)
                REQUIRE(h_value(rule, k, factorize(n)) == h_brute(rule, k, n, inv));
    }
}

TEST_CASE("h_value support, bound and prime-power vanishing")
{
    for (const auto& name : builtin_family_names()) {
        const auto rule = build_rule(name);
        for (std::uint64_t k = 1; k <= 10; ++k) {
            for (std::uint64_t n = 1; n <= 10000; ++n) {
                const auto f = factorize(n);
                const auto h = h_value(rule, k, f);
                if (!s_r(f, rule.r()))
                    REQUIRE(h == 0);
                REQUIRE(static_cast<std::uint64_t>(std::llabs(h)) <=
                        static_cast<std::uint64_t>(s_r(f, rule.r())) * tau(f));
            }
            for (const auto p : primes_up_to(50))
                for (unsigned a = 1; a < rule.r(); ++a)
                    REQUIRE(h_value(rule, k, pp({{p, a}})) == 0);
        }
    }
}

TEST_CASE("tau and omega")
{
    CHECK(tau(factorize(12)) == 6);
    CHECK(tau(factorize(1)) == 1);
    CHECK(omega(factorize(30)) == 3);
}
