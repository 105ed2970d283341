#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "pimshort/bounds.hpp"
#include "pimshort/errors.hpp"
#include "pimshort/rfull_density.hpp"

#include <algorithm>
#include <cmath>

using namespace pimshort;

TEST_CASE("enumerate_rfull examples")
{
    CHECK(enumerate_rfull(2, 100) ==
          std::vector<std::uint64_t>{1, 4, 8, 9, 16, 25, 27, 32, 36, 49, 64, 72, 81, 100});
    CHECK(enumerate_rfull(3, 50) == std::vector<std::uint64_t>{1, 8, 16, 27, 32});
    CHECK(enumerate_rfull(2, 3) == std::vector<std::uint64_t>{1});
    CHECK(enumerate_rfull(2, 0).empty());
}

TEST_CASE("enumerate_rfull matches a factorization filter up to 10^6")
{
    constexpr std::uint32_t N = 1'000'000;
    const auto spf = oracle::spf_table(N);
    for (const unsigned r : {2u, 3u, 4u}) {
        std::vector<std::uint64_t> brute;
        for (std::uint32_t n = 1; n <= N; ++n)
            if (oracle::is_rfull_spf(n, r, spf))
                brute.push_back(n);
        CHECK(enumerate_rfull(r, N) == brute);
        // a prefix of the same list
        const auto small = enumerate_rfull(r, 5000);
        CHECK(small == std::vector<std::uint64_t>(
                           brute.begin(),
                           std::upper_bound(brute.begin(), brute.end(), 5000)));
    }
}

TEST_CASE("for_each_rfull hands out matching factorizations")
{
    for_each_rfull(3, 100000, [](std::uint64_t n, const Factorization& f) {
        REQUIRE(f.value() == n);
        REQUIRE(s_r(f, 3) == 1);
    });
}

TEST_CASE("r-full counts grow like X^(1/r)")
{
    for (const unsigned r : {2u, 3u}) {
        double lo = HUGE_VAL, hi = 0;
        for (std::uint64_t X = 1000; X <= 1'000'000'000; X *= 10) {
            std::uint64_t count = 0;
            for_each_rfull(r, X, [&](std::uint64_t, const Factorization&) { ++count; });
            const double ratio = count / std::pow(static_cast<double>(X), 1.0 / r);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        CHECK(lo > 0.5);
        CHECK(hi < 5.0);
        CHECK(hi / lo < 2.0);
    }
}

TEST_CASE("decompose_rfull examples")
{
    CHECK(decompose_rfull(factorize(72), 2).a == std::vector<std::uint64_t>{3, 2});
    CHECK(decompose_rfull(factorize(7 * 7 * 7), 3).a == std::vector<std::uint64_t>{7, 1, 1});
    // p^(2r-1) lands entirely in the last slot
    CHECK(decompose_rfull(factorize(std::uint64_t{1} << 5), 3).a ==
          std::vector<std::uint64_t>{1, 1, 2});
    CHECK(decompose_rfull(factorize(1), 2).a == std::vector<std::uint64_t>{1, 1});
    CHECK_THROWS_AS(decompose_rfull(factorize(12), 2), DomainError);
}

TEST_CASE("decompose_rfull round-trips with squarefree coprime tails")
{
    for (const unsigned r : {2u, 3u}) {
        std::size_t seen = 0;
        for_each_rfull(r, 1'000'000, [&](std::uint64_t n, const Factorization& f) {
            const auto d = decompose_rfull(f, r);
            REQUIRE(recompose_rfull(d, r) == n);
            for (unsigned i = 1; i < r; ++i) {
                for (const auto& [p, e] : oracle::factor(d.a[i]))
                    REQUIRE(e == 1);
                for (unsigned j = i + 1; j < r; ++j)
                    REQUIRE(oracle::gcd(d.a[i], d.a[j]) == 1);
            }
            ++seen;
        });
        CHECK(seen > 100);
    }
}

TEST_CASE("psi_r examples")
{
    CHECK(psi_r(factorize(4), 2) == 6.0L);
    CHECK(psi_r(factorize(1), 5) == 1.0L);
    CHECK(psi_r(factorize(36), 2) == 72.0L);
    // 8 (1 + 1/2 + 1/4) = 14
    CHECK(psi_r(factorize(8), 3) == 14.0L);
}

TEST_CASE("density collapses to 1/zeta(r) at k = 1")
{
    for (const char* name : {"abelian", "plane", "semisimple", "expdiv",
                             "unitary-expdiv", "powerdiv-r:2", "powerdiv-r:3"}) {
        const auto rule = build_rule(name);
        for (const std::uint64_t B : {1ull, 100ull, 1'000'000'000ull}) {
            const auto d = density(rule, 1, B);
            CHECK(d.partial_sum == 1.0);
            CHECK(d.tail_estimate == 0.0);
            CHECK(std::fabs(d.density - 1.0 / zeta(rule.r())) < 1e-12);
        }
    }
    CHECK(density(build_rule("powerdiv-r:3"), 1).density ==
          doctest::Approx(0.8319074).epsilon(1e-7));
}

TEST_CASE("unattained k gives zero density")
{
    const auto d = density(build_rule("plane"), 2, 1'000'000'000);
    CHECK(d.partial_sum == 0.0);
    CHECK(d.density == 0.0);
    CHECK(d.tail_estimate == 0.0);
}

TEST_CASE("density sums directly over the r-full b with f(b) = k")
{
    // abelian, k = 2: b in {4, 9, 25, 49, 121, ...} (prime squares) and
    // 4 * 9 etc. do not qualify; below 60 the terms are 1/6, 1/12, 1/30, 1/56.
    const auto d = density(build_rule("abelian"), 2, 60);
    CHECK(d.partial_sum == doctest::Approx(1.0 / 6 + 1.0 / 12 + 1.0 / 30 + 1.0 / 56));
    CHECK(d.tail_estimate > 0);
    CHECK_THROWS_AS(density(build_rule("abelian"), 2, 0), DomainError);
}

TEST_CASE("h_series_at_one")
{
    const auto abelian = build_rule("abelian");
    CHECK(h_series_at_one(abelian, 1, 1000).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h_series_at_one(abelian, 2, 4).value == doctest::Approx(0.25));
    // h(8) = -1 for k = 2
    CHECK(h_series_at_one(abelian, 2, 8).value == doctest::Approx(0.125));
}

TEST_CASE("both density paths agree within their tail estimates")
{
    for (const char* name : {"abelian", "plane", "semisimple", "expdiv",
                             "unitary-expdiv", "powerdiv-r:3"}) {
        const auto rule = build_rule(name);
        for (std::uint64_t k = 1; k <= 10; ++k) {
            const auto d = density(rule, k, 10'000'000);
            const auto h = h_series_at_one(rule, k, 10'000'000);
            CHECK(std::fabs(d.density - h.value / d.zeta_r) <=
                  (d.tail_estimate + h.tail_estimate) / d.zeta_r + kSeriesRoundingSlack);
            CHECK(d.density >= 0.0);
            CHECK(d.density <= 1.0);
            CHECK(d.tail_estimate >= 0.0);
        }
    }
}

TEST_CASE("density mass over k <= 50")
{
    const auto abelian = build_rule("abelian");
    double mass = 0;
    for (std::uint64_t k = 1; k <= 50; ++k)
        mass += density(abelian, k).density;
    CHECK(mass > 0.99);
    CHECK(mass <= 1.0);
}

TEST_CASE("h_weighted_partial_sum")
{
    const auto abelian = build_rule("abelian");
    // kappa = 0 is the plain sum of |h| over r-full n <= x
    std::int64_t brute = 0;
    for (std::uint64_t n = 1; n <= 5000; ++n)
        brute += std::llabs(h_value(abelian, 2, factorize(n)));
    CHECK(h_weighted_partial_sum(abelian, 2, 0.0, 5000) == static_cast<double>(brute));

    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 1000; x <= 1'000'000; x *= 2)
        xs.push_back(x);
    const auto sums = h_weighted_partial_sums(abelian, 2, 1.0, xs);
    for (std::size_t i = 1; i < sums.size(); ++i)
        CHECK(sums[i] >= sums[i - 1]);
    CHECK(sums.back() == h_weighted_partial_sum(abelian, 2, 1.0, xs.back()));

    CHECK_THROWS_AS(h_weighted_partial_sum(abelian, 2, -1.0, 100), DomainError);
    CHECK_THROWS_AS(h_weighted_partial_sum(abelian, 2, 0.0, 1), DomainError);
}
