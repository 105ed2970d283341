#pragma once

#include "pimshort/exponent_rules.hpp"
#include "pimshort/factor_core.hpp"
#include "pimshort/rfull_density.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pimshort {

// Sieving primes are below sqrt(2^63) < 2^32.
struct SieveFactor {
    std::uint32_t prime;
    std::uint32_t exponent;
};

// Partial factorizations of every n in (base, base + length], built by
// dividing out each prime <= sqrt(base + length). Offset i stands for
// n = base + 1 + i. What is left over (the cofactor) is 1 or a prime above
// the sieving limit.
class SieveSegment {
public:
    std::uint64_t base() const noexcept { return base_; }
    std::uint64_t length() const noexcept { return length_; }
    std::uint64_t value(std::uint64_t i) const noexcept { return base_ + 1 + i; }

    std::span<const SieveFactor> exponents(std::uint64_t i) const noexcept
    {
        return {factors_.data() + index_[i], factors_.data() + index_[i + 1]};
    }
    std::uint64_t cofactor(std::uint64_t i) const noexcept { return cofactor_[i]; }

    // Sieved exponents plus the cofactor as a prime with exponent 1.
    Factorization factorization(std::uint64_t i) const;

private:
    friend SieveSegment sieve_segment(std::uint64_t, std::uint64_t,
                                      std::span<const std::uint64_t>);

    std::uint64_t base_ = 0;
    std::uint64_t length_ = 0;
    std::vector<std::size_t> index_;
    std::vector<SieveFactor> factors_;
    std::vector<std::uint64_t> cofactor_;
};

// Widest interval sieved at once by the counting functions.
inline constexpr std::uint64_t kSegmentChunk = std::uint64_t{1} << 20;

// DomainError for y = 0, RangeError when x + y >= 2^63.
SieveSegment sieve_segment(std::uint64_t x, std::uint64_t y);
// Same, with a caller-supplied table that must hold every prime
// <= sqrt(x + y) (extra primes are ignored).
SieveSegment sieve_segment(std::uint64_t x, std::uint64_t y,
                           std::span<const std::uint64_t> primes);

// #{n in (x, x+y] : f(n) = k}. The interval is cut into kSegmentChunk
// pieces handed to `workers` threads; partial counts are combined in chunk
// order, so the result does not depend on the worker count.
std::uint64_t count_f_equals_k(const ExponentRule& rule, std::uint64_t k,
                               std::uint64_t x, std::uint64_t y,
                               unsigned workers = 1);

// k -> #{n in (x, x+y] : f(n) = k} for every attained k.
std::map<std::uint64_t, std::uint64_t>
value_histogram(const ExponentRule& rule, std::uint64_t x, std::uint64_t y,
                unsigned workers = 1);

// #{n in (x, x+y] : n is r-free}, by striking multiples of p^r.
std::uint64_t count_r_free(std::uint64_t x, std::uint64_t y, unsigned r,
                           unsigned workers = 1);

// sum_{2Y < n <= 2X} s_r(n) (floor((X+Y)/n) - floor(X/n)), evaluated two
// ways: over r-full n directly, and by counting the r-full divisors > 2Y
// of each m in (X, X+Y]. Requires 0 < Y < X.
struct Lemma31Sum {
    std::uint64_t by_rfull = 0;
    std::uint64_t by_interval = 0;
    bool agree() const { return by_rfull == by_interval; }
};

Lemma31Sum lemma31_sum(std::uint64_t X, std::uint64_t Y, unsigned r);

struct IntervalReport {
    std::string rule;
    std::uint64_t k = 0;
    unsigned r = 0;
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    double eps = 0;
    std::uint64_t count = 0;
    double density = 0;
    double main_term = 0;
    double abs_error = 0;
    double term_main = 0;
    double term_mid = 0;
    double term_tail = 0;
    double r_lemma = 0;
    bool admissible = false;

    friend bool operator==(const IntervalReport&, const IntervalReport&) = default;
};

inline constexpr double kDefaultEpsilon = 0.01;

// DomainError unless 0 < y < x.
IntervalReport interval_report(const ExponentRule& rule, std::uint64_t k,
                               std::uint64_t x, std::uint64_t y, double eps,
                               const DensityResult& dens, unsigned workers = 1);
IntervalReport interval_report(const ExponentRule& rule, std::uint64_t k,
                               std::uint64_t x, std::uint64_t y,
                               double eps = kDefaultEpsilon,
                               unsigned workers = 1);

} // namespace pimshort
