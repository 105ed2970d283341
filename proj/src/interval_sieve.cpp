#include "pimshort/interval_sieve.hpp"

#include "pimshort/bounds.hpp"
#include "pimshort/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace pimshort {

namespace {

void check_interval(std::uint64_t x, std::uint64_t y)
{
    if (y < 1)
        throw DomainError("interval length y must be >= 1");
    if (x >= kMaxFactorizable || y >= kMaxFactorizable - x)
        throw RangeError("interval end x + y must stay below 2^63");
}

// Runs `work(chunk_base, chunk_length)` over consecutive kSegmentChunk
// pieces of (x, x+y] and returns the results in chunk order.
template <typename Work>
auto run_chunks(std::uint64_t x, std::uint64_t y, unsigned workers, Work work)
{
    using Result = decltype(work(x, y));
    const std::uint64_t chunks = (y + kSegmentChunk - 1) / kSegmentChunk;
    std::vector<Result> results(chunks);

    auto one = [&](std::uint64_t c) {
        const std::uint64_t lo = x + c * kSegmentChunk;
        const std::uint64_t len = std::min(kSegmentChunk, y - c * kSegmentChunk);
        results[c] = work(lo, len);
    };

    const unsigned threads = static_cast<unsigned>(
        std::min<std::uint64_t>(std::max(1u, workers), chunks));
    if (threads <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c)
            one(c);
        return results;
    }

    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::uint64_t c = next++; c < chunks; c = next++)
                one(c);
        });
    pool.clear(); // joins
    return results;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        return std::numeric_limits<std::uint64_t>::max();
    return out;
}

// f(n) from sieved exponents; the cofactor has exponent 1 and g(1) = 1.
std::uint64_t f_of_offset(const ExponentRule& rule, const SieveSegment& seg,
                          std::uint64_t i)
{
    std::uint64_t f = 1;
    for (const auto& sf : seg.exponents(i))
        f = saturating_mul(f, rule.g(sf.exponent));
    return f;
}

// Number of r-full divisors d > lower of prod p_i^alpha_i, restricted to
// the primes whose exponent is at least r.
std::uint64_t count_rfull_divisors_above(std::span<const PrimePower> pairs,
                                         std::size_t i, std::uint64_t d,
                                         unsigned r, std::uint64_t lower)
{
    if (i == pairs.size())
        return d > lower ? 1 : 0;
    std::uint64_t total = count_rfull_divisors_above(pairs, i + 1, d, r, lower);
    std::uint64_t pe = saturating_pow(pairs[i].prime, r);
    for (unsigned e = r; e <= pairs[i].exponent; ++e, pe *= pairs[i].prime)
        total += count_rfull_divisors_above(pairs, i + 1, d * pe, r, lower);
    return total;
}

} // namespace

Factorization SieveSegment::factorization(std::uint64_t i) const
{
    Factorization fact;
    for (const auto& sf : exponents(i))
        fact.push_back({sf.prime, sf.exponent});
    if (cofactor_[i] > 1)
        fact.push_back({cofactor_[i], 1});
    return fact;
}

SieveSegment sieve_segment(std::uint64_t x, std::uint64_t y)
{
    check_interval(x, y);
    const auto primes = primes_up_to(isqrt(x + y));
    return sieve_segment(x, y, primes);
}

SieveSegment sieve_segment(std::uint64_t x, std::uint64_t y,
                           std::span<const std::uint64_t> primes)
{
    check_interval(x, y);
    const std::uint64_t end = x + y;
    const std::uint64_t root = isqrt(end);

    SieveSegment seg;
    seg.base_ = x;
    seg.length_ = y;

    std::vector<std::uint32_t> hits(y, 0);
    std::size_t used = 0;
    for (; used < primes.size() && primes[used] <= root; ++used) {
        const std::uint64_t p = primes[used];
        for (std::uint64_t m = (x / p + 1) * p; m <= end; m += p)
            ++hits[m - x - 1];
    }

    seg.index_.resize(y + 1);
    seg.index_[0] = 0;
    for (std::uint64_t i = 0; i < y; ++i)
        seg.index_[i + 1] = seg.index_[i] + hits[i];
    seg.factors_.resize(seg.index_[y]);

    seg.cofactor_.resize(y);
    for (std::uint64_t i = 0; i < y; ++i)
        seg.cofactor_[i] = x + 1 + i;

    std::vector<std::size_t> cursor(seg.index_.begin(), seg.index_.end() - 1);
    for (std::size_t j = 0; j < used; ++j) {
        const std::uint64_t p = primes[j];
        for (std::uint64_t m = (x / p + 1) * p; m <= end; m += p) {
            const std::uint64_t i = m - x - 1;
            std::uint64_t c = seg.cofactor_[i] / p;
            std::uint32_t e = 1;
            while (c % p == 0) {
                c /= p;
                ++e;
            }
            seg.cofactor_[i] = c;
            seg.factors_[cursor[i]++] = {static_cast<std::uint32_t>(p), e};
        }
    }
    return seg;
}

std::uint64_t count_f_equals_k(const ExponentRule& rule, std::uint64_t k,
                               std::uint64_t x, std::uint64_t y,
                               unsigned workers)
{
    check_interval(x, y);
    const auto primes = primes_up_to(isqrt(x + y));
    const auto parts =
        run_chunks(x, y, workers, [&](std::uint64_t lo, std::uint64_t len) {
            const auto seg = sieve_segment(lo, len, primes);
            std::uint64_t hits = 0;
            for (std::uint64_t i = 0; i < len; ++i)
                hits += f_of_offset(rule, seg, i) == k;
            return hits;
        });
    std::uint64_t total = 0;
    for (const auto part : parts)
        total += part;
    return total;
}

std::map<std::uint64_t, std::uint64_t>
value_histogram(const ExponentRule& rule, std::uint64_t x, std::uint64_t y,
                unsigned workers)
{
    check_interval(x, y);
    const auto primes = primes_up_to(isqrt(x + y));
    using Histogram = std::map<std::uint64_t, std::uint64_t>;
    const auto parts =
        run_chunks(x, y, workers, [&](std::uint64_t lo, std::uint64_t len) {
            const auto seg = sieve_segment(lo, len, primes);
            Histogram hist;
            for (std::uint64_t i = 0; i < len; ++i)
                ++hist[f_of_offset(rule, seg, i)];
            return hist;
        });
    Histogram total;
    for (const auto& part : parts)
        for (const auto& [k, c] : part)
            total[k] += c;
    return total;
}

std::uint64_t count_r_free(std::uint64_t x, std::uint64_t y, unsigned r,
                           unsigned workers)
{
    if (r < 2)
        throw DomainError("count_r_free: r must be >= 2");
    check_interval(x, y);
    const auto primes = primes_up_to(iroot(x + y, r));
    const auto parts =
        run_chunks(x, y, workers, [&](std::uint64_t lo, std::uint64_t len) {
            const std::uint64_t end = lo + len;
            std::vector<char> struck(len, 0);
            for (const std::uint64_t p : primes) {
                const std::uint64_t q = saturating_pow(p, r);
                if (q > end)
                    break;
                for (std::uint64_t m = (lo / q + 1) * q; m <= end; m += q)
                    struck[m - lo - 1] = 1;
            }
            return static_cast<std::uint64_t>(
                std::count(struck.begin(), struck.end(), 0));
        });
    std::uint64_t total = 0;
    for (const auto part : parts)
        total += part;
    return total;
}

Lemma31Sum lemma31_sum(std::uint64_t X, std::uint64_t Y, unsigned r)
{
    if (r < 2)
        throw DomainError("lemma31_sum: r must be >= 2");
    if (Y == 0 || Y >= X)
        throw DomainError("lemma31_sum: need 0 < Y < X");
    if (X >= kMaxFactorizable / 2)
        throw RangeError("lemma31_sum: 2X must stay below 2^63");

    Lemma31Sum out;
    for_each_rfull(r, 2 * X, [&](std::uint64_t n, const Factorization&) {
        if (n > 2 * Y)
            out.by_rfull += (X + Y) / n - X / n;
    });

    const auto seg = sieve_segment(X, Y);
    std::vector<PrimePower> heavy;
    for (std::uint64_t i = 0; i < Y; ++i) {
        heavy.clear();
        for (const auto& sf : seg.exponents(i))
            if (sf.exponent >= r)
                heavy.push_back({sf.prime, sf.exponent});
        if (!heavy.empty())
            out.by_interval +=
                count_rfull_divisors_above(heavy, 0, 1, r, 2 * Y);
    }
    return out;
}

IntervalReport interval_report(const ExponentRule& rule, std::uint64_t k,
                               std::uint64_t x, std::uint64_t y, double eps,
                               const DensityResult& dens, unsigned workers)
{
    if (y == 0 || y >= x)
        throw DomainError("interval_report: need 0 < y < x");
    if (dens.rule != rule.name() || dens.k != k)
        throw DomainError("interval_report: density is for a different rule "
                          "or k");

    const auto bounds = bound_breakdown(rule.r(), static_cast<double>(x),
                                        static_cast<double>(y));
    IntervalReport rep;
    rep.rule = rule.name();
    rep.k = k;
    rep.r = rule.r();
    rep.x = x;
    rep.y = y;
    rep.eps = eps;
    rep.count = count_f_equals_k(rule, k, x, y, workers);
    rep.density = dens.density;
    rep.main_term = dens.density * static_cast<double>(y);
    rep.abs_error = std::fabs(static_cast<double>(rep.count) - rep.main_term);
    rep.term_main = bounds.term_main;
    rep.term_mid = bounds.term_mid;
    rep.term_tail = bounds.term_tail;
    rep.r_lemma = bounds.r_lemma;
    rep.admissible = admissible(rule.r(), static_cast<double>(x),
                                static_cast<double>(y), eps);
    return rep;
}

IntervalReport interval_report(const ExponentRule& rule, std::uint64_t k,
                               std::uint64_t x, std::uint64_t y, double eps,
                               unsigned workers)
{
    if (y == 0 || y >= x)
        throw DomainError("interval_report: need 0 < y < x");
    return interval_report(rule, k, x, y, eps, density(rule, k), workers);
}

} // namespace pimshort
