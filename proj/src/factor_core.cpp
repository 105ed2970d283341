#include "pimshort/factor_core.hpp"

#include "pimshort/errors.hpp"

#include <cmath>
#include <limits>

namespace pimshort {

namespace {

constexpr std::uint64_t kPrimeTableLimit = std::uint64_t{1} << 22;

const std::vector<std::uint64_t>& prime_table()
{
    static const std::vector<std::uint64_t> table =
        primes_up_to(kPrimeTableLimit);
    return table;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        return std::numeric_limits<std::uint64_t>::max();
    return out;
}

void check_exponents(const ExponentRule& rule, const Factorization& fact)
{
    for (const auto& pp : fact.pairs())
        if (pp.exponent > rule.alpha_max())
            throw RangeError("exponent " + std::to_string(pp.exponent) +
                             " of prime " + std::to_string(pp.prime) +
                             " exceeds alpha_max of rule '" + rule.name() +
                             "'");
}

struct HSum {
    const ExponentRule& rule;
    std::uint64_t k;
    std::span<const PrimePower> pairs;
    unsigned r;

    // Visits choices of the divisor exponent j_i at each prime; `f_rest`
    // is f(n/d) restricted to the primes decided so far.
    std::int64_t walk(std::size_t i, std::uint64_t f_rest, int sign) const
    {
        if (f_rest > k)
            return 0; // g >= 1, so the product can only grow
        if (i == pairs.size())
            return f_rest == k ? sign : 0;
        const unsigned alpha = pairs[i].exponent;
        std::int64_t total = 0;
        for (unsigned j = 0; j <= alpha; ++j) {
            const unsigned rem = j % r;
            if (rem > 1)
                continue;
            const int s = rem == 0 ? sign : -sign;
            total += walk(i + 1, saturating_mul(f_rest, rule.g(alpha - j)), s);
        }
        return total;
    }
};

} // namespace

Factorization::Factorization(std::vector<PrimePower> pairs)
{
    pairs_.reserve(pairs.size());
    for (const auto& pp : pairs)
        push_back(pp);
}

void Factorization::push_back(PrimePower pp)
{
    if (pp.exponent == 0 || pp.prime < 2)
        throw DomainError("factorization entries need a prime >= 2 and an "
                          "exponent >= 1");
    if (!pairs_.empty() && pairs_.back().prime >= pp.prime)
        throw DomainError("factorization primes must strictly increase");
    pairs_.push_back(pp);
}

std::uint64_t Factorization::value() const
{
    std::uint64_t n = 1;
    for (const auto& pp : pairs_)
        for (unsigned e = 0; e < pp.exponent; ++e)
            if (__builtin_mul_overflow(n, pp.prime, &n))
                throw RangeError("factorization value exceeds 64 bits");
    return n;
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (r > std::numeric_limits<std::uint32_t>::max() ||
                     r * r > n))
        --r;
    while (r + 1 <= std::numeric_limits<std::uint32_t>::max() &&
           (r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp)
{
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        out = saturating_mul(out, base);
        if (out == std::numeric_limits<std::uint64_t>::max())
            break;
    }
    return out;
}

std::uint64_t iroot(std::uint64_t n, unsigned k)
{
    if (k == 0)
        throw DomainError("iroot: k must be >= 1");
    if (k == 1 || n < 2)
        return n;
    auto r = static_cast<std::uint64_t>(
        std::pow(static_cast<long double>(n), 1.0L / k));
    while (r > 0 && saturating_pow(r, k) > n)
        --r;
    while (saturating_pow(r + 1, k) <= n)
        ++r;
    return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    primes.push_back(2);
    // index i stands for the odd number 2i + 1
    const std::uint64_t half = (limit - 1) / 2;
    std::vector<char> composite(half + 1, 0);
    for (std::uint64_t i = 1; i <= half; ++i) {
        if (composite[i])
            continue;
        const std::uint64_t p = 2 * i + 1;
        primes.push_back(p);
        for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p)
            composite[j] = 1;
    }
    return primes;
}

Factorization factorize(std::uint64_t n)
{
    if (n == 0)
        throw DomainError("factorize: n must be >= 1");
    if (n >= kMaxFactorizable)
        throw RangeError("factorize: n must be below 2^63");

    Factorization fact;
    std::uint64_t rest = n;
    auto divide_out = [&](std::uint64_t p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0)
            fact.push_back({p, e});
    };

    std::uint64_t last = 1;
    for (const std::uint64_t p : prime_table()) {
        if (p * p > rest)
            break;
        divide_out(p);
        last = p;
    }
    // Past the table, odd trial divisors; only reached for n above 2^44.
    if (last == prime_table().back())
        for (std::uint64_t d = last + 2; d * d <= rest; d += 2)
            divide_out(d);
    if (rest > 1)
        fact.push_back({rest, 1});
    return fact;
}

std::uint64_t eval_f(const ExponentRule& rule, const Factorization& fact)
{
    check_exponents(rule, fact);
    std::uint64_t f = 1;
    for (const auto& pp : fact.pairs())
        f = saturating_mul(f, rule.g(pp.exponent));
    return f;
}

int mu_r(const Factorization& fact, unsigned r)
{
    for (const auto& pp : fact.pairs())
        if (pp.exponent >= r)
            return 0;
    return 1;
}

int s_r(const Factorization& fact, unsigned r)
{
    for (const auto& pp : fact.pairs())
        if (pp.exponent < r)
            return 0;
    return 1;
}

int mu_r_inverse(const Factorization& fact, unsigned r)
{
    int sign = 1;
    for (const auto& pp : fact.pairs()) {
        const unsigned rem = pp.exponent % r;
        if (rem == 1)
            sign = -sign;
        else if (rem != 0)
            return 0;
    }
    return sign;
}

std::uint64_t tau(const Factorization& fact)
{
    std::uint64_t t = 1;
    for (const auto& pp : fact.pairs())
        t *= pp.exponent + 1;
    return t;
}

unsigned omega(const Factorization& fact)
{
    return static_cast<unsigned>(fact.size());
}

std::int64_t h_value(const ExponentRule& rule, std::uint64_t k,
                     const Factorization& fact)
{
    check_exponents(rule, fact);
    const HSum sum{rule, k, fact.pairs(), rule.r()};
    return sum.walk(0, 1, 1);
}

} // namespace pimshort
