#pragma once

#include "pimshort/exponent_rules.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pimshort {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sorted (prime, exponent) pairs; the empty list represents 1.
class Factorization {
public:
    Factorization() = default;
    // Throws DomainError unless primes strictly increase and exponents >= 1.
    explicit Factorization(std::vector<PrimePower> pairs);

    std::span<const PrimePower> pairs() const noexcept { return pairs_; }
    bool empty() const noexcept { return pairs_.empty(); }
    std::size_t size() const noexcept { return pairs_.size(); }

    // Recomposed integer; RangeError if it does not fit in 64 bits.
    std::uint64_t value() const;

    // Appends a prime larger than every prime already present.
    void push_back(PrimePower pp);
    void pop_back() { pairs_.pop_back(); }

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> pairs_;
};

inline constexpr std::uint64_t kMaxFactorizable = std::uint64_t{1} << 63;

std::uint64_t isqrt(std::uint64_t n);
// floor(n^(1/k)) for k >= 1.
std::uint64_t iroot(std::uint64_t n, unsigned k);
// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp);

// Primes <= limit, by a sieve of Eratosthenes over odd numbers.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Trial division against a shared prime table. Throws DomainError for n = 0
// and RangeError for n >= 2^63.
Factorization factorize(std::uint64_t n);

// prod g(alpha_i), saturating at UINT64_MAX. RangeError if some exponent
// exceeds the rule's alpha_max.
std::uint64_t eval_f(const ExponentRule& rule, const Factorization& fact);

// Indicators of the r-free and r-full numbers.
int mu_r(const Factorization& fact, unsigned r);
int s_r(const Factorization& fact, unsigned r);

// Convolution inverse of mu_r; on p^alpha it is 1 if r | alpha, -1 if
// r | alpha - 1 and 0 otherwise.
int mu_r_inverse(const Factorization& fact, unsigned r);

// Number of divisors, and number of distinct prime factors.
std::uint64_t tau(const Factorization& fact);
unsigned omega(const Factorization& fact);

// h_{f,k,r}(n) = sum over d | n with f(n/d) = k of mu_r^{-1}(d), evaluated
// straight from the divisor sum. Only divisors with mu_r^{-1}(d) != 0 are
// visited, i.e. d with every exponent congruent to 0 or 1 mod r.
std::int64_t h_value(const ExponentRule& rule, std::uint64_t k,
                     const Factorization& fact);

} // namespace pimshort
