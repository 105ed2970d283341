#pragma once

#include "pimshort/exponent_rules.hpp"
#include "pimshort/factor_core.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pimshort {

// Visits every r-full n <= limit (1 included) together with its
// factorization. Order is depth-first over ascending primes, deterministic
// but not ascending in n.
using RFullVisitor =
    std::function<void(std::uint64_t n, const Factorization& fact)>;
void for_each_rfull(unsigned r, std::uint64_t limit, const RFullVisitor& visit);

// All r-full n <= limit in ascending order.
std::vector<std::uint64_t> enumerate_rfull(unsigned r, std::uint64_t limit);

// n = a_1^r a_2^(r+1) ... a_r^(2r-1) with a_2 ... a_r squarefree and
// pairwise coprime. a[0] holds a_1.
struct RFullDecomposition {
    std::vector<std::uint64_t> a;

    friend bool operator==(const RFullDecomposition&,
                           const RFullDecomposition&) = default;
};

// DomainError if the factorization is not r-full.
RFullDecomposition decompose_rfull(const Factorization& fact, unsigned r);
// Inverse of decompose_rfull; RangeError on 64-bit overflow.
std::uint64_t recompose_rfull(const RFullDecomposition& d, unsigned r);

// Psi_r(b) = b prod_{p | b} (1 + 1/p + ... + 1/p^(r-1)).
long double psi_r(const Factorization& fact, unsigned r);

// Truncated density series
//   d_{f,k} ~ (1/zeta(r)) sum_{r-full b <= B, f(b) = k} 1/Psi_r(b).
// tail_estimate is in the units of partial_sum: the same sum over
// b in (B, 2^r B], scaled by 1 / (1 - 2^(1/r - 1)). It is a heuristic
// extrapolation, not a certified bound.
struct DensityResult {
    std::string rule;
    std::uint64_t k = 0;
    unsigned r = 0;
    std::uint64_t bound = 0;
    double partial_sum = 0;
    double tail_estimate = 0;
    double zeta_r = 0;
    double density = 0;

    friend bool operator==(const DensityResult&, const DensityResult&) = default;
};

inline constexpr std::uint64_t kDefaultDensityBound = 1'000'000'000;

DensityResult density(const ExponentRule& rule, std::uint64_t k,
                      std::uint64_t bound = kDefaultDensityBound);

// sum_{r-full n <= B} h_{f,k,r}(n) / n, i.e. H_{f,k,r}(1) truncated, with
// a tail estimate built like DensityResult's from sum |h(n)|/n over
// (B, 2^r B].
struct SeriesValue {
    double value = 0;
    double tail_estimate = 0;
};

SeriesValue h_series_at_one(const ExponentRule& rule, std::uint64_t k,
                            std::uint64_t bound = kDefaultDensityBound);

// sum_{r-full n <= x} |h_{f,k,r}(n)| / n^kappa.
double h_weighted_partial_sum(const ExponentRule& rule, std::uint64_t k,
                              double kappa, std::uint64_t x);

// The same sum evaluated at each of `points` (ascending) in one pass.
std::vector<double> h_weighted_partial_sums(const ExponentRule& rule,
                                            std::uint64_t k, double kappa,
                                            const std::vector<std::uint64_t>& points);

// Absolute slack for comparing two floating-point evaluations of the same
// series; covers rounding when both tail estimates are zero.
inline constexpr double kSeriesRoundingSlack = 1e-15;

// Geometric factor applied to the (B, 2^r B] block to extrapolate a tail.
double tail_extrapolation_factor(unsigned r);

} // namespace pimshort
