#include "pimshort/rfull_density.hpp"

#include "pimshort/bounds.hpp"
#include "pimshort/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace pimshort {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(long double term)
    {
        const long double t = sum_ + term;
        if (std::fabs(sum_) >= std::fabs(term))
            carry_ += (sum_ - t) + term;
        else
            carry_ += (term - t) + sum_;
        sum_ = t;
    }
    long double value() const { return sum_ + carry_; }

private:
    long double sum_ = 0;
    long double carry_ = 0;
};

class RFullWalker {
public:
    RFullWalker(unsigned r, std::uint64_t limit, const RFullVisitor& visit)
        : r_(r), limit_(limit), visit_(visit),
          primes_(primes_up_to(iroot(limit, r)))
    {
    }

    void run()
    {
        Factorization fact;
        descend(0, 1, fact);
    }

private:
    void descend(std::size_t first, std::uint64_t n, Factorization& fact)
    {
        visit_(n, fact);
        const std::uint64_t room = limit_ / n;
        for (std::size_t i = first; i < primes_.size(); ++i) {
            const std::uint64_t p = primes_[i];
            std::uint64_t pe = saturating_pow(p, r_);
            if (pe > room)
                break;
            for (unsigned e = r_;; ++e) {
                fact.push_back({p, e});
                descend(i + 1, n * pe, fact);
                fact.pop_back();
                if (pe > room / p)
                    break;
                pe *= p;
            }
        }
    }

    unsigned r_;
    std::uint64_t limit_;
    const RFullVisitor& visit_;
    std::vector<std::uint64_t> primes_;
};

void check_r(unsigned r)
{
    if (r < 2)
        throw DomainError("r must be >= 2");
}

// Upper end of the block used for tail extrapolation.
std::uint64_t tail_block_end(std::uint64_t bound, unsigned r)
{
    const std::uint64_t cap = kMaxFactorizable - 1;
    if (r >= 63 || bound > (cap >> r))
        return cap;
    return bound << r;
}

} // namespace

void for_each_rfull(unsigned r, std::uint64_t limit, const RFullVisitor& visit)
{
    check_r(r);
    if (limit < 1)
        return;
    RFullWalker(r, limit, visit).run();
}

std::vector<std::uint64_t> enumerate_rfull(unsigned r, std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    for_each_rfull(r, limit,
                   [&](std::uint64_t n, const Factorization&) { out.push_back(n); });
    std::sort(out.begin(), out.end());
    return out;
}

RFullDecomposition decompose_rfull(const Factorization& fact, unsigned r)
{
    check_r(r);
    if (!s_r(fact, r))
        throw DomainError("decompose_rfull: argument is not " +
                          std::to_string(r) + "-full");

    // alpha = (r + s) + r q with s = alpha mod r: p goes once into a_{s+1}
    // when s > 0, and p^q (or p^(alpha/r) when s = 0) into a_1.
    RFullDecomposition d{std::vector<std::uint64_t>(r, 1)};
    for (const auto& pp : fact.pairs()) {
        const unsigned s = pp.exponent % r;
        if (s == 0) {
            d.a[0] *= saturating_pow(pp.prime, pp.exponent / r);
        } else {
            d.a[s] *= pp.prime;
            d.a[0] *= saturating_pow(pp.prime, (pp.exponent - r - s) / r);
        }
    }
    return d;
}

std::uint64_t recompose_rfull(const RFullDecomposition& d, unsigned r)
{
    check_r(r);
    if (d.a.size() != r)
        throw DomainError("decomposition must hold exactly r factors");
    std::uint64_t n = 1;
    for (unsigned i = 0; i < r; ++i) {
        const std::uint64_t part = saturating_pow(d.a[i], r + i);
        if (part == std::numeric_limits<std::uint64_t>::max() ||
            __builtin_mul_overflow(n, part, &n))
            throw RangeError("recomposed value exceeds 64 bits");
    }
    return n;
}

long double psi_r(const Factorization& fact, unsigned r)
{
    check_r(r);
    // Per prime: p^alpha + p^(alpha-1) + ... + p^(alpha-r+1).
    long double out = 1;
    for (const auto& pp : fact.pairs()) {
        const long double p = static_cast<long double>(pp.prime);
        long double power = std::pow(p, static_cast<long double>(pp.exponent));
        long double factor = 0;
        for (unsigned i = 0; i < r; ++i) {
            factor += power;
            power /= p;
        }
        out *= factor;
    }
    return out;
}

double tail_extrapolation_factor(unsigned r)
{
    return 1.0 / (1.0 - std::pow(2.0, 1.0 / r - 1.0));
}

DensityResult density(const ExponentRule& rule, std::uint64_t k,
                      std::uint64_t bound)
{
    if (bound < 1)
        throw DomainError("density: truncation bound must be >= 1");
    if (k < 1)
        throw DomainError("density: k must be >= 1");

    const unsigned r = rule.r();
    CompensatedSum head;
    CompensatedSum block;
    for_each_rfull(r, tail_block_end(bound, r),
                   [&](std::uint64_t b, const Factorization& fact) {
                       if (eval_f(rule, fact) != k)
                           return;
                       const long double term = 1.0L / psi_r(fact, r);
                       (b <= bound ? head : block).add(term);
                   });

    DensityResult out;
    out.rule = rule.name();
    out.k = k;
    out.r = r;
    out.bound = bound;
    out.partial_sum = static_cast<double>(head.value());
    out.tail_estimate =
        static_cast<double>(block.value()) * tail_extrapolation_factor(r);
    out.zeta_r = zeta(r);
    out.density = static_cast<double>(head.value() / out.zeta_r);
    return out;
}

SeriesValue h_series_at_one(const ExponentRule& rule, std::uint64_t k,
                            std::uint64_t bound)
{
    if (bound < 1)
        throw DomainError("h_series_at_one: truncation bound must be >= 1");

    const unsigned r = rule.r();
    CompensatedSum head;
    CompensatedSum block;
    for_each_rfull(r, tail_block_end(bound, r),
                   [&](std::uint64_t n, const Factorization& fact) {
                       const std::int64_t h = h_value(rule, k, fact);
                       if (h == 0)
                           return;
                       const long double nl = static_cast<long double>(n);
                       if (n <= bound)
                           head.add(h / nl);
                       else
                           block.add(std::abs(h) / nl);
                   });
    return {static_cast<double>(head.value()),
            static_cast<double>(block.value()) * tail_extrapolation_factor(r)};
}

std::vector<double> h_weighted_partial_sums(const ExponentRule& rule,
                                            std::uint64_t k, double kappa,
                                            const std::vector<std::uint64_t>& points)
{
    if (kappa < 0)
        throw DomainError("h_weighted_partial_sum: kappa must be >= 0");
    if (!std::is_sorted(points.begin(), points.end()))
        throw DomainError("h_weighted_partial_sums: points must ascend");
    if (points.empty())
        return {};

    std::vector<std::pair<std::uint64_t, long double>> terms;
    const long double kl = kappa;
    for_each_rfull(rule.r(), points.back(),
                   [&](std::uint64_t n, const Factorization& fact) {
                       const std::int64_t h = h_value(rule, k, fact);
                       if (h != 0)
                           terms.emplace_back(
                               n, std::abs(h) /
                                      std::pow(static_cast<long double>(n), kl));
                   });
    std::sort(terms.begin(), terms.end());

    std::vector<double> out;
    out.reserve(points.size());
    CompensatedSum acc;
    std::size_t next = 0;
    for (const std::uint64_t x : points) {
        while (next < terms.size() && terms[next].first <= x)
            acc.add(terms[next++].second);
        out.push_back(static_cast<double>(acc.value()));
    }
    return out;
}

double h_weighted_partial_sum(const ExponentRule& rule, std::uint64_t k,
                              double kappa, std::uint64_t x)
{
    if (x < 2)
        throw DomainError("h_weighted_partial_sum: x must be >= 2");
    return h_weighted_partial_sums(rule, k, kappa, {x}).front();
}

} // namespace pimshort
