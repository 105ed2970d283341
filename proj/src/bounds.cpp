#include "pimshort/bounds.hpp"

#include "pimshort/errors.hpp"

#include <cmath>
#include <numeric>

namespace pimshort {

double zeta(unsigned s, unsigned digits)
{
    if (s < 2)
        throw DomainError("zeta: s must be >= 2");
    if (digits > 15)
        throw UnsupportedPrecisionError(
            "zeta: at most 15 decimal digits are supported, got " +
            std::to_string(digits));

    // The first omitted Euler-Maclaurin term is s(s+1)(s+2) N^(-s-3) / 720,
    // below 1e-17 for N = 1000 and any s >= 2.
    constexpr unsigned N = 1000;
    const long double sl = s;
    long double sum = 0;
    for (unsigned n = N - 1; n >= 1; --n)
        sum += std::pow(static_cast<long double>(n), -sl);
    const long double big_n = N;
    const long double tail = std::pow(big_n, 1 - sl) / (sl - 1) +
                             std::pow(big_n, -sl) / 2 +
                             sl * std::pow(big_n, -sl - 1) / 12;
    return static_cast<double>(sum + tail);
}

Rational Rational::make(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

BoundExponents bound_exponents(unsigned r)
{
    if (r < 2)
        throw DomainError("bound exponents need r >= 2");
    const std::int64_t rr = r;
    return {
        Rational::make(rr - 1, 2 * rr * rr),
        Rational::make(rr + 1, 2 * rr * rr),
        Rational::make(-1, 6 * (4 * rr - 1) * (2 * rr - 1)),
        Rational::make(rr * (3 * rr - 1) - 2 * (rr - 1), rr * (3 * rr - 1)),
        Rational::make(1, 2 * rr + 1),
    };
}

bool corollary_mid_exponent_differs(unsigned r)
{
    return r == 2 && !(bound_exponents(2).mid_x == kCorollaryMidExponent);
}

BoundBreakdown bound_breakdown(unsigned r, double x, double y)
{
    if (r < 2)
        throw DomainError("bound_breakdown: r must be >= 2");
    if (!(y > 0) || !(x > y))
        throw DomainError("bound_breakdown: need x > y > 0");

    const auto e = bound_exponents(r);
    BoundBreakdown b;
    b.r = r;
    b.x = x;
    b.y = y;
    b.term_main = std::pow(x, e.main_x.value()) * std::pow(y, e.main_y.value());
    b.term_mid = y * std::pow(x, e.mid_x.value());
    b.term_tail = std::pow(y, e.tail_y.value());
    b.r_lemma = std::pow(x, e.lemma_x.value()) + b.term_mid + b.term_tail;
    return b;
}

double theorem_bound(unsigned r, double x, double y)
{
    const auto b = bound_breakdown(r, x, y);
    return b.term_main + b.term_mid + b.term_tail;
}

bool admissible(unsigned r, double x, double y, double eps)
{
    const double lower = std::pow(x, 1.0 / (2.0 * r + 1.0) + eps);
    const double upper = std::ldexp(x, -4 * static_cast<int>(r * r));
    return lower <= y && y <= upper;
}

double weighted_sum_scale(unsigned r, double kappa, double x)
{
    return std::pow(x, 1.0 / r - kappa) * std::pow(std::log(x), r);
}

} // namespace pimshort
