#pragma once

#include <cstdint>

namespace pimshort {

// zeta(s) for integer s >= 2: direct summation plus an Euler-Maclaurin
// tail through the first correction term. `digits` above 15 throws
// UnsupportedPrecisionError.
double zeta(unsigned s, unsigned digits = 15);

// Exact rational, always normalized with a positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    double value() const { return static_cast<double>(num) / den; }
    friend bool operator==(const Rational&, const Rational&) = default;
};

// Exponents of the short-interval error terms for a given r:
//
//   term_main = x^main_x * y^main_y         = (x^(r-1) y^(r+1))^(1/(2r^2))
//   term_mid  = y * x^mid_x                 = y x^(-1/(6(4r-1)(2r-1)))
//   term_tail = y^tail_y                    = y^(1 - 2(r-1)/(r(3r-1)))
//   the leading term of R_r is x^lemma_x    = x^(1/(2r+1))
struct BoundExponents {
    Rational main_x;
    Rational main_y;
    Rational mid_x;
    Rational tail_y;
    Rational lemma_x;
};

BoundExponents bound_exponents(unsigned r);

// The x-exponent printed in the r = 2 corollaries for the middle term. It
// differs from bound_exponents(2).mid_x; callers surface the mismatch.
inline constexpr Rational kCorollaryMidExponent{-1, 42};
bool corollary_mid_exponent_differs(unsigned r);

struct BoundBreakdown {
    unsigned r = 0;
    double x = 0;
    double y = 0;
    double term_main = 0;
    double term_mid = 0;
    double term_tail = 0;
    double r_lemma = 0; // R_r(X, Y) = X^(1/(2r+1)) + term_mid + term_tail
};

// Components with epsilon = 0. DomainError unless x > y > 0 and r >= 2.
BoundBreakdown bound_breakdown(unsigned r, double x, double y);

// term_main + term_mid + term_tail (epsilon = 0).
double theorem_bound(unsigned r, double x, double y);

// x^(1/(2r+1)+eps) <= y <= 4^(-2r^2) x
bool admissible(unsigned r, double x, double y, double eps);

// x^(1/r - kappa) (log x)^r, the growth scale of sum_{n<=x} |h(n)| / n^kappa.
double weighted_sum_scale(unsigned r, double kappa, double x);

} // namespace pimshort
