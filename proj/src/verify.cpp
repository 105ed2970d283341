#include "pimshort/verify.hpp"

#include "pimshort/bounds.hpp"
#include "pimshort/errors.hpp"
#include "pimshort/exponent_rules.hpp"
#include "pimshort/factor_core.hpp"
#include "pimshort/interval_sieve.hpp"
#include "pimshort/records.hpp"
#include "pimshort/rfull_density.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace pimshort {

namespace {

constexpr std::uint64_t kPlaneGolden[] = {1,  1,   3,   6,   13,  24,  48,
                                          86, 160, 282, 500, 859, 1479};
constexpr std::uint64_t kSemisimpleGolden[] = {1,  1,  2,  3,   6,   8,   13, 18,
                                               29, 40, 58, 79, 115, 154, 213};

template <typename Range>
std::string join(const Range& values)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    return os.str();
}

class Report {
public:
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    void add(std::string name, bool passed, std::string observed,
             std::string expected)
    {
        checks_.push_back({suite_, std::move(name), passed, std::move(observed),
                           std::move(expected)});
    }

    std::vector<Check> take() { return std::move(checks_); }

private:
    std::string suite_;
    std::vector<Check> checks_;
};

std::vector<ExponentRule> families()
{
    std::vector<ExponentRule> rules;
    for (const auto& name : builtin_family_names())
        rules.push_back(build_rule(name));
    return rules;
}

std::vector<ExponentRule> all_builtin_rules()
{
    auto rules = families();
    rules.push_back(build_rule("powerdiv-r:2"));
    rules.push_back(build_rule("powerdiv-r:3"));
    return rules;
}

std::vector<Check> suite_sequences()
{
    Report rep("sequences");

    const auto plane = plane_partition_table(kDefaultAlphaMax);
    const std::vector<std::uint64_t> plane_head(plane.begin(), plane.begin() + 13);
    const std::vector<std::uint64_t> plane_gold(std::begin(kPlaneGolden),
                                                std::end(kPlaneGolden));
    rep.add("plane partitions P_2(0..12)", plane_head == plane_gold,
            join(plane_head), join(plane_gold));

    const auto semi = semisimple_table(kDefaultAlphaMax);
    const std::vector<std::uint64_t> semi_head(semi.begin(), semi.begin() + 15);
    const std::vector<std::uint64_t> semi_gold(std::begin(kSemisimpleGolden),
                                               std::end(kSemisimpleGolden));
    rep.add("semisimple counts P*(0..14)", semi_head == semi_gold,
            join(semi_head), join(semi_gold));

    // Partitions: pentagonal recurrence against a parts-by-size table.
    std::vector<std::uint64_t> dp(kDefaultAlphaMax + 1, 0);
    dp[0] = 1;
    for (unsigned part = 1; part <= kDefaultAlphaMax; ++part)
        for (unsigned n = part; n <= kDefaultAlphaMax; ++n)
            dp[n] += dp[n - part];
    const auto pent = partition_table(kDefaultAlphaMax);
    rep.add("partitions P(0..64) recurrence vs part-size table", pent == dp,
            "P(64)=" + std::to_string(pent.back()),
            "P(64)=" + std::to_string(dp.back()));

    for (const auto& rule : all_builtin_rules()) {
        unsigned expected = 2;
        if (rule.name() == "powerdiv-r:3")
            expected = 3;
        rep.add("derived r of " + rule.name(), rule.r() == expected,
                std::to_string(rule.r()), std::to_string(expected));
    }
    return rep.take();
}

std::vector<Check> suite_convolution()
{
    Report rep("convolution");
    constexpr std::uint64_t N = 10'000;
    constexpr std::uint64_t kMax = 10;

    std::vector<Factorization> fact(N + 1);
    for (std::uint64_t n = 1; n <= N; ++n)
        fact[n] = factorize(n);

    for (const auto& rule : families()) {
        const unsigned r = rule.r();
        std::vector<int> mu(N + 1);
        for (std::uint64_t n = 1; n <= N; ++n)
            mu[n] = mu_r(fact[n], r);

        std::uint64_t support_bad = 0, bound_bad = 0, conv_bad = 0,
                      vanish_bad = 0, unit_bad = 0;
        for (std::uint64_t k = 1; k <= kMax; ++k) {
            std::vector<std::int64_t> h(N + 1);
            for (std::uint64_t n = 1; n <= N; ++n) {
                h[n] = h_value(rule, k, fact[n]);
                if (!s_r(fact[n], r) && h[n] != 0)
                    ++support_bad;
                if (static_cast<std::uint64_t>(std::llabs(h[n])) >
                    static_cast<std::uint64_t>(s_r(fact[n], r)) * tau(fact[n]))
                    ++bound_bad;
                if (k == 1 && h[n] != (n == 1 ? 1 : 0))
                    ++unit_bad;
            }

            std::vector<std::int64_t> conv(N + 1, 0);
            for (std::uint64_t d = 1; d <= N; ++d) {
                if (!mu[d])
                    continue;
                for (std::uint64_t m = 1; d * m <= N; ++m)
                    conv[d * m] += h[m];
            }
            for (std::uint64_t n = 1; n <= N; ++n)
                if (conv[n] != (eval_f(rule, fact[n]) == k ? 1 : 0))
                    ++conv_bad;

            for (const std::uint64_t p : primes_up_to(50))
                for (unsigned a = 1; a < r; ++a)
                    if (h_value(rule, k, Factorization({{p, a}})) != 0)
                        ++vanish_bad;
        }

        const std::string tag = rule.name() + ", k<=10, n<=10^4";
        rep.add("support on r-full n (" + tag + ")", support_bad == 0,
                "violations=" + std::to_string(support_bad), "violations=0");
        rep.add("|h| <= s_r tau (" + tag + ")", bound_bad == 0,
                "violations=" + std::to_string(bound_bad), "violations=0");
        rep.add("sum_{d|n} h(n/d) mu_r(d) = 1_{f=k}(n) (" + tag + ")",
                conv_bad == 0, "violations=" + std::to_string(conv_bad),
                "violations=0");
        rep.add("h(p^a) = 0 for a < r, p <= 50 (" + rule.name() + ")",
                vanish_bad == 0, "violations=" + std::to_string(vanish_bad),
                "violations=0");
        rep.add("k=1 gives the convolution identity (" + rule.name() + ")",
                unit_bad == 0, "violations=" + std::to_string(unit_bad),
                "violations=0");
    }
    return rep.take();
}

std::vector<Check> suite_density_cross(const VerifyOptions& opts)
{
    Report rep("density-cross");

    for (const auto& rule : all_builtin_rules()) {
        const auto d = density(rule, 1);
        const double expected = 1.0 / zeta(rule.r());
        rep.add("k=1 collapses to 1/zeta(r) (" + rule.name() + ")",
                std::fabs(d.density - expected) <= 1e-9,
                format_double(d.density), format_double(expected) + " +- 1e-9");
    }

    for (const auto& rule : families()) {
        double worst_gap = 0;
        std::uint64_t bad = 0;
        for (std::uint64_t k = 1; k <= 10; ++k) {
            const auto d = density(rule, k);
            const auto h = h_series_at_one(rule, k);
            const double gap = std::fabs(d.density - h.value / d.zeta_r);
            const double allowed =
                (d.tail_estimate + h.tail_estimate) / d.zeta_r + kSeriesRoundingSlack;
            if (gap > allowed)
                ++bad;
            worst_gap = std::max(worst_gap, gap);
        }
        rep.add("Psi-series and H(1) paths agree within tails (" + rule.name() +
                    ", k<=10, B=10^9)",
                bad == 0,
                "failures=" + std::to_string(bad) +
                    " max_gap=" + format_double(worst_gap),
                "failures=0");
    }

    const auto abelian = build_rule("abelian");
    constexpr std::uint64_t X = 10'000'000;
    const auto hist = value_histogram(abelian, 0, X, opts.workers);
    for (std::uint64_t k = 1; k <= 5; ++k) {
        const auto it = hist.find(k);
        const double direct =
            (it == hist.end() ? 0.0 : static_cast<double>(it->second)) / X;
        const double series = density(abelian, k).density;
        rep.add("abelian k=" + std::to_string(k) + " series vs S(10^7)/10^7",
                std::fabs(series - direct) <= 5e-3,
                format_double(series) + " vs " + format_double(direct),
                "|diff| <= 5e-3");
    }
    return rep.take();
}

std::vector<Check> suite_lemma2()
{
    Report rep("lemma2");
    const auto abelian = build_rule("abelian");
    const unsigned r = abelian.r();
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 1000; x <= 100'000'000; x *= 10)
        xs.push_back(x);

    for (const double kappa : {0.0, 0.5}) {
        const auto sums = h_weighted_partial_sums(abelian, 2, kappa, xs);
        std::vector<double> ratios;
        for (std::size_t i = 0; i < xs.size(); ++i)
            ratios.push_back(sums[i] /
                             weighted_sum_scale(r, kappa, static_cast<double>(xs[i])));
        const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
        const double spread = *hi / *lo;
        std::vector<std::string> shown;
        for (const double v : ratios)
            shown.push_back(format_double(v));
        rep.add("abelian k=2 kappa=" + format_double(kappa) +
                    " ratio to x^(1/r-kappa) log^r x, x=10^3..10^8",
                spread < 4.0,
                "spread=" + format_double(spread) + " ratios=" + join(shown),
                "spread < 4");
    }

    const auto sums = h_weighted_partial_sums(abelian, 2, 1.0, xs);
    bool shrinking = true;
    std::vector<std::string> steps;
    double previous = HUGE_VAL;
    for (std::size_t i = 1; i < sums.size(); ++i) {
        const double step = sums[i] - sums[i - 1];
        steps.push_back(format_double(step));
        if (!(step < previous))
            shrinking = false;
        previous = step;
    }
    rep.add("abelian k=2 kappa=1 decade increments shrink", shrinking,
            join(steps), "strictly decreasing");
    return rep.take();
}

std::vector<Check> suite_lemma3(const VerifyOptions& opts)
{
    Report rep("lemma3");

    // Brute force over every n in (2Y, 2X] at the smallest scale.
    {
        const std::uint64_t X = 100, Y = 10;
        std::uint64_t brute = 0;
        for (std::uint64_t n = 2 * Y + 1; n <= 2 * X; ++n)
            if (s_r(factorize(n), 2))
                brute += (X + Y) / n - X / n;
        const auto s = lemma31_sum(X, Y, 2);
        rep.add("multiple-count sum at (100,10,2) vs brute force",
                s.by_rfull == brute && s.agree(),
                std::to_string(s.by_rfull) + "/" + std::to_string(s.by_interval),
                std::to_string(brute));
    }

    const std::pair<std::uint64_t, std::uint64_t> grid[] = {
        {10'000, 100}, {1'000'000, 1'000}, {100'000'000, 10'000}};
    for (const unsigned r : {2u, 3u})
        for (const auto& [X, Y] : grid) {
            const auto s = lemma31_sum(X, Y, r);
            rep.add("multiple-count sum paths agree (X=" + std::to_string(X) +
                        ", Y=" + std::to_string(Y) + ", r=" + std::to_string(r) +
                        ")",
                    s.agree(),
                    std::to_string(s.by_rfull) + " vs " +
                        std::to_string(s.by_interval),
                    "equal");
        }

    {
        const std::uint64_t X = 1'000'000'000, Y = 100'000;
        const auto count = count_r_free(X, Y, 2, opts.workers);
        const double expected = Y / zeta(2);
        const double residual = std::fabs(count - expected);
        rep.add("squarefree count in (10^9, 10^9+10^5] vs Y/zeta(2)",
                residual <= 0.01 * Y,
                std::to_string(count) + " (residual " + format_double(residual) +
                    ")",
                format_double(expected) + " +- " + format_double(0.01 * Y));
        const double loose = bound_breakdown(2, X, Y).r_lemma * std::pow(X, 0.05);
        rep.add("squarefree residual <= R_2(X,Y) X^0.05", residual <= loose,
                format_double(residual), "<= " + format_double(loose));
    }

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick_x(0, 100'000'000);
    std::uniform_int_distribution<std::uint64_t> pick_y(1, 10'000);
    std::uint64_t bad = 0;
    const auto rules = all_builtin_rules();
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t x = pick_x(rng), y = pick_y(rng);
        const auto& rule = rules[trial % rules.size()];
        if (count_f_equals_k(rule, 1, x, y) != count_r_free(x, y, rule.r()))
            ++bad;
    }
    rep.add("#{f(n)=1} equals r-free count on 50 random segments", bad == 0,
            "mismatches=" + std::to_string(bad), "mismatches=0");
    return rep.take();
}

std::vector<Check> suite_theorem(const VerifyOptions& opts)
{
    Report rep("theorem");
    const auto abelian = build_rule("abelian");
    const std::uint64_t x = 100'000'000'000, y = 1'000'000;
    for (const std::uint64_t k : {1u, 2u}) {
        const auto report =
            interval_report(abelian, k, x, y, kDefaultEpsilon, opts.workers);
        const double d = report.density;
        const double band = 10.0 * std::sqrt(d * (1 - d) * y);
        const double bound =
            theorem_bound(2, x, y) * std::pow(static_cast<double>(x), 0.01);
        const std::string where = "abelian k=" + std::to_string(k) +
                                  ", x=10^11, y=10^6";
        rep.add("admissible range (" + where + ")", report.admissible,
                report.admissible ? "true" : "false", "true");
        rep.add("|count - d y| within 10 sqrt(d(1-d)y) (" + where + ")",
                report.abs_error <= band,
                std::to_string(report.count) + " (error " +
                    format_double(report.abs_error) + ")",
                "<= " + format_double(band));
        rep.add("|count - d y| within theorem bound x^0.01 (" + where + ")",
                report.abs_error <= bound, format_double(report.abs_error),
                "<= " + format_double(bound));
    }
    return rep.take();
}

} // namespace

const std::vector<std::string>& verify_suite_names()
{
    static const std::vector<std::string> names = {
        "sequences", "convolution", "density-cross",
        "lemma2",    "lemma3",      "theorem"};
    return names;
}

std::vector<Check> run_verify_suite(std::string_view suite,
                                    const VerifyOptions& opts)
{
    if (suite == "all") {
        std::vector<Check> all;
        for (const auto& name : verify_suite_names()) {
            auto part = run_verify_suite(name, opts);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    if (suite == "sequences")
        return suite_sequences();
    if (suite == "convolution")
        return suite_convolution();
    if (suite == "density-cross")
        return suite_density_cross(opts);
    if (suite == "lemma2")
        return suite_lemma2();
    if (suite == "lemma3")
        return suite_lemma3(opts);
    if (suite == "theorem")
        return suite_theorem(opts);
    throw LookupError("unknown verification suite '" + std::string(suite) + "'");
}

} // namespace pimshort
