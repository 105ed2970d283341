#include "pimshort/exponent_rules.hpp"

#include "pimshort/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace pimshort {

namespace {

bool valid_identifier(std::string_view s)
{
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
               (c >= '0' && c <= '9') || c == '_' || c == '-' || c == ':' ||
               c == '.';
    });
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, unsigned alpha)
{
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw RangeError("exponent sequence value at alpha=" +
                         std::to_string(alpha) + " exceeds 64 bits");
    return out;
}

void check_alpha(unsigned alpha, unsigned alpha_max)
{
    if (alpha > alpha_max)
        throw RangeError("alpha=" + std::to_string(alpha) +
                         " exceeds alpha_max=" + std::to_string(alpha_max));
}

// Multiplies the series in place by (1 - x^part)^(-1).
void multiply_geometric(std::vector<std::uint64_t>& series, unsigned part)
{
    for (std::size_t n = part; n < series.size(); ++n)
        series[n] = checked_add(series[n], series[n - part],
                                static_cast<unsigned>(n));
}

} // namespace

ExponentRule::ExponentRule(std::string name, std::vector<std::uint64_t> values,
                           unsigned declared_r)
    : name_(std::move(name)), values_(std::move(values))
{
    if (!valid_identifier(name_))
        throw ValidationError("rule name '" + name_ +
                              "' is not an identifier");
    if (values_.size() < kDefaultAlphaMax + 1)
        throw ValidationError(
            "rule '" + name_ + "' tabulates " + std::to_string(values_.size()) +
            " values; at least " + std::to_string(kDefaultAlphaMax + 1) +
            " are required");
    if (values_[0] != 1)
        throw ValidationError("g(0) must be 1 (alpha=0)", 0);

    for (std::size_t a = 1; a < values_.size(); ++a) {
        if (values_[a] > 1) {
            r_ = static_cast<unsigned>(a);
            break;
        }
        if (values_[a] == 0)
            throw ValidationError("g(" + std::to_string(a) +
                                      ") must be a positive integer (alpha=" +
                                      std::to_string(a) + ")",
                                  static_cast<int>(a));
    }
    if (r_ == 0)
        throw ValidationError("rule '" + name_ +
                              "' never exceeds 1, so no threshold r exists");
    if (r_ < 2)
        throw ValidationError("g(1) must be 1 (alpha=1)", 1);

    for (std::size_t a = r_; a < values_.size(); ++a) {
        if (values_[a] < 2)
            throw ValidationError("g(" + std::to_string(a) +
                                      ") must be >= 2 for alpha >= r=" +
                                      std::to_string(r_) + " (alpha=" +
                                      std::to_string(a) + ")",
                                  static_cast<int>(a));
    }

    if (declared_r != 0 && declared_r != r_)
        throw ValidationError("declared r=" + std::to_string(declared_r) +
                                  " disagrees with derived r=" +
                                  std::to_string(r_) + " (alpha=" +
                                  std::to_string(std::min(declared_r, r_)) + ")",
                              static_cast<int>(std::min(declared_r, r_)));
}

std::uint64_t ExponentRule::g(unsigned alpha) const
{
    check_alpha(alpha, alpha_max());
    return values_[alpha];
}

std::vector<std::uint64_t> partition_table(unsigned alpha_max)
{
    // P(n) = sum_{k>=1} (-1)^(k+1) [P(n - k(3k-1)/2) + P(n - k(3k+1)/2)]
    std::vector<std::uint64_t> p(alpha_max + 1, 0);
    p[0] = 1;
    for (unsigned n = 1; n <= alpha_max; ++n) {
        __int128 acc = 0;
        for (unsigned k = 1;; ++k) {
            const unsigned g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            const unsigned g2 = k * (3 * k + 1) / 2;
            __int128 term = p[n - g1];
            if (g2 <= n)
                term += p[n - g2];
            acc += (k % 2 == 1) ? term : -term;
        }
        if (acc < 0 || acc > std::numeric_limits<std::uint64_t>::max())
            throw RangeError("P(" + std::to_string(n) + ") exceeds 64 bits");
        p[n] = static_cast<std::uint64_t>(acc);
    }
    return p;
}

std::vector<std::uint64_t> plane_partition_table(unsigned alpha_max)
{
    std::vector<std::uint64_t> series(alpha_max + 1, 0);
    series[0] = 1;
    for (unsigned j = 1; j <= alpha_max; ++j)
        for (unsigned rep = 0; rep < j; ++rep)
            multiply_geometric(series, j);
    return series;
}

std::vector<std::uint64_t> semisimple_table(unsigned alpha_max)
{
    std::vector<std::uint64_t> series(alpha_max + 1, 0);
    series[0] = 1;
    for (unsigned v = 1; v <= alpha_max; ++v) {
        // number of pairs (q, m) with q * m^2 == v
        unsigned pairs = 0;
        for (unsigned m = 1; m * m <= v; ++m)
            if (v % (m * m) == 0)
                ++pairs;
        for (unsigned rep = 0; rep < pairs; ++rep)
            multiply_geometric(series, v);
    }
    return series;
}

std::uint64_t partition_count(unsigned alpha, unsigned alpha_max)
{
    check_alpha(alpha, alpha_max);
    return partition_table(alpha)[alpha];
}

std::uint64_t plane_partition_count(unsigned alpha, unsigned alpha_max)
{
    check_alpha(alpha, alpha_max);
    return plane_partition_table(alpha)[alpha];
}

std::uint64_t semisimple_count(unsigned alpha, unsigned alpha_max)
{
    check_alpha(alpha, alpha_max);
    return semisimple_table(alpha)[alpha];
}

std::uint64_t divisor_count_of_exponent(unsigned alpha, unsigned alpha_max)
{
    if (alpha == 0)
        throw DomainError("tau(alpha) is defined for alpha >= 1");
    check_alpha(alpha, alpha_max);
    std::uint64_t count = 1;
    unsigned rest = alpha;
    for (unsigned p = 2; p * p <= rest; ++p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        count *= e + 1;
    }
    if (rest > 1)
        count *= 2;
    return count;
}

std::uint64_t unitary_exponent_count(unsigned alpha, unsigned alpha_max)
{
    if (alpha == 0)
        throw DomainError("2^omega(alpha) is defined for alpha >= 1");
    check_alpha(alpha, alpha_max);
    std::uint64_t count = 1;
    unsigned rest = alpha;
    for (unsigned p = 2; p * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        while (rest % p == 0)
            rest /= p;
        count *= 2;
    }
    if (rest > 1)
        count *= 2;
    return count;
}

std::uint64_t power_divisor_exponent(unsigned alpha, unsigned r)
{
    if (r < 2)
        throw DomainError("power divisor threshold r must be >= 2");
    return 1 + alpha / r;
}

std::vector<std::string> builtin_family_names()
{
    return {"abelian", "plane", "semisimple", "expdiv", "unitary-expdiv"};
}

ExponentRule build_rule(std::string_view name, unsigned alpha_max)
{
    if (alpha_max < kDefaultAlphaMax)
        throw RangeError("alpha_max must be at least " +
                         std::to_string(kDefaultAlphaMax));

    const std::string owned(name);
    if (name == "abelian")
        return ExponentRule(owned, partition_table(alpha_max), 2);
    if (name == "plane")
        return ExponentRule(owned, plane_partition_table(alpha_max), 2);
    if (name == "semisimple")
        return ExponentRule(owned, semisimple_table(alpha_max), 2);

    if (name == "expdiv" || name == "unitary-expdiv") {
        const bool unitary = name == "unitary-expdiv";
        std::vector<std::uint64_t> values(alpha_max + 1);
        values[0] = 1;
        for (unsigned a = 1; a <= alpha_max; ++a)
            values[a] = unitary ? unitary_exponent_count(a, alpha_max)
                                : divisor_count_of_exponent(a, alpha_max);
        return ExponentRule(owned, std::move(values), 2);
    }

    constexpr std::string_view powerdiv = "powerdiv-r:";
    if (name.starts_with(powerdiv)) {
        const std::string_view digits = name.substr(powerdiv.size());
        unsigned r = 0;
        const auto [ptr, ec] =
            std::from_chars(digits.data(), digits.data() + digits.size(), r);
        if (ec != std::errc() || ptr != digits.data() + digits.size() ||
            digits.empty())
            throw LookupError("malformed power-divisor rule '" + owned + "'");
        if (r < 2 || r > alpha_max)
            throw ValidationError("power-divisor threshold r=" +
                                  std::to_string(r) + " must lie in [2, " +
                                  std::to_string(alpha_max) + "]");
        std::vector<std::uint64_t> values(alpha_max + 1);
        for (unsigned a = 0; a <= alpha_max; ++a)
            values[a] = power_divisor_exponent(a, r);
        return ExponentRule(owned, std::move(values), r);
    }

    throw LookupError("unknown rule '" + owned + "'");
}

ExponentRule load_custom_rule(std::string_view config)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(config);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("custom rule is not valid JSON: ") +
                              e.what());
    }
    if (!doc.is_object())
        throw ValidationError("custom rule must be a JSON object");
    for (const char* field : {"name", "r", "values"})
        if (!doc.contains(field))
            throw ValidationError(std::string("custom rule lacks field '") +
                                  field + "'");

    const auto& name = doc["name"];
    const auto& r = doc["r"];
    const auto& values = doc["values"];
    if (!name.is_string())
        throw ValidationError("field 'name' must be a string");
    if (!r.is_number_integer() || r.get<std::int64_t>() < 2)
        throw ValidationError("field 'r' must be an integer >= 2");
    if (!values.is_array())
        throw ValidationError("field 'values' must be an array");

    std::vector<std::uint64_t> table;
    table.reserve(values.size());
    for (std::size_t a = 0; a < values.size(); ++a) {
        const auto& v = values[a];
        if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
            throw ValidationError("g(" + std::to_string(a) +
                                      ") must be a positive integer (alpha=" +
                                      std::to_string(a) + ")",
                                  static_cast<int>(a));
        table.push_back(v.get<std::uint64_t>());
    }
    return ExponentRule(name.get<std::string>(), std::move(table),
                        r.get<unsigned>());
}

ExponentRule load_custom_rule_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw LookupError("cannot open rule file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_custom_rule(buf.str());
}

} // namespace pimshort
