#include "pimshort/cli.hpp"

#include "pimshort/bounds.hpp"
#include "pimshort/errors.hpp"
#include "pimshort/exponent_rules.hpp"
#include "pimshort/interval_sieve.hpp"
#include "pimshort/records.hpp"
#include "pimshort/rfull_density.hpp"
#include "pimshort/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>

namespace pimshort {

namespace {

struct RunConfig {
    std::string rule = "abelian";
    std::string rule_file;
    std::string k = "1";
    std::string r = "2";
    std::string x;
    std::string y;
    std::vector<std::string> xs;
    std::vector<std::string> ys;
    std::string bound = "1e9";
    std::string limit;
    double eps = kDefaultEpsilon;
    std::string format = "json";
    std::string suite = "all";
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

ExponentRule resolve_rule(const RunConfig& cfg)
{
    if (!cfg.rule_file.empty())
        return load_custom_rule_file(cfg.rule_file);
    return build_rule(cfg.rule);
}

std::uint64_t parse_k(const std::string& text)
{
    const auto k = parse_exact_integer(text);
    if (k < 1)
        throw ValidationError("k must be a positive integer");
    return k;
}

unsigned effective_workers(unsigned requested)
{
    if (const char* env = std::getenv("PIMSHORT_WORKERS"); env && *env) {
        const auto w = parse_exact_integer(env);
        if (w < 1 || w > 1024)
            throw ValidationError("PIMSHORT_WORKERS must lie in [1, 1024]");
        return static_cast<unsigned>(w);
    }
    return std::max(1u, requested);
}

void warn_exponent_mismatch(unsigned r, std::ostream& err)
{
    if (!corollary_mid_exponent_differs(r))
        return;
    const auto mid = bound_exponents(r).mid_x;
    err << "warning: middle error term uses x^(" << mid.num << "/" << mid.den
        << ") from the general theorem; the r=2 corollaries print x^("
        << kCorollaryMidExponent.num << "/" << kCorollaryMidExponent.den
        << ")\n";
}

void check_format(const std::string& format)
{
    if (format != "json" && format != "csv")
        throw ValidationError("format must be json or csv");
}

int cmd_density(const RunConfig& cfg, std::ostream& out)
{
    check_format(cfg.format);
    const auto rule = resolve_rule(cfg);
    const auto result =
        density(rule, parse_k(cfg.k), parse_exact_integer(cfg.bound));
    if (cfg.format == "json")
        out << nlohmann::json(result).dump() << '\n';
    else
        out << csv_header(density_csv_columns()) << '\n'
            << csv_row(result) << '\n';
    return kExitOk;
}

int cmd_interval(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    check_format(cfg.format);
    if (cfg.x.empty() || cfg.y.empty())
        throw ValidationError("interval needs --x and --y");
    const auto rule = resolve_rule(cfg);
    const auto k = parse_k(cfg.k);
    const auto x = parse_exact_integer(cfg.x);
    const auto y = parse_exact_integer(cfg.y);
    if (y == 0 || y >= x)
        throw DomainError("interval needs 0 < y < x");
    const auto dens = density(rule, k, parse_exact_integer(cfg.bound));
    const auto rep = interval_report(rule, k, x, y, cfg.eps, dens,
                                     effective_workers(cfg.workers));
    warn_exponent_mismatch(rule.r(), err);
    if (cfg.format == "json")
        out << nlohmann::json(rep).dump() << '\n';
    else
        out << csv_header(interval_csv_columns()) << '\n'
            << csv_row(rep) << '\n';
    return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto rule = resolve_rule(cfg);
    const auto k = parse_k(cfg.k);
    std::vector<std::uint64_t> xs, ys;
    for (const auto& s : cfg.xs)
        xs.push_back(parse_exact_integer(s));
    for (const auto& s : cfg.ys)
        ys.push_back(parse_exact_integer(s));
    for (const auto x : xs)
        for (const auto y : ys)
            if (y == 0 || y >= x)
                throw DomainError("table needs 0 < y < x for every grid point");

    std::vector<std::string> rows;
    if (!xs.empty() && !ys.empty()) {
        const auto dens = density(rule, k, parse_exact_integer(cfg.bound));
        const unsigned workers = effective_workers(cfg.workers);
        for (const auto x : xs)
            for (const auto y : ys)
                rows.push_back(csv_row(
                    interval_report(rule, k, x, y, cfg.eps, dens, workers)));
        warn_exponent_mismatch(rule.r(), err);
    }
    out << csv_header(interval_csv_columns()) << '\n';
    for (const auto& row : rows)
        out << row << '\n';
    return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.limit.empty())
        throw ValidationError("enumerate-rfull needs --limit");
    const auto r = parse_exact_integer(cfg.r);
    if (r < 2 || r > 63)
        throw ValidationError("r must lie in [2, 63]");
    const auto limit = parse_exact_integer(cfg.limit);
    for (const auto n : enumerate_rfull(static_cast<unsigned>(r), limit))
        out << n << '\n';
    return kExitOk;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    check_format(cfg.format);
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.workers = effective_workers(cfg.workers);
    const auto checks = run_verify_suite(cfg.suite, opts);

    bool all_passed = true;
    for (const auto& c : checks)
        all_passed = all_passed && c.passed;

    if (cfg.format == "json") {
        nlohmann::json doc;
        doc["suite"] = cfg.suite;
        doc["passed"] = all_passed;
        doc["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            doc["checks"].push_back({{"suite", c.suite},
                                     {"name", c.name},
                                     {"passed", c.passed},
                                     {"observed", c.observed},
                                     {"expected", c.expected}});
        out << doc.dump(2) << '\n';
    } else {
        out << "suite,name,passed,observed,expected\n";
        for (const auto& c : checks)
            out << csv_field(c.suite) << ',' << csv_field(c.name) << ','
                << (c.passed ? "true" : "false") << ',' << csv_field(c.observed)
                << ',' << csv_field(c.expected) << '\n';
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

void add_rule_options(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--rule", cfg.rule,
                    "abelian, plane, semisimple, expdiv, unitary-expdiv or "
                    "powerdiv-r:<r>");
    cmd->add_option("--rule-file", cfg.rule_file,
                    "JSON file with fields name, r, values");
    cmd->add_option("--k", cfg.k, "target value of f");
    cmd->add_option("--B", cfg.bound, "truncation bound of the density series");
}

} // namespace

std::uint64_t parse_exact_integer(std::string_view text)
{
    const std::string original(text);
    auto fail = [&]() -> ValidationError {
        return ValidationError("'" + original +
                               "' is not an integer below 2^63");
    };

    std::string digits;
    std::int64_t frac_len = 0;
    std::size_t i = 0;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (seen_point)
                ++frac_len;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (digits.empty())
        throw fail();

    std::int64_t exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E')
            throw fail();
        ++i;
        bool negative = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-'))
            negative = text[i++] == '-';
        if (i == text.size())
            throw fail();
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])) ||
                exponent > 1000)
                throw fail();
            exponent = exponent * 10 + (text[i] - '0');
        }
        if (negative)
            exponent = -exponent;
    }

    // value = digits * 10^(exponent - frac_len)
    std::int64_t shift = exponent - frac_len;
    while (shift < 0) {
        if (digits.back() != '0')
            throw fail();
        digits.pop_back();
        ++shift;
        if (digits.empty())
            return 0;
    }
    unsigned __int128 value = 0;
    const unsigned __int128 limit = kMaxFactorizable;
    for (const char c : digits) {
        value = value * 10 + static_cast<unsigned>(c - '0');
        if (value >= limit)
            throw fail();
    }
    for (; shift > 0; --shift) {
        value *= 10;
        if (value >= limit && value != 0)
            throw fail();
    }
    return static_cast<std::uint64_t>(value);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err)
{
    CLI::App app{"Value distribution of prime-independent multiplicative "
                 "functions"};
    app.name("pimshort");
    app.require_subcommand(1);

    RunConfig cfg;

    auto* density_cmd =
        app.add_subcommand("density", "local density d_{f,k} as a truncated series");
    add_rule_options(density_cmd, cfg);
    density_cmd->add_option("--format", cfg.format, "json or csv");

    auto* interval_cmd =
        app.add_subcommand("interval", "count n in (x, x+y] with f(n) = k");
    add_rule_options(interval_cmd, cfg);
    interval_cmd->add_option("--x", cfg.x)->required();
    interval_cmd->add_option("--y", cfg.y)->required();
    interval_cmd->add_option("--eps", cfg.eps, "epsilon of the admissible range");
    interval_cmd->add_option("--format", cfg.format, "json or csv");
    interval_cmd->add_option("--workers", cfg.workers);

    auto* table_cmd =
        app.add_subcommand("table", "CSV of interval reports over an (x, y) grid");
    add_rule_options(table_cmd, cfg);
    table_cmd->add_option("--x", cfg.xs, "grid x values")->delimiter(',');
    table_cmd->add_option("--y", cfg.ys, "grid y values")->delimiter(',');
    table_cmd->add_option("--eps", cfg.eps);
    table_cmd->add_option("--workers", cfg.workers);

    auto* enum_cmd =
        app.add_subcommand("enumerate-rfull", "r-full numbers up to a limit");
    enum_cmd->add_option("--r", cfg.r);
    enum_cmd->add_option("--limit", cfg.limit)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", cfg.suite,
                           "sequences, convolution, density-cross, lemma2, "
                           "lemma3, theorem or all");
    verify_cmd->add_option("--seed", cfg.seed);
    verify_cmd->add_option("--workers", cfg.workers);
    verify_cmd->add_option("--format", cfg.format, "json or csv");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*density_cmd)
            return cmd_density(cfg, out);
        if (*interval_cmd)
            return cmd_interval(cfg, out, err);
        if (*table_cmd)
            return cmd_table(cfg, out, err);
        if (*enum_cmd)
            return cmd_enumerate(cfg, out);
        if (*verify_cmd)
            return cmd_verify(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace pimshort
