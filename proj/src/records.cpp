#include "pimshort/records.hpp"

#include <charconv>
#include <sstream>

namespace pimshort {

void to_json(nlohmann::json& j, const DensityResult& d)
{
    j = nlohmann::json{{"rule", d.rule},
                       {"k", d.k},
                       {"r", d.r},
                       {"B", d.bound},
                       {"partial_sum", d.partial_sum},
                       {"tail_estimate", d.tail_estimate},
                       {"zeta_r", d.zeta_r},
                       {"density", d.density}};
}

void from_json(const nlohmann::json& j, DensityResult& d)
{
    j.at("rule").get_to(d.rule);
    j.at("k").get_to(d.k);
    j.at("r").get_to(d.r);
    j.at("B").get_to(d.bound);
    j.at("partial_sum").get_to(d.partial_sum);
    j.at("tail_estimate").get_to(d.tail_estimate);
    j.at("zeta_r").get_to(d.zeta_r);
    j.at("density").get_to(d.density);
}

void to_json(nlohmann::json& j, const IntervalReport& rep)
{
    j = nlohmann::json{{"rule", rep.rule},
                       {"k", rep.k},
                       {"r", rep.r},
                       {"x", rep.x},
                       {"y", rep.y},
                       {"eps", rep.eps},
                       {"count", rep.count},
                       {"density", rep.density},
                       {"main_term", rep.main_term},
                       {"abs_error", rep.abs_error},
                       {"term_main", rep.term_main},
                       {"term_mid", rep.term_mid},
                       {"term_tail", rep.term_tail},
                       {"r_lemma", rep.r_lemma},
                       {"admissible", rep.admissible}};
}

void from_json(const nlohmann::json& j, IntervalReport& rep)
{
    j.at("rule").get_to(rep.rule);
    j.at("k").get_to(rep.k);
    j.at("r").get_to(rep.r);
    j.at("x").get_to(rep.x);
    j.at("y").get_to(rep.y);
    j.at("eps").get_to(rep.eps);
    j.at("count").get_to(rep.count);
    j.at("density").get_to(rep.density);
    j.at("main_term").get_to(rep.main_term);
    j.at("abs_error").get_to(rep.abs_error);
    j.at("term_main").get_to(rep.term_main);
    j.at("term_mid").get_to(rep.term_mid);
    j.at("term_tail").get_to(rep.term_tail);
    j.at("r_lemma").get_to(rep.r_lemma);
    j.at("admissible").get_to(rep.admissible);
}

std::string format_double(double v)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

const std::vector<std::string>& density_csv_columns()
{
    static const std::vector<std::string> cols = {
        "rule", "k", "r", "B", "partial_sum", "tail_estimate", "zeta_r",
        "density"};
    return cols;
}

const std::vector<std::string>& interval_csv_columns()
{
    static const std::vector<std::string> cols = {
        "rule",      "k",         "r",         "x",        "y",
        "count",     "density",   "main_term", "abs_error", "term_main",
        "term_mid",  "term_tail", "admissible"};
    return cols;
}

std::string csv_header(const std::vector<std::string>& columns)
{
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i)
            out += ',';
        out += columns[i];
    }
    return out;
}

std::string csv_row(const DensityResult& d)
{
    std::ostringstream os;
    os << d.rule << ',' << d.k << ',' << d.r << ',' << d.bound << ','
       << format_double(d.partial_sum) << ',' << format_double(d.tail_estimate)
       << ',' << format_double(d.zeta_r) << ',' << format_double(d.density);
    return os.str();
}

std::string csv_row(const IntervalReport& rep)
{
    std::ostringstream os;
    os << rep.rule << ',' << rep.k << ',' << rep.r << ',' << rep.x << ','
       << rep.y << ',' << rep.count << ',' << format_double(rep.density) << ','
       << format_double(rep.main_term) << ',' << format_double(rep.abs_error)
       << ',' << format_double(rep.term_main) << ','
       << format_double(rep.term_mid) << ',' << format_double(rep.term_tail)
       << ',' << (rep.admissible ? "true" : "false");
    return os.str();
}

} // namespace pimshort
