#pragma once

#include "pimshort/interval_sieve.hpp"
#include "pimshort/rfull_density.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace pimshort {

void to_json(nlohmann::json& j, const DensityResult& d);
void from_json(const nlohmann::json& j, DensityResult& d);

void to_json(nlohmann::json& j, const IntervalReport& rep);
void from_json(const nlohmann::json& j, IntervalReport& rep);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Column order is a stable contract.
const std::vector<std::string>& density_csv_columns();
const std::vector<std::string>& interval_csv_columns();

std::string csv_header(const std::vector<std::string>& columns);
std::string csv_row(const DensityResult& d);
std::string csv_row(const IntervalReport& rep);

} // namespace pimshort
