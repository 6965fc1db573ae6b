#pragma once

#include <string>
#include <vector>

namespace dpnp {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/// Joins cells with commas; no quoting (numeric and identifier cells only).
std::string csv_line(const std::vector<std::string>& cells);

}  // namespace dpnp
