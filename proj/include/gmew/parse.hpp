#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gmew {

/// Malformed user input (flags, specifiers, files). Message carries the context.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Decimal or rational literal ("0.25", "1e-3", "1/9").
double parse_number(std::string_view text);

std::size_t parse_count(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char sep);

/// Comma-separated numbers, each accepting rational literals.
std::vector<double> parse_number_list(std::string_view text);

}  // namespace gmew
