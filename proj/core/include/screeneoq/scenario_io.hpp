#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "screeneoq/types.hpp"

namespace screeneoq {

/// Scenario file problem, anchored to a line of the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string_view origin, int line, std::string_view what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads a scenario file:
///
///   economics {
///     demand 50000
///     order_cost 100
///     ...
///   }
///   stage S1 {
///     rate_units_per_min 1
///     unit_cost 0.5
///     dist uniform_beta 0.01
///   }
///
/// '#' starts a comment. hold_defective defaults to 0 and minutes_per_year
/// to 175200 when omitted. The result is validated; any violation other
/// than stage ordering (which commands canonicalize themselves) raises
/// ParseError naming the field.
Scenario parse_scenario(const std::filesystem::path& path);

/// Same parser over an in-memory string; `origin` labels error messages.
Scenario parse_scenario_text(std::string_view text, std::string_view origin = "<input>");

/// Writes a scenario in the same format with round-trip-exact numbers:
/// parse(serialize(s)) == s, field for field and stage for stage.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace screeneoq
