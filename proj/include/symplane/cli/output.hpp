#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symplane/cli/report.hpp"

namespace symplane::cli {

/// Shortest-safe text for a double: 17 significant digits, '.' decimal
/// separator regardless of locale, so parsing it back is exact.
std::string format_double(double value);

/// RFC 4180 table: mandatory header row, CRLF line ends. Rows come from the
/// report's results (crank: one row per phi sample, oscillator: one per t,
/// identities: one per identity). Throws InvalidArgument for subcommands
/// without tabular output.
std::string to_csv(const RunReport& report);

/// Splits an RFC 4180 document into records; used to read tables back.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// 800x600 SVG drawing: tangent construction, crank curves against phi, or
/// the phase portrait. Throws InvalidArgument for other subcommands.
std::string to_svg(const RunReport& report);

}  // namespace symplane::cli
