#ifndef VACBROWN_TOOLS_RECORDS_HPP
#define VACBROWN_TOOLS_RECORDS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vacbrown::cli {

// One row of sweep/eval output. NaN in a numeric field means "absent" and is
// written as an empty CSV cell.
struct Record {
  std::string variable;
  double value = 0.0;
  double reduced = 0.0;
  double physical = 0.0;
  double tail = 0.0;
  std::int64_t n_used = 0;
  double sing_dist = 0.0;
  std::string regime;
  std::string status;
};

inline constexpr std::string_view kCsvHeader =
    "variable,value,reduced,physical,tail,n_used,sing_dist,regime,status";

/// %.17g, or the empty string for NaN.
std::string format_number(double x);

std::string to_csv_row(const Record& r);
std::string to_csv(const std::vector<Record>& rows);

/// Parses output of to_csv. Throws std::invalid_argument on a malformed table.
std::vector<Record> parse_csv(std::string_view text);

}  // namespace vacbrown::cli

#endif  // VACBROWN_TOOLS_RECORDS_HPP
