#include "records.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace vacbrown::cli {

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(const std::string& cell) {
  if (cell.empty()) return std::numeric_limits<double>::quiet_NaN();
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size()) throw std::invalid_argument("bad number in CSV: " + cell);
  return v;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv_row(const Record& r) {
  std::ostringstream os;
  os << r.variable << ',' << format_number(r.value) << ',' << format_number(r.reduced) << ','
     << format_number(r.physical) << ',' << format_number(r.tail) << ',' << r.n_used << ','
     << format_number(r.sing_dist) << ',' << r.regime << ',' << r.status;
  return os.str();
}

std::string to_csv(const std::vector<Record>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += to_csv_row(r);
    out += '\n';
  }
  return out;
}

std::vector<Record> parse_csv(std::string_view text) {
  std::vector<Record> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("missing CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != 9) throw std::invalid_argument("expected 9 CSV fields: " + line);
    Record r;
    r.variable = cells[0];
    r.value = parse_number(cells[1]);
    r.reduced = parse_number(cells[2]);
    r.physical = parse_number(cells[3]);
    r.tail = parse_number(cells[4]);
    r.n_used = std::stoll(cells[5]);
    r.sing_dist = parse_number(cells[6]);
    r.regime = cells[7];
    r.status = cells[8];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace vacbrown::cli
