#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cpcool/sweep.hpp"

namespace cpcool {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

CsvTable sweep_table(const SweepResult& result);
CsvTable evolve_table(const EvolveResult& result);

/// RFC 4180 quoting, LF line endings.
void write_csv(const CsvTable& table, std::ostream& os);

/// Throws std::runtime_error naming the path on I/O failure.
void write_csv(const CsvTable& table, const std::string& path);

}  // namespace cpcool
