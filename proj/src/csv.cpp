#include "cpcool/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace cpcool {

namespace {

void write_field(std::ostream& os, const std::string& f) {
  if (f.find_first_of(",\"\n\r") == std::string::npos) {
    os << f;
    return;
  }
  os << '"';
  for (char ch : f) {
    if (ch == '"') os << '"';
    os << ch;
  }
  os << '"';
}

void write_row(std::ostream& os, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    write_field(os, row[i]);
  }
  os << '\n';
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

CsvTable sweep_table(const SweepResult& result) {
  CsvTable t;
  for (const auto& axis : result.axes) t.header.push_back(sweep_column(axis.parameter));
  for (const char* h : {"m_ss", "n_total_ss", "gamma_eff_per_s", "stable"}) t.header.emplace_back(h);
  t.rows.reserve(result.cells.size());
  for (const auto& cell : result.cells) {
    std::vector<std::string> row;
    for (double c : cell.coords) row.push_back(format_double(c));
    row.push_back(format_double(cell.m_ss));
    row.push_back(format_double(cell.n_total_ss));
    row.push_back(format_double(cell.gamma_eff));
    row.emplace_back(cell.stable ? "1" : "0");
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable evolve_table(const EvolveResult& result) {
  CsvTable t;
  t.header.emplace_back("t_s");
  for (const auto& col : result.columns)
    t.header.push_back("m_T" + format_double(col.temperature) + "K" + (col.divergent ? "_divergent" : ""));
  for (const auto& col : result.columns) t.header.push_back("fit_T" + format_double(col.temperature) + "K");
  for (std::size_t i = 0; i < result.times.size(); ++i) {
    std::vector<std::string> row{format_double(result.times[i])};
    for (const auto& col : result.columns) row.push_back(format_double(col.m[i]));
    for (const auto& col : result.columns) row.push_back(format_double(col.fit[i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_csv(const CsvTable& table, std::ostream& os) {
  write_row(os, table.header);
  for (const auto& row : table.rows) write_row(os, row);
}

void write_csv(const CsvTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(table, out);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace cpcool
