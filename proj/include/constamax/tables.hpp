#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "constamax/distance.hpp"
#include "constamax/field.hpp"
#include "constamax/report.hpp"

namespace constamax {

/// One published row: the numbers as printed plus the (q, r) setting.
struct TableRowSpec {
  int table = 1;
  int block = 1;
  std::string family;  // "mainI", "mainasyII", ...
  uint64_t q = 0, r = 0;
  // Table 1: n, k, gamma, memory, df. Tables 2 and 3: n, k, dx, dz.
  std::vector<uint64_t> printed;
  std::string printed_note;  // annotation as printed, e.g. "k=9"
  std::string correction;    // non-empty when the row is read differently
};

std::vector<TableRowSpec> table_spec(int which);

struct TableOptions {
  DistanceOptions distance{100'000'000'000ULL, true};
  uint64_t enumeration_budget = 10'000'000;
  FieldOptions field;
};

struct TableRow {
  TableRowSpec spec;
  int64_t i = -1, j = -1;
  std::string printed;      // row as published
  std::string regenerated;  // row as certified here
  bool pass = false;
  std::string failure;
  Json detail;
};

struct TableReport {
  int which = 1;
  std::vector<TableRow> rows;
  bool all_pass() const;
};

TableReport regenerate_table(int which, const TableOptions& opts = {});
TableRow regenerate_row(const TableRowSpec& spec, const TableOptions& opts = {});

Json table_json(const TableReport& report);
std::string table_csv(const TableReport& report);
std::string table_text(const TableReport& report);

}  // namespace constamax
