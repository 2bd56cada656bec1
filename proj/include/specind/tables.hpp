#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "specind/exact.hpp"
#include "specind/report.hpp"

namespace specind {

/// SPECIND_FIXTURES when set, otherwise the fixtures/ directory of the source tree.
std::filesystem::path default_fixture_dir();

/// Table ids in the order `table` lists them.
const std::vector<std::string>& table_ids();

struct TableConfig {
  std::filesystem::path fixture_dir;  // empty selects default_fixture_dir()
  std::vector<std::string> rows;      // row ids to keep; empty keeps all
  unsigned jobs = 0;                  // 0 selects the number of hardware threads
  int max_odd = 6;                    // odd-graph rows above this size are skipped
  ExactConfig exact;
  double tol = 1e-9;
};

enum class RowStatus { Match, Mismatch, Skipped, Failed };
std::string_view status_name(RowStatus s) noexcept;

struct TableCell {
  std::string column;
  Json expected;
  Json computed;  // null when the column could not be computed for this row
  bool match = false;
};

struct TableRow {
  std::string id;
  std::string label;
  RowStatus status = RowStatus::Skipped;
  std::vector<TableCell> cells;
  std::string note;
};

struct TableResult {
  std::string table;
  std::string title;
  std::vector<TableRow> rows;
  /// No mismatched or failed rows.
  bool ok() const noexcept;
};

/// Loads fixtures/tables/<id>.json and evaluates its rows on a bounded pool
/// of worker threads. Unknown ids throw UnknownTable; unknown row filters
/// throw InvalidArgument.
TableResult run_table(std::string_view id, const TableConfig& cfg = {});

Json to_json(const TableResult& t);
std::string table_text(const TableResult& t);
/// Columns: table, row, status, column, expected, computed, match.
std::string table_csv(const TableResult& t);

}  // namespace specind
