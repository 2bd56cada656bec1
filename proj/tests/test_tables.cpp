#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "specind/error.hpp"
#include "specind/tables.hpp"

using namespace specind;

namespace {

TableConfig one_job() {
  TableConfig cfg;
  cfg.jobs = 1;
  return cfg;
}

}  // namespace

TEST_CASE("reference tables match") {
  for (const char* id : {"t1", "t2", "minor-odd", "sign-odd6", "t4"}) {
    auto t = run_table(id, one_job());
    CHECK_MESSAGE(t.ok(), table_text(t));
    for (const auto& row : t.rows) {
      if (row.status == RowStatus::Skipped) CHECK_FALSE(row.note.empty());
    }
  }
}

TEST_CASE("row filter and unknown ids") {
  auto cfg = one_job();
  cfg.rows = {"petersen", "c5", "q5"};
  auto t = run_table("t1", cfg);
  REQUIRE(t.rows.size() == 3);
  for (const auto& row : t.rows) CHECK(row.status == RowStatus::Match);
  cfg.rows = {"nonexistent"};
  CHECK_THROWS_AS(run_table("t1", cfg), Error);
  try {
    run_table("t9");
    FAIL("expected UnknownTable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownTable);
  }
}

TEST_CASE("odd rows above the size cap are skipped, not passed") {
  auto cfg = one_job();
  cfg.max_odd = 4;
  cfg.rows = {"o4", "o5"};
  auto t = run_table("t4", cfg);
  CHECK(t.rows[0].status == RowStatus::Match);
  CHECK(t.rows[1].status == RowStatus::Skipped);
  CHECK(t.rows[1].note.find("size cap") != std::string::npos);
}

TEST_CASE("missing fixtures and mismatches are reported") {
  const auto dir = std::filesystem::temp_directory_path() / "specind_table_test";
  std::filesystem::create_directories(dir / "tables");
  std::ofstream(dir / "tables" / "t5.json") << R"({"k": 2, "rows": [
    {"id": "gone", "graph": "gone.g6", "expected": {"prop": 1}},
    {"id": "wrong", "family": "petersen", "k": 1, "expected": {"prop": 5, "alpha": 4}}]})";
  auto cfg = one_job();
  cfg.fixture_dir = dir;
  auto t = run_table("t5", cfg);
  CHECK(t.rows[0].status == RowStatus::Skipped);
  CHECK(t.rows[0].note == "fixture missing: graphs/gone.g6");
  CHECK(t.rows[1].status == RowStatus::Mismatch);
  CHECK_FALSE(t.rows[1].cells[0].match);
  CHECK(t.rows[1].cells[1].match);
  CHECK_FALSE(t.ok());
  CHECK(table_csv(t).find("t5,wrong,MISMATCH,prop,5,4,false\r\n") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("parallel evaluation is deterministic") {
  auto serial = one_job();
  auto parallel = one_job();
  parallel.jobs = 4;
  CHECK(to_json(run_table("t1", serial)).dump() == to_json(run_table("t1", parallel)).dump());
}
