#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shellopt/errors.hpp"
#include "shellopt/minimax_search.hpp"

using namespace shellopt;

namespace {

struct ExpectedRow {
  std::uint64_t index;
  std::vector<int> sequence;
  std::uint64_t worst_case;
};

// Improvement logs of the complete searches for n=2..10.
const std::vector<std::pair<int, std::vector<ExpectedRow>>> kReferenceHistories = {
    {2, {{1, {1}, 1}}},
    {3, {{1, {1}, 3}}},
    {4, {{1, {1}, 6}}},
    {5, {{1, {1}, 10}}},
    {6, {{1, {1}, 15}, {5, {1, 4}, 14}}},
    {7, {{1, {1}, 21}, {3, {1, 3}, 20}, {5, {1, 4}, 19}, {21, {1, 4, 6}, 18}}},
    {8, {{1, {1}, 28}, {3, {1, 3}, 25}, {7, {1, 3, 4}, 24}, {41, {1, 5, 7}, 23}}},
    {9,
     {{1, {1}, 36},
      {2, {1, 2}, 34},
      {3, {1, 3}, 33},
      {4, {1, 2, 3}, 32},
      {7, {1, 3, 4}, 29}}},
    {10,
     {{1, {1}, 45},
      {2, {1, 2}, 43},
      {3, {1, 3}, 39},
      {5, {1, 4}, 37},
      {7, {1, 3, 4}, 36},
      {145, {1, 6, 9}, 35}}},
};

void check_history(const SearchHistory& history, const std::vector<ExpectedRow>& rows) {
  REQUIRE(history.records.size() == rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    CAPTURE(r);
    CHECK(history.records[r].index == rows[r].index);
    CHECK(history.records[r].sequence == GapSequence(rows[r].sequence));
    CHECK(history.records[r].worst_case == rows[r].worst_case);
    CHECK(history.records[r].status == RecordStatus::exact);
  }
  CHECK(history.complete);
  CHECK(history.final_worst_case == rows.back().worst_case);
  CHECK(history.final_sequence == GapSequence(rows.back().sequence));
  CHECK(history.final_index == rows.back().index);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("searches for n=2..10 replay the reference improvement logs") {
  for (const auto& [n, rows] : kReferenceHistories) {
    CAPTURE(n);
    check_history(minimax_search(n), rows);
  }
}

TEST_CASE("the single-element search is degenerate") {
  const SearchHistory history = minimax_search(1);
  CHECK(history.records.empty());
  CHECK(history.final_worst_case == 0);
  CHECK(history.final_sequence.empty());
  CHECK_FALSE(history.final_index.has_value());
  CHECK(history.complete);
}

TEST_CASE("histories are identical for any worker count") {
  const SearchHistory lone = minimax_search(9);
  for (int jobs : {4, 8}) {
    SearchOptions options;
    options.jobs = jobs;
    CAPTURE(jobs);
    const SearchHistory parallel = minimax_search(9, options);
    CHECK(parallel.records == lone.records);
    CHECK(parallel.final_worst_case == lone.final_worst_case);
  }
}

TEST_CASE("disabling pruning yields the identical history") {
  for (int n = 2; n <= 9; ++n) {
    CAPTURE(n);
    SearchOptions no_prune;
    no_prune.prune = false;
    const SearchHistory pruned = minimax_search(n);
    const SearchHistory full = minimax_search(n, no_prune);
    CHECK(pruned.records == full.records);
    CHECK(pruned.final_worst_case == full.final_worst_case);
    CHECK(pruned.final_sequence == full.final_sequence);
  }
}

TEST_CASE("index limits truncate the range and mark the history incomplete") {
  SearchOptions options;
  options.index_limit = 4;
  const SearchHistory history = minimax_search(9, options);
  REQUIRE(history.records.size() == 4);
  CHECK(history.records.back().index == 4);
  CHECK(history.final_worst_case == 32);
  CHECK_FALSE(history.complete);

  options.index_limit = 200;  // beyond 2^(9-2): same as unlimited
  CHECK(minimax_search(9, options).complete);
}

TEST_CASE("checkpointed runs resume to the identical history") {
  const auto path = temp_file("shellopt_test_resume.jsonl");
  std::filesystem::remove(path);

  SearchOptions first_leg;
  first_leg.checkpoint_path = path.string();
  first_leg.index_limit = 100;
  const SearchHistory partial = minimax_search(10, first_leg);
  CHECK_FALSE(partial.complete);

  SearchOptions second_leg;
  const SearchHistory resumed = resume_search(path.string(), 10, second_leg);
  const SearchHistory oneshot = minimax_search(10);
  CHECK(resumed.records == oneshot.records);
  CHECK(resumed.final_worst_case == oneshot.final_worst_case);
  CHECK(resumed.final_sequence == oneshot.final_sequence);
  CHECK(resumed.complete);

  // Resuming a completed search returns the stored history unchanged.
  const SearchHistory again = resume_search(path.string(), 10, second_leg);
  CHECK(again.records == oneshot.records);
  CHECK(again.complete);

  std::filesystem::remove(path);
}

TEST_CASE("resume rejects a mismatched n and a mismatched engine version") {
  const auto path = temp_file("shellopt_test_mismatch.jsonl");
  std::filesystem::remove(path);
  SearchOptions options;
  options.checkpoint_path = path.string();
  minimax_search(8, options);
  CHECK_THROWS_AS(resume_search(path.string(), 9, SearchOptions{}), std::invalid_argument);

  {
    std::ofstream out(path, std::ios::trunc);
    out << R"({"kind":"header","engine_version":"0.0.0","n":8})" << '\n';
  }
  CHECK_THROWS_AS(resume_search(path.string(), 8, SearchOptions{}), std::runtime_error);
  std::filesystem::remove(path);
}

TEST_CASE("an exhausted evaluation budget ends the search with a lower bound") {
  SearchOptions options;
  options.evaluation_budget = 40;  // dies inside the n=9 index-1..k prefix
  const SearchHistory history = minimax_search(9, options);
  CHECK_FALSE(history.complete);
  REQUIRE_FALSE(history.records.empty());
  const SearchRecord& last = history.records.back();
  if (last.status == RecordStatus::lower_bound) {
    CHECK(last.worst_case < 37);  // a partial maximum, below the prior bound
  }
  // The budget is deterministic: a rerun reproduces the history exactly.
  const SearchHistory rerun = minimax_search(9, options);
  CHECK(rerun.records == history.records);

  SearchOptions parallel = options;
  parallel.jobs = 4;
  const SearchHistory with_jobs = minimax_search(9, parallel);
  CHECK(with_jobs.records == history.records);
}

TEST_CASE("searches beyond n=30 are refused") {
  CHECK_THROWS_AS(minimax_search(31), CapacityError);
  CHECK_THROWS_AS(minimax_search(0), std::invalid_argument);
}
