#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shellopt/gap_sequence.hpp"

namespace shellopt {

enum class RecordStatus {
  exact,       // full scan of the index's reduced space
  lower_bound  // scan truncated by the evaluation budget; true value is >=
};

struct SearchRecord {
  std::uint64_t index = 0;
  GapSequence sequence;
  std::uint64_t worst_case = 0;
  RecordStatus status = RecordStatus::exact;

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

struct SearchHistory {
  int n = 0;
  std::vector<SearchRecord> records;  // every strict improvement, in index order
  std::uint64_t final_worst_case = 0;
  GapSequence final_sequence;  // minimal-index optimal sequence
  std::optional<std::uint64_t> final_index;
  bool complete = false;
};

struct SearchOptions {
  // Stop after this index; the full range is 2^(n-2).
  std::optional<std::uint64_t> index_limit;
  // Total reduced-space members the search may evaluate. Exhausting it mid
  // index emits a lower_bound record and stops; deterministic for any jobs.
  std::optional<std::uint64_t> evaluation_budget;
  // JSONL file written one line per completed index; empty disables.
  std::string checkpoint_path;
  int jobs = 1;
  // Pruned scans stop at the running best; disabling evaluates every index
  // exhaustively (histories must come out identical).
  bool prune = true;
};

// The minimax search: iterates sequence indices 1..2^(n-2), evaluates each
// sequence's worst case over its reduced space with the running best as the
// pruning bound, and records every strict improvement. The last improvement
// is the minimal-index optimal sequence. n=1 yields zero comparisons and
// the empty sequence.
SearchHistory minimax_search(int n, const SearchOptions& options = {});

// Continues an interrupted run from its checkpoint. The stored n must equal
// `n` and the engine version must match; a completed checkpoint returns the
// stored history unchanged. The final history is identical to an
// uninterrupted run.
SearchHistory resume_search(const std::string& checkpoint_path, int n,
                            const SearchOptions& options = {});

}  // namespace shellopt
