#include "shellopt/minimax_search.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

#include "shellopt/bad_space.hpp"
#include "shellopt/errors.hpp"
#include "shellopt/version.hpp"

namespace shellopt {

namespace {

using nlohmann::json;

class CheckpointWriter {
 public:
  CheckpointWriter(const std::string& path, int n, bool fresh) {
    if (path.empty()) return;
    out_.open(path, fresh ? std::ios::trunc : std::ios::app);
    if (!out_) throw std::runtime_error("cannot open checkpoint file " + path);
    if (fresh) {
      json header;
      header["kind"] = "header";
      header["engine_version"] = std::string(kEngineVersion);
      header["n"] = n;
      out_ << header.dump() << '\n' << std::flush;
    }
  }

  void index_done(std::uint64_t i, std::uint64_t value, bool pruned) {
    if (!out_.is_open()) return;
    json line;
    line["kind"] = "index";
    line["i"] = i;
    line["value"] = value;
    line["status"] = pruned ? "pruned" : "exact";
    out_ << line.dump() << '\n' << std::flush;
  }

  void partial(std::uint64_t i, std::uint64_t value) {
    if (!out_.is_open()) return;
    json line;
    line["kind"] = "partial";
    line["i"] = i;
    line["value"] = value;
    out_ << line.dump() << '\n' << std::flush;
  }

  void complete() {
    if (!out_.is_open()) return;
    json line;
    line["kind"] = "complete";
    out_ << line.dump() << '\n' << std::flush;
  }

 private:
  std::ofstream out_;
};

struct ReplayedCheckpoint {
  int n = 0;
  std::uint64_t bound = 0;
  std::uint64_t next_index = 1;
  std::vector<SearchRecord> records;
  bool complete = false;
};

// One above the worst case of plain insertion sort, so index 1 is evaluated
// exactly and logged as the first improvement.
std::uint64_t initial_bound(int n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2 + 1;
}

ReplayedCheckpoint replay_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint file " + path);
  std::string text;
  if (!std::getline(in, text)) throw std::runtime_error("checkpoint file is empty");
  const json header = json::parse(text);
  if (header.value("kind", "") != "header") {
    throw std::runtime_error("checkpoint file has no header line");
  }
  if (header.value("engine_version", "") != kEngineVersion) {
    throw std::runtime_error("checkpoint was written by engine version " +
                             header.value("engine_version", "?") + ", this is " +
                             std::string(kEngineVersion));
  }
  ReplayedCheckpoint replay;
  replay.n = header.value("n", 0);
  if (replay.n < 1) throw std::runtime_error("checkpoint header has no valid n");
  replay.bound = initial_bound(replay.n);
  while (std::getline(in, text)) {
    if (text.empty()) continue;
    const json line = json::parse(text);
    const std::string kind = line.value("kind", "");
    if (kind == "index") {
      const auto i = line.at("i").get<std::uint64_t>();
      const auto value = line.at("value").get<std::uint64_t>();
      if (line.value("status", "") == "exact" && value < replay.bound) {
        replay.records.push_back(
            {i, sequence_from_index(i), value, RecordStatus::exact});
        replay.bound = value;
      }
      replay.next_index = i + 1;
    } else if (kind == "partial") {
      // The index was not completed; rerun it.
      replay.next_index = line.at("i").get<std::uint64_t>();
    } else if (kind == "complete") {
      replay.complete = true;
    }
  }
  return replay;
}

SearchHistory finish(int n, std::vector<SearchRecord> records, std::uint64_t bound,
                     bool complete) {
  SearchHistory history;
  history.n = n;
  history.records = std::move(records);
  history.final_worst_case = bound;
  history.complete = complete;
  for (auto it = history.records.rbegin(); it != history.records.rend(); ++it) {
    if (it->status == RecordStatus::exact) {
      history.final_sequence = it->sequence;
      history.final_index = it->index;
      break;
    }
  }
  return history;
}

SearchHistory run_search(int n, const SearchOptions& options, ReplayedCheckpoint state,
                         bool fresh_checkpoint) {
  if (options.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (options.index_limit && *options.index_limit < 1) {
    throw std::invalid_argument("index limit must be at least 1");
  }

  CheckpointWriter checkpoint(options.checkpoint_path, n, fresh_checkpoint);

  const std::uint64_t full_range = sequence_count_for(n);
  std::uint64_t last_index = full_range;
  if (options.index_limit && *options.index_limit < last_index) {
    last_index = *options.index_limit;
  }

  std::uint64_t bound = state.bound;
  std::vector<SearchRecord> records = std::move(state.records);
  std::uint64_t consumed = 0;
  bool budget_hit = false;

  for (std::uint64_t i = state.next_index; i <= last_index; ++i) {
    std::optional<std::uint64_t> cap;
    if (options.evaluation_budget) {
      if (consumed >= *options.evaluation_budget) {
        budget_hit = true;
        break;
      }
      cap = *options.evaluation_budget - consumed;
    }
    const GapSequence s = sequence_from_index(i);
    const detail::ScanOutcome outcome = detail::scan_reduced_space(
        n, s, options.prune ? std::optional<std::uint64_t>(bound) : std::nullopt, cap,
        options.jobs);
    consumed += outcome.evaluations;
    if (outcome.exceeded) {
      checkpoint.index_done(i, outcome.max_comparisons, true);
      continue;
    }
    if (outcome.truncated) {
      // Budget died inside this index: its partial maximum is only a lower
      // bound on the true worst case.
      if (outcome.max_comparisons < bound) {
        records.push_back(
            {i, s, outcome.max_comparisons, RecordStatus::lower_bound});
      }
      checkpoint.partial(i, outcome.max_comparisons);
      budget_hit = true;
      break;
    }
    checkpoint.index_done(i, outcome.max_comparisons, false);
    if (outcome.max_comparisons < bound) {
      records.push_back({i, s, outcome.max_comparisons, RecordStatus::exact});
      bound = outcome.max_comparisons;
    }
  }

  const bool complete = !budget_hit && last_index == full_range;
  if (complete) checkpoint.complete();
  return finish(n, std::move(records), bound, complete);
}

}  // namespace

SearchHistory minimax_search(int n, const SearchOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 30) {
    throw CapacityError("searches beyond n=30 are not supported",
                        "2^" + std::to_string(n - 2) + " sequence indices");
  }
  if (n == 1) {
    CheckpointWriter checkpoint(options.checkpoint_path, 1, true);
    checkpoint.complete();
    SearchHistory history;
    history.n = 1;
    history.final_worst_case = 0;
    history.complete = true;
    return history;
  }
  ReplayedCheckpoint state;
  state.n = n;
  state.bound = initial_bound(n);
  state.next_index = 1;
  return run_search(n, options, std::move(state), /*fresh_checkpoint=*/true);
}

SearchHistory resume_search(const std::string& checkpoint_path, int n,
                            const SearchOptions& options) {
  ReplayedCheckpoint state = replay_checkpoint(checkpoint_path);
  if (state.n != n) {
    throw std::invalid_argument("checkpoint is for n=" + std::to_string(state.n) +
                                ", not n=" + std::to_string(n));
  }
  if (n == 1) {
    SearchHistory history;
    history.n = 1;
    history.final_worst_case = 0;
    history.complete = true;
    return history;
  }
  if (state.complete) {
    return finish(n, std::move(state.records), state.bound, true);
  }
  SearchOptions continued = options;
  if (!continued.checkpoint_path.empty() && continued.checkpoint_path != checkpoint_path) {
    throw std::invalid_argument("resume must append to the original checkpoint file");
  }
  continued.checkpoint_path = checkpoint_path;
  return run_search(n, continued, std::move(state), /*fresh_checkpoint=*/false);
}

}  // namespace shellopt
