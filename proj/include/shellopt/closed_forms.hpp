#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shellopt/bad_space.hpp"

namespace shellopt {

// Divisibility indicator: 1 iff k divides n.
int chi(std::uint64_t k, std::uint64_t n);

// Worst case of plain insertion sort: n(n-1)/2.
std::uint64_t linear_worst_case(std::uint64_t n);

// Closed forms for the worst-case comparison counts of the sequences with
// indices 2 ({1,2}), 3 ({1,3}) and 4 ({1,2,3}). Each is evaluated in exact
// rational arithmetic and asserted integral. Two algebraically different
// printed forms exist for indices 2 and 3; both are exposed so their
// equality can be checked.
std::uint64_t n2_closed(std::uint64_t n);          // n >= 3, indicator form
std::uint64_t n2_closed_ceiling(std::uint64_t n);  // n >= 3, ceiling form
std::uint64_t n3_closed(std::uint64_t n);          // n >= 4, indicator form
std::uint64_t n3_closed_ceiling(std::uint64_t n);  // n >= 4, ceiling form
std::uint64_t n4_closed(std::uint64_t n);          // n >= 4

// The gamma-sequence increment generator: h_k = ceil((gamma^k - 1)/(gamma - 1)).
inline constexpr double kGamma = 2.243609061420001;
// Increments up to k=17 are certified against the published list; beyond
// that the floating-point evaluation is unverified.
inline constexpr int kGammaCertifiedMax = 17;
std::uint64_t gamma_increment(int k);  // 1 <= k <= 54

// Strict descending-chain verification: for each n in [n_first, n_last],
// computes the worst case of every sequence index in `chain` (closed form
// where one exists, reduced-space maximum otherwise) and checks
// value(chain[0]) < value(chain[1]) < ... A value whose space exceeds the
// budget is left unverified, never guessed.
enum class ChainVerdict { holds, fails, unverifiable };

struct ChainValue {
  std::uint64_t sequence_index = 0;
  std::optional<std::uint64_t> worst_case;
  bool from_closed_form = false;
};

struct ChainReport {
  int n = 0;
  std::vector<ChainValue> values;
  ChainVerdict verdict = ChainVerdict::unverifiable;
  std::string note;
};

struct ChainOptions {
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  int jobs = 1;
};

std::vector<ChainReport> verify_chain(int n_first, int n_last,
                                      const std::vector<std::uint64_t>& chain,
                                      const ChainOptions& options = {});

// The two descending chains reported from the search history: one from
// index 7 onward, one extending it with index 11.
inline const std::vector<std::uint64_t> kChainFromIndex7 = {7, 4, 3, 2, 1};
inline const std::vector<std::uint64_t> kChainFromIndex11 = {11, 7, 4, 3, 2, 1};

// Threshold checks over the closed forms' joint domain up to max_n:
// claim A: n2(n) < n(n-1)/2 iff n >= 9
// claim B: n3(n) < n(n-1)/2 iff n >= 7
// claim C: n3(n) < n2(n) iff n >= 9
// Exceptions list every n where a claimed equivalence is violated.
struct ThresholdReport {
  std::vector<std::uint64_t> n2_vs_linear_exceptions;
  std::vector<std::uint64_t> n3_vs_linear_exceptions;
  std::vector<std::uint64_t> n3_vs_n2_exceptions;
  bool all_hold() const {
    return n2_vs_linear_exceptions.empty() && n3_vs_linear_exceptions.empty() &&
           n3_vs_n2_exceptions.empty();
  }
};

ThresholdReport check_thresholds(std::uint64_t max_n);

}  // namespace shellopt
