#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "shellopt/gap_sequence.hpp"
#include "shellopt/shell_engine.hpp"

namespace shellopt {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Residue-class layout of the reduced space for n elements under largest
// increment h: class j holds positions j, j+h, j+2h, ... and ceil((n-j)/h)
// values. The cardinality n!/prod(m_j!) is exact.
struct ReducedSpaceSpec {
  int n = 0;
  int h = 0;
  std::vector<int> class_sizes;
  BigInt cardinality;
};

ReducedSpaceSpec reduced_space(int n, int h);

// |P_{n,(s,1)}| for s with largest increment h: the multinomial
// n!/prod_j m_j!. Requires 1 <= h <= n-1, or h == n == 1.
BigInt bad1_count(int n, int h);

// Comparisons the h-pass costs on every member of the space:
// sum_j m_j (m_j - 1) / 2.
std::uint64_t bad1_first_pass_comparisons(int n, int h);

// True iff every residue class of positions h apart is strictly decreasing,
// the unique insertion-sort worst case of each class. Requires 1 <= h <= n.
bool is_bad1(const Permutation& p, int h);

// Streams the reduced space in a fixed order: members are ranked by the
// assignment of values to residue classes, descending blocks first (rank 0
// assigns the largest values to class 0). Single consumer; split() carves
// the remaining range into contiguous sub-streams for parallel use.
class Bad1Stream {
 public:
  std::optional<Permutation> next();

  const BigInt& remaining() const noexcept { return remaining_; }
  int n() const noexcept { return n_; }
  int h() const noexcept { return h_; }

  std::vector<Bad1Stream> split(int parts) const;

 private:
  friend Bad1Stream enumerate_bad1(int n, int h, std::optional<BigInt> budget);
  friend class Bad2Stream;
  Bad1Stream(int n, int h, BigInt first_rank, BigInt count);

  void advance();

  int n_ = 0;
  int h_ = 0;
  std::vector<int> class_sizes_;
  std::vector<std::uint8_t> word_;  // word_[t] = class of value n - t
  BigInt remaining_;
  BigInt next_rank_;
};

// Opens the full stream. Refuses spaces larger than the enumeration budget
// (default 10^8 members); pass a larger budget to override.
Bad1Stream enumerate_bad1(int n, int h, std::optional<BigInt> budget = std::nullopt);

struct ReducedMaxOptions {
  // Return early with exceeded=true as soon as any member costs >= bound.
  std::optional<std::uint64_t> stop_at_bound;
  // Deterministic cap on members evaluated; exhausting it yields
  // truncated=true and the exact maximum over the prefix scanned.
  std::optional<std::uint64_t> max_evaluations;
  // Spaces larger than this are refused unless stop_at_bound or
  // max_evaluations makes the scan bounded.
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  int jobs = 1;
};

struct ReducedMaxResult {
  // Exact maximum when neither flag below is set. With exceeded=true it is
  // the comparison count witnessed at the first member (in stream order)
  // reaching the bound; with truncated=true, the maximum over the prefix.
  std::uint64_t max_comparisons = 0;
  bool exceeded = false;
  bool truncated = false;
  // Members the canonical sequential scan would have evaluated. Parallel
  // runs may do more work but report the same charge.
  std::uint64_t evaluations = 0;
};

// Maximum of shellsort_total over the reduced space of s. The result is
// identical for any worker count.
ReducedMaxResult max_comparisons_reduced(int n, const GapSequence& s,
                                         const ReducedMaxOptions& options = {});

// Members of P_{n,(s,1)} whose state after the first pass is Bad
// (s(2),1)-sorted. Requires at least two increments.
class Bad2Stream {
 public:
  std::optional<Permutation> next();

 private:
  friend Bad2Stream bad2_members(int n, const GapSequence& s, std::optional<BigInt> budget);
  Bad2Stream(Bad1Stream base, int n, int h, int second);

  Bad1Stream base_;
  int n_;
  int h_;
  int second_;
  std::vector<int> after_first_;
};

Bad2Stream bad2_members(int n, const GapSequence& s, std::optional<BigInt> budget = std::nullopt);

// Exhaustively counts the Bad (s,2) space, visiting every member of the
// (s,1) space. Parallel and deterministic.
BigInt bad2_count(int n, const GapSequence& s, int jobs = 1,
                  std::optional<BigInt> budget = std::nullopt);

namespace detail {

struct ScanOutcome {
  std::uint64_t max_comparisons = 0;
  bool exceeded = false;
  bool truncated = false;
  std::uint64_t evaluations = 0;
};

// Core scan shared by max_comparisons_reduced and the minimax search; no
// budget policy, callers bound the work themselves.
ScanOutcome scan_reduced_space(int n, const GapSequence& s,
                               std::optional<std::uint64_t> bound,
                               std::optional<std::uint64_t> max_evaluations, int jobs);

// Value-to-class assignment word at `rank` in lexicographic order over all
// distinct arrangements of the class-label multiset.
std::vector<std::uint8_t> unrank_word(BigInt rank, const std::vector<int>& class_sizes);

}  // namespace detail

}  // namespace shellopt
