#pragma once

#include <cstdint>
#include <vector>

#include "shellopt/gap_sequence.hpp"

namespace shellopt {

// An arrangement of 1..n, the unit being sorted and counted.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation reversed(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const noexcept { return values_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

struct PassCount {
  int increment = 0;
  std::uint64_t comparisons = 0;

  friend bool operator==(const PassCount&, const PassCount&) = default;
};

struct SortTrace {
  std::uint64_t total_comparisons = 0;
  std::vector<PassCount> per_pass;
  Permutation result;
  Permutation after_first_pass;
};

// One gapped insertion pass over `values`, sorting every residue class of
// positions `gap` apart, ascending. Returns the number of comparisons.
//
// Counting convention: inserting an element into its already-sorted gapped
// prefix costs one comparison per prefix element strictly greater than it,
// plus one for the comparison that stops the scan when it does not land at
// the front. The first element of each class costs nothing.
std::uint64_t pass_comparisons(std::vector<int>& values, int gap);

// Runs every pass of `s` in decreasing increment order, in place. Total
// comparisons only.
std::uint64_t shellsort_total(std::vector<int>& values, const GapSequence& s);

// Full trace: per-pass counts, the sorted result, and the state after the
// first (largest-increment) pass. `s` must be valid for p.size(); the empty
// sequence is accepted for single-element input only.
SortTrace shellsort_count(const Permutation& p, const GapSequence& s);

struct FullSpaceOptions {
  int max_n = 9;  // permutation spaces beyond max_n! elements are refused
  int jobs = 1;
};

// Maximum of shellsort_total over all n! permutations.
std::uint64_t max_comparisons_full(int n, const GapSequence& s,
                                   const FullSpaceOptions& options = {});

// The permutation at `rank` (0-based) in lexicographic order over all
// permutations of 1..n. Requires n <= 20.
std::vector<int> nth_permutation(int n, std::uint64_t rank);

std::uint64_t factorial(int n);  // n <= 20

}  // namespace shellopt
