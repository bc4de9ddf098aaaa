#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>

#include "shellopt/gap_sequence.hpp"
#include "shellopt/shell_engine.hpp"

namespace shellopt {

using Fraction = boost::rational<long long>;

// Exact comparison-count distribution over a full permutation space.
struct Histogram {
  int n = 0;
  GapSequence sequence;
  std::map<std::uint64_t, std::uint64_t> bins;  // count -> frequency, zeros omitted

  std::uint64_t total_mass() const;
  std::uint64_t min_key() const;
  std::uint64_t max_key() const;
  Fraction mean() const;
};

struct OracleOptions {
  int max_n = 9;  // full spaces beyond max_n! permutations are refused
  int jobs = 1;
};

// Histogram of shellsort_total over all n! permutations.
Histogram distribution(int n, const GapSequence& s, const OracleOptions& options = {});

// Exact mean of the distribution.
Fraction mean_comparisons(int n, const GapSequence& s, const OracleOptions& options = {});

// Minimal-index sequence minimizing the exact mean over all sequences valid
// for n. Ties break toward the smaller index.
struct AverageSearchResult {
  std::uint64_t index = 0;
  GapSequence sequence;
  Fraction mean;
};

AverageSearchResult search_min_average(int n, const OracleOptions& options = {});

}  // namespace shellopt
