#include "shellopt/oracle_stats.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "shellopt/errors.hpp"

namespace shellopt {

std::uint64_t Histogram::total_mass() const {
  std::uint64_t mass = 0;
  for (const auto& [count, frequency] : bins) mass += frequency;
  return mass;
}

std::uint64_t Histogram::min_key() const {
  if (bins.empty()) throw std::logic_error("empty histogram");
  return bins.begin()->first;
}

std::uint64_t Histogram::max_key() const {
  if (bins.empty()) throw std::logic_error("empty histogram");
  return bins.rbegin()->first;
}

Fraction Histogram::mean() const {
  long long weighted = 0;
  long long mass = 0;
  for (const auto& [count, frequency] : bins) {
    weighted += static_cast<long long>(count) * static_cast<long long>(frequency);
    mass += static_cast<long long>(frequency);
  }
  if (mass == 0) throw std::logic_error("empty histogram");
  return {weighted, mass};
}

namespace {

void require_within_bound(int n, const OracleOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > options.max_n) {
    throw CapacityError("full permutation space for n=" + std::to_string(n) +
                            " exceeds the brute-force bound of n=" +
                            std::to_string(options.max_n),
                        n <= 20 ? std::to_string(factorial(n)) : std::to_string(n) + "!");
  }
}

// Total comparisons never exceed the sum over passes of each pass's
// worst case, sum_j m_j(m_j-1)/2 for that gap's class sizes.
std::size_t count_ceiling(int n, const GapSequence& s) {
  std::size_t bound = 0;
  for (int gap : s.descending()) {
    for (int j = 0; j < gap; ++j) {
      const std::size_t m = static_cast<std::size_t>((n - j + gap - 1) / gap);
      bound += m * (m - 1) / 2;
    }
  }
  return bound;
}

// Dense per-worker tallies over contiguous rank ranges, merged by addition;
// the result is independent of the partitioning.
std::vector<std::uint64_t> tally_counts(int n, const GapSequence& s, int jobs) {
  const std::uint64_t total = factorial(n);
  const std::size_t width = count_ceiling(n, s) + 1;
  const int parts = static_cast<int>(
      std::min<std::uint64_t>(std::max(jobs, 1), total));

  auto scan = [n, &s, width](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> local(width, 0);
    std::vector<int> perm = nth_permutation(n, begin);
    std::vector<int> work(perm.size());
    for (std::uint64_t r = begin; r < end; ++r) {
      work = perm;
      ++local[shellsort_total(work, s)];
      std::next_permutation(perm.begin(), perm.end());
    }
    return local;
  };

  if (parts == 1) return scan(0, total);

  std::vector<std::future<std::vector<std::uint64_t>>> futures;
  futures.reserve(parts);
  const std::uint64_t chunk = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t begin = 0;
  for (int c = 0; c < parts; ++c) {
    const std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(c) < extra ? 1 : 0);
    futures.push_back(std::async(std::launch::async, scan, begin, end));
    begin = end;
  }
  std::vector<std::uint64_t> merged(width, 0);
  for (auto& f : futures) {
    const std::vector<std::uint64_t> local = f.get();
    for (std::size_t i = 0; i < width; ++i) merged[i] += local[i];
  }
  return merged;
}

void require_valid_sequence(int n, const GapSequence& s) {
  if (!is_valid_for_n(s, n) && !(n == 1 && s.empty())) {
    throw std::invalid_argument("gap sequence {" + s.to_string() + "} is not valid for n=" +
                                std::to_string(n));
  }
}

}  // namespace

Histogram distribution(int n, const GapSequence& s, const OracleOptions& options) {
  require_within_bound(n, options);
  require_valid_sequence(n, s);
  Histogram histogram;
  histogram.n = n;
  histogram.sequence = s;
  if (n == 1) {
    histogram.bins[0] = 1;
    return histogram;
  }
  const std::vector<std::uint64_t> tallies = tally_counts(n, s, options.jobs);
  for (std::size_t count = 0; count < tallies.size(); ++count) {
    if (tallies[count] != 0) histogram.bins[count] = tallies[count];
  }
  return histogram;
}

Fraction mean_comparisons(int n, const GapSequence& s, const OracleOptions& options) {
  return distribution(n, s, options).mean();
}

AverageSearchResult search_min_average(int n, const OracleOptions& options) {
  require_within_bound(n, options);
  if (n == 1) {
    return {0, GapSequence(), Fraction(0)};
  }
  AverageSearchResult best;
  for (std::uint64_t index = 1; index <= sequence_count_for(n); ++index) {
    const GapSequence s = sequence_from_index(index);
    const Fraction mean = mean_comparisons(n, s, options);
    if (best.index == 0 || mean < best.mean) {
      best = {index, s, mean};
    }
  }
  return best;
}

}  // namespace shellopt
