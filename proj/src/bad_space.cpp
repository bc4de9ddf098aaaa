#include "shellopt/bad_space.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>

#include "shellopt/errors.hpp"

namespace shellopt {

namespace {

BigInt big_factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_h(int n, int h) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (h == n && n == 1) return;
  if (h < 1 || h > n - 1) {
    throw std::invalid_argument("largest increment " + std::to_string(h) +
                                " is out of range for n=" + std::to_string(n));
  }
}

// Builds the Bad permutation of a word: values n, n-1, ... fall into their
// classes front to back, so every class is strictly decreasing.
void build_bad(const std::vector<std::uint8_t>& word, int n, int h,
               std::vector<int>& slots, std::vector<int>& out) {
  std::fill(slots.begin(), slots.end(), 0);
  for (int t = 0; t < n; ++t) {
    const int c = word[t];
    out[c + h * slots[c]] = n - t;
    ++slots[c];
  }
}

// Builds the state after the h-pass: same assignment, classes ascending.
void build_after_first_pass(const std::vector<std::uint8_t>& word, int n, int h,
                            const std::vector<int>& class_sizes, std::vector<int>& slots,
                            std::vector<int>& out) {
  for (int c = 0; c < h; ++c) slots[c] = class_sizes[c] - 1;
  for (int t = 0; t < n; ++t) {
    const int c = word[t];
    out[c + h * slots[c]] = n - t;
    --slots[c];
  }
}

std::uint64_t clamp_to_u64(const BigInt& v) {
  static const BigInt kMax = std::numeric_limits<std::uint64_t>::max();
  if (v >= kMax) return std::numeric_limits<std::uint64_t>::max();
  return v.convert_to<std::uint64_t>();
}

}  // namespace

ReducedSpaceSpec reduced_space(int n, int h) {
  require_h(n, h);
  ReducedSpaceSpec spec;
  spec.n = n;
  spec.h = h;
  spec.class_sizes.resize(h);
  BigInt denom = 1;
  for (int j = 0; j < h; ++j) {
    spec.class_sizes[j] = (n - j + h - 1) / h;  // ceil((n-j)/h)
    denom *= big_factorial(spec.class_sizes[j]);
  }
  spec.cardinality = big_factorial(n) / denom;
  return spec;
}

BigInt bad1_count(int n, int h) { return reduced_space(n, h).cardinality; }

std::uint64_t bad1_first_pass_comparisons(int n, int h) {
  const ReducedSpaceSpec spec = reduced_space(n, h);
  std::uint64_t total = 0;
  for (int m : spec.class_sizes) {
    total += static_cast<std::uint64_t>(m) * (m - 1) / 2;
  }
  return total;
}

bool is_bad1(const Permutation& p, int h) {
  const int n = p.size();
  if (h < 1 || h > n) {
    throw std::invalid_argument("increment out of range for is_bad1");
  }
  const std::vector<int>& v = p.values();
  for (int t = h; t < n; ++t) {
    if (v[t] >= v[t - h]) return false;
  }
  return true;
}

namespace detail {

std::vector<std::uint8_t> unrank_word(BigInt rank, const std::vector<int>& class_sizes) {
  std::vector<int> counts = class_sizes;
  int n = 0;
  for (int m : counts) n += m;
  BigInt arrangements = big_factorial(n);
  for (int m : counts) arrangements /= big_factorial(m);

  std::vector<std::uint8_t> word(n);
  for (int pos = 0; pos < n; ++pos) {
    const int remaining = n - pos;
    for (std::size_t c = 0; c < counts.size(); ++c) {
      if (counts[c] == 0) continue;
      const BigInt with_c = arrangements * counts[c] / remaining;
      if (rank < with_c) {
        word[pos] = static_cast<std::uint8_t>(c);
        --counts[c];
        arrangements = with_c;
        break;
      }
      rank -= with_c;
    }
  }
  return word;
}

namespace {

// Per-worker evaluator: cost of sorting the word's Bad permutation, computed
// from the post-first-pass state plus the constant h-pass cost. Aborts at
// the bound once the running total reaches it; the partial total is already
// a valid witness.
struct Evaluator {
  int n;
  int h;
  std::vector<int> class_sizes;
  std::vector<int> remaining_gaps;  // descending, excluding h
  std::uint64_t first_pass_cost;
  std::optional<std::uint64_t> bound;

  std::vector<int> state;
  std::vector<int> slots;

  Evaluator(int n_in, const GapSequence& s, std::optional<std::uint64_t> bound_in)
      : n(n_in), h(s.empty() ? 1 : s.largest()), bound(bound_in) {
    const ReducedSpaceSpec spec = reduced_space(n, h);
    class_sizes = spec.class_sizes;
    first_pass_cost = bad1_first_pass_comparisons(n, h);
    for (int gap : s.descending()) {
      if (gap != h) remaining_gaps.push_back(gap);
    }
    state.resize(n);
    slots.resize(h);
  }

  std::uint64_t operator()(const std::vector<std::uint8_t>& word) {
    std::uint64_t total = first_pass_cost;
    if (bound && total >= *bound) return total;
    build_after_first_pass(word, n, h, class_sizes, slots, state);
    for (int gap : remaining_gaps) {
      total += pass_comparisons(state, gap);
      if (bound && total >= *bound) return total;
    }
    return total;
  }
};

struct ChunkResult {
  std::uint64_t max_comparisons = 0;
  bool exceeded = false;
  std::uint64_t exceed_offset = 0;
  std::uint64_t exceed_value = 0;
};

}  // namespace

ScanOutcome scan_reduced_space(int n, const GapSequence& s,
                               std::optional<std::uint64_t> bound,
                               std::optional<std::uint64_t> max_evaluations, int jobs) {
  if (n == 1) {
    // Single element, empty sequence: one empty permutation, zero cost.
    return {0, false, false, 1};
  }
  if (!is_valid_for_n(s, n)) {
    throw std::invalid_argument("gap sequence {" + s.to_string() + "} is not valid for n=" +
                                std::to_string(n));
  }
  const int h = s.largest();
  const ReducedSpaceSpec spec = reduced_space(n, h);

  BigInt effective = spec.cardinality;
  if (max_evaluations && BigInt(*max_evaluations) < effective) {
    effective = *max_evaluations;
  }
  const bool capped = effective < spec.cardinality;

  if (effective == 0) return {0, false, true, 0};

  int parts = std::max(jobs, 1);
  if (BigInt(parts) > effective) parts = effective.convert_to<int>();
  // Small spaces are cheaper to scan in place than to fan out.
  if (effective <= 16384) parts = 1;

  std::vector<BigInt> bounds(parts + 1);
  for (int c = 0; c <= parts; ++c) bounds[c] = effective * c / parts;

  std::atomic<int> earliest_exceed_chunk{parts};

  auto run_chunk = [&](int chunk_index) {
    Evaluator eval(n, s, bound);
    std::vector<std::uint8_t> word = unrank_word(bounds[chunk_index], eval.class_sizes);
    const std::uint64_t len = clamp_to_u64(bounds[chunk_index + 1] - bounds[chunk_index]);
    ChunkResult result;
    for (std::uint64_t off = 0; off < len; ++off) {
      if (bound && (off & 8191u) == 8191u &&
          earliest_exceed_chunk.load(std::memory_order_relaxed) < chunk_index) {
        break;  // an earlier chunk already holds the verdict
      }
      const std::uint64_t cost = eval(word);
      if (bound && cost >= *bound) {
        result.exceeded = true;
        result.exceed_offset = off;
        result.exceed_value = cost;
        int seen = earliest_exceed_chunk.load(std::memory_order_relaxed);
        while (chunk_index < seen &&
               !earliest_exceed_chunk.compare_exchange_weak(seen, chunk_index)) {
        }
        break;
      }
      if (cost > result.max_comparisons) result.max_comparisons = cost;
      std::next_permutation(word.begin(), word.end());
    }
    return result;
  };

  std::vector<ChunkResult> results(parts);
  if (parts == 1) {
    results[0] = run_chunk(0);
  } else {
    std::vector<std::future<ChunkResult>> futures;
    futures.reserve(parts);
    for (int c = 0; c < parts; ++c) {
      futures.push_back(std::async(std::launch::async, run_chunk, c));
    }
    for (int c = 0; c < parts; ++c) results[c] = futures[c].get();
  }

  // Fold in chunk order: the first exceeding member in stream order wins,
  // making the outcome independent of the split.
  for (int c = 0; c < parts; ++c) {
    if (results[c].exceeded) {
      ScanOutcome outcome;
      outcome.max_comparisons = results[c].exceed_value;
      outcome.exceeded = true;
      outcome.truncated = false;
      outcome.evaluations = clamp_to_u64(bounds[c] + results[c].exceed_offset + 1);
      return outcome;
    }
  }
  ScanOutcome outcome;
  for (const ChunkResult& r : results) {
    outcome.max_comparisons = std::max(outcome.max_comparisons, r.max_comparisons);
  }
  outcome.truncated = capped;
  outcome.evaluations = clamp_to_u64(effective);
  return outcome;
}

}  // namespace detail

Bad1Stream::Bad1Stream(int n, int h, BigInt first_rank, BigInt count)
    : n_(n), h_(h), remaining_(std::move(count)), next_rank_(std::move(first_rank)) {
  class_sizes_ = reduced_space(n, h).class_sizes;
  if (remaining_ > 0) {
    word_ = detail::unrank_word(next_rank_, class_sizes_);
  }
}

void Bad1Stream::advance() {
  std::next_permutation(word_.begin(), word_.end());
  ++next_rank_;
  --remaining_;
}

std::optional<Permutation> Bad1Stream::next() {
  if (remaining_ <= 0) return std::nullopt;
  std::vector<int> out(n_);
  std::vector<int> slots(h_);
  build_bad(word_, n_, h_, slots, out);
  advance();
  return Permutation(std::move(out));
}

std::vector<Bad1Stream> Bad1Stream::split(int parts) const {
  if (parts < 1) throw std::invalid_argument("split needs at least one part");
  std::vector<Bad1Stream> streams;
  streams.reserve(parts);
  for (int c = 0; c < parts; ++c) {
    const BigInt begin = next_rank_ + remaining_ * c / parts;
    const BigInt end = next_rank_ + remaining_ * (c + 1) / parts;
    streams.push_back(Bad1Stream(n_, h_, begin, end - begin));
  }
  return streams;
}

Bad1Stream enumerate_bad1(int n, int h, std::optional<BigInt> budget) {
  const ReducedSpaceSpec spec = reduced_space(n, h);
  const BigInt limit = budget.value_or(BigInt(kDefaultEnumerationBudget));
  if (spec.cardinality > limit) {
    throw CapacityError("reduced space for n=" + std::to_string(n) + ", h=" +
                            std::to_string(h) + " has " + spec.cardinality.str() +
                            " members, beyond the enumeration budget of " + limit.str(),
                        spec.cardinality.str());
  }
  return Bad1Stream(n, h, 0, spec.cardinality);
}

ReducedMaxResult max_comparisons_reduced(int n, const GapSequence& s,
                                         const ReducedMaxOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 1 || !s.empty()) {
    if (!is_valid_for_n(s, n)) {
      throw std::invalid_argument("gap sequence {" + s.to_string() +
                                  "} is not valid for n=" + std::to_string(n));
    }
  }
  if (n > 1 && !options.stop_at_bound && !options.max_evaluations) {
    const BigInt cardinality = bad1_count(n, s.largest());
    if (cardinality > BigInt(options.enumeration_budget)) {
      throw CapacityError("reduced space for n=" + std::to_string(n) + ", s={" +
                              s.to_string() + "} has " + cardinality.str() +
                              " members, beyond the enumeration budget of " +
                              std::to_string(options.enumeration_budget),
                          cardinality.str());
    }
  }
  const detail::ScanOutcome outcome = detail::scan_reduced_space(
      n, s, options.stop_at_bound, options.max_evaluations, options.jobs);
  return {outcome.max_comparisons, outcome.exceeded, outcome.truncated, outcome.evaluations};
}

Bad2Stream::Bad2Stream(Bad1Stream base, int n, int h, int second)
    : base_(std::move(base)), n_(n), h_(h), second_(second) {
  after_first_.resize(n);
}

std::optional<Permutation> Bad2Stream::next() {
  std::vector<int> slots(h_);
  while (base_.remaining_ > 0) {
    build_after_first_pass(base_.word_, n_, h_, base_.class_sizes_, slots, after_first_);
    bool bad = true;
    for (int t = second_; t < n_; ++t) {
      if (after_first_[t] >= after_first_[t - second_]) {
        bad = false;
        break;
      }
    }
    if (bad) {
      std::vector<int> out(n_);
      build_bad(base_.word_, n_, h_, slots, out);
      base_.advance();
      return Permutation(std::move(out));
    }
    base_.advance();
  }
  return std::nullopt;
}

Bad2Stream bad2_members(int n, const GapSequence& s, std::optional<BigInt> budget) {
  if (s.size() < 2) {
    throw std::invalid_argument("Bad (s,2) needs at least two increments");
  }
  if (!is_valid_for_n(s, n)) {
    throw std::invalid_argument("gap sequence {" + s.to_string() + "} is not valid for n=" +
                                std::to_string(n));
  }
  Bad1Stream base = enumerate_bad1(n, s.largest(), budget);
  return Bad2Stream(std::move(base), n, s.largest(), s.nth_largest(2));
}

BigInt bad2_count(int n, const GapSequence& s, int jobs, std::optional<BigInt> budget) {
  if (s.size() < 2) {
    throw std::invalid_argument("Bad (s,2) needs at least two increments");
  }
  if (!is_valid_for_n(s, n)) {
    throw std::invalid_argument("gap sequence {" + s.to_string() + "} is not valid for n=" +
                                std::to_string(n));
  }
  const int h = s.largest();
  const int second = s.nth_largest(2);
  const ReducedSpaceSpec spec = reduced_space(n, h);
  const BigInt limit = budget.value_or(BigInt(kDefaultEnumerationBudget));
  if (spec.cardinality > limit) {
    throw CapacityError("reduced space for n=" + std::to_string(n) + ", s={" +
                            s.to_string() + "} has " + spec.cardinality.str() +
                            " members, beyond the enumeration budget of " + limit.str(),
                        spec.cardinality.str());
  }

  int parts = std::max(jobs, 1);
  if (BigInt(parts) > spec.cardinality) parts = spec.cardinality.convert_to<int>();
  if (parts < 1) parts = 1;
  std::vector<BigInt> bounds(parts + 1);
  for (int c = 0; c <= parts; ++c) bounds[c] = spec.cardinality * c / parts;

  auto run_chunk = [&](int chunk_index) {
    std::vector<std::uint8_t> word = detail::unrank_word(bounds[chunk_index], spec.class_sizes);
    std::vector<int> state(n);
    std::vector<int> slots(h);
    const std::uint64_t len = clamp_to_u64(bounds[chunk_index + 1] - bounds[chunk_index]);
    std::uint64_t members = 0;
    for (std::uint64_t off = 0; off < len; ++off) {
      build_after_first_pass(word, n, h, spec.class_sizes, slots, state);
      bool bad = true;
      for (int t = second; t < n; ++t) {
        if (state[t] >= state[t - second]) {
          bad = false;
          break;
        }
      }
      if (bad) ++members;
      std::next_permutation(word.begin(), word.end());
    }
    return members;
  };

  BigInt total = 0;
  if (parts == 1) {
    total = run_chunk(0);
  } else {
    std::vector<std::future<std::uint64_t>> futures;
    futures.reserve(parts);
    for (int c = 0; c < parts; ++c) {
      futures.push_back(std::async(std::launch::async, run_chunk, c));
    }
    for (auto& f : futures) total += f.get();
  }
  return total;
}

}  // namespace shellopt
