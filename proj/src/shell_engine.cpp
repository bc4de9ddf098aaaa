#include "shellopt/shell_engine.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shellopt/errors.hpp"

namespace shellopt {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n == 0) throw std::invalid_argument("permutation must be non-empty");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("values are not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversed(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (values_[i] != i + 1) return false;
  }
  return true;
}

std::uint64_t pass_comparisons(std::vector<int>& values, int gap) {
  const int n = static_cast<int>(values.size());
  std::uint64_t comparisons = 0;
  for (int pos = gap; pos < n; ++pos) {
    const int x = values[pos];
    int j = pos;
    while (j >= gap && values[j - gap] > x) {
      ++comparisons;
      values[j] = values[j - gap];
      j -= gap;
    }
    if (j >= gap) ++comparisons;  // the comparison that stopped the scan
    values[j] = x;
  }
  return comparisons;
}

std::uint64_t shellsort_total(std::vector<int>& values, const GapSequence& s) {
  std::uint64_t total = 0;
  for (int gap : s.descending()) {
    total += pass_comparisons(values, gap);
  }
  return total;
}

namespace {

void require_valid(const GapSequence& s, int n) {
  if (is_valid_for_n(s, n)) return;
  if (s.empty() && n == 1) return;  // degenerate single-element case
  throw std::invalid_argument("gap sequence {" + s.to_string() + "} is not valid for n=" +
                              std::to_string(n));
}

}  // namespace

SortTrace shellsort_count(const Permutation& p, const GapSequence& s) {
  require_valid(s, p.size());
  std::vector<int> work = p.values();
  std::vector<PassCount> per_pass;
  per_pass.reserve(s.size());
  std::uint64_t total = 0;
  std::vector<int> first_pass_state = work;
  for (int gap : s.descending()) {
    const std::uint64_t count = pass_comparisons(work, gap);
    per_pass.push_back({gap, count});
    total += count;
    if (per_pass.size() == 1) first_pass_state = work;
  }
  SortTrace trace{total, std::move(per_pass), Permutation(work),
                  Permutation(std::move(first_pass_state))};
  if (!trace.result.is_identity()) {
    throw std::logic_error("shellsort did not sort its input");
  }
  return trace;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial out of 64-bit range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<int> nth_permutation(int n, std::uint64_t rank) {
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(n), 1);
  for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (int i = n; i-- > 0;) {
    const std::uint64_t block = fact[i];
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

std::uint64_t max_comparisons_full(int n, const GapSequence& s,
                                   const FullSpaceOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  require_valid(s, n);
  if (n > options.max_n) {
    throw CapacityError("full permutation space for n=" + std::to_string(n) +
                            " exceeds the brute-force bound of n=" +
                            std::to_string(options.max_n),
                        n <= 20 ? std::to_string(factorial(n)) : std::to_string(n) + "!");
  }
  if (n == 1) return 0;

  const std::uint64_t total = factorial(n);
  const int parts = static_cast<int>(
      std::min<std::uint64_t>(std::max(options.jobs, 1), total));

  auto scan = [n, &s](std::uint64_t begin, std::uint64_t end) {
    std::vector<int> perm = nth_permutation(n, begin);
    std::vector<int> work(perm.size());
    std::uint64_t best = 0;
    for (std::uint64_t r = begin; r < end; ++r) {
      work = perm;
      best = std::max(best, shellsort_total(work, s));
      std::next_permutation(perm.begin(), perm.end());
    }
    return best;
  };

  if (parts == 1) return scan(0, total);

  std::vector<std::future<std::uint64_t>> futures;
  futures.reserve(parts);
  const std::uint64_t chunk = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t begin = 0;
  for (int c = 0; c < parts; ++c) {
    const std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(c) < extra ? 1 : 0);
    futures.push_back(std::async(std::launch::async, scan, begin, end));
    begin = end;
  }
  std::uint64_t best = 0;
  for (auto& f : futures) best = std::max(best, f.get());
  return best;
}

}  // namespace shellopt
