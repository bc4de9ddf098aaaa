#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "shellopt/errors.hpp"
#include "shellopt/shell_engine.hpp"

using namespace shellopt;

namespace {

const std::vector<int> kWorked16{16, 12, 8, 4, 15, 11, 7, 3, 14, 10, 6, 2, 13, 9, 5, 1};
const std::vector<int> kWorked16AfterPass4{13, 9, 5, 1, 14, 10, 6, 2, 15, 11, 7, 3, 16, 12, 8, 4};

}  // namespace

TEST_CASE("single pass counts on the n=16 worked example") {
  std::vector<int> v = kWorked16;
  CHECK(pass_comparisons(v, 4) == 24);
  CHECK(v == kWorked16AfterPass4);

  // The 4-sorted state costs one failed comparison per non-leading element.
  std::vector<int> w = kWorked16AfterPass4;
  CHECK(pass_comparisons(w, 4) == 12);
  CHECK(w == kWorked16AfterPass4);
}

TEST_CASE("full trace on the n=16 worked example") {
  const SortTrace trace = shellsort_count(Permutation(kWorked16), GapSequence({1, 4}));
  REQUIRE(trace.per_pass.size() == 2);
  CHECK(trace.per_pass[0].increment == 4);
  CHECK(trace.per_pass[0].comparisons == 24);
  CHECK(trace.after_first_pass == Permutation(kWorked16AfterPass4));
  CHECK(trace.result.is_identity());
  CHECK(trace.total_comparisons ==
        trace.per_pass[0].comparisons + trace.per_pass[1].comparisons);
}

TEST_CASE("plain insertion sort boundary cases") {
  CHECK(shellsort_count(Permutation({2, 1}), GapSequence({1})).total_comparisons == 1);
  for (int n : {2, 3, 5, 8}) {
    CAPTURE(n);
    CHECK(shellsort_count(Permutation::identity(n), GapSequence({1})).total_comparisons ==
          static_cast<std::uint64_t>(n - 1));
    CHECK(shellsort_count(Permutation::reversed(n), GapSequence({1})).total_comparisons ==
          static_cast<std::uint64_t>(n) * (n - 1) / 2);
  }
}

TEST_CASE("single element sorts with the empty sequence") {
  const SortTrace trace = shellsort_count(Permutation({1}), GapSequence());
  CHECK(trace.total_comparisons == 0);
  CHECK(trace.per_pass.empty());
  CHECK(trace.result.is_identity());
}

TEST_CASE("sorting is correct for every permutation of n<=7") {
  for (int n = 2; n <= 7; ++n) {
    for (std::uint64_t index = 1; index <= sequence_count_for(n); ++index) {
      const GapSequence s = sequence_from_index(index);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        std::vector<int> work = perm;
        shellsort_total(work, s);
        if (!std::is_sorted(work.begin(), work.end())) {
          CAPTURE(n);
          CAPTURE(index);
          REQUIRE(std::is_sorted(work.begin(), work.end()));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  CHECK(true);
}

TEST_CASE("randomized sorting correctness and insertion bounds at larger n") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 15);
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    const Permutation p(values);

    const SortTrace plain = shellsort_count(p, GapSequence({1}));
    CHECK(plain.result.is_identity());
    CHECK(plain.total_comparisons >= static_cast<std::uint64_t>(n - 1));
    CHECK(plain.total_comparisons <= static_cast<std::uint64_t>(n) * (n - 1) / 2);

    const SortTrace gapped = shellsort_count(p, GapSequence({1, 4, 9}));
    CHECK(gapped.result.is_identity());
  }
}

TEST_CASE("pass additivity and first-pass replay") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> values(12);
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    const Permutation p(values);
    const GapSequence s({1, 3, 7});

    const SortTrace trace = shellsort_count(p, s);
    std::uint64_t sum = 0;
    for (const PassCount& pass : trace.per_pass) sum += pass.comparisons;
    CHECK(trace.total_comparisons == sum);

    std::vector<int> replay = p.values();
    CHECK(pass_comparisons(replay, 7) == trace.per_pass[0].comparisons);
    CHECK(Permutation(replay) == trace.after_first_pass);
  }
}

TEST_CASE("full-space maxima at small n") {
  CHECK(max_comparisons_full(3, GapSequence({1})) == 3);
  CHECK(max_comparisons_full(6, GapSequence({1, 4})) == 14);
  CHECK(max_comparisons_full(1, GapSequence()) == 0);
  CHECK(max_comparisons_full(2, GapSequence({1})) == 1);
}

TEST_CASE("full-space scan refuses n beyond the bound") {
  CHECK_THROWS_AS(max_comparisons_full(10, GapSequence({1})), CapacityError);
  try {
    max_comparisons_full(10, GapSequence({1}));
  } catch (const CapacityError& e) {
    CHECK(e.cardinality() == "3628800");
  }
  FullSpaceOptions raised;
  raised.max_n = 10;
  CHECK(max_comparisons_full(10, GapSequence({1}), raised) == 45);
}

TEST_CASE("full-space maxima are identical for any worker count") {
  FullSpaceOptions four;
  four.jobs = 4;
  FullSpaceOptions eight;
  eight.jobs = 8;
  const GapSequence s({1, 3});
  const std::uint64_t lone = max_comparisons_full(7, s);
  CHECK(lone == max_comparisons_full(7, s, four));
  CHECK(lone == max_comparisons_full(7, s, eight));
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(shellsort_count(Permutation({2, 1}), GapSequence({1, 4})),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(max_comparisons_full(4, GapSequence({1, 4})), std::invalid_argument);
}

TEST_CASE("lexicographic unranking agrees with iteration order") {
  std::vector<int> perm{1, 2, 3, 4, 5};
  for (std::uint64_t r = 0; r < factorial(5); ++r) {
    if (nth_permutation(5, r) != perm) {
      CAPTURE(r);
      REQUIRE(nth_permutation(5, r) == perm);
    }
    std::next_permutation(perm.begin(), perm.end());
  }
  CHECK(true);
}
