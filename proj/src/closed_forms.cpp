#include "shellopt/closed_forms.hpp"

#include <boost/rational.hpp>
#include <cmath>
#include <stdexcept>

namespace shellopt {

namespace {

using Rational = boost::rational<long long>;

std::uint64_t to_integer(const Rational& r, const char* what) {
  if (r.denominator() != 1 || r.numerator() < 0) {
    throw std::logic_error(std::string(what) + " did not evaluate to a nonnegative integer");
  }
  return static_cast<std::uint64_t>(r.numerator());
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void require_min(std::uint64_t n, std::uint64_t least, const char* what) {
  if (n < least) {
    throw std::invalid_argument(std::string(what) + " is defined for n >= " +
                                std::to_string(least));
  }
  if (n > 2000000) {
    throw std::invalid_argument("n too large for exact 64-bit rational evaluation");
  }
}

}  // namespace

int chi(std::uint64_t k, std::uint64_t n) {
  if (k == 0) throw std::invalid_argument("chi requires k >= 1");
  return n % k == 0 ? 1 : 0;
}

std::uint64_t linear_worst_case(std::uint64_t n) { return n * (n - 1) / 2; }

std::uint64_t n2_closed(std::uint64_t n) {
  require_min(n, 3, "n2");
  const auto m = static_cast<long long>(n);
  const int even = chi(2, n);
  const Rational value = Rational(-7, 8) + Rational(m, 2) + Rational(3 * m * m, 8) -
                         Rational(9 * even, 8) + Rational(m * even, 4);
  return to_integer(value, "n2");
}

std::uint64_t n2_closed_ceiling(std::uint64_t n) {
  require_min(n, 3, "n2");
  const auto m = static_cast<long long>(n);
  const long long c = ceil_div(m, 2);
  const Rational value =
      Rational(m * (m - 1), 2) - Rational(c * c, 2) + Rational(5 * c, 2) - 2;
  return to_integer(value, "n2");
}

std::uint64_t n3_closed(std::uint64_t n) {
  require_min(n, 4, "n3");
  const auto m = static_cast<long long>(n);
  const Rational value = Rational(-1) + Rational(2 * m, 3) + Rational(m * m, 3) -
                         (Rational(2) - Rational(m, 3)) * chi(3, n) -
                         Rational(2, 3) * chi(3, n + 1);
  return to_integer(value, "n3");
}

std::uint64_t n3_closed_ceiling(std::uint64_t n) {
  require_min(n, 4, "n3");
  const auto m = static_cast<long long>(n);
  const long long c = ceil_div(m, 3);
  const long long c_prev = ceil_div(m - 1, 3);
  const Rational value = Rational(m * (m - 1), 2) - Rational(3 * c * c, 2) +
                         Rational(9 * c, 2) - 3 + Rational(m - 1, 3) * (c - c_prev);
  return to_integer(value, "n3");
}

std::uint64_t n4_closed(std::uint64_t n) {
  require_min(n, 4, "n4");
  const auto m = static_cast<long long>(n);
  const Rational value = Rational(-35, 12) + Rational(5 * m, 3) + Rational(m * m, 4) -
                         (Rational(25, 12) - Rational(m, 6)) * chi(6, n) -
                         (Rational(7, 3) - Rational(m, 3)) * chi(6, n + 1) -
                         (Rational(17, 12) - Rational(m, 6)) * chi(6, n + 2) -
                         (Rational(10, 3) - Rational(m, 3)) * chi(6, n + 3) -
                         (Rational(41, 12) - Rational(m, 2)) * chi(6, n + 4);
  return to_integer(value, "n4");
}

std::uint64_t gamma_increment(int k) {
  if (k < 1) throw std::invalid_argument("gamma increments are defined for k >= 1");
  if (k > 54) throw std::invalid_argument("gamma increment would overflow 64 bits");
  long double power = 1.0L;
  for (int i = 0; i < k; ++i) power *= static_cast<long double>(kGamma);
  const long double sum = (power - 1.0L) / (static_cast<long double>(kGamma) - 1.0L);
  return static_cast<std::uint64_t>(std::ceil(sum));
}

namespace {

std::optional<std::uint64_t> chain_value(int n, std::uint64_t index,
                                         const ChainOptions& options, bool* closed) {
  *closed = false;
  const auto un = static_cast<std::uint64_t>(n);
  if (index == 1) {
    *closed = true;
    return linear_worst_case(un);
  }
  if (index == 2 && un >= 3) {
    *closed = true;
    return n2_closed(un);
  }
  if (index == 3 && un >= 4) {
    *closed = true;
    return n3_closed(un);
  }
  if (index == 4 && un >= 4) {
    *closed = true;
    return n4_closed(un);
  }
  const GapSequence s = sequence_from_index(index);
  if (!is_valid_for_n(s, n)) return std::nullopt;
  if (bad1_count(n, s.largest()) > BigInt(options.enumeration_budget)) {
    return std::nullopt;
  }
  ReducedMaxOptions scan;
  scan.enumeration_budget = options.enumeration_budget;
  scan.jobs = options.jobs;
  return max_comparisons_reduced(n, s, scan).max_comparisons;
}

}  // namespace

std::vector<ChainReport> verify_chain(int n_first, int n_last,
                                      const std::vector<std::uint64_t>& chain,
                                      const ChainOptions& options) {
  if (n_first < 2 || n_last < n_first) {
    throw std::invalid_argument("bad n range for chain verification");
  }
  if (chain.size() < 2) {
    throw std::invalid_argument("a chain needs at least two sequence indices");
  }
  std::vector<ChainReport> reports;
  reports.reserve(static_cast<std::size_t>(n_last - n_first + 1));
  for (int n = n_first; n <= n_last; ++n) {
    ChainReport report;
    report.n = n;
    bool all_known = true;
    for (std::uint64_t index : chain) {
      ChainValue value;
      value.sequence_index = index;
      value.worst_case = chain_value(n, index, options, &value.from_closed_form);
      all_known = all_known && value.worst_case.has_value();
      report.values.push_back(value);
    }
    if (!all_known) {
      report.verdict = ChainVerdict::unverifiable;
      report.note = "at least one worst case exceeds the enumeration budget";
    } else {
      report.verdict = ChainVerdict::holds;
      for (std::size_t j = 0; j + 1 < report.values.size(); ++j) {
        if (*report.values[j].worst_case >= *report.values[j + 1].worst_case) {
          report.verdict = ChainVerdict::fails;
          report.note = "link " + std::to_string(report.values[j].sequence_index) + " < " +
                        std::to_string(report.values[j + 1].sequence_index) +
                        " is violated: " + std::to_string(*report.values[j].worst_case) +
                        " >= " + std::to_string(*report.values[j + 1].worst_case);
          break;
        }
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

ThresholdReport check_thresholds(std::uint64_t max_n) {
  ThresholdReport report;
  for (std::uint64_t n = 3; n <= max_n; ++n) {
    const bool claim_a = n2_closed(n) < linear_worst_case(n);
    if (claim_a != (n >= 9)) report.n2_vs_linear_exceptions.push_back(n);
    if (n < 4) continue;
    const bool claim_b = n3_closed(n) < linear_worst_case(n);
    if (claim_b != (n >= 7)) report.n3_vs_linear_exceptions.push_back(n);
    const bool claim_c = n3_closed(n) < n2_closed(n);
    if (claim_c != (n >= 9)) report.n3_vs_n2_exceptions.push_back(n);
  }
  return report;
}

}  // namespace shellopt
