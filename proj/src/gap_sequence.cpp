#include "shellopt/gap_sequence.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace shellopt {

GapSequence::GapSequence(std::vector<int> increments) {
  std::sort(increments.begin(), increments.end(), std::greater<>());
  if (std::adjacent_find(increments.begin(), increments.end()) != increments.end()) {
    throw std::invalid_argument("gap sequence has a duplicate increment");
  }
  if (!increments.empty()) {
    if (increments.back() < 1) {
      throw std::invalid_argument("increments must be positive");
    }
    if (increments.back() != 1) {
      throw std::invalid_argument("a non-empty gap sequence must contain the increment 1");
    }
  }
  increments_ = std::move(increments);
}

GapSequence GapSequence::parse(const std::string& text) {
  std::vector<int> increments;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      throw std::invalid_argument("empty increment in gap sequence text");
    }
    const auto last = token.find_last_not_of(" \t");
    increments.push_back(std::stoi(token.substr(first, last - first + 1)));
  }
  return GapSequence(std::move(increments));
}

std::vector<int> GapSequence::ascending() const {
  return {increments_.rbegin(), increments_.rend()};
}

int GapSequence::nth_largest(int k) const {
  if (k < 1 || k > size()) {
    throw std::out_of_range("gap sequence rank out of range");
  }
  return increments_[k - 1];
}

bool GapSequence::contains(int increment) const noexcept {
  return std::binary_search(increments_.begin(), increments_.end(), increment,
                            std::greater<>());
}

std::string GapSequence::to_string() const {
  std::string out;
  for (auto it = increments_.rbegin(); it != increments_.rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += std::to_string(*it);
  }
  return out;
}

SequenceIndex::SequenceIndex(std::uint64_t value) : value_(value) {
  if (value == 0) {
    throw std::invalid_argument("sequence index must be positive");
  }
}

GapSequence sequence_from_index(SequenceIndex index) {
  const std::uint64_t bits = index.value() - 1;
  std::vector<int> increments{1};
  for (int b = 0; b < 63; ++b) {
    if (bits >> b & 1u) increments.push_back(b + 2);
  }
  return GapSequence(std::move(increments));
}

SequenceIndex index_of_sequence(const GapSequence& s) {
  if (s.empty()) {
    throw std::invalid_argument("the empty gap sequence has no index");
  }
  std::uint64_t bits = 0;
  for (int increment : s.descending()) {
    if (increment == 1) continue;
    if (increment > 64) {
      throw std::invalid_argument("increment too large to index");
    }
    bits |= std::uint64_t{1} << (increment - 2);
  }
  return SequenceIndex(bits + 1);
}

bool is_valid_for_n(const GapSequence& s, int n) {
  return !s.empty() && s.largest() <= n - 1;
}

std::uint64_t sequence_count_for(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n == 1) return 0;
  if (n > 64) throw std::invalid_argument("n too large to enumerate sequence indices");
  return std::uint64_t{1} << (n - 2);
}

}  // namespace shellopt
