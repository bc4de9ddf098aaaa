#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shellopt {

// A finite set of sorting increments. Every non-empty sequence contains 1;
// the empty sequence is the degenerate case for single-element inputs and
// has no index. Increments are held sorted descending, the order passes run
// in, while the text form lists them ascending ("1, 3, 7, 11").
class GapSequence {
 public:
  GapSequence() = default;
  explicit GapSequence(std::vector<int> increments);

  // Parses "1,4" or "1, 4". Empty input yields the empty sequence.
  static GapSequence parse(const std::string& text);

  bool empty() const noexcept { return increments_.empty(); }
  int size() const noexcept { return static_cast<int>(increments_.size()); }

  // Largest first.
  const std::vector<int>& descending() const noexcept { return increments_; }
  std::vector<int> ascending() const;

  // The k-th largest increment, 1-based: nth_largest(1) is the largest.
  int nth_largest(int k) const;
  int largest() const { return nth_largest(1); }

  bool contains(int increment) const noexcept;

  std::string to_string() const;

  friend bool operator==(const GapSequence&, const GapSequence&) = default;

 private:
  std::vector<int> increments_;
};

// 1-based position of a gap sequence in the enumeration of all gap
// sequences; the codec below is a bijection.
class SequenceIndex {
 public:
  explicit SequenceIndex(std::uint64_t value);
  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(const SequenceIndex&, const SequenceIndex&) = default;

 private:
  std::uint64_t value_;
};

// Decodes index i to {1} plus every k >= 2 whose bit (k-2) is set in i-1.
// Independent of the number of elements to sort.
GapSequence sequence_from_index(SequenceIndex index);
inline GapSequence sequence_from_index(std::uint64_t index) {
  return sequence_from_index(SequenceIndex(index));
}

// Exact inverse of sequence_from_index: 1 + sum of 2^(k-2) over k >= 2 in s.
// The empty sequence has no index and is rejected.
SequenceIndex index_of_sequence(const GapSequence& s);

// True iff s contains 1 and its largest increment is at most n-1.
bool is_valid_for_n(const GapSequence& s, int n);

// Number of gap sequences valid for sorting n elements: 2^(n-2) for n >= 2,
// zero for n == 1.
std::uint64_t sequence_count_for(int n);

}  // namespace shellopt
