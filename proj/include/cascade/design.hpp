#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cascade {

/// Items are 1-based contiguous integers. 0 is reserved for the null test
/// output ("no defective found") and is never a valid item.
using ItemId = int;

/// One cascaded test: an ordered sequence of distinct items. The test
/// outcome is the first member that is defective, or 0 if none is.
using TestSeq = std::vector<ItemId>;

/// A defective set, kept sorted and duplicate-free.
using DefectiveSet = std::vector<ItemId>;

/// Per-test outputs of a design, in test order.
using OutputVector = std::vector<ItemId>;

/// A non-adaptive testing design: an ordered collection of cascaded tests
/// over items 1..n_items, built to identify up to max_defectives items.
struct Design {
  int n_items = 0;
  int max_defectives = 1;
  std::vector<TestSeq> tests;

  bool operator==(const Design&) const = default;
};

/// Thrown by the design text parser; carries the offending 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Normalizes a list of items into a DefectiveSet (sorted, unique).
DefectiveSet make_defective_set(std::vector<ItemId> items);

/// True iff t is a permutation of {1..n}.
bool is_full_permutation(const TestSeq& t, int n);

/// Validates item ranges, distinctness and design parameters; throws
/// std::invalid_argument on violation.
void validate_design(const Design& d);

/// Outcome of one cascaded test: the first item of t that belongs to
/// defectives, or 0 when none does (including the empty test).
ItemId run_test(const TestSeq& t, const DefectiveSet& defectives);

/// Applies every test of d to the given defective set, in test order.
/// Rejects defectives out of 1..n_items or larger than max_defectives.
OutputVector run_design(const Design& d, const DefectiveSet& defectives);

/// Reconstructs the defective set from an output vector of a feasible
/// design: the distinct nonzero entries.
DefectiveSet decode(const Design& d, const OutputVector& y);

/// Block composition of two permutations of {1..n} into a permutation of
/// {1..n^2}: block A_i = {(i-1)n+1..in} is ordered internally by s2 and
/// the blocks are concatenated in the order given by s1.
TestSeq compose(const TestSeq& s1, const TestSeq& s2);

/// Keeps only items <= m in every test (order preserved), drops empty
/// tests and exact duplicates, and sets n_items = m.
Design restrict_design(const Design& d, int m);

/// Removes exact-duplicate tests, keeping first occurrences in order.
Design dedupe_tests(const Design& d);

// Design text format: line 1 is "N K"; every further nonempty line is one
// test as space-separated item indices; '#' starts a comment line; blank
// lines are ignored. Line order of tests is significant.

Design parse_design(std::istream& in);
Design parse_design_file(const std::string& path);

/// Serializes d in the text format. Each string in comments becomes one
/// leading '#' line.
std::string format_design(const Design& d,
                          const std::vector<std::string>& comments = {});

void write_design_file(const std::string& path, const Design& d,
                       const std::vector<std::string>& comments = {});

}  // namespace cascade
