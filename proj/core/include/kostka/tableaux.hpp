#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kostka/shapes.hpp"

namespace kostka {

// Row-by-row filling of a Young diagram with positive integers.
// Construction performs no semistandardness checks; validate() does.
//
// The default comparison orders rows lexicographically, which for
// tableaux of equal shape is exactly the order of their row-reading
// words (rows concatenated top to bottom).  Every enumeration in this
// library emits tableaux in that order; it is the canonical order that
// labels and golden outputs refer to.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);
  Tableau(std::initializer_list<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int cell_count() const;
  std::vector<int> row_lengths() const;

  // Row lengths as a Partition; rejects fillings whose rows do not form
  // a valid diagram.
  Partition shape() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Entry counts: counts[i-1] = number of occurrences of i, for i in [h].
using WeightVector = Composition;

// True iff the rows form a valid diagram, all entries are positive,
// rows are weakly increasing and columns strictly increasing.
bool validate(const Tableau& t);

// Content of t with respect to the alphabet [h].  Rejects entries
// outside [1, h].  Valid contents may contain zeros and are reported
// exactly, never sorted.
WeightVector content(const Tableau& t, int h);

// All semistandard tableaux of the given shape and exact content, in
// canonical order.  Entries range over [length(weight)].  Empty when
// none exist (in particular when the weights disagree).
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Composition& weight);

// All semistandard tableaux of the given shape with entries in [h],
// any content, in canonical order.  h >= 1.
std::vector<Tableau> enumerate_ssyt_bounded(const Partition& shape, int h);

// Kostka number K(shape, weight) = |enumerate_ssyt(shape, weight)|,
// counted without materializing the list.  Rejects weight mismatch.
std::uint64_t kostka(const Partition& shape, const Composition& weight);

// Same number by a structurally different route: peel the largest
// letter off as a horizontal strip and recurse.  Exists as an
// independent cross-check for kostka().
std::uint64_t kostka_oracle(const Partition& shape, const Composition& weight);

// One row per line, entries space-separated.  Empty tableau -> "".
std::string to_ascii(const Tableau& t);

}  // namespace kostka
