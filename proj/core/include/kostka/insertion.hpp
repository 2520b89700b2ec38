#pragma once

#include <vector>

#include "kostka/tableaux.hpp"

namespace kostka {

struct InsertionResult {
  Tableau tableau;
  Cell new_cell;
  // One cell per visited row: the replaced position in each row the
  // carried value bumped through, ending with new_cell.  Column indices
  // weakly decrease down the path.
  std::vector<Cell> bumping_path;
};

struct ReverseResult {
  Tableau tableau;
  int ejected = 0;
  // Cells touched walking upward, starting at the removed corner.
  std::vector<Cell> bumping_path;
};

// Row insertion t <- x: the carried value replaces the leftmost strictly
// greater entry of each row in turn and is appended at the end of the
// first row that has no greater entry.  Requires a valid tableau and
// x >= 1.  The result is valid and has exactly one more cell.
InsertionResult row_insert(const Tableau& t, int x);

// Inverse of row_insert starting from a removable corner: the removed
// value replaces the rightmost strictly smaller entry of each row going
// up, and the value pushed out of row 1 is ejected.  Requires a valid
// tableau; start must be a removable corner of its shape.
ReverseResult reverse_insert(const Tableau& t, Cell start);

struct PieriPair {
  Tableau source;
  int letter = 0;  // in [h]
  Tableau image;
};

// All insertions T <- x for T over enumerate_ssyt_bounded(rho, h) and
// x in [h], in that (T, then x) order.  The images realize, with
// multiplicity one each, every tableau with entries in [h] whose shape
// covers rho.
std::vector<PieriPair> pieri_forward(const Partition& rho, int h);

}  // namespace kostka
