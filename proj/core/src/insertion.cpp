#include "kostka/insertion.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace kostka {

InsertionResult row_insert(const Tableau& t, int x) {
  if (x < 1) throw std::invalid_argument("row_insert: inserted value must be positive");
  if (!validate(t)) throw std::invalid_argument("row_insert: input tableau is not semistandard");

  std::vector<std::vector<int>> rows = t.rows();
  std::vector<Cell> path;
  int carry = x;
  std::size_t i = 0;
  for (;; ++i) {
    if (i == rows.size()) {
      rows.push_back({carry});
      path.push_back({static_cast<int>(i) + 1, 1});
      break;
    }
    std::vector<int>& row = rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), carry);  // leftmost entry > carry
    if (it == row.end()) {
      row.push_back(carry);
      path.push_back({static_cast<int>(i) + 1, static_cast<int>(row.size())});
      break;
    }
    path.push_back({static_cast<int>(i) + 1, static_cast<int>(it - row.begin()) + 1});
    std::swap(*it, carry);
  }

  for (std::size_t k = 1; k < path.size(); ++k) {
    assert(path[k].col <= path[k - 1].col);  // bumping path moves weakly left
  }
  Cell new_cell = path.back();
  return {Tableau(std::move(rows)), new_cell, std::move(path)};
}

ReverseResult reverse_insert(const Tableau& t, Cell start) {
  if (!validate(t)) throw std::invalid_argument("reverse_insert: input tableau is not semistandard");
  const auto& in_rows = t.rows();
  const int nrows = static_cast<int>(in_rows.size());
  if (start.row < 1 || start.row > nrows) {
    throw std::invalid_argument("reverse_insert: start cell outside tableau");
  }
  const std::size_t r = static_cast<std::size_t>(start.row - 1);
  if (start.col != static_cast<int>(in_rows[r].size()) ||
      (start.row < nrows && static_cast<int>(in_rows[r + 1].size()) >= start.col)) {
    throw std::invalid_argument("reverse_insert: start cell is not a removable corner");
  }

  std::vector<std::vector<int>> rows = in_rows;
  std::vector<Cell> path = {start};
  int carry = rows[r].back();
  rows[r].pop_back();
  if (rows[r].empty()) rows.pop_back();  // the corner was the last row's only cell

  for (std::size_t i = r; i-- > 0;) {
    std::vector<int>& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), carry);
    assert(it != row.begin());  // the entry above the previous cell is smaller
    --it;                       // rightmost entry < carry
    path.push_back({static_cast<int>(i) + 1, static_cast<int>(it - row.begin()) + 1});
    std::swap(*it, carry);
  }
  return {Tableau(std::move(rows)), carry, std::move(path)};
}

std::vector<PieriPair> pieri_forward(const Partition& rho, int h) {
  if (h < 1) throw std::invalid_argument("pieri_forward: h must be >= 1");
  std::vector<PieriPair> out;
  for (const Tableau& t : enumerate_ssyt_bounded(rho, h)) {
    for (int x = 1; x <= h; ++x) {
      out.push_back({t, x, row_insert(t, x).tableau});
    }
  }
  return out;
}

}  // namespace kostka
