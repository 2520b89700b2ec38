#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace kostka {

// Box coordinate in a Young diagram, matrix convention, 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Finite sequence of nonnegative integers.  Order matters and trailing
// zeros are significant: (3,2,0) and (3,2) are different compositions.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// Weakly decreasing sequence of positive integers.  The empty partition
// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // A partition is a composition with no trailing zeros.
  operator Composition() const { return Composition(parts_); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

int weight(const Composition& c);
int weight(const Partition& p);

// Sorts parts into weakly decreasing order and drops zeros.
Partition sort_to_partition(const Composition& c);

// c with part x (1-based) decreased by one.  Rejects x out of range and
// c_x = 0; the result keeps the length of c.
Composition decrement_at(const Composition& c, int x);

// True iff g_i <= l_i for every i, padding g with zeros on the right.
// g must not have parts beyond the length of l.
bool is_sub_partition(const Partition& g, const Composition& l);
bool is_sub_partition(const Partition& g, const Partition& l);

// All partitions of n, lexicographically decreasing: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// All partitions of weight(rho)+1 whose diagram contains the diagram of
// rho, i.e. rho plus one box at an addable corner.  Lexicographically
// decreasing.
std::vector<Partition> covers_above(const Partition& rho);

// All partitions gamma of target_weight with gamma <= l componentwise.
// target_weight must equal weight(l) - 1.  Lexicographically decreasing.
std::vector<Partition> sub_partitions_below(const Composition& l, int target_weight);

// Number of positions x with l_x >= 1 and sort_to_partition(decrement_at(l, x)) == g.
// Requires weight(g) == weight(l) - 1.
int multiplicity_c(const Composition& l, const Partition& g);

// "(3,2,1)" / "(3,2,0)" / "()"; for diagnostics and CLI headers.
std::string to_string(const Composition& c);
std::string to_string(const Partition& p);

}  // namespace kostka
