#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kostka/shapes.hpp"
#include "kostka/tableaux.hpp"

namespace cli {

// "3,2,1" -> {3, 2, 1}; "" -> {}.  Rejects anything but comma-separated
// integers.  The shape/weight constructors do the semantic validation.
std::vector<int> parse_int_list(const std::string& text);
kostka::Partition parse_partition(const std::string& text);
kostka::Composition parse_composition(const std::string& text);

// Canonical-index labels.  Covering-shape tableaux: A, B, ..., K, A2,
// B2, ...; shape-rho tableaux: L, M, N, P (no O), ..., Z, L2, ...
std::string mu_label(std::size_t index);
std::string rho_label(std::size_t index);

// Both tableaux line by line, two-space indent, left block padded to a
// fixed gutter.  Empty tableaux render as "(empty)".
std::string side_by_side(const kostka::Tableau& left, const kostka::Tableau& right);

}  // namespace cli
