#include "cli_util.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cli {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a comma-separated integer list: '" + text + "'");
    }
    if (used != item.size()) {
      throw std::invalid_argument("not a comma-separated integer list: '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

kostka::Partition parse_partition(const std::string& text) {
  return kostka::Partition(parse_int_list(text));
}

kostka::Composition parse_composition(const std::string& text) {
  return kostka::Composition(parse_int_list(text));
}

namespace {

std::string label_from(const char* alphabet, std::size_t index) {
  const std::size_t n = std::strlen(alphabet);
  std::string out(1, alphabet[index % n]);
  if (index >= n) out += std::to_string(index / n + 1);
  return out;
}

std::vector<std::string> lines_of(const kostka::Tableau& t) {
  if (t.empty()) return {"(empty)"};
  std::vector<std::string> lines;
  std::istringstream in(kostka::to_ascii(t));
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

std::string mu_label(std::size_t index) { return label_from("ABCDEFGHIJK", index); }

std::string rho_label(std::size_t index) { return label_from("LMNPQRSTUVWXYZ", index); }

std::string side_by_side(const kostka::Tableau& left, const kostka::Tableau& right) {
  const std::vector<std::string> l = lines_of(left);
  const std::vector<std::string> r = lines_of(right);
  std::size_t width = 0;
  for (const std::string& s : l) width = std::max(width, s.size());
  std::string out;
  for (std::size_t i = 0; i < std::max(l.size(), r.size()); ++i) {
    std::string row = "  ";
    if (i < l.size()) row += l[i];
    if (i < r.size()) {
      row.resize(2 + width + 4, ' ');
      row += r[i];
    }
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace cli
