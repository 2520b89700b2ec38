#include "kostka/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kostka {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int weight(const Composition& c) {
  return std::accumulate(c.parts().begin(), c.parts().end(), 0);
}

int weight(const Partition& p) {
  return std::accumulate(p.parts().begin(), p.parts().end(), 0);
}

Partition sort_to_partition(const Composition& c) {
  std::vector<int> v = c.parts();
  std::sort(v.begin(), v.end(), std::greater<int>());
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Partition(std::move(v));
}

Composition decrement_at(const Composition& c, int x) {
  if (x < 1 || x > c.length()) {
    throw std::invalid_argument("decrement_at: index out of range");
  }
  std::vector<int> v = c.parts();
  if (v[x - 1] < 1) throw std::invalid_argument("decrement_at: part is zero");
  --v[x - 1];
  return Composition(std::move(v));
}

namespace {

bool contained(const std::vector<int>& g, const std::vector<int>& l) {
  if (g.size() > l.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > l[i]) return false;
  }
  return true;
}

}  // namespace

bool is_sub_partition(const Partition& g, const Composition& l) {
  return contained(g.parts(), l.parts());
}

bool is_sub_partition(const Partition& g, const Partition& l) {
  return contained(g.parts(), l.parts());
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  // Largest available part first gives lexicographically decreasing output.
  std::function<void(int, int)> gen = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition(acc));
      return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      acc.push_back(p);
      gen(remaining - p, p);
      acc.pop_back();
    }
  };
  gen(n, n);
  return out;
}

std::vector<Partition> covers_above(const Partition& rho) {
  const std::vector<int>& r = rho.parts();
  std::vector<Partition> out;
  for (int i = 0; i <= rho.length(); ++i) {
    const bool addable = (i == 0) || (i == rho.length()) || (r[i] < r[i - 1]);
    if (!addable) continue;
    std::vector<int> mu = r;
    if (i == rho.length()) {
      mu.push_back(1);
    } else {
      ++mu[i];
    }
    out.push_back(Partition(std::move(mu)));
  }
  // Adding to earlier rows gives lexicographically larger partitions,
  // so generation order is already canonical.
  return out;
}

std::vector<Partition> sub_partitions_below(const Composition& l, int target_weight) {
  if (target_weight != weight(l) - 1) {
    throw std::invalid_argument("sub_partitions_below: target_weight must be weight(l) - 1");
  }
  std::vector<Partition> out;
  for (Partition& g : partitions_of(target_weight)) {
    if (is_sub_partition(g, l)) out.push_back(std::move(g));
  }
  return out;
}

int multiplicity_c(const Composition& l, const Partition& g) {
  if (weight(g) != weight(l) - 1) {
    throw std::invalid_argument("multiplicity_c: weight(g) must be weight(l) - 1");
  }
  int count = 0;
  for (int x = 1; x <= l.length(); ++x) {
    if (l.parts()[x - 1] < 1) continue;
    if (sort_to_partition(decrement_at(l, x)) == g) ++count;
  }
  return count;
}

namespace {

std::string parts_to_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  s += ')';
  return s;
}

}  // namespace

std::string to_string(const Composition& c) { return parts_to_string(c.parts()); }
std::string to_string(const Partition& p) { return parts_to_string(p.parts()); }

}  // namespace kostka
