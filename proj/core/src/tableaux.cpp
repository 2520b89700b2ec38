#include "kostka/tableaux.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "checked_math.hpp"

namespace kostka {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

Tableau::Tableau(std::initializer_list<std::vector<int>> rows)
    : rows_(rows.begin(), rows.end()) {}

int Tableau::cell_count() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

std::vector<int> Tableau::row_lengths() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
  return lens;
}

Partition Tableau::shape() const {
  return Partition(row_lengths());  // rejects empty or growing rows
}

bool validate(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;             // rows weakly increase
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;            // columns strictly increase
    }
  }
  return true;
}

WeightVector content(const Tableau& t, int h) {
  if (h < 0) throw std::invalid_argument("content: h must be nonnegative");
  std::vector<int> counts(static_cast<std::size_t>(h), 0);
  for (const auto& row : t.rows()) {
    for (int v : row) {
      if (v < 1 || v > h) throw std::invalid_argument("content: entry outside [1, h]");
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  }
  return WeightVector(std::move(counts));
}

namespace {

// Backtracking core shared by the enumerators and kostka(): fills cells
// in row-reading order, smallest candidate first, so complete fillings
// are visited in canonical order.  budget, when present, is the
// remaining count per value (content-constrained mode).
template <typename Visit>
class Walker {
 public:
  Walker(const std::vector<int>& shape, int h, std::vector<int>* budget, Visit& visit)
      : shape_(shape), h_(h), budget_(budget), visit_(visit) {
    rows_.resize(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) {
      rows_[i].assign(static_cast<std::size_t>(shape[i]), 0);
    }
  }

  void run() { step(0, 0); }

 private:
  void step(std::size_t r, int c) {
    if (r == shape_.size()) {
      visit_(rows_);
      return;
    }
    if (c == 0 && budget_) {
      // Entries of row i are >= i (1-based), so once row r starts the
      // values 1..r can no longer be placed anywhere.
      for (std::size_t v = 1; v <= r; ++v) {
        if ((*budget_)[v] > 0) return;
      }
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows_[r][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, rows_[r - 1][static_cast<std::size_t>(c)] + 1);
    const std::size_t next_r = (c + 1 < shape_[r]) ? r : r + 1;
    const int next_c = (c + 1 < shape_[r]) ? c + 1 : 0;
    for (int v = lo; v <= h_; ++v) {
      if (budget_) {
        int& rem = (*budget_)[static_cast<std::size_t>(v)];
        if (rem == 0) continue;
        --rem;
        rows_[r][static_cast<std::size_t>(c)] = v;
        step(next_r, next_c);
        ++rem;
      } else {
        rows_[r][static_cast<std::size_t>(c)] = v;
        step(next_r, next_c);
      }
    }
  }

  const std::vector<int>& shape_;
  int h_;
  std::vector<int>* budget_;
  Visit& visit_;
  std::vector<std::vector<int>> rows_;
};

template <typename Visit>
void walk_fillings(const Partition& shape, int h, std::vector<int>* budget, Visit visit) {
  Walker<Visit> w(shape.parts(), h, budget, visit);
  w.run();
}

// budget[v] indexed by value; budget[0] unused.
std::vector<int> budget_from(const Composition& weight) {
  std::vector<int> b(static_cast<std::size_t>(weight.length()) + 1, 0);
  for (int i = 0; i < weight.length(); ++i) b[static_cast<std::size_t>(i + 1)] = weight.parts()[i];
  return b;
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Composition& weight) {
  std::vector<Tableau> out;
  if (kostka::weight(weight) != kostka::weight(shape)) return out;
  std::vector<int> budget = budget_from(weight);
  walk_fillings(shape, weight.length(), &budget,
                [&](const std::vector<std::vector<int>>& rows) { out.push_back(Tableau(rows)); });
  return out;
}

std::vector<Tableau> enumerate_ssyt_bounded(const Partition& shape, int h) {
  if (h < 1) throw std::invalid_argument("enumerate_ssyt_bounded: h must be >= 1");
  std::vector<Tableau> out;
  walk_fillings(shape, h, nullptr,
                [&](const std::vector<std::vector<int>>& rows) { out.push_back(Tableau(rows)); });
  return out;
}

std::uint64_t kostka(const Partition& shape, const Composition& weight) {
  if (kostka::weight(weight) != kostka::weight(shape)) {
    throw std::invalid_argument("kostka: weight(weight) must equal weight(shape)");
  }
  std::uint64_t count = 0;
  std::vector<int> budget = budget_from(weight);
  walk_fillings(shape, weight.length(), &budget, [&](const std::vector<std::vector<int>>&) {
    count = detail::add_checked(count, 1);
  });
  return count;
}

namespace {

// K(mu, lambda) by peeling letter h off as a horizontal strip: sum over
// all nu with mu_{i+1} <= nu_i <= mu_i and |mu| - |nu| = lambda_h of
// K(nu, lambda restricted to [h-1]).
std::uint64_t oracle_rec(const std::vector<int>& mu, const std::vector<int>& lambda, std::size_t h) {
  if (h == 0) return mu.empty() ? 1 : 0;
  const int strip = lambda[h - 1];

  std::uint64_t total = 0;
  std::vector<int> nu(mu.size(), 0);
  std::function<void(std::size_t, int)> choose = [&](std::size_t i, int deficit) {
    if (i == mu.size()) {
      if (deficit != 0) return;
      std::vector<int> trimmed = nu;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      total = detail::add_checked(total, oracle_rec(trimmed, lambda, h - 1));
      return;
    }
    const int lo = (i + 1 < mu.size()) ? mu[i + 1] : 0;
    for (int v = lo; v <= mu[i]; ++v) {
      const int removed = mu[i] - v;
      if (removed > deficit) continue;
      nu[i] = v;
      choose(i + 1, deficit - removed);
    }
  };
  choose(0, strip);
  return total;
}

}  // namespace

std::uint64_t kostka_oracle(const Partition& shape, const Composition& weight) {
  if (kostka::weight(weight) != kostka::weight(shape)) {
    throw std::invalid_argument("kostka_oracle: weight(weight) must equal weight(shape)");
  }
  return oracle_rec(shape.parts(), weight.parts(), static_cast<std::size_t>(weight.length()));
}

std::string to_ascii(const Tableau& t) {
  std::string s;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (i > 0) s += '\n';
    const auto& row = t.rows()[i];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) s += ' ';
      s += std::to_string(row[j]);
    }
  }
  return s;
}

}  // namespace kostka
