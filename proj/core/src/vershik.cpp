#include "kostka/vershik.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "checked_math.hpp"

namespace kostka {

namespace {

void require_cover_weights(const Partition& rho, const Composition& lambda, const char* who) {
  if (weight(lambda) != weight(rho) + 1) {
    throw std::invalid_argument(std::string(who) + ": weight(lambda) must be weight(rho) + 1");
  }
}

// The unique box of the diagram of mu outside the diagram of rho.
// Requires mu to be rho plus one box.
Cell added_cell(const Partition& mu, const Partition& rho, const char* who) {
  const auto& m = mu.parts();
  const auto& r = rho.parts();
  if (mu.length() - rho.length() > 1 || mu.length() < rho.length() ||
      weight(mu) != weight(rho) + 1) {
    throw std::invalid_argument(std::string(who) + ": shape does not cover rho");
  }
  Cell cell{0, 0};
  for (int i = 0; i < mu.length(); ++i) {
    const int below = (i < rho.length()) ? r[i] : 0;
    if (m[i] == below) continue;
    if (m[i] != below + 1 || cell.row != 0) {
      throw std::invalid_argument(std::string(who) + ": shape does not cover rho");
    }
    cell = {i + 1, m[i]};
  }
  return cell;
}

}  // namespace

std::vector<RPrimeElement> build_r_prime(const Partition& rho, const Composition& lambda) {
  require_cover_weights(rho, lambda, "build_r_prime");
  std::vector<RPrimeElement> out;
  for (int x = 1; x <= lambda.length(); ++x) {
    if (lambda.parts()[x - 1] < 1) continue;
    for (Tableau& t : enumerate_ssyt(rho, decrement_at(lambda, x))) {
      out.push_back({std::move(t), x});
    }
  }
  return out;
}

std::vector<Tableau> build_l(const Partition& rho, const Composition& lambda) {
  require_cover_weights(rho, lambda, "build_l");
  std::vector<Tableau> out;
  for (const Partition& mu : covers_above(rho)) {
    for (Tableau& t : enumerate_ssyt(mu, lambda)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

BijectionTable vershik_bijection(const Partition& rho, const Composition& lambda) {
  require_cover_weights(rho, lambda, "vershik_bijection");
  BijectionTable table{lambda, rho, {}};
  for (RPrimeElement& e : build_r_prime(rho, lambda)) {
    InsertionResult ins = row_insert(e.tableau, e.letter);
    // Undoing the insertion at the new box must recover the source.
    ReverseResult rev = reverse_insert(ins.tableau, ins.new_cell);
    if (rev.tableau != e.tableau || rev.ejected != e.letter) {
      throw std::logic_error("vershik_bijection: insertion round-trip failed");
    }
    table.pairs.push_back({std::move(e), std::move(ins.tableau)});
  }

  std::vector<Tableau> images;
  images.reserve(table.pairs.size());
  for (const BijectionPair& p : table.pairs) images.push_back(p.image);
  std::sort(images.begin(), images.end());
  std::vector<Tableau> l = build_l(rho, lambda);
  std::sort(l.begin(), l.end());
  if (images != l) {
    throw std::logic_error("vershik_bijection: images do not exhaust the covering tableaux");
  }
  return table;
}

VerificationRecord verify_identity(const Partition& rho, const Partition& lambda) {
  require_cover_weights(rho, lambda, "verify_identity");
  VerificationRecord rec;
  rec.lambda = lambda;
  rec.rho = rho;
  for (const Partition& mu : covers_above(rho)) {
    const std::uint64_t k = kostka(mu, lambda);
    rec.lhs = detail::add_checked(rec.lhs, k);
    rec.lhs_terms.push_back({mu, k});
  }
  for (const Partition& gamma : sub_partitions_below(lambda, weight(lambda) - 1)) {
    const int c = multiplicity_c(lambda, gamma);
    const std::uint64_t k = kostka(rho, gamma);
    rec.rhs = detail::add_checked(rec.rhs, detail::mul_checked(static_cast<std::uint64_t>(c), k));
    rec.rhs_terms.push_back({gamma, c, k});
  }
  rec.ok = rec.lhs == rec.rhs;
  return rec;
}

std::vector<VerificationRecord> sweep_identity(int max_n, int jobs) {
  if (max_n < 1) throw std::invalid_argument("sweep_identity: max_n must be >= 1");
  if (jobs < 1) throw std::invalid_argument("sweep_identity: jobs must be >= 1");

  std::vector<std::pair<Partition, Partition>> tasks;  // (lambda, rho)
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (const Partition& rho : partitions_of(n - 1)) {
        tasks.emplace_back(lambda, rho);
      }
    }
  }

  std::vector<VerificationRecord> records(tasks.size());
  if (jobs == 1 || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      records[i] = verify_identity(tasks[i].second, tasks[i].first);
    }
    return records;
  }

  // Indexed writes keep the output order independent of scheduling.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
        records[i] = verify_identity(tasks[i].second, tasks[i].first);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
  pool.reserve(n_threads);
  for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

Tableau remove_one_box(const Tableau& s, const Partition& rho) {
  if (!validate(s)) throw std::invalid_argument("remove_one_box: input tableau is not semistandard");
  const Cell cell = added_cell(s.shape(), rho, "remove_one_box");
  const std::size_t r = static_cast<std::size_t>(cell.row - 1);
  const std::size_t row_len = s.rows()[r].size();
  for (std::size_t j = 0; j < row_len; ++j) {
    std::vector<std::vector<int>> rows = s.rows();
    rows[r].erase(rows[r].begin() + static_cast<std::ptrdiff_t>(j));
    if (rows[r].empty()) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
    Tableau candidate(std::move(rows));
    if (validate(candidate)) return candidate;
  }
  throw std::logic_error("remove_one_box: no box of the row could be removed");  // unreachable
}

RemovalReport removal_map_analysis(const Partition& rho, const Composition& lambda) {
  require_cover_weights(rho, lambda, "removal_map_analysis");
  RemovalReport report{lambda, rho, {}, false, std::nullopt};

  // The contents lambda^(x) differ pairwise (position x differs), so the
  // target sets are disjoint and concatenation is the canonical order.
  std::map<Tableau, std::size_t> index;
  for (int x = 1; x <= lambda.length(); ++x) {
    if (lambda.parts()[x - 1] < 1) continue;
    for (Tableau& t : enumerate_ssyt(rho, decrement_at(lambda, x))) {
      index.emplace(t, report.fibers.size());
      report.fibers.push_back({std::move(t), {}});
    }
  }

  for (Tableau& s : build_l(rho, lambda)) {
    Tableau image = remove_one_box(s, rho);
    auto it = index.find(image);
    if (it == index.end()) {
      throw std::logic_error("removal_map_analysis: image escaped the target set");
    }
    RemovalFiber& fiber = report.fibers[it->second];
    if (!fiber.preimages.empty() && !report.witness) {
      report.witness = RemovalWitness{fiber.preimages.front(), s, fiber.image};
    }
    fiber.preimages.push_back(std::move(s));
  }

  report.is_bijective =
      std::all_of(report.fibers.begin(), report.fibers.end(),
                  [](const RemovalFiber& f) { return f.preimages.size() == 1; });
  return report;
}

}  // namespace kostka
