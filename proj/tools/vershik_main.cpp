#include <cstddef>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_util.hpp"
#include "kostka/json_io.hpp"
#include "kostka/vershik.hpp"

namespace {

using kostka::Composition;
using kostka::Partition;
using kostka::Tableau;

std::string header(const Partition& rho, const Composition& lambda) {
  return "rho = " + kostka::to_string(rho) + ", lambda = " + kostka::to_string(lambda) + "\n";
}

std::map<Tableau, std::size_t> index_of(const std::vector<Tableau>& tableaux) {
  std::map<Tableau, std::size_t> index;
  for (std::size_t i = 0; i < tableaux.size(); ++i) index.emplace(tableaux[i], i);
  return index;
}

int run_table(const Partition& rho, const Composition& lambda, const std::string& format) {
  const kostka::BijectionTable table = kostka::vershik_bijection(rho, lambda);
  if (format == "json") {
    std::cout << nlohmann::json(table).dump(2) << "\n";
    return 0;
  }
  const auto l_index = index_of(kostka::build_l(rho, lambda));
  std::cout << header(rho, lambda) << table.pairs.size() << " pairs\n";
  for (std::size_t i = 0; i < table.pairs.size(); ++i) {
    const kostka::BijectionPair& p = table.pairs[i];
    std::cout << "\n"
              << cli::rho_label(i) << " <- " << p.source.letter << " = "
              << cli::mu_label(l_index.at(p.image)) << "\n"
              << cli::side_by_side(p.source.tableau, p.image);
  }
  return 0;
}

int run_sweep(int max_n, int jobs, const std::string& format) {
  const std::vector<kostka::VerificationRecord> records = kostka::sweep_identity(max_n, jobs);
  std::size_t failures = 0;
  for (const kostka::VerificationRecord& rec : records) {
    if (!rec.ok) ++failures;
  }
  if (format == "json") {
    std::cout << nlohmann::json(records).dump(2) << "\n";
  } else {
    for (const kostka::VerificationRecord& rec : records) {
      std::cout << (rec.ok ? "ok  " : "FAIL") << " n=" << kostka::weight(rec.lambda)
                << " lambda=" << kostka::to_string(rec.lambda)
                << " rho=" << kostka::to_string(rec.rho) << " lhs=" << rec.lhs
                << " rhs=" << rec.rhs << "\n";
    }
    if (failures == 0) {
      std::cout << "all " << records.size() << " pairs OK\n";
    } else {
      std::cout << failures << " of " << records.size() << " pairs FAILED\n";
    }
  }
  return failures == 0 ? 0 : 1;
}

int run_removal(const Partition& rho, const Composition& lambda, const std::string& format) {
  const kostka::RemovalReport report = kostka::removal_map_analysis(rho, lambda);
  if (format == "json") {
    std::cout << nlohmann::json(report).dump(2) << "\n";
    return report.is_bijective ? 0 : 1;
  }

  const std::vector<Tableau> l = kostka::build_l(rho, lambda);
  const auto l_index = index_of(l);
  std::map<Tableau, std::size_t> r_index;
  for (std::size_t i = 0; i < report.fibers.size(); ++i) {
    r_index.emplace(report.fibers[i].image, i);
  }
  // Fiber index of each element of L, in canonical order.
  std::vector<std::size_t> target(l.size());
  for (std::size_t f = 0; f < report.fibers.size(); ++f) {
    for (const Tableau& s : report.fibers[f].preimages) target[l_index.at(s)] = f;
  }

  std::cout << header(rho, lambda);
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::cout << "\n"
              << cli::mu_label(i) << " -> " << cli::rho_label(target[i]) << "\n"
              << cli::side_by_side(l[i], report.fibers[target[i]].image);
  }
  std::cout << "\n";
  if (report.is_bijective) {
    std::cout << "bijection:";
    for (std::size_t i = 0; i < l.size(); ++i) {
      std::cout << " " << cli::mu_label(i) << "<->" << cli::rho_label(target[i]);
    }
    std::cout << "\n";
    return 0;
  }
  const kostka::RemovalWitness& w = *report.witness;
  std::cout << "NOT a bijection: " << cli::mu_label(l_index.at(w.first)) << " and "
            << cli::mu_label(l_index.at(w.second)) << " both remove to "
            << cli::rho_label(r_index.at(w.image)) << "\n";
  std::string missed;
  for (std::size_t f = 0; f < report.fibers.size(); ++f) {
    if (report.fibers[f].preimages.empty()) missed += " " + cli::rho_label(f);
  }
  if (!missed.empty()) std::cout << "never produced:" << missed << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vershik's relation for Kostka numbers: bijection tables, identity sweeps, and "
               "one-box-removal analysis"};
  app.require_subcommand(1);

  std::string rho_arg;
  std::string lambda_arg;
  std::string format = "ascii";
  int max_n = 1;
  int jobs = 1;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"ascii", "json"}))
        ->envname("KOSTKA_KIT_FORMAT");
  };
  const auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--rho", rho_arg, "partition of n-1, comma-separated ('' for the empty one)")
        ->required();
    cmd->add_option("--lambda", lambda_arg, "content vector of n, comma-separated")->required();
    add_format(cmd);
  };

  CLI::App* table =
      app.add_subcommand("table", "print the insertion bijection R' -> L pair by pair");
  add_pair(table);
  CLI::App* sweep =
      app.add_subcommand("sweep", "verify the identity for every (lambda, rho) up to max-n");
  sweep->add_option("--max-n", max_n, "largest n to sweep")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--jobs", jobs, "concurrent pair evaluations")->check(CLI::PositiveNumber);
  add_format(sweep);
  CLI::App* removal =
      app.add_subcommand("removal", "analyze whether one-box removal is a bijection L -> R");
  add_pair(removal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) {
      return run_table(cli::parse_partition(rho_arg), cli::parse_composition(lambda_arg), format);
    }
    if (sweep->parsed()) {
      return run_sweep(max_n, jobs, format);
    }
    return run_removal(cli::parse_partition(rho_arg), cli::parse_composition(lambda_arg), format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
