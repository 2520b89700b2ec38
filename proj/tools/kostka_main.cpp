#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_util.hpp"
#include "kostka/json_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Count or list the semistandard Young tableaux of a given shape and content"};
  std::string shape_arg;
  std::string weight_arg;
  std::string format = "ascii";
  bool list = false;
  app.add_option("--shape", shape_arg, "shape partition, comma-separated (e.g. 4,1)")->required();
  app.add_option("--weight", weight_arg, "content vector, comma-separated (e.g. 2,2,1)")
      ->required();
  app.add_flag("--list", list, "print the tableaux after the count");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"ascii", "json"}))
      ->envname("KOSTKA_KIT_FORMAT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const kostka::Partition shape = cli::parse_partition(shape_arg);
    const kostka::Composition weight = cli::parse_composition(weight_arg);
    if (format == "json") {
      nlohmann::json j{{"shape", shape},
                       {"weight", weight},
                       {"count", kostka::kostka(shape, weight)}};
      if (list) j["tableaux"] = kostka::enumerate_ssyt(shape, weight);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << kostka::kostka(shape, weight) << "\n";
      if (list) {
        const std::vector<kostka::Tableau> tableaux = kostka::enumerate_ssyt(shape, weight);
        for (std::size_t i = 0; i < tableaux.size(); ++i) {
          std::cout << cli::mu_label(i) << ":\n";
          std::istringstream in(kostka::to_ascii(tableaux[i]));
          for (std::string line; std::getline(in, line);) std::cout << "  " << line << "\n";
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
