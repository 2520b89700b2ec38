#include "kostka/json_io.hpp"

namespace kostka {

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::json& j, Partition& p) {
  p = Partition(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const Composition& c) { j = c.parts(); }

void from_json(const nlohmann::json& j, Composition& c) {
  c = Composition(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const Tableau& t) {
  j = nlohmann::json{{"rows", t.rows()}};
}

void from_json(const nlohmann::json& j, Tableau& t) {
  t = Tableau(j.at("rows").get<std::vector<std::vector<int>>>());
}

namespace {

nlohmann::json pair_json(const Tableau& source, int letter, const Tableau& image) {
  return nlohmann::json{{"source", {{"tableau", source}, {"x", letter}}}, {"image", image}};
}

}  // namespace

void to_json(nlohmann::json& j, const PieriPair& p) {
  j = pair_json(p.source, p.letter, p.image);
}

void to_json(nlohmann::json& j, const BijectionPair& p) {
  j = pair_json(p.source.tableau, p.source.letter, p.image);
}

void to_json(nlohmann::json& j, const BijectionTable& table) {
  j = nlohmann::json{{"lambda", table.lambda}, {"rho", table.rho}, {"pairs", table.pairs}};
}

void to_json(nlohmann::json& j, const VerificationRecord& rec) {
  nlohmann::json lhs_terms = nlohmann::json::array();
  for (const LhsTerm& t : rec.lhs_terms) {
    lhs_terms.push_back({{"mu", t.mu}, {"kostka", t.count}});
  }
  nlohmann::json rhs_terms = nlohmann::json::array();
  for (const RhsTerm& t : rec.rhs_terms) {
    rhs_terms.push_back({{"gamma", t.gamma}, {"c", t.multiplicity}, {"kostka", t.count}});
  }
  j = nlohmann::json{{"lambda", rec.lambda}, {"rho", rec.rho},
                     {"lhs", rec.lhs},       {"rhs", rec.rhs},
                     {"ok", rec.ok},         {"terms", {{"lhs", lhs_terms}, {"rhs", rhs_terms}}}};
}

void to_json(nlohmann::json& j, const RemovalReport& report) {
  nlohmann::json fibers = nlohmann::json::array();
  for (const RemovalFiber& f : report.fibers) {
    fibers.push_back({{"image", f.image}, {"preimages", f.preimages}});
  }
  nlohmann::json witness;
  if (report.witness) {
    witness = nlohmann::json{{"first", report.witness->first},
                             {"second", report.witness->second},
                             {"image", report.witness->image}};
  }
  j = nlohmann::json{{"lambda", report.lambda},
                     {"rho", report.rho},
                     {"is_bijective", report.is_bijective},
                     {"fibers", fibers},
                     {"witness", witness}};
}

}  // namespace kostka
