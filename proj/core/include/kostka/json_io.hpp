#pragma once

#include <nlohmann/json.hpp>

#include "kostka/insertion.hpp"
#include "kostka/shapes.hpp"
#include "kostka/tableaux.hpp"
#include "kostka/vershik.hpp"

namespace kostka {

// Wire formats:
//   Partition / Composition   [3,2,1]            (compositions keep zeros)
//   Tableau                   {"rows": [[1,1,2,2],[3]]}
//   PieriPair / BijectionPair {"source": {"tableau": T, "x": k}, "image": T}
//   BijectionTable            {"lambda": [...], "rho": [...], "pairs": [...]}
//   VerificationRecord        {"lambda": [...], "rho": [...], "lhs": n,
//                              "rhs": n, "ok": b, "terms": {"lhs": [...],
//                              "rhs": [...]}}
//   RemovalReport             {"lambda": [...], "rho": [...],
//                              "is_bijective": b, "fibers": [...],
//                              "witness": {...} or null}

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

void to_json(nlohmann::json& j, const Composition& c);
void from_json(const nlohmann::json& j, Composition& c);

void to_json(nlohmann::json& j, const Tableau& t);
void from_json(const nlohmann::json& j, Tableau& t);

void to_json(nlohmann::json& j, const PieriPair& p);
void to_json(nlohmann::json& j, const BijectionPair& p);
void to_json(nlohmann::json& j, const BijectionTable& table);
void to_json(nlohmann::json& j, const VerificationRecord& rec);
void to_json(nlohmann::json& j, const RemovalReport& report);

}  // namespace kostka
