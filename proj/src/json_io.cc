// Copyright 2026 The xeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xeq/json_io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "xeq/error.h"

namespace xeq {
namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

std::string At(const std::string& where, const std::string& key) { return where + "." + key; }
std::string At(const std::string& where, std::size_t index) {
  return where + "[" + std::to_string(index) + "]";
}

const Json& Member(const Json& json, const std::string& key, const std::string& where) {
  if (!json.is_object()) Fail(where, "expected an object");
  const auto it = json.find(key);
  if (it == json.end()) Fail(where, "missing \"" + key + "\"");
  return *it;
}

const Json& Array(const Json& json, const std::string& where) {
  if (!json.is_array()) Fail(where, "expected an array");
  return json;
}

RationalVector ParseVector(const Json& json, const std::string& where) {
  RationalVector out;
  const Json& arr = Array(json, where);
  for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(ParseRationalJson(arr[k], At(where, k)));
  return out;
}

Json VectorToJson(std::span<const Rational> values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(RationalToJson(v));
  return out;
}

std::vector<RationalVector> ParseStrategies(const Json& json, const Shape& shape,
                                            const std::string& where) {
  const Json& arr = Array(json, where);
  if (static_cast<int>(arr.size()) != shape.num_players()) {
    Fail(where, "expected " + std::to_string(shape.num_players()) + " mixed strategies, got " +
                    std::to_string(arr.size()));
  }
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    RationalVector v = ParseVector(arr[i], At(where, i));
    if (static_cast<int>(v.size()) != shape.num_strategies(static_cast<int>(i)) ||
        !IsProbabilityVector(v)) {
      Fail(At(where, i), "not a mixed strategy over " +
                             std::to_string(shape.num_strategies(static_cast<int>(i))) +
                             " strategies");
    }
    out.push_back(std::move(v));
  }
  return out;
}

Json StrategiesToJson(const ProductProfile& profile) {
  Json out = Json::array();
  for (const RationalVector& v : profile.strategies()) out.push_back(VectorToJson(v));
  return out;
}

// [player (1-based), label or index] -> slot.
int ParseSlot(const Json& json, const Game& game, const std::string& where) {
  if (!json.is_array() || json.size() != 2 || !json[0].is_number_integer()) {
    Fail(where, "expected [player, strategy]");
  }
  const long player = json[0].get<long>();
  if (player < 1 || player > game.num_players()) Fail(where, "player out of range");
  const int i = static_cast<int>(player - 1);
  int s = -1;
  if (json[1].is_string()) {
    s = game.find_label(i, json[1].get<std::string>());
    if (s < 0) Fail(where, "unknown strategy \"" + json[1].get<std::string>() + "\"");
  } else if (json[1].is_number_integer()) {
    const long v = json[1].get<long>();
    if (v < 0 || v >= game.num_strategies(i)) Fail(where, "strategy index out of range");
    s = static_cast<int>(v);
  } else {
    Fail(where, "strategy must be a label or an index");
  }
  return game.shape().slot(i, s);
}

Json SlotToJson(const Game& game, int slot) {
  const int i = game.shape().player_of_slot(slot);
  return Json::array({i + 1, game.label(i, slot - game.shape().offset(i))});
}

}  // namespace

Json LoadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

std::string DumpJson(const Json& json) { return json.dump(2) + "\n"; }

Rational ParseRationalJson(const Json& json, const std::string& where) {
  if (json.is_number_integer()) return Rational(mpz_class(json.dump()));
  if (!json.is_string()) Fail(where, "expected a rational string such as \"1/2\"");
  try {
    return ParseRational(json.get<std::string>());
  } catch (const InputError& e) {
    Fail(where, e.what());
  }
}

Json RationalToJson(const Rational& value) { return ToString(value); }

Game ParseGame(const Json& json, const std::string& where) {
  const Json& players = Member(json, "players", where);
  if (!players.is_number_integer() || players.get<long>() < 2) {
    Fail(At(where, "players"), "expected an integer >= 2");
  }
  const int n = static_cast<int>(players.get<long>());
  const Json& strategies = Array(Member(json, "strategies", where), At(where, "strategies"));
  if (static_cast<int>(strategies.size()) != n) {
    Fail(At(where, "strategies"), "expected one label list per player");
  }
  std::vector<int> counts;
  std::vector<std::vector<std::string>> labels;
  for (int i = 0; i < n; ++i) {
    const std::string here = At(At(where, "strategies"), i);
    const Json& list = Array(strategies[i], here);
    std::vector<std::string> names;
    for (std::size_t s = 0; s < list.size(); ++s) {
      if (!list[s].is_string()) Fail(At(here, s), "strategy labels must be strings");
      names.push_back(list[s].get<std::string>());
      if (std::count(names.begin(), names.end(), names.back()) > 1) {
        Fail(At(here, s), "duplicate label \"" + names.back() + "\"");
      }
    }
    if (names.size() < 2) Fail(here, "every player needs at least two strategies");
    counts.push_back(static_cast<int>(names.size()));
    labels.push_back(std::move(names));
  }
  const Json& utilities = Array(Member(json, "utilities", where), At(where, "utilities"));
  if (static_cast<int>(utilities.size()) != n) {
    Fail(At(where, "utilities"), "expected one utility list per player");
  }
  const Shape shape(counts);
  std::vector<RationalVector> tensors;
  for (int i = 0; i < n; ++i) {
    const std::string here = At(At(where, "utilities"), i);
    RationalVector u = ParseVector(utilities[i], here);
    if (u.size() != shape.num_profiles()) {
      Fail(here, "expected " + std::to_string(shape.num_profiles()) + " entries, got " +
                     std::to_string(u.size()));
    }
    tensors.push_back(std::move(u));
  }
  return Game(std::move(counts), std::move(tensors), std::move(labels));
}

Json GameToJson(const Game& game) {
  Json out;
  out["players"] = game.num_players();
  out["strategies"] = game.labels();
  Json utilities = Json::array();
  for (int i = 0; i < game.num_players(); ++i) utilities.push_back(VectorToJson(game.utilities(i)));
  out["utilities"] = std::move(utilities);
  return out;
}

GroupAction ParseGroup(const Json& json, const Game& game, const std::string& where,
                       std::size_t cap) {
  const std::string gens_where = At(where, "generators");
  const Json& gens = Array(Member(json, "generators", where), gens_where);
  const Shape& shape = game.shape();
  std::vector<GroupElement> generators;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string here = At(gens_where, g);
    const Json& pairs = Array(gens[g], here);
    std::vector<int> map(shape.num_slots(), -1);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const std::string pair_where = At(here, k);
      if (!pairs[k].is_array() || pairs[k].size() != 2) Fail(pair_where, "expected [from, to]");
      const int from = ParseSlot(pairs[k][0], game, At(pair_where, 0));
      const int to = ParseSlot(pairs[k][1], game, At(pair_where, 1));
      if (map[from] >= 0) Fail(pair_where, "slot mapped twice");
      map[from] = to;
    }
    for (int x = 0; x < shape.num_slots(); ++x) {
      if (map[x] < 0) map[x] = x;
    }
    try {
      generators.emplace_back(shape, std::move(map));
    } catch (const CapExceeded&) {
      throw;
    } catch (const InputError& e) {
      Fail(here, e.what());
    }
  }
  try {
    return CloseGroup(shape, generators, cap);
  } catch (const CapExceeded& e) {
    throw CapExceeded(where + ": " + e.what());
  }
}

Json GroupToJson(const GroupAction& group, const Game& game) {
  Json gens = Json::array();
  for (const GroupElement& g : group.generators()) {
    Json pairs = Json::array();
    for (int x = 0; x < static_cast<int>(g.slot_map().size()); ++x) {
      if (g.slot_map()[x] == x) continue;
      pairs.push_back(Json::array({SlotToJson(game, x), SlotToJson(game, g.slot_map()[x])}));
    }
    gens.push_back(std::move(pairs));
  }
  Json out;
  out["generators"] = std::move(gens);
  return out;
}

JointDistribution ParseDistribution(const Json& json, const Game& game, const std::string& where) {
  const std::string here = At(where, "probabilities");
  RationalVector p = ParseVector(Member(json, "probabilities", where), here);
  if (p.size() != game.num_profiles()) {
    Fail(here, "expected " + std::to_string(game.num_profiles()) + " entries, got " +
                   std::to_string(p.size()));
  }
  if (!IsProbabilityVector(p)) Fail(here, "entries must be nonnegative and sum to 1");
  return JointDistribution(game.shape(), std::move(p));
}

Json DistributionToJson(const JointDistribution& dist) {
  Json out;
  out["probabilities"] = VectorToJson(dist.probabilities());
  return out;
}

ProductProfile ParseProfile(const Json& json, const Shape& shape, const std::string& where) {
  return ProductProfile(shape,
                        ParseStrategies(Member(json, "strategies", where), shape, At(where, "strategies")));
}

Json ProfileToJson(const ProductProfile& profile) {
  Json out;
  out["strategies"] = StrategiesToJson(profile);
  return out;
}

CertificateFile ParseCertificate(const Json& json, const Shape& shape, const std::string& where) {
  CertificateFile file;
  file.certificate.weights = ParseVector(Member(json, "weights", where), At(where, "weights"));
  const std::string cols_where = At(where, "columns");
  const Json& cols = Array(Member(json, "columns", where), cols_where);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    file.certificate.columns.emplace_back(shape, ParseStrategies(cols[k], shape, At(cols_where, k)));
  }
  if (file.certificate.columns.size() != file.certificate.weights.size()) {
    Fail(where, "weights and columns differ in length");
  }
  file.certificate.epsilon = ParseRationalJson(Member(json, "epsilon", where), At(where, "epsilon"));
  if (json.contains("m")) {
    if (!json["m"].is_number_integer() || json["m"].get<long>() < 1) {
      Fail(At(where, "m"), "expected an integer >= 1");
    }
    file.m = static_cast<int>(json["m"].get<long>());
  }
  if (json.contains("complete")) {
    if (!json["complete"].is_boolean()) Fail(At(where, "complete"), "expected a boolean");
    file.complete = json["complete"].get<bool>();
  }
  return file;
}

Json CertificateToJson(const CertificateFile& file) {
  Json out;
  out["weights"] = VectorToJson(file.certificate.weights);
  Json cols = Json::array();
  for (const ProductProfile& p : file.certificate.columns) cols.push_back(StrategiesToJson(p));
  out["columns"] = std::move(cols);
  out["epsilon"] = RationalToJson(file.certificate.epsilon);
  if (file.m) out["m"] = *file.m;
  if (file.complete) out["complete"] = *file.complete;
  return out;
}

std::pair<std::size_t, RationalVector> ParseMatrix(const Json& json, const std::string& where) {
  const std::string here = At(where, "matrix");
  const Json& rows = Array(Member(json, "matrix", where), here);
  const std::size_t n = rows.size();
  if (n == 0) Fail(here, "matrix is empty");
  RationalVector entries;
  for (std::size_t r = 0; r < n; ++r) {
    RationalVector row = ParseVector(rows[r], At(here, r));
    if (row.size() != n) Fail(At(here, r), "matrix must be square");
    for (Rational& v : row) entries.push_back(std::move(v));
  }
  return {n, std::move(entries)};
}

Json MatrixToJson(std::size_t rows, std::size_t cols, std::span<const Rational> entries) {
  Json out = Json::array();
  for (std::size_t r = 0; r < rows; ++r) out.push_back(VectorToJson(entries.subspan(r * cols, cols)));
  Json wrapped;
  wrapped["matrix"] = std::move(out);
  return wrapped;
}

std::string WitnessText(const EquilibriumReport& report, const Game& game) {
  if (!report.witness) return "";
  const DeviationWitness& w = *report.witness;
  std::string out = "player " + std::to_string(w.player + 1) + ": ";
  if (w.from >= 0) {
    out += game.label(w.player, w.from) + "→" + game.label(w.player, w.to) + ", violation ";
  } else {
    out += "deviate to " + game.label(w.player, w.to) + ", gain ";
  }
  return out + ToString(report.worst_violation);
}

Json ReportToJson(const EquilibriumReport& report, const Game& game) {
  Json out;
  out["verdict"] = report.verdict;
  out["worst_violation"] = RationalToJson(report.worst_violation);
  out["tolerance"] = RationalToJson(report.tolerance);
  if (report.witness) {
    Json w;
    w["player"] = report.witness->player + 1;
    if (report.witness->from >= 0) w["from"] = game.label(report.witness->player, report.witness->from);
    w["to"] = game.label(report.witness->player, report.witness->to);
    w["text"] = WitnessText(report, game);
    out["witness"] = std::move(w);
  }
  if (report.failure) out["failure"] = *report.failure;
  return out;
}

std::string ReportToText(const EquilibriumReport& report, const Game& game) {
  std::ostringstream out;
  out << "verdict: " << (report.verdict ? "true" : "false") << "\n";
  out << "worst violation: " << ToString(report.worst_violation) << "\n";
  out << "tolerance: " << ToString(report.tolerance) << "\n";
  if (report.witness) out << "witness: " << WitnessText(report, game) << "\n";
  if (report.failure) out << "failure: " << *report.failure << "\n";
  return out.str();
}

}  // namespace xeq
