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

// JSON file formats. Rationals are always strings ("p/q" or "p"); players
// are numbered from 1; strategies are referenced by label (string) or by
// 0-based index (integer).
//
//   game          {"players": n, "strategies": [[labels]...],
//                  "utilities": [[u_i over profiles, player 1 fastest]...]}
//   group         {"generators": [[[[player, strategy], [player, strategy]]...]...]}
//                 each generator lists (from, to) slot pairs; unlisted
//                 slots are fixed
//   distribution  {"probabilities": [...]}
//   profile       {"strategies": [[...]...]}
//   certificate   {"weights": [...], "columns": [[[...]...]...], "epsilon": "p/q"}
//                 plus "m" and "complete" for order-m certificates
//   matrix        {"matrix": [[...]...]}
//
// Parse errors throw InputError naming the file and the JSON location.

#ifndef XEQ_JSON_IO_H_
#define XEQ_JSON_IO_H_

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "xeq/equilibria.h"
#include "xeq/game.h"
#include "xeq/group_action.h"
#include "xeq/rational.h"
#include "xeq/zerosum_lp.h"

namespace xeq {

using Json = nlohmann::ordered_json;

Json LoadJsonFile(const std::string& path);
std::string DumpJson(const Json& json);  // two-space indent, trailing newline

Rational ParseRationalJson(const Json& json, const std::string& where);
Json RationalToJson(const Rational& value);

Game ParseGame(const Json& json, const std::string& where);
Json GameToJson(const Game& game);

GroupAction ParseGroup(const Json& json, const Game& game, const std::string& where,
                       std::size_t cap = kDefaultGroupCap);
Json GroupToJson(const GroupAction& group, const Game& game);

JointDistribution ParseDistribution(const Json& json, const Game& game, const std::string& where);
Json DistributionToJson(const JointDistribution& dist);

ProductProfile ParseProfile(const Json& json, const Shape& shape, const std::string& where);
Json ProfileToJson(const ProductProfile& profile);

struct CertificateFile {
  XECertificate certificate;
  std::optional<int> m;
  std::optional<bool> complete;

  bool operator==(const CertificateFile&) const = default;
};
CertificateFile ParseCertificate(const Json& json, const Shape& shape, const std::string& where);
Json CertificateToJson(const CertificateFile& file);

std::pair<std::size_t, RationalVector> ParseMatrix(const Json& json, const std::string& where);
Json MatrixToJson(std::size_t rows, std::size_t cols, std::span<const Rational> entries);

Json ReportToJson(const EquilibriumReport& report, const Game& game);
std::string ReportToText(const EquilibriumReport& report, const Game& game);
// "player 1: b→c, violation 1/4" or "player 1: deviate to c, gain 1/4".
std::string WitnessText(const EquilibriumReport& report, const Game& game);

}  // namespace xeq

#endif  // XEQ_JSON_IO_H_
