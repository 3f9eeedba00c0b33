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

#include "xeq/cli.h"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "xeq/auxiliary.h"
#include "xeq/equilibria.h"
#include "xeq/error.h"
#include "xeq/game_algebra.h"
#include "xeq/json_io.h"
#include "xeq/order_m.h"

namespace xeq {
namespace {

constexpr int kExitInternal = 3;

struct RunConfig {
  std::string format = "text";
  std::string game_path;
  std::string group_path;
  std::string second_path;  // profile, distribution or matrix
  std::string objective_path;
  std::string out_path;
  std::string game_out;
  std::string group_out;
  std::string epsilon = "0";
  std::string order_m_epsilon;  // empty keeps the order-m default
  std::string tolerance = "0";
  std::string of = "game";
  int max_iters = 500;
  int m = 2;
  int starts = 16;
  std::uint64_t seed = OracleOptions{}.seed;
  double tol = kDnnTolerance;
  bool conditional = false;
  bool welfare = false;
  bool contracted = false;
};

// What a command prints: a JSON document or text, plus an exit code.
struct Outcome {
  Json json;
  std::string text;
  int code = kExitOk;
};

std::size_t MaxProfiles() {
  const char* env = std::getenv("XEQ_MAX_CELLS");
  if (env == nullptr || *env == '\0') return kDefaultMaxProfiles;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("XEQ_MAX_CELLS: expected a positive integer, got \"" + text + "\"");
  }
  try {
    const unsigned long long value = std::stoull(text);
    if (value == 0) throw InputError("XEQ_MAX_CELLS: must be positive");
    return static_cast<std::size_t>(value);
  } catch (const std::out_of_range&) {
    throw InputError("XEQ_MAX_CELLS: value out of range");
  }
}

Rational NonnegativeRational(const std::string& text, const std::string& flag) {
  Rational value;
  try {
    value = ParseRational(text);
  } catch (const InputError& e) {
    throw InputError(flag + ": " + e.what());
  }
  XEQ_REQUIRE(value >= 0, flag + ": must be nonnegative");
  return value;
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError(path + ": cannot open for writing");
  file << contents;
  if (!file) throw InputError(path + ": write failed");
}

Game LoadGame(const std::string& path) { return ParseGame(LoadJsonFile(path), path); }

GroupAction LoadGroup(const std::string& path, const Game& game) {
  return ParseGroup(LoadJsonFile(path), game, path);
}

std::string DistributionText(const JointDistribution& dist, const Game& game) {
  std::ostringstream out;
  for (std::size_t s = 0; s < dist.size(); ++s) {
    if (dist[s] != 0) out << "  (" << game.profile_label(s) << "): " << ToString(dist[s]) << "\n";
  }
  return out.str();
}

std::string ProfileText(const ProductProfile& profile, const Game& game) {
  std::ostringstream out;
  for (int i = 0; i < profile.num_players(); ++i) {
    out << "  player " << i + 1 << ":";
    for (int s = 0; s < game.num_strategies(i); ++s) {
      out << " " << game.label(i, s) << "=" << ToString(profile.strategy(i)[s]);
    }
    out << "\n";
  }
  return out.str();
}

Json RationalsToJson(std::span<const Rational> values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(RationalToJson(v));
  return out;
}

Outcome Info(const RunConfig& cfg) {
  const Game game = LoadGame(cfg.game_path);
  Outcome o;
  std::ostringstream text;
  o.json["players"] = game.num_players();
  o.json["strategies"] = game.shape().strategy_counts();
  o.json["profiles"] = game.num_profiles();
  o.json["zero_sum"] = IsZeroSum(game);
  text << "players: " << game.num_players() << "\n";
  for (int i = 0; i < game.num_players(); ++i) {
    text << "  player " << i + 1 << ":";
    for (const std::string& label : game.labels()[i]) text << " " << label;
    text << "\n";
  }
  text << "profiles: " << game.num_profiles() << "\n";
  text << "zero-sum: " << (IsZeroSum(game) ? "yes" : "no") << "\n";
  if (!cfg.group_path.empty()) {
    const GroupAction group = LoadGroup(cfg.group_path, game);
    const ActionValidation check = ValidateAction(game, group);
    const ActionClass cls = ClassifyAction(group);
    Json g;
    g["order"] = group.order();
    g["valid"] = check.valid;
    g["player_trivial"] = cls.player_trivial;
    g["player_transitive"] = cls.player_transitive;
    o.json["group"] = std::move(g);
    text << "group order: " << group.order() << "\n";
    text << "symmetry of the game: " << (check.valid ? "yes" : "no") << "\n";
    text << "player trivial: " << (cls.player_trivial ? "yes" : "no") << "\n";
    text << "player transitive: " << (cls.player_transitive ? "yes" : "no") << "\n";
  }
  o.text = text.str();
  return o;
}

Outcome ReportOutcome(const EquilibriumReport& report, const Game& game) {
  Outcome o;
  o.json = ReportToJson(report, game);
  o.text = ReportToText(report, game);
  o.code = report.verdict ? kExitOk : kExitFalse;
  return o;
}

Outcome VerifyNashCommand(const RunConfig& cfg) {
  const Game game = LoadGame(cfg.game_path);
  const ProductProfile profile =
      ParseProfile(LoadJsonFile(cfg.second_path), game.shape(), cfg.second_path);
  return ReportOutcome(VerifyNash(game, profile, NonnegativeRational(cfg.tolerance, "--tolerance")),
                       game);
}

Outcome VerifyCeCommand(const RunConfig& cfg) {
  const Game game = LoadGame(cfg.game_path);
  const JointDistribution dist = ParseDistribution(LoadJsonFile(cfg.second_path), game, cfg.second_path);
  const Rational tol = NonnegativeRational(cfg.tolerance, "--tolerance");
  return ReportOutcome(cfg.conditional ? VerifyCeConditional(game, dist, tol) : VerifyCe(game, dist, tol),
                       game);
}

Outcome SolveCeCommand(const RunConfig& cfg) {
  const Game game = LoadGame(cfg.game_path);
  std::optional<RationalVector> objective;
  if (cfg.welfare) {
    RationalVector w(game.num_profiles());
    for (std::size_t s = 0; s < w.size(); ++s) {
      for (int i = 0; i < game.num_players(); ++i) w[s] += game.utility(i, s);
    }
    objective = std::move(w);
  } else if (!cfg.objective_path.empty()) {
    const Json json = LoadJsonFile(cfg.objective_path);
    if (!json.is_object() || !json.contains("objective") || !json["objective"].is_array()) {
      throw InputError(cfg.objective_path + ": expected {\"objective\": [...]}");
    }
    RationalVector w;
    for (std::size_t s = 0; s < json["objective"].size(); ++s) {
      w.push_back(ParseRationalJson(json["objective"][s],
                                    cfg.objective_path + ".objective[" + std::to_string(s) + "]"));
    }
    XEQ_REQUIRE(w.size() == game.num_profiles(),
                cfg.objective_path + ".objective: expected " + std::to_string(game.num_profiles()) +
                    " entries, got " + std::to_string(w.size()));
    objective = std::move(w);
  }
  const JointDistribution dist = SolveCe(game, objective);
  const EquilibriumReport report = VerifyCe(game, dist);
  if (!cfg.out_path.empty()) WriteFile(cfg.out_path, DumpJson(DistributionToJson(dist)));
  Outcome o;
  o.json["distribution"] = DistributionToJson(dist);
  if (objective) o.json["objective_value"] = RationalToJson(Dot(*objective, dist.probabilities()));
  o.json["report"] = ReportToJson(report, game);
  o.text = "correlated equilibrium:\n" + DistributionText(dist, game);
  if (objective) o.text += "objective value: " + ToString(Dot(*objective, dist.probabilities())) + "\n";
  o.text += ReportToText(report, game);
  o.code = report.verdict ? kExitOk : kExitFalse;
  return o;
}

Outcome SolveXeCommand(const RunConfig& cfg) {
  const Game game = LoadGame(cfg.game_path);
  const GroupAction group = LoadGroup(cfg.group_path, game);
  SolveXeOptions options;
  options.epsilon = NonnegativeRational(cfg.epsilon, "--epsilon");
  options.max_iters = cfg.max_iters;
  const SolveXeResult result = SolveXe(game, group, options);
  const EquilibriumReport report = VerifyXeCertificate(game, group, result.certificate);
  const JointDistribution mixture = Mixture(result.certificate);
  const Json cert = CertificateToJson({result.certificate, std::nullopt, std::nullopt});
  if (!cfg.out_path.empty()) WriteFile(cfg.out_path, DumpJson(cert));

  Outcome o;
  o.json["converged"] = result.converged;
  o.json["stalled"] = result.stalled;
  o.json["iterations"] = result.iterations;
  o.json["residual"] = RationalToJson(result.residual);
  o.json["master_values"] = RationalsToJson(result.master_values);
  o.json["certificate"] = cert;
  o.json["mixture"] = DistributionToJson(mixture);
  o.json["report"] = ReportToJson(report, game);
  std::ostringstream text;
  text << "converged: " << (result.converged ? "yes" : "no") << "\n";
  if (result.stalled) text << "stalled: oracle repeated a column\n";
  text << "iterations: " << result.iterations << "\n";
  text << "residual: " << ToString(result.residual) << "\n";
  text << "columns: " << result.certificate.columns.size() << "\n";
  text << "mixture:\n" << DistributionText(mixture, game);
  text << ReportToText(report, game);
  o.text = text.str();
  o.code = result.converged && report.verdict ? kExitOk : kExitFalse;
  return o;
}

Outcome SolveXeMCommand(const RunConfig& cfg) {
  XEQ_REQUIRE(cfg.m >= 1, "--m: must be at least 1");
  XEQ_REQUIRE(cfg.starts >= 1, "--starts: must be at least 1");
  const Game game = LoadGame(cfg.game_path);
  const GroupAction group = LoadGroup(cfg.group_path, game);
  OrderMOptions options;
  if (!cfg.order_m_epsilon.empty()) {
    options.epsilon = NonnegativeRational(cfg.order_m_epsilon, "--epsilon");
  }
  options.max_iters = cfg.max_iters;
  options.oracle.starts = cfg.starts;
  options.oracle.seed = cfg.seed;
  options.max_profiles = MaxProfiles();
  const OrderMResult result = SolveOrderMXe(game, group, cfg.m, options);
  const Json cert = CertificateToJson({result.certificate, result.m, result.complete});
  if (!cfg.out_path.empty()) WriteFile(cfg.out_path, DumpJson(cert));

  // Reports refer to the power games; label witnesses there.
  const PowerGame contracted = ContractedPower(game, cfg.m, options.max_profiles);
  const PowerGame power = Power(game, cfg.m, options.max_profiles);
  Json modes = Json::array();
  for (OracleMode mode : result.oracle_modes) modes.push_back(ToString(mode));

  Outcome o;
  o.json["m"] = result.m;
  o.json["complete"] = result.complete;
  o.json["converged"] = result.converged;
  o.json["stalled"] = result.stalled;
  o.json["iterations"] = result.iterations;
  o.json["residual"] = RationalToJson(result.residual);
  o.json["master_values"] = RationalsToJson(result.master_values);
  o.json["oracle_modes"] = std::move(modes);
  o.json["certificate"] = cert;
  o.json["contracted_power_report"] = ReportToJson(result.contracted_report, contracted.game);
  o.json["power_report"] = ReportToJson(result.power_report, power.game);
  std::ostringstream text;
  text << "m: " << result.m << "\n";
  text << "complete: " << (result.complete ? "yes" : "no") << "\n";
  text << "converged: " << (result.converged ? "yes" : "no") << "\n";
  if (result.stalled) text << "stalled: no improving column found\n";
  text << "iterations: " << result.iterations << "\n";
  text << "residual: " << ToString(result.residual) << "\n";
  text << "columns: " << result.certificate.columns.size() << "\n";
  for (std::size_t k = 0; k < result.certificate.columns.size(); ++k) {
    text << "column " << k + 1 << " (weight " << ToString(result.certificate.weights[k]) << "):\n"
         << ProfileText(result.certificate.columns[k], game);
  }
  text << "contracted power check:\n" << ReportToText(result.contracted_report, contracted.game);
  text << "power check:\n" << ReportToText(result.power_report, power.game);
  o.text = text.str();
  o.code = result.complete ? kExitOk : kExitFalse;
  return o;
}

std::vector<std::string> DeviationLabels(const Game& game) {
  const DeviationLayout layout(game.shape());
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < layout.size(); ++c) {
    const DeviationIndex d = layout.deviation(c);
    labels.push_back(std::to_string(d.player + 1) + ":" + game.label(d.player, d.from) + "->" +
                     game.label(d.player, d.to));
  }
  return labels;
}

Outcome Gamma0Command(const RunConfig& cfg) {
  const Game base = LoadGame(cfg.game_path);
  Game target;
  if (cfg.of == "game") {
    target = base;
  } else {
    XEQ_REQUIRE(cfg.m >= 1, "--m: must be at least 1");
    const PowerKind kind = cfg.of == "power" ? PowerKind::kPower : PowerKind::kContracted;
    target = MakePower(base, cfg.m, kind, MaxProfiles()).game;
  }
  const std::size_t cells = target.num_profiles() * DeviationLayout(target.shape()).size();
  XEQ_REQUIRE(cells <= MaxProfiles(), "gamma0: matrix has " + std::to_string(cells) +
                                          " entries, above the cap of " + std::to_string(MaxProfiles()));
  std::vector<std::string> rows;
  for (std::size_t s = 0; s < target.num_profiles(); ++s) rows.push_back(target.profile_label(s));
  const Game matrix = BuildGamma0(target).ToGame(std::move(rows), DeviationLabels(target));
  const std::string doc = DumpJson(GameToJson(matrix));
  Outcome o;
  if (!cfg.out_path.empty()) {
    WriteFile(cfg.out_path, doc);
    o.json["rows"] = matrix.num_strategies(0);
    o.json["cols"] = matrix.num_strategies(1);
    o.text = "rows: " + std::to_string(matrix.num_strategies(0)) +
             "\ncols: " + std::to_string(matrix.num_strategies(1)) + "\n";
  } else {
    o.json = GameToJson(matrix);
    o.text = doc;
  }
  return o;
}

// Game to stdout unless --game-out is given; group only to --group-out.
Outcome EmitGame(const RunConfig& cfg, const Game& game, const std::optional<GroupAction>& group) {
  XEQ_REQUIRE(cfg.group_out.empty() || group, "--group-out: no group to write");
  if (group && !cfg.group_out.empty()) WriteFile(cfg.group_out, DumpJson(GroupToJson(*group, game)));
  Outcome o;
  if (cfg.game_out.empty()) {
    o.json = GameToJson(game);
    o.text = DumpJson(o.json);
    return o;
  }
  WriteFile(cfg.game_out, DumpJson(GameToJson(game)));
  o.json["players"] = game.num_players();
  o.json["strategies"] = game.shape().strategy_counts();
  o.json["profiles"] = game.num_profiles();
  if (group) o.json["group_order"] = group->order();
  std::ostringstream text;
  text << "players: " << game.num_players() << "\nprofiles: " << game.num_profiles() << "\n";
  if (group) text << "group order: " << group->order() << "\n";
  o.text = text.str();
  return o;
}

Outcome PowerCommand(const RunConfig& cfg) {
  XEQ_REQUIRE(cfg.m >= 1, "--m: must be at least 1");
  const Game base = LoadGame(cfg.game_path);
  const PowerGame power =
      MakePower(base, cfg.m, cfg.contracted ? PowerKind::kContracted : PowerKind::kPower, MaxProfiles());
  std::optional<GroupAction> group;
  if (!cfg.group_path.empty()) group = PowerAction(LoadGroup(cfg.group_path, base), power);
  return EmitGame(cfg, power.game, group);
}

Outcome SymmetrizeCommand(const RunConfig& cfg) {
  const Game base = LoadGame(cfg.game_path);
  std::optional<GroupAction> base_group;
  if (!cfg.group_path.empty()) base_group = LoadGroup(cfg.group_path, base);
  auto [game, group] = SymmetrizeGame(base, base_group, MaxProfiles());
  return EmitGame(cfg, game, group);
}

Outcome DnnCommand(const RunConfig& cfg) {
  XEQ_REQUIRE(cfg.tol >= 0, "--tol: must be nonnegative");
  const auto [n, entries] = ParseMatrix(LoadJsonFile(cfg.second_path), cfg.second_path);
  const DnnResult r = DnnMembership(n, entries, cfg.tol);
  Outcome o;
  o.json["verdict"] = ToString(r.verdict);
  o.json["dimension"] = r.dimension;
  o.json["nonnegative"] = r.nonnegative;
  o.json["positive_semidefinite"] = r.positive_semidefinite;
  o.json["float_min_eigenvalue"] = r.min_eigenvalue;
  o.json["float_near_singular"] = r.near_singular;
  std::ostringstream text;
  text << "verdict: " << ToString(r.verdict) << "\n";
  text << "dimension: " << r.dimension << "\n";
  text << "nonnegative: " << (r.nonnegative ? "yes" : "no") << "\n";
  text << "positive semidefinite (exact): " << (r.positive_semidefinite ? "yes" : "no") << "\n";
  text << "min eigenvalue (floating point): " << r.min_eigenvalue << "\n";
  if (r.near_singular) text << "note: smallest eigenvalue within " << cfg.tol << " of zero\n";
  o.text = text.str();
  o.code = r.verdict == DnnVerdict::kNonmember ? kExitFalse : kExitOk;
  return o;
}

Outcome ValidateGroupCommand(const RunConfig& cfg) {
  const Game game = LoadGame(cfg.game_path);
  const GroupAction group = LoadGroup(cfg.group_path, game);
  const ActionValidation check = ValidateAction(game, group);
  const ActionClass cls = ClassifyAction(group);
  Outcome o;
  o.json["valid"] = check.valid;
  o.json["order"] = group.order();
  o.json["player_trivial"] = cls.player_trivial;
  o.json["player_transitive"] = cls.player_transitive;
  std::ostringstream text;
  text << "valid: " << (check.valid ? "yes" : "no") << "\n";
  text << "order: " << group.order() << "\n";
  text << "player trivial: " << (cls.player_trivial ? "yes" : "no") << "\n";
  text << "player transitive: " << (cls.player_transitive ? "yes" : "no") << "\n";
  if (check.violation) {
    const ActionViolation& v = *check.violation;
    const GroupElement& g = group.element(v.element);
    const std::size_t image = g.act_on_profile_index(v.profile);
    const int image_player = g.image_player(v.player);
    Json w;
    w["element"] = v.element;
    w["player"] = v.player + 1;
    w["profile"] = game.profile_label(v.profile);
    w["image_player"] = image_player + 1;
    w["image_profile"] = game.profile_label(image);
    w["utility"] = RationalToJson(game.utility(v.player, v.profile));
    w["image_utility"] = RationalToJson(game.utility(image_player, image));
    o.json["violation"] = std::move(w);
    text << "violation: u_" << v.player + 1 << "(" << game.profile_label(v.profile)
         << ") = " << ToString(game.utility(v.player, v.profile)) << " but u_" << image_player + 1
         << "(" << game.profile_label(image) << ") = " << ToString(game.utility(image_player, image))
         << "\n";
  }
  o.text = text.str();
  o.code = check.valid ? kExitOk : kExitFalse;
  return o;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact correlated and exchangeable equilibria of finite games", "xeq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto game_arg = [&](CLI::App* sub) {
    sub->add_option("game", cfg.game_path, "Game JSON file")->required()->check(CLI::ExistingFile);
  };
  auto group_arg = [&](CLI::App* sub) {
    sub->add_option("group", cfg.group_path, "Group JSON file")->required()->check(CLI::ExistingFile);
  };
  auto out_opt = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--out", cfg.out_path, "Write the " + what + " JSON here");
  };

  CLI::App* info = app.add_subcommand("info", "Summarize a game and optionally a group");
  game_arg(info);
  info->add_option("--group", cfg.group_path, "Group JSON file")->check(CLI::ExistingFile);

  CLI::App* vnash = app.add_subcommand("verify-nash", "Check a mixed profile is a Nash equilibrium");
  game_arg(vnash);
  vnash->add_option("profile", cfg.second_path, "Profile JSON file")->required()->check(CLI::ExistingFile);
  vnash->add_option("--tolerance", cfg.tolerance, "Allowed gain, as a rational")->capture_default_str();

  CLI::App* vce = app.add_subcommand("verify-ce", "Check a distribution is a correlated equilibrium");
  game_arg(vce);
  vce->add_option("distribution", cfg.second_path, "Distribution JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  vce->add_flag("--conditional", cfg.conditional, "Use conditional best responses");
  vce->add_option("--tolerance", cfg.tolerance, "Allowed gain, as a rational")->capture_default_str();

  CLI::App* sce = app.add_subcommand("solve-ce", "Find a correlated equilibrium by linear programming");
  game_arg(sce);
  auto* welfare = sce->add_flag("--welfare", cfg.welfare, "Maximize the sum of utilities");
  sce->add_option("--objective", cfg.objective_path, "JSON {\"objective\": [...]} over profiles")
      ->check(CLI::ExistingFile)
      ->excludes(welfare);
  out_opt(sce, "distribution");

  CLI::App* sxe = app.add_subcommand("solve-xe", "Find an exchangeable equilibrium certificate");
  game_arg(sxe);
  group_arg(sxe);
  sxe->add_option("--epsilon", cfg.epsilon, "Stopping tolerance, as a rational")->capture_default_str();
  sxe->add_option("--max-iters", cfg.max_iters, "Column generation budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  out_opt(sxe, "certificate");

  CLI::App* sxem = app.add_subcommand("solve-xe-m", "Find an order-m exchangeable equilibrium certificate");
  game_arg(sxem);
  group_arg(sxem);
  sxem->add_option("--m", cfg.m, "Order")->required()->check(CLI::PositiveNumber);
  sxem->add_option("--epsilon", cfg.order_m_epsilon, "Stopping tolerance, as a rational (default 1/1000000000)");
  sxem->add_option("--max-iters", cfg.max_iters, "Column generation budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sxem->add_option("--starts", cfg.starts, "Oracle starting points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sxem->add_option("--seed", cfg.seed, "Oracle seed")->capture_default_str();
  out_opt(sxem, "certificate");

  CLI::App* g0 = app.add_subcommand("gamma0", "Emit the auxiliary zero-sum game as a two-player game");
  game_arg(g0);
  g0->add_option("--of", cfg.of, "Which game to build it for")
      ->check(CLI::IsMember({"game", "power", "contracted-power"}))
      ->capture_default_str();
  g0->add_option("--m", cfg.m, "Order for --of power|contracted-power")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  out_opt(g0, "matrix game");

  CLI::App* pw = app.add_subcommand("power", "Materialize the m-th power of a game");
  game_arg(pw);
  pw->add_option("--m", cfg.m, "Number of copies")->required()->check(CLI::PositiveNumber);
  pw->add_flag("--contracted", cfg.contracted, "One player group plays every copy");
  pw->add_option("--group", cfg.group_path, "Base group to lift")->check(CLI::ExistingFile);
  pw->add_option("--group-out", cfg.group_out, "Write the lifted group JSON here");
  pw->add_option("--game-out", cfg.game_out, "Write the game JSON here instead of stdout");

  CLI::App* sym = app.add_subcommand("symmetrize", "Materialize the symmetrized game");
  game_arg(sym);
  sym->add_option("--group", cfg.group_path, "Base group acting on proposals")->check(CLI::ExistingFile);
  sym->add_option("--group-out", cfg.group_out, "Write the symmetry group JSON here");
  sym->add_option("--game-out", cfg.game_out, "Write the game JSON here instead of stdout");

  CLI::App* dnn = app.add_subcommand("dnn-check", "Doubly nonnegative test of a symmetric matrix");
  dnn->add_option("matrix", cfg.second_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);
  dnn->add_option("--tol", cfg.tol, "Near-singular threshold for the eigenvalue diagnostic")
      ->capture_default_str();

  CLI::App* vg = app.add_subcommand("validate-group", "Check a group acts by symmetries of a game");
  game_arg(vg);
  group_arg(vg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    Outcome o;
    if (*info) o = Info(cfg);
    else if (*vnash) o = VerifyNashCommand(cfg);
    else if (*vce) o = VerifyCeCommand(cfg);
    else if (*sce) o = SolveCeCommand(cfg);
    else if (*sxe) o = SolveXeCommand(cfg);
    else if (*sxem) o = SolveXeMCommand(cfg);
    else if (*g0) o = Gamma0Command(cfg);
    else if (*pw) o = PowerCommand(cfg);
    else if (*sym) o = SymmetrizeCommand(cfg);
    else if (*dnn) o = DnnCommand(cfg);
    else o = ValidateGroupCommand(cfg);
    out << (cfg.format == "json" ? DumpJson(o.json) : o.text);
    return o.code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace xeq
