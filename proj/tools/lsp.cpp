// Command-line front end for the adversarial last-success game solvers.
// Every subcommand prints a machine-readable report (JSON by default, CSV on
// request). Exit codes: 0 success, 2 usage error, 3 validation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lastsuccess/lastsuccess.hpp"
#include "lastsuccess/serialize.hpp"

namespace {

using nlohmann::json;
using namespace lastsuccess;

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

std::vector<double> parse_p_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      out.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse probability '" + token + "'");
    }
  }
  return out;
}

json load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  json doc;
  in >> doc;
  return doc;
}

// Accepts {"p": [...]} or {"equal_p": {"p": x, "n": k}}.
GameSpec game_spec_from_json(const json& doc) {
  if (doc.contains("p")) {
    return validate_spec(doc.at("p").get<std::vector<double>>());
  }
  if (doc.contains("equal_p")) {
    const auto& eq = doc.at("equal_p");
    const double p = eq.at("p").get<double>();
    const std::size_t n = eq.at("n").get<std::size_t>();
    if (n < 1) throw std::invalid_argument("equal_p.n must be >= 1");
    return validate_spec(std::vector<double>(n, p));
  }
  throw std::invalid_argument("spec file must contain \"p\" or \"equal_p\"");
}

GameSpec resolve_game_spec(const std::string& p_list, const std::string& file) {
  if (!p_list.empty() && !file.empty())
    throw std::invalid_argument("give exactly one of --p and --spec-file");
  if (!p_list.empty()) return validate_spec(parse_p_list(p_list));
  if (!file.empty()) return game_spec_from_json(load_spec_file(file));
  throw std::invalid_argument("a spec is required: --p or --spec-file");
}

markov::MarkovSpec markov_spec_from_file(const std::string& file) {
  if (file.empty()) throw std::invalid_argument("--spec-file is required");
  const json doc = load_spec_file(file);
  if (!doc.contains("markov"))
    throw std::invalid_argument("spec file must contain \"markov\"");
  const auto& m = doc.at("markov");
  return markov::MarkovSpec(m.at("p1").get<double>(),
                            m.at("alpha").get<std::vector<double>>(),
                            m.at("beta").get<std::vector<double>>());
}

// Flat JSON object as a two-row CSV; arrays are joined with ';' so the comma
// stays a column separator.
void print_csv(const json& obj) {
  std::string header, row;
  bool first = true;
  for (const auto& [key, value] : obj.items()) {
    if (!first) {
      header += ',';
      row += ',';
    }
    first = false;
    header += key;
    if (value.is_array()) {
      std::string cell;
      for (const auto& v : value) {
        if (!cell.empty()) cell += ';';
        cell += v.dump();
      }
      row += cell;
    } else if (value.is_string()) {
      row += value.get<std::string>();
    } else {
      row += value.dump();
    }
  }
  std::cout << header << "\n" << row << "\n";
}

void emit(const json& obj, const std::string& format) {
  if (format == "csv") {
    print_csv(obj);
  } else {
    std::cout << obj.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adversarial last-success game solver"};
  app.require_subcommand(1);

  std::string p_list, spec_file, format = "json", quantity;
  std::uint64_t samples = 100000, seed = 0;
  std::size_t n = 0;
  int m = 2;
  bool use_limit = false;
  double grid_step = 0.25;
  std::uint64_t random_trials = 0;

  const auto add_spec_opts = [&](CLI::App* cmd) {
    cmd->add_option("--p", p_list, "comma-separated success probabilities");
    cmd->add_option("--spec-file", spec_file, "JSON spec file");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* value_cmd = app.add_subcommand("value", "solve the game exactly");
  add_spec_opts(value_cmd);
  add_format(value_cmd);

  auto* odds_cmd = app.add_subcommand("odds", "classical last-success odds solver");
  add_spec_opts(odds_cmd);
  add_format(odds_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force minimax check (n <= 8)");
  add_spec_opts(oracle_cmd);
  add_format(oracle_cmd);

  auto* variant_cmd = app.add_subcommand("variant", "variant games");
  variant_cmd->require_subcommand(1);
  auto* repeat_cmd = variant_cmd->add_subcommand("repeat", "repeat-on-all-zeros value");
  repeat_cmd->add_option("--n", n, "reciprocal case p_i = 1/n");
  add_spec_opts(repeat_cmd);
  add_format(repeat_cmd);
  auto* multi_cmd = variant_cmd->add_subcommand("multiplayer", "m-player loss distribution");
  multi_cmd->add_option("--m", m, "player count")->required();
  multi_cmd->add_option("--n", n, "reciprocal case p_i = 1/n");
  multi_cmd->add_flag("--limit", use_limit, "Poisson limit as n grows");
  add_spec_opts(multi_cmd);
  add_format(multi_cmd);
  auto* random_cmd = variant_cmd->add_subcommand("random-params", "uniform random parameters");
  random_cmd->add_option("--n", n, "number of trials")->required();
  add_format(random_cmd);

  auto* markov_cmd = app.add_subcommand("markov", "Markov-dependent game");
  markov_cmd->require_subcommand(1);
  auto* check_cmd = markov_cmd->add_subcommand("check", "test the pass conjecture on one spec");
  check_cmd->add_option("--spec-file", spec_file, "JSON spec file with \"markov\"")->required();
  add_format(check_cmd);
  auto* search_cmd = markov_cmd->add_subcommand("search", "grid + random counterexample search");
  search_cmd->add_option("--n", n, "maximum chain length (<= 6)")->required();
  search_cmd->add_option("--grid-step", grid_step, "grid spacing in (0,1)");
  search_cmd->add_option("--random-trials", random_trials, "seeded random specs");
  search_cmd->add_option("--seed", seed, "random seed");
  add_format(search_cmd);

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate");
  add_spec_opts(sim_cmd);
  sim_cmd->add_option("--samples", samples, "sample count");
  sim_cmd->add_option("--seed", seed, "random seed")->required();
  sim_cmd->add_option("--m", m, "simulate the m-player game instead");
  bool sim_multi = false;
  sim_cmd->add_flag("--multiplayer", sim_multi, "token-passing m-player simulation");
  add_format(sim_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV rows of a quantity over n");
  sweep_cmd->add_option("quantity", quantity, "reciprocal-n | repeat | random-params")
      ->required()
      ->check(CLI::IsMember({"reciprocal-n", "repeat", "random-params"}));
  sweep_cmd->add_option("--n", n, "largest n")->required();
  add_format(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*value_cmd) {
      const GameSpec spec = resolve_game_spec(p_list, spec_file);
      const engine::ValueTable table = engine::solve_dp(spec);
      json out{{"spec", spec},
               {"n", spec.size()},
               {"v1", table.v1()},
               {"values", table.values},
               {"threshold", engine::threshold_index(spec).threshold},
               {"parity", engine::win_probability(spec)}};
      emit(out, format);
    } else if (*odds_cmd) {
      const GameSpec spec = resolve_game_spec(p_list, spec_file);
      const engine::LspResult result = engine::lsp_odds_value(spec);
      emit(json{{"spec", spec}, {"s", result.stop_index}, {"value", result.win_probability}},
           format);
    } else if (*oracle_cmd) {
      const GameSpec spec = resolve_game_spec(p_list, spec_file);
      const oracle::MinimaxResult mm = oracle::minimax_value(spec);
      const double v1 = engine::solve_dp(spec).v1();
      emit(json{{"spec", spec},
                {"minimax", mm.value},
                {"dp_v1", v1},
                {"agree", std::fabs(mm.value - v1) <= 1e-10},
                {"pass_a", mm.pass_a.stages()},
                {"pass_b", mm.pass_b.stages()}},
           format);
    } else if (*repeat_cmd) {
      if (n > 0) {
        emit(json{{"n", n},
                  {"value", variants::repeat_value_reciprocal(n)},
                  {"limit", variants::repeat_value_limit()}},
             format);
      } else {
        const GameSpec spec = resolve_game_spec(p_list, spec_file);
        emit(json{{"spec", spec}, {"value", variants::repeat_value(spec)}}, format);
      }
    } else if (*multi_cmd) {
      if (use_limit) {
        emit(json{{"m", m}, {"loss", variants::poisson_mod_limit(m).per_player}}, format);
      } else {
        const GameSpec spec = (n > 0)
            ? GameSpec(std::vector<double>(n, 1.0 / static_cast<double>(n)))
            : resolve_game_spec(p_list, spec_file);
        emit(json{{"m", m},
                  {"n", spec.size()},
                  {"loss", variants::multiplayer_loss_distribution(spec, m).per_player}},
             format);
      }
    } else if (*random_cmd) {
      emit(json{{"n", n}, {"expected", variants::rp_expected_value(n)}}, format);
    } else if (*check_cmd) {
      const markov::MarkovSpec spec = markov_spec_from_file(spec_file);
      emit(json(markov::conjecture_check(spec)), format);
    } else if (*search_cmd) {
      const auto violations =
          markov::counterexample_search(n, grid_step, random_trials, seed);
      emit(json{{"n_max", n},
                {"grid_step", grid_step},
                {"random_trials", random_trials},
                {"seed", seed},
                {"violations", violations}},
           format);
    } else if (*sim_cmd) {
      const GameSpec spec = resolve_game_spec(p_list, spec_file);
      if (sim_multi) {
        const auto reports = simulate::simulate_multiplayer(spec, m, samples, seed);
        emit(json{{"spec", spec}, {"m", m}, {"loss", reports}}, format);
      } else {
        const PassSet threshold = engine::threshold_pass_set(spec);
        const simulate::SimReport report =
            simulate::simulate(spec, threshold, threshold, samples, seed);
        emit(json{{"spec", spec}, {"report", report}}, format);
      }
    } else if (*sweep_cmd) {
      std::cout << "n,value\n";
      for (std::size_t i = 2; i <= n; ++i) {
        double value;
        if (quantity == "reciprocal-n") {
          value = engine::reciprocal_n_value(i);
        } else if (quantity == "repeat") {
          value = variants::repeat_value_reciprocal(i);
        } else {
          value = variants::rp_expected_value(i);
        }
        std::cout << i << "," << json(value).dump() << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
