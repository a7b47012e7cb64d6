// Copyright 2026 The mubgame Authors
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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mubgame/commands.hpp"
#include "mubgame/errors.hpp"
#include "mubgame/game.hpp"
#include "mubgame/mub.hpp"
#include "mubgame/optimize.hpp"
#include "mubgame/search.hpp"
#include "mubgame/serialize.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Options {
  std::int64_t dim = 3;
  std::vector<std::int64_t> dims{2, 3, 5, 7};
  std::uint64_t seed = 0;
  double eps = 1e-6;
  std::size_t restarts = 50;
  std::string mode;
  std::string out;
  std::string format = "json";
  std::string family = "wf";
  std::size_t excluded = 0;
  std::string coin = "quantum";
  std::uint64_t budget = 0;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw mubgame::ContractViolation("cannot open '" + opt.out + "' for writing");
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

mubgame::MubSet build_set(const Options& opt) {
  const mubgame::PrimeDim d(opt.dim);
  const mubgame::Family family = mubgame::family_from_string(opt.family);
  switch (family) {
    case mubgame::Family::dpp:
      if (opt.excluded != 0) throw mubgame::ContractViolation("--family dpp takes no --excluded");
      return mubgame::dpp_set(d);
    case mubgame::Family::wf:
    case mubgame::Family::wf_plus_computational:
    case mubgame::Family::qubit:
      return mubgame::standard_set(d, opt.excluded, mubgame::identity_relabellings(d));
    case mubgame::Family::custom:
      break;
  }
  throw mubgame::ContractViolation("--family custom is not constructible from the command line");
}

mubgame::SeesawConfig seesaw_config(const Options& opt) {
  mubgame::SeesawConfig cfg;
  cfg.epsilon = opt.eps;
  cfg.restarts = opt.restarts;
  cfg.master_seed = opt.seed;
  cfg.validate();
  return cfg;
}

mubgame::ScanOptions scan_options(const Options& opt) {
  mubgame::ScanOptions so;
  if (opt.budget != 0) so.budget.max_quantum_configs = opt.budget;
  return so;
}

int run_verify(const Options& opt) {
  const mubgame::MubSet set = build_set(opt);
  const mubgame::MubReport rep = mubgame::verify_mub_set(set, 1e-9);
  nlohmann::json j = {{"dim", opt.dim},
                      {"family", std::string(mubgame::to_string(set.provenance().family))},
                      {"ok", rep.ok},
                      {"worst_deviation", rep.worst_deviation}};
  if (rep.offending_pair) {
    j["offending_pair"] = {{"a", rep.offending_pair->a},
                           {"b", rep.offending_pair->b},
                           {"i", rep.offending_pair->i},
                           {"j", rep.offending_pair->j}};
  }
  emit(opt, j.dump(2));
  return rep.ok ? kOk : kFailure;
}

int run_certify(const Options& opt) {
  const mubgame::CertifyReport rep = mubgame::cmd_certify(opt.dim);
  emit(opt, mubgame::to_json(rep, 2));
  return rep.ok ? kOk : kFailure;
}

int run_classical(const Options& opt) {
  const mubgame::MubSet set = build_set(opt);
  mubgame::SearchBudget budget;
  if (opt.budget != 0) budget.max_classical_maps = opt.budget;
  const mubgame::ClassicalOptimum best = mubgame::classical_exhaustive(set, budget);
  const nlohmann::json j = {{"dim", opt.dim},
                            {"value", best.value},
                            {"best_map", best.best_map.assignment},
                            {"maps_evaluated", best.maps_evaluated},
                            {"upper_bound", mubgame::classical_upper_bound(set.dim())}};
  emit(opt, j.dump(2));
  return kOk;
}

int run_seesaw(const Options& opt) {
  const mubgame::MubSet set = build_set(opt);
  const mubgame::SeesawResult res =
      mubgame::seesaw(set, mubgame::coin_from_string(opt.coin), seesaw_config(opt));
  emit(opt, mubgame::to_json(res, 2));
  return kOk;
}

int run_scan(const Options& opt) {
  const mubgame::PrimeDim d(opt.dim);
  const mubgame::ScanOptions so = scan_options(opt);
  const mubgame::ScanMode mode =
      opt.mode.empty() ? mubgame::auto_scan_mode(d, so) : mubgame::ScanMode::parse(opt.mode);
  const mubgame::ScanReport rep =
      mubgame::scan(d, mubgame::coin_from_string(opt.coin), mode, seesaw_config(opt), so);
  emit(opt, opt.format == "csv" ? mubgame::scan_report_to_csv(rep) : mubgame::to_json(rep, 2));
  return kOk;
}

int run_bounds(const Options& opt) {
  mubgame::BoundsConfig cfg;
  cfg.seesaw = seesaw_config(opt);
  cfg.scan = scan_options(opt);
  if (!opt.mode.empty()) cfg.mode = mubgame::ScanMode::parse(opt.mode);
  const auto rows = mubgame::cmd_bounds(opt.dims, cfg);
  emit(opt, opt.format == "csv" ? mubgame::bounds_to_csv(rows) : mubgame::bounds_to_json(rows, 2));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds and strategies for the MUB guessing game"};
  app.require_subcommand(1);
  Options opt;

  auto add_dim = [&](CLI::App* sub) {
    sub->add_option("--dim,-d", opt.dim, "Prime dimension")->capture_default_str();
  };
  auto add_set = [&](CLI::App* sub) {
    sub->add_option("--family", opt.family, "wf, dpp, wf-plus-computational or qubit")->capture_default_str();
    sub->add_option("--excluded", opt.excluded, "Index of the pool basis left out (0 = computational)")
        ->capture_default_str();
  };
  auto add_seesaw = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Master seed")->capture_default_str();
    sub->add_option("--eps", opt.eps, "See-saw stopping tolerance")->capture_default_str();
    sub->add_option("--restarts", opt.restarts, "Random restarts")->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--out,-o", opt.out, "Output file (default stdout)");
    if (with_format) {
      sub->add_option("--format", opt.format, "csv or json")
          ->check(CLI::IsMember({"csv", "json"}))
          ->capture_default_str();
    }
  };
  auto add_coin = [&](CLI::App* sub) {
    sub->add_option("--coin", opt.coin, "quantum or classical")
        ->check(CLI::IsMember({"quantum", "classical"}))
        ->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "Check the mutual unbiasedness of a basis set");
  add_dim(verify);
  add_set(verify);
  add_out(verify, false);

  auto* certify = app.add_subcommand("certify", "Certify the perfect strategy on the relabelled set");
  add_dim(certify);
  add_out(certify, false);

  auto* classical = app.add_subcommand("classical", "Exhaustive classical-coin optimum");
  add_dim(classical);
  add_set(classical);
  classical->add_option("--budget", opt.budget, "Maximum number of maps (0 = default)");
  add_out(classical, false);

  auto* seesaw = app.add_subcommand("seesaw", "See-saw lower bound for one basis set");
  add_dim(seesaw);
  add_set(seesaw);
  add_seesaw(seesaw);
  add_coin(seesaw);
  add_out(seesaw, false);

  auto* scan = app.add_subcommand("scan", "Scan subsets and relabellings");
  add_dim(scan);
  add_seesaw(scan);
  add_coin(scan);
  scan->add_option("--mode", opt.mode, "exhaustive, cyclic or random(N); default picks by budget");
  scan->add_option("--budget", opt.budget, "Maximum see-saw configurations (0 = default)");
  add_out(scan, true);

  auto* bounds = app.add_subcommand("bounds", "Emit the QUB/QLB/CLB/CUB table");
  bounds->add_option("--dims", opt.dims, "Prime dimensions")->delimiter(',')->capture_default_str();
  add_seesaw(bounds);
  bounds->add_option("--mode", opt.mode, "Scan mode for every dimension; default picks by budget");
  bounds->add_option("--budget", opt.budget, "Maximum see-saw configurations per dimension (0 = default)");
  add_out(bounds, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(opt);
    if (*certify) return run_certify(opt);
    if (*classical) return run_classical(opt);
    if (*seesaw) return run_seesaw(opt);
    if (*scan) return run_scan(opt);
    if (*bounds) return run_bounds(opt);
  } catch (const mubgame::BudgetExceeded& e) {
    std::cerr << "mubgame: " << e.what() << '\n';
    return kBudget;
  } catch (const mubgame::ContractViolation& e) {
    std::cerr << "mubgame: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "mubgame: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
