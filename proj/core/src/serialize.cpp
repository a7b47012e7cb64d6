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

#include "mubgame/serialize.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "mubgame/errors.hpp"

namespace mubgame {

using nlohmann::json;

namespace {

json encode(const ComplexMatrix& m) {
  json out = json::array();
  for (const auto& z : m.entries()) out.push_back({z.real(), z.imag()});
  return out;
}

ComplexMatrix decode(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n * n) throw ContractViolation("matrix JSON: expected " + std::to_string(n * n) + " entries");
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw ContractViolation("matrix JSON: entries must be [re, im] pairs");
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return ComplexMatrix(n, n, std::move(entries));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ContractViolation(std::string("invalid JSON: ") + e.what());
  }
}

json encode(const Certificate& c) {
  return {{"hermitian_defect", c.hermitian_defect}, {"min_eig_gap", c.min_eig_gap}};
}

}  // namespace

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string to_json(const MubSet& set, int indent) {
  json j;
  j["dim"] = set.dim().value();
  j["family"] = std::string(to_string(set.provenance().family));
  j["excluded"] = set.provenance().excluded ? json(*set.provenance().excluded) : json(nullptr);
  json rel = json::array();
  for (const auto& p : set.provenance().relabellings) rel.push_back(std::vector<std::size_t>(p.mapping().begin(), p.mapping().end()));
  j["relabellings"] = rel;
  json us = json::array();
  for (const auto& u : set.unitaries()) us.push_back(encode(u));
  j["unitaries"] = us;
  return j.dump(indent);
}

MubSet mub_set_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    const PrimeDim d(j.at("dim").get<std::int64_t>());
    Provenance prov;
    prov.family = family_from_string(j.at("family").get<std::string>());
    if (!j.at("excluded").is_null()) prov.excluded = j.at("excluded").get<std::size_t>();
    for (const auto& p : j.at("relabellings")) prov.relabellings.emplace_back(p.get<std::vector<std::size_t>>());
    std::vector<ComplexMatrix> us;
    for (const auto& u : j.at("unitaries")) us.push_back(decode(u, d.size()));
    return MubSet(d, std::move(us), std::move(prov));
  } catch (const json::exception& e) {
    throw ContractViolation(std::string("MubSet JSON: ") + e.what());
  }
}

std::string to_json(const Strategy& strategy, int indent) {
  json j;
  j["probe"] = encode(strategy.probe);
  json povm = json::array();
  for (const auto& m : strategy.povm) povm.push_back(encode(m));
  j["povm"] = povm;
  return j.dump(indent);
}

Strategy strategy_from_json(std::string_view text) {
  const json j = parse(text);
  try {
    const auto& probe = j.at("probe");
    std::size_t n = 0;
    while (n * n < probe.size()) ++n;
    Strategy s;
    s.probe = decode(probe, n);
    for (const auto& m : j.at("povm")) s.povm.push_back(decode(m, n));
    return s;
  } catch (const json::exception& e) {
    throw ContractViolation(std::string("Strategy JSON: ") + e.what());
  }
}

std::string to_json(const SeesawResult& result, int indent) {
  json j;
  j["best_value"] = result.best_value;
  j["best_restart"] = result.best_restart;
  j["best_strategy"] = json::parse(to_json(result.best_strategy));
  j["certificate"] = {{"is_valid_povm", result.certificate.is_valid_povm},
                      {"discrimination_gap", result.certificate.discrimination_gap}};
  json restarts = json::array();
  for (const auto& r : result.per_restart) {
    restarts.push_back({{"seed", r.seed},
                        {"rounds", r.rounds},
                        {"final_value", r.final_value},
                        {"monotone_ok", r.monotone_ok},
                        {"hit_round_limit", r.hit_round_limit},
                        {"certificate", encode(r.certificate)},
                        {"trace", r.trace}});
  }
  j["per_restart"] = restarts;
  return j.dump(indent);
}

std::string to_json(const ScanReport& report, int indent) {
  json j;
  j["dim"] = report.dim;
  j["coin"] = std::string(to_string(report.coin));
  j["mode"] = report.mode.to_string();
  j["seed"] = report.seed;
  j["total_configs_evaluated"] = report.total_configs_evaluated;
  j["min_value"] = report.min_value;
  j["max_value"] = report.max_value;
  j["min_config"] = report.min_config;
  j["max_config"] = report.max_config;
  json rows = json::array();
  for (const auto& e : report.per_config) {
    rows.push_back({{"excluded", e.excluded},
                    {"relabellings", e.relabelling_ids},
                    {"value", e.value},
                    {"seed", e.seed},
                    {"restarts", e.restarts}});
  }
  j["per_config"] = rows;
  return j.dump(indent);
}

std::string scan_report_to_csv(const ScanReport& report) {
  std::ostringstream os;
  os << "excluded,relabellings,value,seed,restarts\n";
  for (const auto& e : report.per_config) {
    os << e.excluded << ',';
    for (std::size_t k = 0; k < e.relabelling_ids.size(); ++k) os << (k ? ";" : "") << e.relabelling_ids[k];
    os << ',' << format_double(e.value) << ',' << e.seed << ',' << e.restarts << '\n';
  }
  return os.str();
}

}  // namespace mubgame
