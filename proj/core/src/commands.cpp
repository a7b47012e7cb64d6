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

#include "mubgame/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "mubgame/errors.hpp"
#include "mubgame/game.hpp"
#include "mubgame/serialize.hpp"

namespace mubgame {

using nlohmann::json;

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::qub: return "QUB";
    case BoundKind::qlb: return "QLB";
    case BoundKind::clb: return "CLB";
    case BoundKind::cub: return "CUB";
  }
  return "QUB";
}

BoundKind bound_kind_from_string(std::string_view name) {
  for (BoundKind k : {BoundKind::qub, BoundKind::qlb, BoundKind::clb, BoundKind::cub}) {
    if (to_string(k) == name) return k;
  }
  throw ContractViolation("unknown bound kind '" + std::string(name) + "'");
}

ScanMode auto_scan_mode(PrimeDim d, const ScanOptions& options) {
  const std::uint64_t subsets = d.size() + 1;
  const std::uint64_t per_subset = options.budget.max_quantum_configs / subsets;
  auto fits = [&](ScanMode mode) {
    try {
      const RelabellingSpace space(d, mode, 0, options.budget);
      return space.size() <= per_subset;
    } catch (const BudgetExceeded&) {
      return false;
    }
  };
  if (fits(ScanMode::exhaustive())) return ScanMode::exhaustive();
  if (fits(ScanMode::cyclic())) return ScanMode::cyclic();
  const std::uint64_t room = per_subset > (options.identity_anchor ? 1u : 0u)
                                 ? per_subset - (options.identity_anchor ? 1u : 0u)
                                 : 1u;
  return ScanMode::random(std::min<std::uint64_t>(room, 10000));
}

std::vector<BoundRow> cmd_bounds(std::span<const std::int64_t> dims, const BoundsConfig& config) {
  std::vector<PrimeDim> primes;
  for (const auto d : dims) primes.emplace_back(d);

  std::vector<BoundRow> rows;
  for (const PrimeDim d : primes) {
    const std::int64_t dv = d.value();
    rows.push_back({dv, BoundKind::qub, 1.0, "closed-form", std::nullopt, std::nullopt});
    rows.push_back({dv, BoundKind::cub, classical_upper_bound(d), "closed-form", std::nullopt, std::nullopt});

    const MubSet wf = standard_set(d, 0, identity_relabellings(d));
    try {
      const ClassicalOptimum opt = classical_exhaustive(wf, config.scan.budget, config.scan.threads);
      rows.push_back({dv, BoundKind::clb, opt.value, "exhaustive", std::nullopt, opt.maps_evaluated});
    } catch (const BudgetExceeded&) {
      const SeesawResult res = seesaw(wf, CoinKind::classical, config.seesaw);
      rows.push_back({dv, BoundKind::clb, res.best_value, "seesaw", config.seesaw.master_seed, config.seesaw.restarts});
    }

    const ScanMode mode = config.mode.value_or(auto_scan_mode(d, config.scan));
    const ScanReport report = scan(d, CoinKind::quantum, mode, config.seesaw, config.scan);
    rows.push_back({dv, BoundKind::qlb, report.min_value, "scan:" + mode.to_string(), config.seesaw.master_seed,
                    report.total_configs_evaluated});
  }
  return rows;
}

std::string bounds_to_csv(std::span<const BoundRow> rows) {
  std::ostringstream os;
  os << "dim,bound,value,method,seed,configs\n";
  for (const auto& r : rows) {
    os << r.dim << ',' << to_string(r.bound) << ',' << format_double(r.value) << ',' << r.method << ',';
    if (r.seed) os << *r.seed;
    os << ',';
    if (r.configs) os << *r.configs;
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::optional<std::uint64_t> optional_u64(const std::string& field) {
  if (field.empty()) return std::nullopt;
  return std::stoull(field);
}

}  // namespace

std::vector<BoundRow> bounds_from_csv(std::string_view text) {
  std::vector<BoundRow> rows;
  std::size_t start = 0;
  bool header = true;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != "dim,bound,value,method,seed,configs") throw ContractViolation("bounds CSV: unexpected header");
      header = false;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 6) throw ContractViolation("bounds CSV: expected 6 fields in '" + std::string(line) + "'");
    try {
      rows.push_back({std::stoll(f[0]), bound_kind_from_string(f[1]), std::stod(f[2]), f[3], optional_u64(f[4]),
                      optional_u64(f[5])});
    } catch (const std::logic_error& e) {
      throw ContractViolation("bounds CSV: bad field in '" + std::string(line) + "': " + e.what());
    }
  }
  return rows;
}

std::string bounds_to_json(std::span<const BoundRow> rows, int indent) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"dim", r.dim},
                   {"bound", std::string(to_string(r.bound))},
                   {"value", r.value},
                   {"method", r.method},
                   {"seed", r.seed ? json(*r.seed) : json(nullptr)},
                   {"configs", r.configs ? json(*r.configs) : json(nullptr)}});
  }
  return out.dump(indent);
}

std::vector<BoundRow> bounds_from_json(std::string_view text) {
  std::vector<BoundRow> rows;
  try {
    for (const auto& r : json::parse(text)) {
      BoundRow row;
      row.dim = r.at("dim").get<std::int64_t>();
      row.bound = bound_kind_from_string(r.at("bound").get<std::string>());
      row.value = r.at("value").get<double>();
      row.method = r.at("method").get<std::string>();
      if (!r.at("seed").is_null()) row.seed = r.at("seed").get<std::uint64_t>();
      if (!r.at("configs").is_null()) row.configs = r.at("configs").get<std::uint64_t>();
      rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw ContractViolation(std::string("bounds JSON: ") + e.what());
  }
  return rows;
}

CertifyReport cmd_certify(std::int64_t dim) {
  const PrimeDim d(dim);
  if (!d.is_odd()) {
    throw ContractViolation(
        "certify: d = 2 has no closed-form perfect strategy here; run `mubgame seesaw --dim 2` instead");
  }
  constexpr double kTol = 1e-9;
  CertifyReport rep;
  rep.dim = dim;

  const MubSet set = dpp_set(d);
  const MubReport mub = verify_mub_set(set, kTol);
  rep.mub_ok = mub.ok;
  rep.mub_worst_deviation = mub.worst_deviation;

  const PerfectStrategy perfect = perfect_strategy(set);
  rep.completed_outcomes = perfect.completed_outcomes;
  rep.povm_projective = is_projective_povm(perfect.strategy.povm, kTol);
  for (std::size_t i = 0; i < perfect.phi.size(); ++i) {
    for (std::size_t j = 0; j < perfect.phi.size(); ++j) {
      if (i != j) rep.max_phi_overlap = std::max(rep.max_phi_overlap, std::abs(inner(perfect.phi[i], perfect.phi[j])));
    }
  }
  rep.guessing_probability = guessing_probability(set, perfect.strategy, CoinKind::quantum);
  rep.pg_deviation = std::abs(rep.guessing_probability - 1.0);
  rep.ok = rep.mub_ok && rep.povm_projective && rep.max_phi_overlap < kTol && rep.pg_deviation < kTol;
  return rep;
}

std::string to_json(const CertifyReport& r, int indent) {
  json j = {{"dim", r.dim},
            {"mub_ok", r.mub_ok},
            {"mub_worst_deviation", r.mub_worst_deviation},
            {"povm_projective", r.povm_projective},
            {"max_phi_overlap", r.max_phi_overlap},
            {"guessing_probability", r.guessing_probability},
            {"pg_deviation", r.pg_deviation},
            {"completed_outcomes", r.completed_outcomes},
            {"ok", r.ok}};
  return j.dump(indent);
}

}  // namespace mubgame
