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

#include "mubgame/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "mubgame/errors.hpp"
#include "mubgame/parallel.hpp"

namespace mubgame {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (base != 0 && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

}  // namespace

ScanMode ScanMode::random(std::uint64_t n) {
  if (n < 1) throw ContractViolation("random scan mode needs at least one sample");
  return {Kind::random, n};
}

std::string ScanMode::to_string() const {
  switch (kind) {
    case Kind::exhaustive: return "exhaustive";
    case Kind::cyclic: return "cyclic";
    case Kind::random: return "random(" + std::to_string(samples) + ")";
  }
  return "exhaustive";
}

ScanMode ScanMode::parse(std::string_view text) {
  if (text == "exhaustive") return exhaustive();
  if (text == "cyclic") return cyclic();
  std::string_view digits;
  if (text.starts_with("random(") && text.ends_with(")")) {
    digits = text.substr(7, text.size() - 8);
  } else if (text.starts_with("random:")) {
    digits = text.substr(7);
  } else {
    throw ContractViolation("unknown scan mode '" + std::string(text) +
                            "' (expected exhaustive, cyclic or random:N)");
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ContractViolation("random scan mode needs a sample count, got '" + std::string(text) + "'");
  }
  return random(std::stoull(std::string(digits)));
}

ClassicalOptimum classical_exhaustive(const MubSet& set, const SearchBudget& budget, std::size_t threads) {
  const std::size_t d = set.size();
  const std::uint64_t total = saturating_power(d, d);
  if (total > budget.max_classical_maps) {
    throw BudgetExceeded("classical_exhaustive: " + std::to_string(d) + "^" + std::to_string(d) +
                         " maps exceed the budget of " + std::to_string(budget.max_classical_maps) +
                         "; use the classical-coin see-saw for a lower bound");
  }

  std::vector<std::vector<ComplexMatrix>> proj(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const ComplexVector v = set[j].column(k);
      proj[j].push_back(ComplexMatrix::outer(v, v));
    }
  }

  // Chunks fix the leading one or two digits; results are reduced in chunk order
  // so the tie-break does not depend on scheduling.
  const std::size_t prefix = d >= 2 ? 2 : 1;
  const std::uint64_t chunks = saturating_power(d, prefix);
  struct ChunkBest {
    double value = -1.0;
    std::vector<std::size_t> map;
    std::uint64_t evaluated = 0;
  };
  std::vector<ChunkBest> best(chunks);
  constexpr double kTie = 1e-12;

  parallel_for(chunks, threads, [&](std::size_t chunk) {
    std::vector<std::size_t> digits(d, 0);
    std::uint64_t c = chunk;
    for (std::size_t k = prefix; k > 0; --k) {
      digits[k - 1] = static_cast<std::size_t>(c % d);
      c /= d;
    }
    // partial[k] = sum_{j <= k} proj[j][digits[j]]
    std::vector<ComplexMatrix> partial(d);
    auto rebuild_from = [&](std::size_t k0) {
      for (std::size_t k = k0; k < d; ++k) {
        partial[k] = k == 0 ? proj[0][digits[0]] : partial[k - 1] + proj[k][digits[k]];
      }
    };
    rebuild_from(0);
    ChunkBest& mine = best[chunk];
    for (;;) {
      const double value = max_eigenvalue(partial[d - 1]) / static_cast<double>(d);
      ++mine.evaluated;
      if (value > mine.value + kTie) {
        mine.value = value;
        mine.map = digits;
      }
      std::size_t pos = d;
      bool done = true;
      while (pos > prefix) {
        --pos;
        if (++digits[pos] < d) {
          done = false;
          break;
        }
        digits[pos] = 0;
      }
      if (done) break;
      rebuild_from(pos);
    }
  });

  ClassicalOptimum out;
  out.value = -1.0;
  for (const auto& b : best) {
    out.maps_evaluated += b.evaluated;
    if (b.value > out.value + kTie) {
      out.value = b.value;
      out.best_map.assignment = b.map;
    }
  }
  return out;
}

RelabellingSpace::RelabellingSpace(PrimeDim d, ScanMode mode, std::uint64_t seed, const SearchBudget& budget)
    : dim_(d), mode_(mode), seed_(seed) {
  const std::size_t n = d.size();
  switch (mode.kind) {
    case ScanMode::Kind::exhaustive: size_ = saturating_power(factorial(n), n); break;
    case ScanMode::Kind::cyclic: size_ = saturating_power(n, n); break;
    case ScanMode::Kind::random:
      if (mode.samples < 1) throw ContractViolation("random scan mode needs at least one sample");
      size_ = mode.samples;
      break;
  }
  if (size_ > budget.max_relabelling_tuples) {
    throw BudgetExceeded(mode.to_string() + " relabelling space for d = " + std::to_string(n) + " has " +
                         (size_ == kSaturated ? std::string("too many") : std::to_string(size_)) +
                         " tuples, above the budget of " + std::to_string(budget.max_relabelling_tuples));
  }
}

std::vector<Permutation> RelabellingSpace::at(std::uint64_t index) const {
  if (index >= size_) throw ContractViolation("RelabellingSpace::at: index out of range");
  const std::size_t n = dim_.size();
  std::vector<Permutation> tuple(n, Permutation::identity(n));
  switch (mode_.kind) {
    case ScanMode::Kind::exhaustive: {
      const std::uint64_t base = factorial(n);
      for (std::size_t a = n; a > 0; --a) {
        tuple[a - 1] = Permutation::from_rank(n, index % base);
        index /= base;
      }
      break;
    }
    case ScanMode::Kind::cyclic:
      for (std::size_t a = n; a > 0; --a) {
        tuple[a - 1] = Permutation::cyclic_shift(n, static_cast<std::int64_t>(index % n));
        index /= n;
      }
      break;
    case ScanMode::Kind::random: {
      std::mt19937_64 rng(split_seed(seed_, index));
      for (std::size_t a = 0; a < n; ++a) {
        std::vector<std::size_t> m(n);
        std::iota(m.begin(), m.end(), std::size_t{0});
        for (std::size_t k = n - 1; k > 0; --k) {
          std::uniform_int_distribution<std::size_t> pick(0, k);
          std::swap(m[k], m[pick(rng)]);
        }
        tuple[a] = Permutation(std::move(m));
      }
      break;
    }
  }
  return tuple;
}

std::optional<std::uint64_t> RelabellingSpace::index_of(const std::vector<Permutation>& tuple) const {
  const std::size_t n = dim_.size();
  if (tuple.size() != n) return std::nullopt;
  std::uint64_t index = 0;
  switch (mode_.kind) {
    case ScanMode::Kind::exhaustive:
      for (const auto& p : tuple) index = index * factorial(n) + p.rank();
      return index;
    case ScanMode::Kind::cyclic:
      for (const auto& p : tuple) {
        const std::size_t shift = p[0];
        if (!(p == Permutation::cyclic_shift(n, static_cast<std::int64_t>(shift)))) return std::nullopt;
        index = index * n + shift;
      }
      return index;
    case ScanMode::Kind::random: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::vector<Permutation>> enumerate_relabellings(PrimeDim d, ScanMode mode, std::uint64_t seed,
                                                             const SearchBudget& budget) {
  const RelabellingSpace space(d, mode, seed, budget);
  if (space.size() > budget.max_materialized_tuples) {
    throw BudgetExceeded("enumerate_relabellings: " + std::to_string(space.size()) +
                         " tuples exceed the materialization budget of " +
                         std::to_string(budget.max_materialized_tuples));
  }
  std::vector<std::vector<Permutation>> out;
  out.reserve(space.size());
  for (std::uint64_t k = 0; k < space.size(); ++k) out.push_back(space.at(k));
  return out;
}

void aggregate(ScanReport& report) {
  if (report.per_config.empty()) return;
  report.min_config = 0;
  report.max_config = 0;
  for (std::size_t k = 1; k < report.per_config.size(); ++k) {
    if (report.per_config[k].value < report.per_config[report.min_config].value) report.min_config = k;
    if (report.per_config[k].value > report.per_config[report.max_config].value) report.max_config = k;
  }
  report.min_value = report.per_config[report.min_config].value;
  report.max_value = report.per_config[report.max_config].value;
}

namespace {

std::vector<std::uint64_t> ids_of(const std::vector<Permutation>& tuple) {
  std::vector<std::uint64_t> ids;
  ids.reserve(tuple.size());
  for (const auto& p : tuple) ids.push_back(p.rank());
  return ids;
}

ScanReport classical_scan(PrimeDim d, const ScanOptions& options) {
  ScanReport report;
  for (std::size_t excluded = 0; excluded <= d.size(); ++excluded) {
    const MubSet set = standard_set(d, excluded, identity_relabellings(d));
    const ClassicalOptimum opt = classical_exhaustive(set, options.budget, options.threads);
    ScanEntry e;
    e.excluded = excluded;
    e.relabelling_ids.assign(d.size(), 0);
    e.value = opt.value;
    report.per_config.push_back(std::move(e));
  }
  return report;
}

}  // namespace

ScanReport scan(PrimeDim d, CoinKind coin, ScanMode mode, const SeesawConfig& seesaw_config,
                const ScanOptions& options) {
  seesaw_config.validate();
  if (coin == CoinKind::classical) {
    ScanReport report = classical_scan(d, options);
    report.dim = d.value();
    report.coin = coin;
    report.mode = mode;
    report.seed = seesaw_config.master_seed;
    report.total_configs_evaluated = report.per_config.size();
    aggregate(report);
    return report;
  }

  const RelabellingSpace space(d, mode, seesaw_config.master_seed, options.budget);
  const bool anchor = mode.kind == ScanMode::Kind::random && options.identity_anchor;
  const std::uint64_t per_subset = space.size() + (anchor ? 1 : 0);
  const std::uint64_t subsets = d.size() + 1;
  if (per_subset > options.budget.max_quantum_configs / subsets) {
    throw BudgetExceeded("scan: " + std::to_string(subsets) + " x " + std::to_string(per_subset) +
                         " see-saw configurations exceed the budget of " +
                         std::to_string(options.budget.max_quantum_configs));
  }
  const std::uint64_t total = subsets * per_subset;

  auto tuple_for = [&](std::uint64_t k) {
    return k < space.size() ? space.at(k) : identity_relabellings(d);
  };

  ScanReport report;
  report.dim = d.value();
  report.coin = coin;
  report.mode = mode;
  report.seed = seesaw_config.master_seed;
  report.per_config.resize(total);

  auto run = [&](std::uint64_t config, std::size_t restarts) {
    const std::size_t excluded = static_cast<std::size_t>(config / per_subset);
    const auto tuple = tuple_for(config % per_subset);
    SeesawConfig cfg = seesaw_config;
    cfg.restarts = restarts;
    cfg.threads = 1;
    cfg.master_seed = split_seed(seesaw_config.master_seed, config);
    const MubSet set = standard_set(d, excluded, tuple);
    const SeesawResult res = seesaw(set, CoinKind::quantum, cfg);
    ScanEntry& e = report.per_config[config];
    e.excluded = excluded;
    e.relabelling_ids = ids_of(tuple);
    e.value = res.best_value;
    e.seed = cfg.master_seed;
    e.restarts = restarts;
  };

  parallel_for(total, options.threads, [&](std::size_t k) { run(k, options.screening_restarts); });

  // Confirmation pass: restarts 0..screening-1 are reproduced, so values can only rise.
  if (options.confirm_count > 0 && seesaw_config.restarts > options.screening_restarts) {
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return report.per_config[x].value < report.per_config[y].value;
    });
    std::vector<std::size_t> chosen;
    const std::size_t c = std::min<std::size_t>(options.confirm_count, total);
    for (std::size_t k = 0; k < c; ++k) chosen.push_back(order[k]);
    for (std::size_t k = 0; k < c; ++k) chosen.push_back(order[total - 1 - k]);
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    parallel_for(chosen.size(), options.threads, [&](std::size_t k) { run(chosen[k], seesaw_config.restarts); });
  }

  report.total_configs_evaluated = total;
  aggregate(report);
  return report;
}

ComplexMatrix perturb_unitary(const ComplexMatrix& u, double delta, std::uint64_t seed) {
  if (delta < 0.0) throw ContractViolation("perturb_unitary: delta must be non-negative");
  const std::size_t n = u.rows();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (auto& z : g.entries()) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
  }
  ComplexMatrix h = hermitian_part(g);
  h *= Complex(1.0 / h.frobenius_norm(), 0.0);

  const EigenResult eig = hermitian_eigen(h);
  ComplexMatrix expo(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, delta * eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex left = phase * eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) expo(i, j) += left * std::conj(eig.vectors(j, k));
    }
  }
  return u * expo;
}

MubSet perturb_set(const MubSet& set, double delta, std::uint64_t seed) {
  std::vector<ComplexMatrix> us;
  us.reserve(set.size());
  for (std::size_t a = 0; a < set.size(); ++a) us.push_back(perturb_unitary(set[a], delta, split_seed(seed, a)));
  Provenance prov = set.provenance();
  prov.family = Family::custom;
  return MubSet(set.dim(), std::move(us), std::move(prov));
}

}  // namespace mubgame
