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

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mubgame/game.hpp"
#include "mubgame/linalg.hpp"
#include "mubgame/mub.hpp"

namespace mubgame {

struct SeesawConfig {
  double epsilon = 1e-6;
  std::size_t max_rounds = 500;
  std::size_t restarts = 50;
  std::uint64_t master_seed = 0;
  /// 0 means default_thread_count().
  std::size_t threads = 0;

  void validate() const;
};

/// Optimality conditions for max sum_a Tr(M_a D_a): Y = sum_a D_a M_a must be
/// Hermitian and Y - D_a positive semidefinite for every a.
struct Certificate {
  double hermitian_defect = 0.0;  // max |Y - Y^dagger|
  double min_eig_gap = 0.0;       // min_a lambda_min(Y - D_a)

  bool optimal(double defect_tol = 1e-6, double gap_tol = 1e-6) const {
    return hermitian_defect <= defect_tol && min_eig_gap >= -gap_tol;
  }
};

struct MeasurementOptions {
  double gap_tolerance = 1e-8;
  std::size_t max_iterations = 5000;
  /// Certificate evaluated every this many fixed-point steps.
  std::size_t check_interval = 8;
};

struct MeasurementSolution {
  std::vector<ComplexMatrix> povm;
  double value = 0.0;  // sum_a Tr(M_a D_a)
  std::size_t iterations = 0;
  Certificate certificate;
  bool converged = false;
};

/// optimal_measurement ran out of iterations; carries the best POVM found.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, MeasurementSolution best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const MeasurementSolution& best() const { return best_; }

 private:
  MeasurementSolution best_;
};

/// GG^dagger / Tr(GG^dagger) with G a d x d matrix of standard complex Gaussians.
ComplexMatrix random_density_hs(std::size_t dim, std::uint64_t seed);

/// D_a = W_a^dagger rho W_a where W_a has columns U_i|a>, so that the guessing
/// probability is (1/d) sum_a Tr(M_a D_a). For the classical coin only the
/// diagonal of each D_a is kept.
std::vector<ComplexMatrix> discrimination_operators(const ComplexMatrix& probe, const MubSet& set,
                                                    CoinKind coin = CoinKind::quantum);

Certificate certificate_check(std::span<const ComplexMatrix> povm, std::span<const ComplexMatrix> ops);

/// Minimum-error discrimination fixed point
///   M_a <- L^{-1/2} D_a M_a D_a L^{-1/2},  L = sum_b D_b M_b D_b,
/// from the uniform POVM until the certificate closes. Kernel directions of L
/// are shared uniformly so completeness holds exactly. Never throws on
/// non-convergence; check `converged`.
MeasurementSolution solve_measurement(std::span<const ComplexMatrix> ops, const MeasurementOptions& options = {});

/// As solve_measurement but throws NonConvergence when the iteration budget runs
/// out, and ContractViolation for non-PSD or mismatched inputs.
MeasurementSolution optimal_measurement(std::span<const ComplexMatrix> ops, const MeasurementOptions& options = {});

struct ProbeSolution {
  ComplexMatrix probe;
  double value = 0.0;
};

/// The probe step is a largest-eigenvalue problem: with
/// K = (1/d) sum_a W_a M_a W_a^dagger the objective is Tr(rho K).
ComplexMatrix probe_objective(std::span<const ComplexMatrix> povm, const MubSet& set, CoinKind coin = CoinKind::quantum);
ProbeSolution optimal_probe(std::span<const ComplexMatrix> povm, const MubSet& set, CoinKind coin = CoinKind::quantum);

struct RestartRecord {
  std::uint64_t seed = 0;
  std::size_t rounds = 0;
  double final_value = 0.0;
  bool monotone_ok = true;
  bool hit_round_limit = false;
  std::vector<double> trace;
  Certificate certificate;
};

struct SeesawResult {
  double best_value = 0.0;
  Strategy best_strategy;
  std::size_t best_restart = 0;
  std::vector<RestartRecord> per_restart;
  struct {
    bool is_valid_povm = false;
    double discrimination_gap = 0.0;
  } certificate;
};

/// One see-saw run from the Hilbert-Schmidt random start drawn with `seed`.
RestartRecord seesaw_restart(const MubSet& set, CoinKind coin, std::uint64_t seed, double epsilon,
                             std::size_t max_rounds, Strategy* final_strategy = nullptr);

/// Alternates the measurement and probe steps from config.restarts random starts.
/// Restart r uses split_seed(master_seed, r); the result does not depend on the
/// thread count.
SeesawResult seesaw(const MubSet& set, CoinKind coin, const SeesawConfig& config);

}  // namespace mubgame
