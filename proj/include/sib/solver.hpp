#ifndef SIB_SOLVER_HPP
#define SIB_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sib/geometry.hpp"
#include "sib/types.hpp"

namespace sib {

// An instance: minimize D(x) = max_i d(x; sets[i]) over R^m. Set indices are
// 1-based everywhere in the public surface, matching the input order.
struct Problem {
  Eigen::Index dimension = 0;
  NormKind norm = NormKind::euclidean;
  std::vector<TargetSet> sets;
};

// Throws InvalidInputError unless n >= 2 and every set is valid of the given
// dimension. Empty common intersection is assumed, not checked: solve()
// aborts with a CommonPointError witness if an iterate reaches D == 0.
void validate_problem(const Problem& problem);

// Admitted diminishing step families alpha_k = c / k^s. Both have divergent
// sum and summable squares; arbitrary user schedules are not accepted.
enum class StepFamily { c_over_k, c_over_k_pow };

struct StepSchedule {
  StepFamily family = StepFamily::c_over_k;
  double c = 1.0;
  double s = 1.0;  // exponent in (0.5, 1]; c_over_k is s == 1
};

void validate_schedule(const StepSchedule& schedule);

struct EarlyStop {
  double tol = 0.0;
  std::int64_t window = 0;
};

struct SolveConfig {
  Vector start;
  std::int64_t iterations = 100000;
  StepSchedule schedule;
  std::vector<std::int64_t> checkpoints;  // subset of [1, iterations]
  double active_tol = 0.0;                // 0 means exact argmax
  std::optional<EarlyStop> early_stop;    // off by default
};

struct TraceRow {
  std::int64_t k = 0;
  Vector x;           // iterate before update k (row k == 1 is the start)
  double value = 0.0; // V_k = min_{j<=k} D(x_j)
};

struct SolveTrace {
  std::vector<TraceRow> rows;
  Vector best_point;  // earliest iterate attaining best_value
  double best_value = 0.0;
  std::int64_t iterations_run = 0;
  std::optional<double> gap_bound;  // filled by callers that know a solution distance
};

/// D(x): the exact maximum of the n closed-form set distances.
double objective(const Problem& problem, const Vector& x);

/// All 1-based indices i with d(x; set_i) >= D(x) - tol, ascending.
std::vector<int> active_set(const Problem& problem, const Vector& x, double tol);

/// The subgradient of D selected for the iteration: distance_subgradient of
/// the smallest active index (exact argmax). Throws CommonPointError when
/// D(x) == 0.
Vector solver_subgradient(const Problem& problem, const Vector& x);

double step_size(const StepSchedule& schedule, std::int64_t k);

/// Partial sum of the first k step sizes.
double step_sum(const StepSchedule& schedule, std::int64_t k);

/// The full series of squared step sizes (analytic c^2 pi^2/6 for c/k,
/// converged numerically otherwise).
double step_square_series(const StepSchedule& schedule);

/// Upper bound on V_k - V^ given the Euclidean distance from the start point
/// to the solution set: (dist^2 + ell^2) / (2 sum_{i<=k} alpha_i). If the
/// supplied point is not the nearest solution this is an upper bound only.
double gap_bound(const StepSchedule& schedule, std::int64_t k, double dist_to_solution);

/// Runs exactly config.iterations subgradient steps from config.start,
/// recording (k, x_k, V_k) at each checkpoint; x_k is the iterate before
/// update k. Deterministic given inputs.
SolveTrace solve(const Problem& problem, const SolveConfig& config);

}  // namespace sib

#endif  // SIB_SOLVER_HPP
