#include "sib/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sib {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void evaluate_distances(const Problem& p, const Vector& x, std::vector<double>& out) {
  out.resize(p.sets.size());
  for (std::size_t i = 0; i < p.sets.size(); ++i) out[i] = distance(p.norm, p.sets[i], x);
}

// Smallest index within tol of the maximum (tol == 0: first exact argmax).
std::size_t smallest_active_index(const std::vector<double>& dists, double tol) {
  const double dmax = *std::max_element(dists.begin(), dists.end());
  for (std::size_t i = 0; i < dists.size(); ++i)
    if (dists[i] >= dmax - tol) return i;
  return 0;  // unreachable
}

}  // namespace

void validate_problem(const Problem& problem) {
  if (problem.dimension < 1)
    throw InvalidInputError("problem: dimension must be positive");
  if (problem.sets.size() < 2)
    throw InvalidInputError("problem: n >= 2 target sets required");
  for (const auto& set : problem.sets) validate_set(set, problem.dimension);
}

void validate_schedule(const StepSchedule& schedule) {
  if (!(schedule.c > 0.0) || !std::isfinite(schedule.c))
    throw InvalidInputError("step schedule: c must be positive");
  if (schedule.family == StepFamily::c_over_k) {
    if (schedule.s != 1.0)
      throw InvalidInputError("step schedule: family c_over_k has s == 1");
  } else {
    if (!(schedule.s > 0.5 && schedule.s <= 1.0))
      throw InvalidInputError("step schedule: exponent s must lie in (0.5, 1]");
  }
}

double objective(const Problem& problem, const Vector& x) {
  if (problem.sets.empty()) throw InvalidInputError("objective: empty problem");
  double best = 0.0;
  for (const auto& set : problem.sets) best = std::max(best, distance(problem.norm, set, x));
  return best;
}

std::vector<int> active_set(const Problem& problem, const Vector& x, double tol) {
  if (tol < 0.0) throw InvalidInputError("active_set: tol must be nonnegative");
  std::vector<double> dists;
  evaluate_distances(problem, x, dists);
  const double dmax = *std::max_element(dists.begin(), dists.end());
  std::vector<int> active;
  for (std::size_t i = 0; i < dists.size(); ++i)
    if (dists[i] >= dmax - tol) active.push_back(static_cast<int>(i) + 1);
  return active;
}

Vector solver_subgradient(const Problem& problem, const Vector& x) {
  std::vector<double> dists;
  evaluate_distances(problem, x, dists);
  const std::size_t i = smallest_active_index(dists, 0.0);
  if (!(dists[i] > 0.0))
    throw CommonPointError("solver_subgradient: all set distances vanish; "
                           "the target sets share a common point", x);
  return distance_subgradient(problem.norm, problem.sets[i], x);
}

double step_size(const StepSchedule& schedule, std::int64_t k) {
  if (k < 1) throw InvalidInputError("step_size: k must be >= 1");
  if (schedule.s == 1.0) return schedule.c / static_cast<double>(k);
  return schedule.c / std::pow(static_cast<double>(k), schedule.s);
}

double step_sum(const StepSchedule& schedule, std::int64_t k) {
  validate_schedule(schedule);
  if (k < 1) throw InvalidInputError("step_sum: k must be >= 1");
  double sum = 0.0;
  if (schedule.s == 1.0) {
    for (std::int64_t i = 1; i <= k; ++i) sum += schedule.c / static_cast<double>(i);
  } else {
    for (std::int64_t i = 1; i <= k; ++i)
      sum += schedule.c / std::pow(static_cast<double>(i), schedule.s);
  }
  return sum;
}

double step_square_series(const StepSchedule& schedule) {
  validate_schedule(schedule);
  if (schedule.s == 1.0) return schedule.c * schedule.c * kPi * kPi / 6.0;
  // zeta(2s) for 2s in (1, 2): partial sum plus Euler-Maclaurin tail.
  // Direct summation to convergence is infeasible for s near 1/2.
  const double p = 2.0 * schedule.s;
  const std::int64_t n = 200000;
  double sum = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) sum += std::pow(static_cast<double>(k), -p);
  const double a = static_cast<double>(n) + 1.0;
  const double fa = std::pow(a, -p);
  const double tail = std::pow(a, 1.0 - p) / (p - 1.0) + 0.5 * fa + p * fa / (12.0 * a);
  return schedule.c * schedule.c * (sum + tail);
}

double gap_bound(const StepSchedule& schedule, std::int64_t k, double dist_to_solution) {
  if (!(dist_to_solution >= 0.0))
    throw InvalidInputError("gap_bound: distance must be nonnegative");
  const double ell2 = step_square_series(schedule);
  return (dist_to_solution * dist_to_solution + ell2) / (2.0 * step_sum(schedule, k));
}

SolveTrace solve(const Problem& problem, const SolveConfig& config) {
  validate_problem(problem);
  validate_schedule(config.schedule);
  detail::require_finite(config.start, "solve: start");
  detail::require_dimension(config.start, problem.dimension, "solve: start");
  if (config.iterations < 1) throw InvalidInputError("solve: iterations must be >= 1");
  if (config.active_tol < 0.0) throw InvalidInputError("solve: active_tol must be >= 0");

  std::vector<std::int64_t> checkpoints = config.checkpoints;
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  if (!checkpoints.empty() &&
      (checkpoints.front() < 1 || checkpoints.back() > config.iterations))
    throw InvalidInputError("solve: checkpoints must lie in [1, iterations]");

  SolveTrace trace;
  trace.rows.reserve(checkpoints.size());

  Vector x = config.start;
  std::vector<double> dists;
  double value = std::numeric_limits<double>::infinity();
  double best_value = std::numeric_limits<double>::infinity();
  Vector best_point = x;

  std::size_t next_cp = 0;
  std::int64_t improve_k = 1;
  double improve_value = std::numeric_limits<double>::infinity();

  std::int64_t k = 1;
  for (; k <= config.iterations; ++k) {
    evaluate_distances(problem, x, dists);
    const std::size_t i = smallest_active_index(dists, config.active_tol);
    const double d = *std::max_element(dists.begin(), dists.end());
    if (!(d > 0.0))
      throw CommonPointError("solve: iterate " + std::to_string(k) +
                             " lies in every target set; the instance admits radius 0", x);
    value = std::min(value, d);
    if (d < best_value) {  // strict: keeps the earliest attaining iterate
      best_value = d;
      best_point = x;
    }
    if (next_cp < checkpoints.size() && checkpoints[next_cp] == k) {
      trace.rows.push_back({k, x, value});
      ++next_cp;
    }
    if (config.early_stop) {
      if (value < improve_value - config.early_stop->tol) {
        improve_value = value;
        improve_k = k;
      } else if (k - improve_k >= config.early_stop->window) {
        break;
      }
    }
    const Vector g = distance_subgradient(problem.norm, problem.sets[i], x);
    x -= step_size(config.schedule, k) * g;
  }

  trace.best_point = std::move(best_point);
  trace.best_value = best_value;
  trace.iterations_run = std::min(k, config.iterations);
  return trace;
}

}  // namespace sib
