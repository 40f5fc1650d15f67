#include "sib/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

#include <Eigen/Dense>

namespace sib {

namespace {

struct ScanBest {
  double value = std::numeric_limits<double>::infinity();
  std::int64_t index = -1;

  void offer(double v, std::int64_t idx) {
    if (v < value || (v == value && idx < index)) {
      value = v;
      index = idx;
    }
  }
};

Vector cell_center(const Vector& lo, const Vector& extent, int cells, std::int64_t idx) {
  Vector x(lo.size());
  std::int64_t rest = idx;
  for (Eigen::Index a = 0; a < lo.size(); ++a) {
    const std::int64_t i = rest % cells;
    rest /= cells;
    x[a] = lo[a] + (static_cast<double>(i) + 0.5) * extent[a] / cells;
  }
  return x;
}

int scan_threads() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  n = std::min(n, 8u);
  if (const char* env = std::getenv("SIB_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(std::min(cap, 64L)));
  }
  return static_cast<int>(n);
}

ScanBest scan_level(const Problem& p, const Vector& lo, const Vector& extent,
                    int cells, std::int64_t total) {
  const int threads = total >= 32768 ? scan_threads() : 1;
  if (threads <= 1) {
    ScanBest best;
    for (std::int64_t idx = 0; idx < total; ++idx)
      best.offer(objective(p, cell_center(lo, extent, cells, idx)), idx);
    return best;
  }
  std::vector<ScanBest> parts(threads);
  std::vector<std::thread> pool;
  const std::int64_t chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const std::int64_t begin = t * chunk;
      const std::int64_t end = std::min(total, begin + chunk);
      for (std::int64_t idx = begin; idx < end; ++idx)
        parts[t].offer(objective(p, cell_center(lo, extent, cells, idx)), idx);
    });
  }
  for (auto& th : pool) th.join();
  ScanBest best;
  for (const auto& part : parts)
    if (part.index >= 0) best.offer(part.value, part.index);
  return best;
}

// Circumcenter of q+1 affinely independent points within their affine hull.
// Returns false when the points are (numerically) affinely dependent.
bool circumcenter(const std::vector<const Vector*>& pts, Vector& center) {
  const Eigen::Index m = pts[0]->size();
  const Eigen::Index q = static_cast<Eigen::Index>(pts.size()) - 1;
  Eigen::MatrixXd basis(m, q);
  Eigen::VectorXd rhs(q);
  for (Eigen::Index j = 0; j < q; ++j) {
    basis.col(j) = *pts[j + 1] - *pts[0];
    rhs[j] = 0.5 * basis.col(j).squaredNorm();
  }
  const Eigen::MatrixXd gram = basis.transpose() * basis;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible()) return false;
  center = *pts[0] + basis * lu.solve(rhs);
  return true;
}

}  // namespace

OracleResult grid_search(const Problem& problem, const GridSpec& spec) {
  validate_problem(problem);
  const Eigen::Index m = problem.dimension;
  if (m > 3) throw SizeError("grid_search: exhaustive scan supports m <= 3");
  detail::require_finite(spec.lo, "grid_search: lo");
  detail::require_finite(spec.hi, "grid_search: hi");
  detail::require_dimension(spec.lo, m, "grid_search: lo");
  detail::require_dimension(spec.hi, m, "grid_search: hi");
  if (((spec.hi - spec.lo).array() <= 0.0).any())
    throw InvalidInputError("grid_search: requires lo < hi componentwise");
  if (spec.cells_per_axis < 8)
    throw InvalidInputError("grid_search: cells_per_axis must be >= 8");
  if (spec.refinements < 1)
    throw InvalidInputError("grid_search: refinements must be >= 1");
  if (!(spec.shrink > 0.0 && spec.shrink < 1.0))
    throw InvalidInputError("grid_search: shrink must lie in (0, 1)");
  if (!(spec.shrink > 2.0 / spec.cells_per_axis))
    throw InvalidInputError("grid_search: shrink must exceed 2/cells_per_axis");

  const int cells = spec.cells_per_axis;
  std::int64_t total = 1;
  for (Eigen::Index a = 0; a < m; ++a) total *= cells;

  Vector lo = spec.lo;
  Vector extent = spec.hi - spec.lo;
  Vector best_x = cell_center(lo, extent, cells, 0);
  double best_v = objective(problem, best_x);

  for (int level = 0; level < spec.refinements; ++level) {
    const ScanBest best = scan_level(problem, lo, extent, cells, total);
    if (best.value < best_v) {
      best_v = best.value;
      best_x = cell_center(lo, extent, cells, best.index);
    }
    extent *= spec.shrink;
    lo = best_x - extent / 2.0;
  }

  OracleResult result;
  result.x_hat = best_x;
  result.value = best_v;
  result.resolution = norm_eval(problem.norm, Vector(extent / (spec.shrink * cells)));
  return result;
}

GridSpec default_grid_spec(const Problem& problem) {
  validate_problem(problem);
  const Eigen::Index m = problem.dimension;
  Vector cmin = Vector::Constant(m, std::numeric_limits<double>::infinity());
  Vector cmax = -cmin;
  double max_extent = 0.0;
  for (const auto& set : problem.sets) {
    Vector anchor;
    std::visit([&](const auto& s) {
      using T = std::decay_t<decltype(s)>;
      if constexpr (std::is_same_v<T, Point>) {
        anchor = s.c;
      } else if constexpr (std::is_same_v<T, Ball>) {
        anchor = s.c;
        max_extent = std::max(max_extent, s.r);
      } else if constexpr (std::is_same_v<T, Box>) {
        anchor = s.c;
        max_extent = std::max(max_extent, s.h.maxCoeff());
      } else {
        anchor = (s.b / s.a.squaredNorm()) * s.a;
      }
    }, set);
    cmin = cmin.cwiseMin(anchor);
    cmax = cmax.cwiseMax(anchor);
  }
  const double diam = (cmax - cmin).norm();
  const double inflation = diam + 2.0 * max_extent + 1.0;
  GridSpec spec;
  spec.lo = cmin.array() - inflation;
  spec.hi = cmax.array() + inflation;
  return spec;
}

BallResult solve_two_sets_points(const Vector& a, const Vector& b) {
  detail::require_finite(a, "solve_two_sets_points");
  detail::require_finite(b, "solve_two_sets_points");
  detail::require_dimension(b, a.size(), "solve_two_sets_points");
  if (a == b) throw InvalidInputError("solve_two_sets_points: points coincide");
  return {0.5 * (a + b), 0.5 * (a - b).norm()};
}

BallResult solve_three_points(const Vector& a1, const Vector& a2, const Vector& a3) {
  if (a1.size() != 2 || a2.size() != 2 || a3.size() != 2)
    throw InvalidInputError("solve_three_points: requires m == 2");
  if (a1 == a2 && a2 == a3)
    throw InvalidInputError("solve_three_points: points all coincide");
  const Vector* pts[3] = {&a1, &a2, &a3};
  // Obtuse or degenerate vertex: the opposite side's midpoint ball wins.
  for (int i = 0; i < 3; ++i) {
    const Vector& v = *pts[i];
    const Vector& pj = *pts[(i + 1) % 3];
    const Vector& pk = *pts[(i + 2) % 3];
    if ((pj - v).dot(pk - v) <= 0.0) {
      if (pj == pk) return {pj, (pj - v).norm()};
      return solve_two_sets_points(pj, pk);
    }
  }
  Vector center;
  if (!circumcenter({&a1, &a2, &a3}, center))
    throw InvalidInputError("solve_three_points: degenerate configuration");
  return {center, (center - a1).norm()};
}

BallResult smallest_enclosing_ball(const std::vector<Vector>& points) {
  if (points.size() < 2)
    throw InvalidInputError("smallest_enclosing_ball: n >= 2 points required");
  const Eigen::Index m = points.front().size();
  if (m > 3) throw SizeError("smallest_enclosing_ball: exhaustive search supports m <= 3");
  for (const auto& pt : points) {
    detail::require_finite(pt, "smallest_enclosing_ball");
    detail::require_dimension(pt, m, "smallest_enclosing_ball");
  }
  const std::size_t n = points.size();

  BallResult best;
  best.radius = std::numeric_limits<double>::infinity();
  auto offer = [&](const Vector& center, double radius) {
    if (radius >= best.radius) return;
    const double limit = radius + 1e-9 * std::max(1.0, radius);
    for (const auto& pt : points)
      if ((pt - center).norm() > limit) return;
    best.center = center;
    best.radius = radius;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      offer(0.5 * (points[i] + points[j]), 0.5 * (points[i] - points[j]).norm());
  Vector center;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (circumcenter({&points[i], &points[j], &points[k]}, center))
          offer(center, (center - points[i]).norm());
  if (m == 3) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t l = k + 1; l < n; ++l)
            if (circumcenter({&points[i], &points[j], &points[k], &points[l]}, center))
              offer(center, (center - points[i]).norm());
  }
  if (!std::isfinite(best.radius))
    throw InvalidInputError("smallest_enclosing_ball: no enclosing candidate found");
  return best;
}

BallResult solve_equal_radius_balls(const std::vector<Vector>& centers, double r) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw InvalidInputError("solve_equal_radius_balls: radius must be nonnegative");
  BallResult seb = smallest_enclosing_ball(centers);
  if (seb.radius <= r)
    throw CommonPointError("solve_equal_radius_balls: the balls share a common point",
                           seb.center);
  return {std::move(seb.center), seb.radius - r};
}

BallResult solve_equal_radius_balls(const Problem& problem) {
  validate_problem(problem);
  if (problem.norm != NormKind::euclidean)
    throw InvalidInputError("solve_equal_radius_balls: requires the Euclidean norm");
  std::vector<Vector> centers;
  double r = -1.0;
  for (std::size_t i = 0; i < problem.sets.size(); ++i) {
    double ri = 0.0;
    if (const auto* ball = std::get_if<Ball>(&problem.sets[i])) {
      centers.push_back(ball->c);
      ri = ball->r;
    } else if (const auto* point = std::get_if<Point>(&problem.sets[i])) {
      centers.push_back(point->c);
    } else {
      throw InvalidInputError("solve_equal_radius_balls: sets[" + std::to_string(i + 1) +
                              "] is not a ball or point target");
    }
    if (r < 0.0) r = ri;
    else if (ri != r)
      throw InvalidInputError("solve_equal_radius_balls: unequal radii (set " +
                              std::to_string(i + 1) + ")");
  }
  return solve_equal_radius_balls(centers, r);
}

}  // namespace sib
