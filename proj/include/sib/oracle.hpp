#ifndef SIB_ORACLE_HPP
#define SIB_ORACLE_HPP

#include <utility>
#include <vector>

#include "sib/solver.hpp"
#include "sib/types.hpp"

namespace sib {

// Multi-level exhaustive scan bounds. Each refinement recenters a window
// shrunk by `shrink` around the best cell so far; shrink must exceed
// 2/cells_per_axis so the window keeps the best cell's neighbors.
struct GridSpec {
  Vector lo;
  Vector hi;
  int cells_per_axis = 64;
  int refinements = 8;
  double shrink = 0.3;
};

struct OracleResult {
  Vector x_hat;
  double value = 0.0;      // objective(problem, x_hat), exactly
  double resolution = 0.0; // final cell diagonal in the problem norm
};

/// Brute-force minimization of the objective over a refined grid (m <= 3).
/// The returned value is within Lipschitz-1 x (final cell radius) of the true
/// optimum inside the initial box. Ties go to the lowest linear cell index.
/// SIB_THREADS caps the scan parallelism; results are identical to the
/// sequential scan regardless.
OracleResult grid_search(const Problem& problem, const GridSpec& spec);

/// Default scan box: the bounding box of the set anchor points (centers; for
/// a halfspace, the boundary point nearest the origin), inflated by the
/// anchor diameter plus twice the largest set extent. Any minimizer lies
/// inside.
GridSpec default_grid_spec(const Problem& problem);

struct BallResult {
  Vector center;
  double radius = 0.0;
};

/// Two point targets: midpoint and half the Euclidean distance.
BallResult solve_two_sets_points(const Vector& a, const Vector& b);

/// Three point targets in the plane: midpoint of the side opposite an obtuse
/// (or degenerate) vertex, else the circumcenter.
BallResult solve_three_points(const Vector& a1, const Vector& a2, const Vector& a3);

/// Exhaustive smallest enclosing ball of a point set (m <= 3): the smallest
/// candidate ball over all pairs, triples and (for m == 3) quadruples that
/// contains every point.
BallResult smallest_enclosing_ball(const std::vector<Vector>& points);

/// Euclidean balls of one common radius r: the center is the smallest
/// enclosing ball center of the ball centers and the radius is SEB radius
/// minus r. Throws CommonPointError when the balls already share a point.
BallResult solve_equal_radius_balls(const std::vector<Vector>& centers, double r);

/// Extracts centers and the common radius from a euclidean ball/point
/// instance; throws InvalidInputError when radii are unequal or targets are
/// not balls/points.
BallResult solve_equal_radius_balls(const Problem& problem);

}  // namespace sib

#endif  // SIB_ORACLE_HPP
