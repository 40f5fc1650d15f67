#ifndef SIB_GEOMETRY_HPP
#define SIB_GEOMETRY_HPP

#include <vector>

#include "sib/types.hpp"

namespace sib {

/// Norm of v under the selected norm. Throws InvalidInputError on non-finite
/// input.
double norm_eval(NormKind norm, const Vector& v);

/// Norm of v under the dual of the selected norm (euclidean is self-dual,
/// sum and max are dual to each other).
double dual_norm_eval(NormKind norm, const Vector& v);

/// Distance d(x; set) in the problem norm, by closed form per set variant.
double distance(NormKind norm, const TargetSet& set, const Vector& x);

/// A nearest point of the set to x in the problem norm. Where the projection
/// set is not a singleton (sum/max norms) the selection is deterministic:
/// componentwise clamp for boxes, a single-coordinate move (sum) or a
/// sign-pattern move (max) for halfspaces.
ProjectionResult project(NormKind norm, const TargetSet& set, const Vector& x);

/// One subgradient of x |-> d(x; set) at a point strictly outside the set.
/// Ties are broken by smallest coordinate index; exact-zero components get 0.
/// Throws PreconditionError if distance(x) == 0.
Vector distance_subgradient(NormKind norm, const TargetSet& set, const Vector& x);

/// Every extreme subgradient the selection rules above can emit when
/// tie-breaks are enumerated instead of resolved (equal max deficits, offsets
/// exactly on a box face, zero components under the sum norm). Used by the
/// sufficient optimality check for non-Euclidean norms.
std::vector<Vector> subgradient_selections(NormKind norm, const TargetSet& set,
                                           const Vector& x, double tie_tol = 1e-12);

/// Exact characterization of g in the subdifferential of the norm at v:
/// dual_norm(g) <= 1 + tol and <g,v> >= norm(v) - tol.
bool norm_subdifferential_contains(NormKind norm, const Vector& v, const Vector& g,
                                   double tol = 1e-9);

}  // namespace sib

#endif  // SIB_GEOMETRY_HPP
