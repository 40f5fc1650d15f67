#ifndef SIB_TYPES_HPP
#define SIB_TYPES_HPP

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "sib/errors.hpp"

namespace sib {

using Vector = Eigen::VectorXd;

// Which norm defines balls, distances and subgradients. The dual pairs up
// euclidean<->euclidean and sum<->max.
enum class NormKind { euclidean, sum, max };

NormKind dual(NormKind norm);
std::string to_string(NormKind norm);
NormKind norm_from_string(const std::string& name);  // throws ParseError

// Target sets. A Ball is a ball of the problem norm (a diamond under the sum
// norm, a square under the max norm); r == 0 degenerates to a point. Box
// half-widths are per-axis and strictly positive. A Halfspace is
// {y : <a,y> <= b} with a != 0.
struct Point {
  Vector c;
};

struct Ball {
  Vector c;
  double r = 0.0;
};

struct Box {
  Vector c;
  Vector h;
};

struct Halfspace {
  Vector a;
  double b = 0.0;
};

using TargetSet = std::variant<Point, Ball, Box, Halfspace>;

Eigen::Index set_dimension(const TargetSet& set);

// Throws InvalidInputError unless the set is well formed and of dimension m.
void validate_set(const TargetSet& set, Eigen::Index m);

// Membership test with an absolute tolerance on the defining inequalities.
bool set_member(NormKind norm, const TargetSet& set, const Vector& y,
                double tol = 1e-12);

struct ProjectionResult {
  Vector omega;  // a nearest point of the set in the problem norm
  double dist = 0.0;
};

namespace detail {

inline void require_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) throw InvalidInputError(std::string(what) + ": non-finite entries");
}

inline void require_dimension(const Vector& v, Eigen::Index m, const char* what) {
  if (v.size() != m)
    throw InvalidInputError(std::string(what) + ": dimension mismatch (got " +
                            std::to_string(v.size()) + ", expected " + std::to_string(m) + ")");
}

}  // namespace detail

}  // namespace sib

#endif  // SIB_TYPES_HPP
