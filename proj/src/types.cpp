#include "sib/types.hpp"

#include "sib/geometry.hpp"

namespace sib {

NormKind dual(NormKind norm) {
  switch (norm) {
    case NormKind::euclidean: return NormKind::euclidean;
    case NormKind::sum: return NormKind::max;
    case NormKind::max: return NormKind::sum;
  }
  throw InvalidInputError("dual: unknown norm");
}

std::string to_string(NormKind norm) {
  switch (norm) {
    case NormKind::euclidean: return "euclidean";
    case NormKind::sum: return "sum";
    case NormKind::max: return "max";
  }
  throw InvalidInputError("to_string: unknown norm");
}

NormKind norm_from_string(const std::string& name) {
  if (name == "euclidean") return NormKind::euclidean;
  if (name == "sum") return NormKind::sum;
  if (name == "max") return NormKind::max;
  throw ParseError("norm: expected \"euclidean\", \"sum\" or \"max\", got \"" + name + "\"");
}

Eigen::Index set_dimension(const TargetSet& set) {
  return std::visit([](const auto& s) {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, Halfspace>) return s.a.size();
    else return s.c.size();
  }, set);
}

void validate_set(const TargetSet& set, Eigen::Index m) {
  if (set_dimension(set) != m)
    throw InvalidInputError("target set: dimension mismatch (got " +
                            std::to_string(set_dimension(set)) + ", expected " +
                            std::to_string(m) + ")");
  std::visit([](const auto& s) {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, Point>) {
      detail::require_finite(s.c, "point.c");
    } else if constexpr (std::is_same_v<T, Ball>) {
      detail::require_finite(s.c, "ball.c");
      if (!(s.r >= 0.0) || !std::isfinite(s.r))
        throw InvalidInputError("ball.r: must be a finite nonnegative number");
    } else if constexpr (std::is_same_v<T, Box>) {
      detail::require_finite(s.c, "box.c");
      detail::require_finite(s.h, "box.h");
      if (s.h.size() != s.c.size())
        throw InvalidInputError("box.h: length differs from box.c");
      if (!(s.h.minCoeff() > 0.0))
        throw InvalidInputError("box.h: half-widths must be strictly positive");
    } else {
      detail::require_finite(s.a, "halfspace.a");
      if (!std::isfinite(s.b)) throw InvalidInputError("halfspace.b: non-finite");
      if (s.a.isZero(0.0)) throw InvalidInputError("halfspace.a: must be nonzero");
    }
  }, set);
}

bool set_member(NormKind norm, const TargetSet& set, const Vector& y, double tol) {
  return std::visit([&](const auto& s) -> bool {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, Point>) {
      return (y - s.c).cwiseAbs().maxCoeff() <= tol;
    } else if constexpr (std::is_same_v<T, Ball>) {
      return norm_eval(norm, y - s.c) <= s.r + tol;
    } else if constexpr (std::is_same_v<T, Box>) {
      return ((y - s.c).cwiseAbs() - s.h).maxCoeff() <= tol;
    } else {
      return s.a.dot(y) <= s.b + tol;
    }
  }, set);
}

}  // namespace sib
