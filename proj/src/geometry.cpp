#include "sib/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace sib {

namespace {

inline double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Distance from x_i to the slab [c_i - h_i, c_i + h_i].
inline double axis_deficit(double x, double c, double h) {
  return std::max(std::abs(x - c) - h, 0.0);
}

// Distance to an axis-aligned box given per-axis deficits; h == nullptr means
// zero half-widths (a point target routed through the same path).
double box_distance(NormKind norm, const Vector& x, const Vector& c, const Vector* h) {
  const Eigen::Index m = x.size();
  switch (norm) {
    case NormKind::euclidean: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < m; ++i) {
        const double d = axis_deficit(x[i], c[i], h ? (*h)[i] : 0.0);
        s += d * d;
      }
      return std::sqrt(s);
    }
    case NormKind::sum: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < m; ++i) s += axis_deficit(x[i], c[i], h ? (*h)[i] : 0.0);
      return s;
    }
    case NormKind::max: {
      double s = 0.0;
      for (Eigen::Index i = 0; i < m; ++i)
        s = std::max(s, axis_deficit(x[i], c[i], h ? (*h)[i] : 0.0));
      return s;
    }
  }
  throw InvalidInputError("box_distance: unknown norm");
}

// Smallest index attaining the maximal deficit; deficits are |x-c|-h with
// h == nullptr meaning zero half-widths.
Eigen::Index argmax_deficit(const Vector& x, const Vector& c, const Vector* h) {
  Eigen::Index best = 0;
  double best_d = -1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double d = axis_deficit(x[i], c[i], h ? (*h)[i] : 0.0);
    if (d > best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

void check_inputs(const TargetSet& set, const Vector& x, const char* op) {
  detail::require_finite(x, op);
  detail::require_dimension(x, set_dimension(set), op);
}

}  // namespace

double norm_eval(NormKind norm, const Vector& v) {
  detail::require_finite(v, "norm_eval");
  switch (norm) {
    case NormKind::euclidean: return v.norm();
    case NormKind::sum: return v.lpNorm<1>();
    case NormKind::max: return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
  }
  throw InvalidInputError("norm_eval: unknown norm");
}

double dual_norm_eval(NormKind norm, const Vector& v) {
  return norm_eval(dual(norm), v);
}

double distance(NormKind norm, const TargetSet& set, const Vector& x) {
  check_inputs(set, x, "distance");
  return std::visit([&](const auto& s) -> double {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, Point>) {
      return norm_eval(norm, x - s.c);
    } else if constexpr (std::is_same_v<T, Ball>) {
      return std::max(norm_eval(norm, x - s.c) - s.r, 0.0);
    } else if constexpr (std::is_same_v<T, Box>) {
      return box_distance(norm, x, s.c, &s.h);
    } else {
      return std::max(s.a.dot(x) - s.b, 0.0) / dual_norm_eval(norm, s.a);
    }
  }, set);
}

ProjectionResult project(NormKind norm, const TargetSet& set, const Vector& x) {
  check_inputs(set, x, "project");
  return std::visit([&](const auto& s) -> ProjectionResult {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, Point>) {
      return {s.c, norm_eval(norm, x - s.c)};
    } else if constexpr (std::is_same_v<T, Ball>) {
      const double n = norm_eval(norm, x - s.c);
      if (n <= s.r) return {x, 0.0};
      return {s.c + (s.r / n) * (x - s.c), n - s.r};
    } else if constexpr (std::is_same_v<T, Box>) {
      Vector omega = x.cwiseMax(s.c - s.h).cwiseMin(s.c + s.h);
      return {std::move(omega), box_distance(norm, x, s.c, &s.h)};
    } else {
      const double slack = s.a.dot(x) - s.b;
      if (slack <= 0.0) return {x, 0.0};
      const double dist = slack / dual_norm_eval(norm, s.a);
      Vector omega = x;
      switch (norm) {
        case NormKind::euclidean:
          omega -= (slack / s.a.squaredNorm()) * s.a;
          break;
        case NormKind::sum: {
          // Cheapest l1 move is along the coordinate with the largest |a_j|.
          Eigen::Index j = 0;
          s.a.cwiseAbs().maxCoeff(&j);
          omega[j] = x[j] - slack / s.a[j];
          break;
        }
        case NormKind::max:
          // Move every coordinate with a_i != 0 by the same amount.
          for (Eigen::Index i = 0; i < x.size(); ++i) omega[i] -= dist * sign_of(s.a[i]);
          break;
      }
      return {std::move(omega), dist};
    }
  }, set);
}

Vector distance_subgradient(NormKind norm, const TargetSet& set, const Vector& x) {
  check_inputs(set, x, "distance_subgradient");
  if (!(distance(norm, set, x) > 0.0))
    throw PreconditionError("distance_subgradient: point is inside the target set");

  const Eigen::Index m = x.size();
  if (std::holds_alternative<Halfspace>(set)) {
    const auto& s = std::get<Halfspace>(set);
    return s.a / dual_norm_eval(norm, s.a);
  }
  if (norm == NormKind::euclidean) {
    const Vector v = x - project(norm, set, x).omega;
    return v / v.norm();
  }

  const Vector& c = std::visit([](const auto& s) -> const Vector& {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, Halfspace>) return s.a;  // unreachable
    else return s.c;
  }, set);
  const Vector* h = std::holds_alternative<Box>(set) ? &std::get<Box>(set).h : nullptr;
  const bool ball = std::holds_alternative<Ball>(set);

  Vector g = Vector::Zero(m);
  if (norm == NormKind::sum) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const double active = ball ? std::abs(x[i] - c[i])
                                 : axis_deficit(x[i], c[i], h ? (*h)[i] : 0.0);
      if (active > 0.0) g[i] = sign_of(x[i] - c[i]);
    }
    return g;
  }
  // Max norm: a single unit coordinate along the dominant axis.
  Eigen::Index j;
  if (ball) {
    j = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double d = std::abs(x[i] - c[i]);
      if (d > best) {
        best = d;
        j = i;
      }
    }
  } else {
    j = argmax_deficit(x, c, h);
  }
  g[j] = sign_of(x[j] - c[j]);
  return g;
}

std::vector<Vector> subgradient_selections(NormKind norm, const TargetSet& set,
                                           const Vector& x, double tie_tol) {
  check_inputs(set, x, "subgradient_selections");
  if (!(distance(norm, set, x) > 0.0))
    throw PreconditionError("subgradient_selections: point is inside the target set");

  if (norm == NormKind::euclidean || std::holds_alternative<Halfspace>(set))
    return {distance_subgradient(norm, set, x)};

  const Eigen::Index m = x.size();
  const Vector& c = std::visit([](const auto& s) -> const Vector& {
    using T = std::decay_t<decltype(s)>;
    if constexpr (std::is_same_v<T, Halfspace>) return s.a;  // unreachable
    else return s.c;
  }, set);
  const Vector* h = std::holds_alternative<Box>(set) ? &std::get<Box>(set).h : nullptr;
  const bool ball = std::holds_alternative<Ball>(set);

  if (norm == NormKind::sum) {
    // Per-axis option lists; the emitted set is their cartesian product.
    std::vector<std::vector<double>> options(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double off = x[i] - c[i];
      if (ball || !h) {
        if (std::abs(off) > tie_tol) options[i] = {sign_of(off)};
        else options[i] = {-1.0, 0.0, 1.0};
      } else {
        const double d = std::abs(off) - (*h)[i];
        if (d > tie_tol) options[i] = {sign_of(off)};
        else if (d >= -tie_tol) options[i] = {0.0, sign_of(off)};  // on a face
        else options[i] = {0.0};
      }
    }
    std::size_t count = 1;
    for (const auto& o : options) {
      count *= o.size();
      if (count > 729) throw SizeError("subgradient_selections: too many tie-break variants");
    }
    std::vector<Vector> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
      Vector g(m);
      std::size_t rest = n;
      for (Eigen::Index i = 0; i < m; ++i) {
        g[i] = options[i][rest % options[i].size()];
        rest /= options[i].size();
      }
      out.push_back(std::move(g));
    }
    return out;
  }

  // Max norm: one selection per axis tying for the maximal deficit.
  Vector deficits(m);
  for (Eigen::Index i = 0; i < m; ++i)
    deficits[i] = ball ? std::abs(x[i] - c[i]) : axis_deficit(x[i], c[i], h ? (*h)[i] : 0.0);
  const double dmax = deficits.maxCoeff();
  std::vector<Vector> out;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (deficits[i] >= dmax - tie_tol) {
      Vector g = Vector::Zero(m);
      g[i] = sign_of(x[i] - c[i]);
      out.push_back(std::move(g));
    }
  }
  return out;
}

bool norm_subdifferential_contains(NormKind norm, const Vector& v, const Vector& g,
                                   double tol) {
  if (v.size() != g.size())
    throw InvalidInputError("norm_subdifferential_contains: dimension mismatch");
  return dual_norm_eval(norm, g) <= 1.0 + tol && g.dot(v) >= norm_eval(norm, v) - tol;
}

}  // namespace sib
