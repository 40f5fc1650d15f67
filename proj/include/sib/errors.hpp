#ifndef SIB_ERRORS_HPP
#define SIB_ERRORS_HPP

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace sib {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values: dimension mismatches, non-finite input, invalid ranges.
struct InvalidInputError : Error {
  using Error::Error;
};

// A documented precondition does not hold (e.g. subgradient requested at a
// point inside the set). Signals a logic bug in the caller, not bad data.
struct PreconditionError : Error {
  using Error::Error;
};

// Input exceeds the desk-scale limits of an intentionally exhaustive routine.
struct SizeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct UnsupportedFeatureError : Error {
  using Error::Error;
};

// The target sets share a common point: the problem degenerates to radius 0.
// Carries the witness point at which every set distance vanished.
struct CommonPointError : Error {
  CommonPointError(const std::string& what, Eigen::VectorXd witness_point)
      : Error(what), witness(std::move(witness_point)) {}
  Eigen::VectorXd witness;
};

}  // namespace sib

#endif  // SIB_ERRORS_HPP
