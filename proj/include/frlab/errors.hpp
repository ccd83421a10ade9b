#ifndef FRLAB_ERRORS_HPP
#define FRLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMetric : Error {
  using Error::Error;
};

struct NonPositiveConformalFactor : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct PerturbationTooLarge : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

struct CoercivityLost : Error {
  CoercivityLost(const std::string& msg, double when = -1.0) : Error(msg), time(when) {}
  double time;
};

struct NaNDetected : Error {
  NaNDetected(const std::string& msg, double when = -1.0) : Error(msg), time(when) {}
  double time;
};

struct NonSpacelikeSlice : Error {
  using Error::Error;
};

struct StepRejected : Error {
  using Error::Error;
};

struct NoContraction : Error {
  using Error::Error;
};

struct UnresolvedData : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace frlab

#endif
