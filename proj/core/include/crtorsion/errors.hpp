#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace crtorsion {

/// Evaluation requested exactly on (or numerically indistinguishable from) a
/// pole of a meromorphic function. Carries the pole data.
class pole_error : public std::runtime_error {
 public:
  pole_error(const std::string& what, std::complex<double> location,
             std::complex<double> residue)
      : std::runtime_error(what), location_(location), residue_(residue) {}

  std::complex<double> location() const { return location_; }
  std::complex<double> residue() const { return residue_; }

 private:
  std::complex<double> location_;
  std::complex<double> residue_;
};

/// Input data violates a structural invariant (see seifert_model::validate).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncated sum could not reach the requested tolerance within its
/// term budget, or an extrapolation left too large a residual.
class tolerance_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rank or determinant decision fell too close to the zero threshold.
class ill_conditioned_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A check or command was configured with an invalid grid or point set.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crtorsion
