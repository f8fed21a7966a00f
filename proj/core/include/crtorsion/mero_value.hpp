#pragma once

#include <complex>
#include <stdexcept>

namespace crtorsion {

/// Result of evaluating a meromorphic function at a point: either a finite
/// value or a simple-pole marker with location and residue. Identity checks
/// need to tell a genuine pole apart from a numerical failure, so poles are
/// data here, never NaN.
struct MeroValue {
  enum class Kind { kFinite, kPole };

  static MeroValue finite(std::complex<double> v) {
    MeroValue m;
    m.kind_ = Kind::kFinite;
    m.value_ = v;
    return m;
  }

  static MeroValue pole(std::complex<double> location,
                        std::complex<double> residue) {
    MeroValue m;
    m.kind_ = Kind::kPole;
    m.location_ = location;
    m.residue_ = residue;
    return m;
  }

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_pole() const { return kind_ == Kind::kPole; }

  std::complex<double> value() const {
    if (!is_finite()) throw std::logic_error("MeroValue: pole has no finite value");
    return value_;
  }
  std::complex<double> location() const {
    if (!is_pole()) throw std::logic_error("MeroValue: finite value has no pole location");
    return location_;
  }
  std::complex<double> residue() const {
    if (!is_pole()) throw std::logic_error("MeroValue: finite value has no residue");
    return residue_;
  }

 private:
  Kind kind_ = Kind::kFinite;
  std::complex<double> value_{};
  std::complex<double> location_{};
  std::complex<double> residue_{};
};

}  // namespace crtorsion
