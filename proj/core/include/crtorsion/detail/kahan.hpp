#pragma once

#include <complex>

namespace crtorsion::detail {

/// Compensated accumulator; deterministic for a fixed input order.
class Kahan {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double sum() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanComplex {
 public:
  void add(std::complex<double> x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  std::complex<double> sum() const { return {re_.sum(), im_.sum()}; }

 private:
  Kahan re_, im_;
};

}  // namespace crtorsion::detail
