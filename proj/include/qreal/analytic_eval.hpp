#pragma once

#include <complex>
#include <string>

#include "qreal/cf_core.hpp"

namespace qreal {

using cplx = std::complex<double>;

enum class CertFlag { certified, heuristic };
const char* flag_name(CertFlag f);

struct CertifiedComplex {
  cplx value;
  double err = 0.0;
  CertFlag flag = CertFlag::heuristic;
  long terms = 0;
};

struct RegionParams {
  double r = 0.0;
  double theta = 0.0;  // in [0, 2 pi)
  double a = 1.0;      // root > 1 of (1/r - r)/sqrt(r + 1/r - 2 cos theta) = a + 1/a
  double alpha = 0.0;  // sqrt(r) * a
};

// Complex disk of midpoint m and radius rad; every operation inflates the
// radius to cover floating point rounding.
struct Ball {
  cplx m;
  double rad = 0.0;

  static Ball exact(cplx v) { return {v, 0.0}; }
  static Ball rounded(cplx v, double rel_ulps = 4.0);
  double mag_upper() const { return std::abs(m) + rad; }
  double mag_lower() const { return std::abs(m) - rad; }
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);  // throws if b may contain 0
};

// true iff r + 1/r - 2 > 4 sin(theta/2); q = 0 is inside by convention
bool in_region_D(cplx q);
// boundary radius r(theta) of D
double region_D_boundary(double theta);
RegionParams solve_a(cplx q);
// |q + 1 + sqrt(1 - q + q^2)| >= 3 sqrt|q| with |q| < 1
bool in_drop_region(cplx q);

constexpr double kDiskRadius = 0.2679491924311227;  // 2 - sqrt 3

CertifiedComplex eval_in_D(const DigitSource& src, cplx q, double tol, long max_terms = 1000000);
CertifiedComplex eval_in_disk(const DigitSource& src, cplx q, double tol, long max_terms = 1000000);
CertifiedComplex eval_negative_q(const DigitSource& src, double q, double tol,
                                 long max_terms = 2000000);
// generic partial-sum evaluation with the geometric-decay stop rule; no
// region check, always heuristic
CertifiedComplex eval_series(const DigitSource& src, cplx q, double tol, long max_terms = 1000000);

double continuant_min_modulus(long d, double R, double r);

// [x]_q^- = [[c_1, ..., c_N, infinity]]_q
RatFuncQ left_limit(const CFWord& w);
cplx left_limit_value(const CFWord& w, cplx q);
// [[c_1..c_N]]_q by backward evaluation of the finite fraction
cplx word_value(const CFWord& w, cplx q);

struct XLimits {
  cplx plus_infinity;  // 1/(1-q)
  std::string minus_infinity;
};
XLimits x_limits(cplx q);

// Closed forms on the negative axis q = -r, 0 < r < R*.
struct NegativeEnvelope {
  double r;
  double a;      // root > 1 of a + 1/a = 1/r - 1 + r
  double S1;     // sup over [1,2): [phi]_q = 1 - r + 1/a
  double I2;     // inf over [2,3): [1+phi]_q = r a
  double I1;     // inf over [1,2): [3-phi]_q = 1 - r + r/S1
  double S1_as_printed;  // 1 + a - r
  double I2_as_printed;  // r/a
};
NegativeEnvelope negative_envelope(double r);

}  // namespace qreal
