#pragma once

#include <complex>
#include <vector>

#include "qreal/poly.hpp"
#include "qreal/special_functions.hpp"

namespace qreal {

struct QComplexParams {
  double t = 0.0;
  double q = 0.0;  // e^{-t}
  cplx s;          // t/(2 pi i)
  static QComplexParams from_t(double t);
};

enum class QComplexMode {
  reduced,  // move tau into |Re| <= 1/2, |tau| >= 1, evaluate there, map back by the T/S rules
  direct,   // closed form at tau itself; needs lambda(tau) off the cuts
};

struct QComplexValue {
  cplx value;
  cplx lambda;       // at the point where the closed form was evaluated
  bool used_form2 = false;
  int moves = 0;     // T and S steps of the reduction
};

// [tau]_q. Pole if the denominator 2F1 is below 1e-10, BranchAmbiguity in
// direct mode when lambda is within 1e-6 of (-inf,0] or [1,inf).
QComplexValue q_complex_value(cplx tau, const QComplexParams& p, double tol = 1e-12,
                              QComplexMode mode = QComplexMode::reduced);

// the two closed forms, used directly at tau
cplx q_complex_form1(cplx tau, cplx s, double tol = 1e-12);
cplx q_complex_form2(cplx tau, const QComplexParams& p, double tol = 1e-12);

// Gamma(1+2s)Gamma(2s) / (Gamma(1/2+s)Gamma(1/2+3s))
cplx gamma_prefactor(cplx s);

// 1-periodic part, f = e^{-t tau} h + 1/(1-q); principal Log of nome (1-lambda)/lambda
cplx h_value(cplx tau, const QComplexParams& p, double tol = 1e-12);
// nome -> 0 limit of h
cplx h_limit(const QComplexParams& p);
// the same constant written through log q
cplx minusin_constant(const QComplexParams& p);
// C q^tau, the leading term of [tau]_q - 1/(1-q) as Im tau -> infinity
cplx minusin_asymptotic(cplx tau, const QComplexParams& p);

enum class JacobiArgument {
  consistent,  // P(2 lambda - 1) / P(1 - 2 lambda), agrees with form1 at s = n + 1/2
  as_printed,  // P(1 + 2 lambda) / P(1 - 2 lambda)
};
// renormalized Jacobi polynomial P_n^{(2n+1,-2n-1)}(z)
cplx jacobi_poly(long n, cplx z);
// [tau]_{(n+1/2)}; infinite value if the denominator polynomial vanishes
cplx jacobi_special(long n, cplx tau, JacobiArgument arg = JacobiArgument::consistent);

enum class Approach { right, left };
struct BoundaryStep {
  long n = 0;
  cplx tau;
  cplx value;
  double residual = 0.0;
};
struct BoundaryReport {
  Rational x;
  Approach approach = Approach::right;
  cplx target;
  std::vector<BoundaryStep> steps;
  bool decreasing = false;  // residual at the last step below the first
};
// tau_n = g(-n + iM) (right) or g(n + iM) (left), g in PSL2(Z) with g(inf) = x
BoundaryReport boundary_check(const Rational& x, Approach approach, long steps, double t, double M = 2.0,
                              double tol = 1e-12);

}  // namespace qreal
