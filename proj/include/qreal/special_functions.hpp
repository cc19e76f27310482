#pragma once

#include <complex>

#include "qreal/q_series.hpp"

namespace qreal {

using cplx = std::complex<double>;

struct SeriesSum {
  cplx value;
  long terms_used = 0;
  double tail_bound = 0.0;
};

// J(c,q,z) = sum (-1)^n q^{n(n-1)} c^n z^n / ((c;q)_n (q;q)_n)
SeriesSum q_bessel(cplx c, cplx q, cplx z, double tol);

// [s]_q J(q^s, q^r, X) / J(q^{r+s}, q^r, X), X = (1-q)^2/q; equals [x]_q for
// the stream (s, s+r, s+2r, ...)
cplx transcendental_qvalue(long s, long r, double q, double tol);
// q -> 1 limit J_{s/r-1}(2/r) / J_{s/r}(2/r)
double transcendental_limit(long s, long r, double tol = 1e-15);

// J_m(2)_q = sum (-1)^n q^{n(n+m-1)} / ([n]_q! [n+m]_q!) mod q^K
IntLaurent bessel_jm2_series(long m, long K);
// the same sum with the exponent n(n+m-2) as printed
IntLaurent bessel_jm2_series_as_printed(long m, long K);

SeriesSum classical_bessel(double nu, double z, double tol);

// renormalized q-trigonometric functions, 0 <= q <= 1
SeriesSum q_cos(double q, double z, double tol);
SeriesSum q_sin(double q, double z, double tol);
double q_cotan(double q, double z, double tol);

cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);

// principal branch on C \ [1, inf)
SeriesSum gauss_2f1(cplx a, cplx b, cplx c, cplx z, double tol);
// Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)); needs Re(c-a-b) >= 0, c-a-b != 0
cplx gauss_2f1_at_one(cplx a, cplx b, cplx c);

struct ModularPoint {
  cplx tau;
  cplx nome;  // e^{pi i tau}
  cplx theta00, theta10, theta01;
  cplx lambda;
};
ModularPoint theta_lambda(cplx tau, double tol = 1e-16);

}  // namespace qreal
