#include "qreal/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "qreal/errors.hpp"

namespace qreal {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0, 1);

bool near_nonpositive_integer(cplx z) {
  return std::abs(z.imag()) < 1e-14 && z.real() < 0.5 && std::abs(z.real() - std::round(z.real())) < 1e-14;
}

double rgamma(double x) {
  if (x <= 0 && x == std::floor(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

}  // namespace

SeriesSum q_bessel(cplx c, cplx q, cplx z, double tol) {
  if (!(std::abs(q) < 1)) throw Error(Errc::Domain, "q_bessel: |q| < 1");
  {
    cplx cq = c;
    for (int k = 0; k < 100000; ++k) {
      if (std::abs(1.0 - cq) < 1e-14) throw Error(Errc::PoleParameter, "q_bessel: c = q^{-m}");
      if (std::abs(cq) < 1e-3) break;
      cq *= q;
    }
  }
  const double aq = std::abs(q), acz = std::abs(c * z);
  SeriesSum r;
  cplx term = 1, sum = 1, q2n = 1, cqn = c, qn1 = q;
  double aqn = 1;  // |q|^n
  for (long n = 0; n < 100000; ++n) {
    double denom = (1 - std::abs(c) * aqn) * (1 - aqn * aq);
    if (denom > 0) {
      double rho = std::abs(q2n) * acz / denom;
      if (rho < 1) {
        double tail = std::abs(term) * rho / (1 - rho);
        if (tail <= tol) {
          r.value = sum;
          r.terms_used = n + 1;
          r.tail_bound = tail;
          return r;
        }
      }
    }
    term *= -q2n * c * z / ((1.0 - cqn) * (1.0 - qn1));
    sum += term;
    q2n *= q * q;
    cqn *= q;
    qn1 *= q;
    aqn *= aq;
  }
  throw Error(Errc::ToleranceUnreachable, "q_bessel: no convergence");
}

cplx transcendental_qvalue(long s, long r, double q, double tol) {
  if (s < 1 || r < 1 || !(q > 0 && q < 1)) throw Error(Errc::Domain, "transcendental_qvalue: s, r >= 1, 0 < q < 1");
  const double X = (1 - q) * (1 - q) / q;
  const double qs = std::pow(q, static_cast<double>(s)), qr = std::pow(q, static_cast<double>(r));
  SeriesSum num = q_bessel(qs, qr, X, tol * 1e-3);
  SeriesSum den = q_bessel(qs * qr, qr, X, tol * 1e-3);
  double qint = (1 - qs) / (1 - q);
  return qint * num.value / den.value;
}

double transcendental_limit(long s, long r, double tol) {
  if (s < 1 || r < 1) throw Error(Errc::Domain, "transcendental_limit: s, r >= 1");
  double nu = static_cast<double>(s) / static_cast<double>(r), z = 2.0 / static_cast<double>(r);
  return classical_bessel(nu - 1, z, tol).value.real() / classical_bessel(nu, z, tol).value.real();
}

namespace {

IntLaurent jm2(long m, long K, long shift) {
  if (m < 0 || K < 1) throw Error(Errc::Domain, "bessel_jm2_series: m >= 0, K >= 1");
  IntLaurent total = IntLaurent().truncated(K);
  IntPoly fact_n{1}, fact_nm{1};
  for (long j = 1; j <= m; ++j) fact_nm = fact_nm * IntPoly::qint(j);
  for (long n = 0;; ++n) {
    if (n > 0) {
      fact_n = fact_n * IntPoly::qint(n);
      fact_nm = fact_nm * IntPoly::qint(n + m);
    }
    long e = n * (n + m + shift);
    if (e >= K && n > 1) break;
    if (e >= K) continue;
    IntPoly sign{n % 2 ? -1 : 1};
    total = total + IntLaurent::from_ratio(sign, fact_n * fact_nm, K - e).shifted(e);
  }
  return total.truncated(K);
}

}  // namespace

IntLaurent bessel_jm2_series(long m, long K) { return jm2(m, K, -1); }
IntLaurent bessel_jm2_series_as_printed(long m, long K) { return jm2(m, K, -2); }

SeriesSum classical_bessel(double nu, double z, double tol) {
  if (z < 0) throw Error(Errc::Domain, "classical_bessel: z >= 0");
  SeriesSum r;
  const double h = z / 2;
  if (z == 0) {
    r.value = nu == 0 ? 1.0 : 0.0;
    return r;
  }
  double sum = 0;
  for (long n = 0; n < 10000; ++n) {
    double dn = static_cast<double>(n);
    double t = std::pow(h, 2 * dn + nu) * rgamma(dn + 1) * rgamma(dn + nu + 1) * (n % 2 ? -1 : 1);
    sum += t;
    if (dn + nu + 1 > 0) {
      double rho = h * h / ((dn + 1) * (dn + nu + 1));
      if (rho < 1 && t != 0) {
        double tail = std::abs(t) * rho / (1 - rho);
        if (tail <= tol) {
          r.value = sum;
          r.terms_used = n + 1;
          r.tail_bound = tail;
          return r;
        }
      }
    }
  }
  throw Error(Errc::ToleranceUnreachable, "classical_bessel: no convergence");
}

namespace {

// sum_n (-1)^n q^{e(n)} z^{2n+off} / [2n+off]_q!, ratio -q^{4n+1+2off} z^2/([2n+1+off][2n+2+off])
SeriesSum q_trig(double q, double z, double tol, int off) {
  if (!(q >= 0 && q <= 1)) throw Error(Errc::Domain, "q_cos/q_sin: 0 <= q <= 1");
  auto qint = [q](long k) {
    return q == 1 ? static_cast<double>(k) : (1 - std::pow(q, static_cast<double>(k))) / (1 - q);
  };
  double term = off ? z : 1.0, sum = term;
  for (long n = 0; n < 100000; ++n) {
    double ratio = std::pow(q, static_cast<double>(4 * n + 1 + 2 * off)) * z * z /
                   (qint(2 * n + 1 + off) * qint(2 * n + 2 + off));
    if (ratio < 1) {
      double tail = std::abs(term) * ratio / (1 - ratio);
      if (tail <= tol) return {sum, n + 1, tail};
    }
    term *= -ratio;
    sum += term;
  }
  throw Error(Errc::ToleranceUnreachable, "q_cos/q_sin: no convergence");
}

}  // namespace

SeriesSum q_cos(double q, double z, double tol) { return q_trig(q, z, tol, 0); }
SeriesSum q_sin(double q, double z, double tol) { return q_trig(q, z, tol, 1); }

double q_cotan(double q, double z, double tol) {
  double c = q_cos(q, z, tol).value.real(), s = q_sin(q, z, tol).value.real();
  if (std::abs(s) < 1e-14 * std::max(1.0, std::abs(c))) throw Error(Errc::ZeroDenominator, "q_cotan: Sin_q(z) = 0");
  return c / s;
}

cplx log_gamma(cplx z) {
  if (near_nonpositive_integer(z) && z.real() == std::round(z.real()) && z.imag() == 0)
    throw Error(Errc::Pole, "log_gamma: pole");
  // upward recurrence keeps the branch continuous off (-inf, 0]
  cplx shift = 0, w = z;
  while (w.real() < 15) {
    shift += std::log(w);
    w += 1.0;
  }
  static const double B[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
  cplx s = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2 * kPi);
  cplx winv = 1.0 / w, wp = winv, w2 = winv * winv;
  for (int k = 1; k <= 8; ++k) {
    s += B[k - 1] / (2.0 * k * (2.0 * k - 1)) * wp;
    wp *= w2;
  }
  return s - shift;
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

namespace {

bool terminating(cplx a) {
  return std::abs(a.imag()) < 1e-14 && a.real() <= 0 && std::abs(a.real() - std::round(a.real())) < 1e-14 &&
         a.real() > -1e6;
}

SeriesSum direct_2f1(cplx a, cplx b, cplx c, cplx z, double tol) {
  cplx term = 1, sum = 1;
  const double A = std::abs(a), Bm = std::abs(b), C = std::abs(c), az = std::abs(z);
  const bool finite = terminating(a) || terminating(b);
  for (long n = 0; n < 200000; ++n) {
    double dn = static_cast<double>(n);
    if (!finite && dn > C) {
      double rho = az * (dn + A) / (dn - C) * std::max(1.0, (dn + Bm) / (dn + 1));
      if (rho < 1) {
        double tail = std::abs(term) * rho / (1 - rho);
        if (tail <= tol * std::max(1.0, std::abs(sum)) * 1e-2) return {sum, n + 1, tail};
      }
    }
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1)) * z;
    if (finite && term == 0.0) return {sum, n + 1, 0.0};
    sum += term;
  }
  throw Error(Errc::ToleranceUnreachable, "gauss_2f1: series did not converge");
}

// Taylor steps of z(1-z)F'' + (c-(a+b+1)z)F' - abF = 0 along the ray to z
SeriesSum ode_2f1(cplx a, cplx b, cplx c, cplx z, double tol) {
  cplx dir = z / std::abs(z);
  cplx z0 = 0.5 * dir;
  cplx F = direct_2f1(a, b, c, z0, tol * 1e-3).value;
  cplx dF = a * b / c * direct_2f1(a + 1.0, b + 1.0, c + 1.0, z0, tol * 1e-3).value;
  double err = 0;
  long terms = 0;
  const cplx r = -a * b, q1 = -(a + b + 1.0);
  while (std::abs(z - z0) > 1e-15) {
    double R = std::min(std::abs(z0), std::abs(1.0 - z0));
    cplx h = z - z0;
    if (std::abs(h) > 0.5 * R) h *= 0.5 * R / std::abs(h);
    const cplx p0 = z0 * (1.0 - z0), p1 = 1.0 - 2.0 * z0, q0 = c - (a + b + 1.0) * z0;
    cplx fk = F, fk1 = dF;  // f_k, f_{k+1}
    cplx hk = 1, val = F, der = dF;
    double small = 0;
    for (long k = 0; k < 2000; ++k) {
      double dk = static_cast<double>(k);
      cplx fk2 = -((p1 * dk * (dk + 1) + q0 * (dk + 1)) * fk1 + (-dk * (dk - 1) + q1 * dk + r) * fk) /
                 (p0 * (dk + 1) * (dk + 2));
      hk *= h;  // h^{k+1}
      cplx t1 = fk1 * hk;
      val += t1;
      der += (dk + 2) * fk2 * hk;
      ++terms;
      double mag = std::abs(t1);
      if (mag < 1e-18 * std::max(1.0, std::abs(val))) {
        if (++small == 3) {
          err += mag;
          break;
        }
      } else {
        small = 0;
      }
      fk = fk1;
      fk1 = fk2;
    }
    F = val;
    dF = der;
    z0 += h;
    err += 4e-16 * std::abs(F);
  }
  return {F, terms, err};
}

}  // namespace

cplx gauss_2f1_at_one(cplx a, cplx b, cplx c) {
  cplx d = c - a - b;
  if (d.real() < 0 || std::abs(d) < 1e-14) throw Error(Errc::UnreachableArgument, "gauss_2f1 at 1: Re(c-a-b) < 0");
  if (near_nonpositive_integer(c)) throw Error(Errc::PoleParameter, "gauss_2f1: c is a nonpositive integer");
  if (near_nonpositive_integer(c - a) || near_nonpositive_integer(c - b)) return 0.0;
  return std::exp(log_gamma(c) + log_gamma(d) - log_gamma(c - a) - log_gamma(c - b));
}

SeriesSum gauss_2f1(cplx a, cplx b, cplx c, cplx z, double tol) {
  if (near_nonpositive_integer(c)) throw Error(Errc::PoleParameter, "gauss_2f1: c is a nonpositive integer");
  if (z == 0.0) return {1.0, 1, 0.0};
  if (terminating(a) || terminating(b)) return direct_2f1(a, b, c, z, tol);
  if (z == 1.0) {
    if ((c - a - b).real() <= 0) throw Error(Errc::UnreachableArgument, "gauss_2f1: z = 1 with Re(c-a-b) <= 0");
    return {gauss_2f1_at_one(a, b, c), 0, 0.0};
  }
  if (z.imag() == 0 && z.real() > 1) throw Error(Errc::UnreachableArgument, "gauss_2f1: z on the cut [1, inf)");
  if (std::abs(z) <= 0.7) return direct_2f1(a, b, c, z, tol);
  cplx w = z / (z - 1.0);
  if (std::abs(w) <= 0.7) {
    SeriesSum s = direct_2f1(a, c - b, c, w, tol);
    cplx pre = std::exp(-a * std::log(1.0 - z));
    return {pre * s.value, s.terms_used, std::abs(pre) * s.tail_bound};
  }
  return ode_2f1(a, b, c, z, tol);
}

ModularPoint theta_lambda(cplx tau, double tol) {
  if (!(tau.imag() > 0)) throw Error(Errc::Domain, "theta_lambda: Im tau > 0");
  if (tau.imag() < 0.05) throw Error(Errc::ConvergenceTooSlow, "theta_lambda: Im tau below 0.05, reduce first");
  ModularPoint p;
  p.tau = tau;
  p.nome = std::exp(kI * kPi * tau);
  const double an = std::abs(p.nome), guard = tol * 1e-2;
  cplx t00 = 1, t01 = 1, s10 = 1;
  for (long n = 1;; ++n) {
    double dn = static_cast<double>(n);
    cplx qn2 = std::exp(kI * kPi * tau * (dn * dn));
    t00 += 2.0 * qn2;
    t01 += (n % 2 ? -2.0 : 2.0) * qn2;
    s10 += std::exp(kI * kPi * tau * (dn * (dn + 1)));
    if (std::pow(an, dn * dn) < guard) break;
  }
  p.theta00 = t00;
  p.theta01 = t01;
  p.theta10 = 2.0 * std::exp(kI * kPi * tau / 4.0) * s10;
  cplx r = s10 / t00;
  p.lambda = 16.0 * p.nome * (r * r) * (r * r);
  return p;
}

}  // namespace qreal
