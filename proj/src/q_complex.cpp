#include "qreal/q_complex.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qreal/analytic_eval.hpp"
#include "qreal/cf_core.hpp"
#include "qreal/errors.hpp"

namespace qreal {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0, 1);

// near 0 the nome side of the cut is judged by the argument
double cut_distance(cplx L) {
  if (std::abs(L) < 1e-6 && L != 0.0) return kPi - std::abs(std::arg(L));
  double d0 = L.real() <= 0 ? std::abs(L.imag()) : std::abs(L);
  double d1 = L.real() >= 1 ? std::abs(L.imag()) : std::abs(L - 1.0);
  return std::min(d0, d1);
}

cplx cpow(cplx base, cplx e) { return std::exp(e * std::log(base)); }

cplx hyp_ratio(cplx c_num, cplx L, cplx zn, cplx s, double tol) {
  cplx den = gauss_2f1(0.5 - s, 0.5 + s, 1.0 + 2.0 * s, L, tol).value;
  if (std::abs(den) < 1e-10) throw Error(Errc::Pole, "q_complex: denominator hypergeometric vanishes");
  return gauss_2f1(0.5 - s, 0.5 + s, c_num, zn, tol).value / den;
}

cplx qint(double q, long n) { return (1 - std::pow(q, static_cast<double>(n))) / (1 - q); }

}  // namespace

QComplexParams QComplexParams::from_t(double t) {
  if (!(t > 0) || !std::isfinite(t)) throw Error(Errc::Domain, "QComplexParams: t > 0");
  return {t, std::exp(-t), cplx(0, -t / (2 * kPi))};
}

cplx gamma_prefactor(cplx s) {
  return std::exp(log_gamma(1.0 + 2.0 * s) + log_gamma(2.0 * s) - log_gamma(0.5 + s) - log_gamma(0.5 + 3.0 * s));
}

cplx q_complex_form1(cplx tau, cplx s, double tol) {
  cplx L = theta_lambda(tau).lambda;
  cplx X = (1.0 - L) / L;
  return I * std::exp(I * kPi * s) * cpow(X, 2.0 * s) * hyp_ratio(1.0 + 2.0 * s, L, 1.0 - L, s, tol);
}

cplx q_complex_form2(cplx tau, const QComplexParams& p, double tol) {
  cplx L = theta_lambda(tau).lambda;
  cplx X = (1.0 - L) / L;
  const cplx s = p.s;
  return I * std::exp(I * kPi * s) * gamma_prefactor(s) * cpow(X, 2.0 * s) * hyp_ratio(1.0 - 2.0 * s, L, L, s, tol) +
         1.0 / (1.0 - p.q);
}

QComplexValue q_complex_value(cplx tau, const QComplexParams& p, double tol, QComplexMode mode) {
  if (!(tau.imag() > 0)) throw Error(Errc::Domain, "q_complex_value: Im tau > 0");
  QComplexValue out;
  // the reduced point lies inside the Gamma(2) domain, where lambda avoids the cuts
  auto closed_form = [&](cplx at) {
    cplx L = theta_lambda(at).lambda;
    out.lambda = L;
    if (mode == QComplexMode::direct && cut_distance(L) < 1e-6)
      throw Error(Errc::BranchAmbiguity, "q_complex_value: lambda on a cut, continue along a path");
    out.used_form2 = std::abs(L) < 0.3;
    return out.used_form2 ? q_complex_form2(at, p, tol) : q_complex_form1(at, p.s, tol);
  };
  if (mode == QComplexMode::direct) {
    out.value = closed_form(tau);
    return out;
  }
  // ops: n != 0 is tau_prev = tau + n, n == 0 is tau_prev = -1/tau
  std::vector<long> ops;
  cplx z = tau;
  for (int it = 0;; ++it) {
    if (it > 10000) throw Error(Errc::EvaluationFailure, "q_complex_value: reduction did not terminate");
    long n = std::lround(z.real());
    if (n != 0) {
      z -= static_cast<double>(n);
      ops.push_back(n);
    }
    if (std::norm(z) < 1 - 1e-14) {
      z = -1.0 / z;
      ops.push_back(0);
    } else {
      break;
    }
  }
  cplx v = closed_form(z);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (*it == 0) {
      v = -1.0 / (p.q * v);
    } else {
      v = std::pow(p.q, static_cast<double>(*it)) * v + qint(p.q, *it);
    }
  }
  out.value = v;
  out.moves = static_cast<int>(ops.size());
  return out;
}

cplx h_value(cplx tau, const QComplexParams& p, double tol) {
  ModularPoint mp = theta_lambda(tau);
  cplx L = mp.lambda;
  if (cut_distance(L) < 1e-6) throw Error(Errc::BranchAmbiguity, "h_value: lambda on a cut");
  cplx w = mp.nome * (1.0 - L) / L;
  return I * std::exp(p.t / 2) * gamma_prefactor(p.s) * cpow(w, 2.0 * p.s) * hyp_ratio(1.0 - 2.0 * p.s, L, L, p.s, tol);
}

cplx h_limit(const QComplexParams& p) {
  return I * std::exp(I * kPi * p.s) * std::exp(-8.0 * p.s * std::log(2.0)) * gamma_prefactor(p.s);
}

cplx minusin_constant(const QComplexParams& p) {
  const double lq = std::log(p.q);
  const cplx u = lq / (kPi * I);  // log q / (pi i)
  return I * std::exp(-lq / 2) * std::exp(4.0 * u * std::log(2.0)) *
         std::exp(log_gamma(1.0 - u) + log_gamma(-u) - log_gamma(0.5 - u / 2.0) - log_gamma(0.5 - 1.5 * u));
}

cplx minusin_asymptotic(cplx tau, const QComplexParams& p) { return minusin_constant(p) * std::exp(-p.t * tau); }

cplx jacobi_poly(long n, cplx z) {
  if (n < 0) throw Error(Errc::Domain, "jacobi_poly: n >= 0");
  cplx sum = 0, w = (1.0 - z) / 2.0, wk = 1;
  for (long k = 0; k <= n; ++k) {
    double lc = std::lgamma(n + k + 1.0) - std::lgamma(n - k + 1.0) - std::lgamma(k + 1.0) + std::lgamma(2 * n + 2.0) -
                std::lgamma(2 * n + 2.0 + k);
    sum += (k % 2 ? -1.0 : 1.0) * std::exp(lc) * wk;
    wk *= w;
  }
  return sum;
}

cplx jacobi_special(long n, cplx tau, JacobiArgument arg) {
  cplx L = theta_lambda(tau).lambda;
  cplx den = jacobi_poly(n, 1.0 - 2.0 * L);
  if (den == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
  cplx num = jacobi_poly(n, arg == JacobiArgument::consistent ? 2.0 * L - 1.0 : 1.0 + 2.0 * L);
  cplx X = (1.0 - L) / L;
  return (n % 2 ? 1.0 : -1.0) * std::pow(X, static_cast<int>(2 * n + 1)) * num / den;
}

BoundaryReport boundary_check(const Rational& x0, Approach approach, long steps, double t, double M, double tol) {
  if (steps < 1 || !(M > 0)) throw Error(Errc::Domain, "boundary_check: steps >= 1, M > 0");
  QComplexParams p = QComplexParams::from_t(t);
  Rational x = x0;
  x.canonicalize();
  BoundaryReport rep;
  rep.x = x;
  rep.approach = approach;
  // g = [[a, b], [c, d]], ad - bc = 1, g(inf) = a/c
  mpz_class a = x.get_num(), c = x.get_den(), g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  const double A = a.get_d(), B = -v.get_d(), C = c.get_d(), D = u.get_d();
  if (approach == Approach::right) {
    rep.target = q_rational(x).eval(cplx(p.q));
  } else {
    Rational two = 2;
    mpz_class k = 0;
    if (x < two) {
      Rational gap = two - x;
      mpz_cdiv_q(k.get_mpz_t(), gap.get_num_mpz_t(), gap.get_den_mpz_t());
    }
    Rational shifted = x + Rational(k);
    shifted.canonicalize();
    rep.target = translate(left_limit(cf_encode_rational(shifted)), -k.get_si()).eval(cplx(p.q));
  }
  for (long n = 1; n <= steps; ++n) {
    cplx sigma(approach == Approach::right ? -static_cast<double>(n) : static_cast<double>(n), M);
    cplx tau = (A * sigma + B) / (C * sigma + D);
    BoundaryStep st;
    st.n = n;
    st.tau = tau;
    try {
      st.value = q_complex_value(tau, p, tol).value;
    } catch (const Error& e) {
      throw Error(Errc::EvaluationFailure, std::string("boundary_check: ") + e.what());
    }
    st.residual = std::abs(st.value - rep.target);
    rep.steps.push_back(st);
  }
  rep.decreasing = rep.steps.back().residual < rep.steps.front().residual;
  return rep;
}

}  // namespace qreal
