#include "qreal/analytic_eval.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "qreal/errors.hpp"

namespace qreal {

namespace {

constexpr double kU = std::numeric_limits<double>::epsilon() / 2;
constexpr double kPi = std::numbers::pi;
constexpr double kRStarLocal = 0.38196601125010515;

double arg_0_2pi(cplx q) {
  double t = std::arg(q);
  if (t < 0) t += 2 * kPi;
  return t;
}

}  // namespace

const char* flag_name(CertFlag f) { return f == CertFlag::certified ? "certified" : "heuristic"; }

Ball Ball::rounded(cplx v, double rel_ulps) { return {v, rel_ulps * kU * std::abs(v)}; }

Ball operator+(const Ball& a, const Ball& b) {
  cplx m = a.m + b.m;
  return {m, (a.rad + b.rad + 2 * kU * std::abs(m)) * (1 + 4 * kU)};
}

Ball operator-(const Ball& a, const Ball& b) {
  cplx m = a.m - b.m;
  return {m, (a.rad + b.rad + 2 * kU * std::abs(m)) * (1 + 4 * kU)};
}

Ball operator*(const Ball& a, const Ball& b) {
  cplx m = a.m * b.m;
  double r = std::abs(a.m) * b.rad + std::abs(b.m) * a.rad + a.rad * b.rad + 4 * kU * std::abs(m);
  return {m, r * (1 + 8 * kU)};
}

Ball operator/(const Ball& a, const Ball& b) {
  double bm = std::abs(b.m);
  if (!(bm > b.rad)) throw Error(Errc::DivisionByZero, "Ball: divisor may vanish");
  cplx inv = 1.0 / b.m;
  double r = b.rad / (bm * (bm - b.rad)) + 6 * kU * std::abs(inv);
  return a * Ball{inv, r * (1 + 8 * kU)};
}

// ---------------------------------------------------------------------------

bool in_region_D(cplx q) {
  double r = std::abs(q);
  if (r == 0) return true;
  if (r > 1) throw Error(Errc::Domain, "in_region_D: |q| > 1, use parameter_inverse");
  double th = arg_0_2pi(q);
  return r + 1 / r - 2 > 4 * std::sin(th / 2);
}

double region_D_boundary(double theta) {
  double s = std::sin(theta / 2);
  return 1 + 2 * s - 2 * std::sqrt(s * s + s);
}

RegionParams solve_a(cplx q) {
  if (q == cplx(0)) throw Error(Errc::Domain, "solve_a: q = 0");
  if (!in_region_D(q)) throw Error(Errc::OutsideRegion, "solve_a: q outside D");
  RegionParams p;
  p.r = std::abs(q);
  p.theta = arg_0_2pi(q);
  double L = (1 / p.r - p.r) / std::sqrt(p.r + 1 / p.r - 2 * std::cos(p.theta));
  double h = L / 2;
  p.a = h + std::sqrt((h - 1) * (h + 1));
  p.alpha = std::sqrt(p.r) * p.a;
  return p;
}

bool in_drop_region(cplx q) {
  if (std::abs(q) >= 1) return false;
  return std::abs(q + 1.0 + std::sqrt(1.0 - q + q * q)) >= 3 * std::sqrt(std::abs(q));
}

double continuant_min_modulus(long d, double R, double r) {
  if (d < 1) throw Error(Errc::Domain, "continuant_min_modulus: d < 1");
  if (!(r > 0 && r < R && R <= 1)) throw Error(Errc::Domain, "continuant_min_modulus: need 0 < r < R <= 1");
  double s = (R - r) * (1 / R - r);
  if (d % 2 == 0) return std::pow(s, static_cast<double>(d / 2));
  return std::pow(s, static_cast<double>((d - 1) / 2)) * (1 - r);
}

// ---------------------------------------------------------------------------

namespace {

// q^k and [k]_q as balls, memoised per evaluation
class BallPowers {
 public:
  explicit BallPowers(cplx q) : q_(Ball::exact(q)), one_minus_(Ball::exact(1.0) - q_) { pow_.push_back(Ball::exact(1.0)); }

  const Ball& pow(long k) {
    while (static_cast<long>(pow_.size()) <= k) pow_.push_back(pow_.back() * q_);
    return pow_[static_cast<std::size_t>(k)];
  }
  Ball qint(long c) {
    auto it = qint_.find(c);
    if (it != qint_.end()) return it->second;
    Ball v = (Ball::exact(1.0) - pow(c)) / one_minus_;
    qint_.emplace(c, v);
    return v;
  }

 private:
  Ball q_, one_minus_;
  std::vector<Ball> pow_;
  std::map<long, Ball> qint_;
};

cplx qint_value(long c, cplx q) {
  if (q == cplx(1)) return static_cast<double>(c);
  return (1.0 - std::pow(q, static_cast<double>(c))) / (1.0 - q);
}

bool has_digit(const DigitSource& src, std::size_t i) { return !src.finite() || i <= src.length(); }

}  // namespace

CertifiedComplex eval_in_D(const DigitSource& src, cplx q, double tol, long max_terms) {
  if (q == cplx(0)) return {1.0, 0.0, CertFlag::certified, 0};
  if (!in_region_D(q)) throw Error(Errc::OutsideRegion, "eval_in_D: q outside D");
  if (!(tol > 0)) throw Error(Errc::ToleranceUnreachable, "eval_in_D: tol must be positive");
  RegionParams p = solve_a(q);
  const double log_r = std::log(p.r), log_a = std::log(p.a);
  const double log_pref = -0.5 * log_r - std::log1p(-1 / (p.a * p.a));
  const double lower = std::sqrt(p.r) / p.a * (1 - 1 / (p.a * p.a));

  BallPowers pw(q);
  long c_prev = src.digit(1);
  Ball R = pw.qint(c_prev);
  Ball term = Ball::exact(1.0) / R;
  Ball S = term;
  long N = 1;
  double excess = static_cast<double>(c_prev - 2);  // sum (c_i - 2)
  while (true) {
    double tau = 0.0;
    bool last = !has_digit(src, static_cast<std::size_t>(N) + 1);
    if (!last) tau = std::exp(log_pref + excess * log_r - (2.0 * N + 1) * log_a);
    double rho = S.rad + tau;
    double sm = std::abs(S.m);
    if (sm > rho) {
      double err_est = rho / (sm * (sm - rho));
      if (last || err_est <= tol / 2) {
        Ball V = Ball::exact(1.0) / Ball{S.m, rho};
        if (V.mag_upper() < lower)
          throw Error(Errc::EvaluationFailure, "eval_in_D: value below the nonvanishing bound");
        if (V.rad > tol) {
          if (last || tau < S.rad)
            throw Error(Errc::ToleranceUnreachable, "eval_in_D: rounding error exceeds tol");
        } else {
          return {V.m, V.rad, CertFlag::certified, N};
        }
      }
    }
    if (N >= max_terms) throw Error(Errc::ToleranceUnreachable, "eval_in_D: term budget exhausted");
    long c = src.digit(static_cast<std::size_t>(N) + 1);
    Ball qp = pw.pow(c_prev - 1);
    Ball Rn = pw.qint(c) - qp / R;
    term = term * qp / (R * Rn);
    S = S + term;
    R = Rn;
    c_prev = c;
    excess += static_cast<double>(c - 2);
    ++N;
  }
}

namespace {

// Partial sums of 1/[x]_q = sum q^{C_j}/(a_j a_{j+1}) with the ratio
// recursion; stop when a least-squares fit of log|term| over the last ten
// terms shows decay with ratio < 0.999 and the fitted geometric tail is small.
template <class Check>
CertifiedComplex heuristic_sum(const DigitSource& src, cplx q, double tol, long max_terms,
                               Check&& check) {
  if (q == cplx(0)) return {1.0, 0.0, CertFlag::heuristic, 0};
  long c_prev = src.digit(1);
  cplx R = qint_value(c_prev, q);
  cplx term = 1.0 / R;
  cplx S = term;
  double log_a = std::log(std::abs(R));
  long C = c_prev - 1;
  check(1L, C, log_a);
  std::array<double, 10> hist{};
  hist[0] = std::log(std::abs(term));
  long N = 1;
  while (true) {
    bool last = !has_digit(src, static_cast<std::size_t>(N) + 1);
    double sm = std::abs(S);
    if (last) {
      double err = 8 * kU * static_cast<double>(N) / sm;
      return {1.0 / S, err, CertFlag::heuristic, N};
    }
    if (N >= 10) {
      // slope over indices N-10 .. N-1
      double xm = 4.5, ym = 0, sxx = 0, sxy = 0;
      for (int i = 0; i < 10; ++i) ym += hist[static_cast<std::size_t>((N - 10 + i) % 10)];
      ym /= 10;
      for (int i = 0; i < 10; ++i) {
        double y = hist[static_cast<std::size_t>((N - 10 + i) % 10)];
        sxx += (i - xm) * (i - xm);
        sxy += (i - xm) * (y - ym);
      }
      double ratio = std::exp(sxy / sxx);
      if (ratio < 0.999) {
        double tail = std::abs(term) * ratio / (1 - ratio);
        double err = tail / (sm * (sm - std::min(tail, sm / 2))) + 8 * kU * static_cast<double>(N) / sm;
        if (tail < sm / 2 && err <= tol) return {1.0 / S, err, CertFlag::heuristic, N};
      }
    }
    if (N >= max_terms) throw Error(Errc::NoDecayDetected, "no geometric decay within the term budget");
    long c = src.digit(static_cast<std::size_t>(N) + 1);
    cplx qp = std::pow(q, static_cast<double>(c_prev - 1));
    cplx Rn = qint_value(c, q) - qp / R;
    term = term * qp / (R * Rn);
    S += term;
    R = Rn;
    log_a += std::log(std::abs(R));
    C += c - 1;
    c_prev = c;
    hist[static_cast<std::size_t>(N % 10)] = std::log(std::abs(term));
    ++N;
    check(N, C, log_a);
  }
}

}  // namespace

CertifiedComplex eval_series(const DigitSource& src, cplx q, double tol, long max_terms) {
  return heuristic_sum(src, q, tol, max_terms, [](long, long, double) {});
}

CertifiedComplex eval_negative_q(const DigitSource& src, double q, double tol, long max_terms) {
  if (!(q < 0 && q > -kRStarLocal)) throw Error(Errc::OutsideInterval, "eval_negative_q: need -R* < q < 0");
  CertifiedComplex r = heuristic_sum(src, cplx(q, 0), tol, max_terms, [](long, long, double) {});
  r.value = cplx(r.value.real(), 0.0);
  return r;
}

CertifiedComplex eval_in_disk(const DigitSource& src, cplx q, double tol, long max_terms) {
  const double r = std::abs(q);
  if (!(r < kDiskRadius)) throw Error(Errc::OutsideDisk, "eval_in_disk: |q| >= 2 - sqrt 3");
  if (r == 0) return {1.0, 0.0, CertFlag::heuristic, 0};
  // |a_N(q)| >= M(C_N, R*, |q|) holds for every continuant; a violation means
  // the floating recursion has gone wrong
  auto check = [r](long, long C, double log_a) {
    double M = continuant_min_modulus(std::max(C, 1L), kRStarLocal, r);
    if (log_a < std::log(M) - 1e-6)
      throw Error(Errc::EvaluationFailure, "eval_in_disk: continuant below the min-modulus bound");
  };
  // stop after three consecutive changes of the value below tol
  long c_prev = src.digit(1);
  cplx R = qint_value(c_prev, q);
  cplx term = 1.0 / R, S = term;
  double log_a = std::log(std::abs(R));
  long C = c_prev - 1, N = 1;
  check(N, C, log_a);
  cplx value = 1.0 / S;
  int small = 0;
  double last_delta = 0;
  while (true) {
    if (!has_digit(src, static_cast<std::size_t>(N) + 1))
      return {value, 8 * kU * static_cast<double>(N) * std::abs(value), CertFlag::heuristic, N};
    if (small >= 3) return {value, 3 * last_delta + 8 * kU * static_cast<double>(N) * std::abs(value), CertFlag::heuristic, N};
    if (N >= max_terms) throw Error(Errc::NoDecayDetected, "eval_in_disk: term budget exhausted");
    long c = src.digit(static_cast<std::size_t>(N) + 1);
    cplx qp = std::pow(q, static_cast<double>(c_prev - 1));
    cplx Rn = qint_value(c, q) - qp / R;
    term = term * qp / (R * Rn);
    S += term;
    R = Rn;
    log_a += std::log(std::abs(R));
    C += c - 1;
    c_prev = c;
    ++N;
    check(N, C, log_a);
    cplx nv = 1.0 / S;
    last_delta = std::abs(nv - value);
    small = last_delta < tol ? small + 1 : 0;
    value = nv;
  }
}

// ---------------------------------------------------------------------------

RatFuncQ left_limit(const CFWord& w) {
  w.validate();
  const std::size_t n = w.size();
  std::vector<long> pre(w.digits.begin(), w.digits.end() - 1);
  Continuants full = q_continuants(w.digits), head = q_continuants(pre);
  IntPoly one_minus_q{1, -1};
  const long sh = w.digits[n - 1] - 1;
  IntPoly A = full.a - (one_minus_q * head.a).shifted(sh);
  IntPoly B = full.b - (one_minus_q * head.b).shifted(sh);
  return RatFuncQ(A, B);
}

cplx word_value(const CFWord& w, cplx q) {
  w.validate();
  const std::size_t n = w.size();
  cplx v = qint_value(w.digits[n - 1], q);
  for (std::size_t i = n - 1; i-- > 0;) v = qint_value(w.digits[i], q) - std::pow(q, static_cast<double>(w.digits[i] - 1)) / v;
  return v;
}

cplx left_limit_value(const CFWord& w, cplx q) {
  w.validate();
  const std::size_t n = w.size();
  long cn = w.digits[n - 1];
  cplx v = qint_value(cn, q) - std::pow(q, static_cast<double>(cn - 1)) * (1.0 - q);
  for (std::size_t i = n - 1; i-- > 0;) v = qint_value(w.digits[i], q) - std::pow(q, static_cast<double>(w.digits[i] - 1)) / v;
  return v;
}

XLimits x_limits(cplx q) {
  if (q == cplx(1)) throw Error(Errc::Domain, "x_limits: q = 1");
  return {1.0 / (1.0 - q), "|[-n]_q| grows without bound like |q|^{-n}/|1-q|"};
}

NegativeEnvelope negative_envelope(double r) {
  if (!(r > 0 && r < kRStarLocal)) throw Error(Errc::OutsideInterval, "negative_envelope: need 0 < r < R*");
  NegativeEnvelope e;
  e.r = r;
  e.a = 0.5 * (r - 1 + 1 / r + std::sqrt((1 / r - 3 + r) * (1 / r + 1 + r)));
  e.S1 = 1 - r + 1 / e.a;
  e.I2 = r * e.a;
  e.I1 = 1 - r + r / e.S1;
  e.S1_as_printed = 1 + e.a - r;
  e.I2_as_printed = r / e.a;
  return e;
}

}  // namespace qreal
