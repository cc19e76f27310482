#pragma once

#include <climits>
#include <cstddef>
#include <string>
#include <vector>

#include "qreal/cf_core.hpp"

namespace qreal {

// Truncated Laurent series sum_{n >= v} c_n q^n; coefficients of q^n with
// n < exact_order() are exact, everything from exact_order() on is unknown.
class IntLaurent {
 public:
  static constexpr long kExact = LONG_MAX / 4;

  IntLaurent() = default;  // exact zero
  IntLaurent(long valuation, std::vector<mpz_class> coeffs, long exact_order);

  static IntLaurent from_poly(const IntPoly& p, long exact_order = kExact);
  static IntLaurent monomial(long k, const mpz_class& c = 1);
  // power series of num/den to absolute order K; den must have a unit
  // lowest coefficient
  static IntLaurent from_ratio(const IntPoly& num, const IntPoly& den, long K);
  static IntLaurent from_ratfunc(const RatFuncQ& f, long K) {
    return from_ratio(f.num(), f.den(), K);
  }

  long valuation() const { return val_; }
  long exact_order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  bool is_zero() const { return c_.empty(); }
  long stored_end() const { return val_ + static_cast<long>(c_.size()); }
  // coefficient of q^n; throws InsufficientData if n >= exact_order()
  mpz_class coeff(long n) const;
  // coefficients of q^0 .. q^{K-1} (requires valuation >= 0)
  std::vector<mpz_class> power_coeffs(long K) const;
  IntLaurent truncated(long K) const;

  IntLaurent operator-() const;
  friend IntLaurent operator+(const IntLaurent& a, const IntLaurent& b);
  friend IntLaurent operator-(const IntLaurent& a, const IntLaurent& b) { return a + (-b); }
  friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);
  IntLaurent shifted(long k) const;  // times q^k
  // inverse; lowest coefficient must be +-1
  IntLaurent inverse() const;
  // equality of the jointly exact parts
  bool congruent(const IntLaurent& o, long K) const;

  std::string str(long max_terms = 12) const;

 private:
  void normalize();
  long val_ = 0;
  std::vector<mpz_class> c_;
  long order_ = kExact;
};

IntLaurent translate(const IntLaurent& f, long n);

// [x]_q as a series, exact below q^K. Finite words are exact to all orders.
IntLaurent q_real_series(const DigitSource& src, long K);
// 1/[x]_q via sum q^{C_j}/(a_j a_{j+1}), exact below q^K
IntLaurent reciprocal_series(const DigitSource& src, long K);

struct RadiusEstimate {
  double value;       // max of |beta_n|^{1/n} over the window
  long argmax;        // n attaining it
  long window_lo, window_hi;
};
// window = number of top coefficients examined
RadiusEstimate radius_estimate(const IntLaurent& s, long window);
// ratio-test companion |beta_n / beta_{n-1}| averaged over the window tail
double ratio_estimate(const IntLaurent& s, long window);

constexpr double kRStar = 0.38196601125010515;  // (3 - sqrt 5)/2

struct GrowthSchedule {
  std::vector<long> n;           // n_1 < n_2 < ...
  std::vector<double> achieved;  // |beta_{n_m}|^{1/n_m}
  std::vector<double> target;    // 1/(R* + 1/m)
  std::vector<long> blocks;      // digits of the completed blocks
  long budget = 5000;
};

struct Counterexample {
  CFStream stream;  // x(m_max) = blocks followed by 2, 3, 3, ...
  GrowthSchedule schedule;
};

Counterexample counterexample_stream(int m_max, long budget = 5000);
// recompute every stage inequality from the final stream
bool verify_counterexample(const Counterexample& ce);

std::string coefficients_csv(const IntLaurent& s, long K);

}  // namespace qreal
