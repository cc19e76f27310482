#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qreal {

using Rational = mpq_class;

// Dense polynomial in q with integer coefficients, lowest degree first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(long deg, const mpz_class& c = 1);
  // [n]_q = 1 + q + ... + q^{n-1}, n >= 0
  static IntPoly qint(long n);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(long i) const;
  const mpz_class& lead() const { return c_.back(); }
  long valuation() const;  // lowest nonzero degree; -1 for zero

  IntPoly shifted(long k) const;  // times q^k, k >= 0
  IntPoly reversed() const;       // q^deg p(1/q)
  IntPoly derivative() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& s);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  mpz_class at_one() const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;
  std::complex<double> eval(std::complex<double> x) const;
  // exact value at re + i*im
  std::pair<Rational, Rational> eval(const Rational& re, const Rational& im) const;

  mpz_class content() const;  // positive gcd of coefficients, 0 for zero poly
  IntPoly primitive() const;  // divided by content, leading coefficient > 0
  IntPoly div_exact(const mpz_class& s) const;
  // exact quotient a/b; throws if b does not divide a over Z
  static IntPoly div_exact(const IntPoly& a, const IntPoly& b);
  static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, lc > 0

  std::string str(char var = 'q') const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Ratio of two integer polynomials, kept reduced: gcd(num, den) = 1,
// integer contents coprime, den with positive leading coefficient.
class RatFuncQ {
 public:
  RatFuncQ() : num_(), den_(IntPoly{1}) {}
  RatFuncQ(IntPoly num, IntPoly den);
  explicit RatFuncQ(const IntPoly& p) : num_(p), den_(IntPoly{1}) {}
  // skips the gcd step; caller guarantees coprimality
  static RatFuncQ from_coprime(IntPoly num, IntPoly den);
  // c * q^k for any integer k
  static RatFuncQ laurent_monomial(long k, const mpz_class& c = 1);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFuncQ operator-() const;
  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // value at q = 1; throws DivisionByZero if the denominator vanishes there
  Rational at_one() const;
  Rational eval(const Rational& q) const;
  double eval(double q) const;
  std::complex<double> eval(std::complex<double> q) const;
  std::pair<Rational, Rational> eval(const Rational& re, const Rational& im) const;
  // f(1/q) as a rational function in q
  RatFuncQ substitute_inverse() const;

  std::string str() const;

 private:
  void normalize();
  IntPoly num_, den_;
};

}  // namespace qreal
