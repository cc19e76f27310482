#include "qreal/poly.hpp"

#include <algorithm>
#include <sstream>

#include "qreal/errors.hpp"

namespace qreal {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(long deg, const mpz_class& c) {
  if (deg < 0) throw Error(Errc::Domain, "IntPoly::monomial: negative degree");
  std::vector<mpz_class> v(static_cast<std::size_t>(deg) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::qint(long n) {
  if (n < 0) throw Error(Errc::Domain, "IntPoly::qint: negative n");
  return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(1)));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

long IntPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<long>(i);
  return -1;
}

IntPoly IntPoly::shifted(long k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw Error(Errc::Domain, "IntPoly::shifted: negative shift");
  std::vector<mpz_class> v(static_cast<std::size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
  std::vector<mpz_class> v(c_.rbegin(), c_.rend());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(v));
}

mpz_class IntPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + Rational(*it);
  s.canonicalize();
  return s;
}

double IntPoly::eval(double x) const {
  double s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + it->get_d();
  return s;
}

std::complex<double> IntPoly::eval(std::complex<double> x) const {
  std::complex<double> s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + it->get_d();
  return s;
}

std::pair<Rational, Rational> IntPoly::eval(const Rational& re, const Rational& im) const {
  Rational sr = 0, si = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rational nr = sr * re - si * im + Rational(*it);
    Rational ni = sr * im + si * re;
    sr = nr;
    si = ni;
  }
  return {sr, si};
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead() < 0) g = -g;
  return div_exact(g);
}

IntPoly IntPoly::div_exact(const mpz_class& s) const {
  IntPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return r;
}

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "IntPoly::div_exact: zero divisor");
  if (a.is_zero()) return {};
  long da = a.degree(), db = b.degree();
  if (da < db) throw Error(Errc::Domain, "IntPoly::div_exact: not divisible");
  std::vector<mpz_class> r = a.c_;
  std::vector<mpz_class> quo(static_cast<std::size_t>(da - db + 1));
  for (long k = da - db; k >= 0; --k) {
    mpz_class& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
      throw Error(Errc::Domain, "IntPoly::div_exact: not divisible");
    mpz_class t = top / b.lead();
    quo[static_cast<std::size_t>(k)] = t;
    for (long j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k + j)] -= t * b.c_[static_cast<std::size_t>(j)];
  }
  for (const auto& x : r)
    if (x != 0) throw Error(Errc::Domain, "IntPoly::div_exact: nonzero remainder");
  return IntPoly(std::move(quo));
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "IntPoly::pseudo_rem: zero divisor");
  IntPoly r = a;
  const long db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    mpz_class t = r.lead();
    long s = r.degree() - db;
    r *= b.lead();
    r -= (b * t).shifted(s);
  }
  return r;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  IntPoly A = a.primitive(), B = b.primitive();
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.degree() == 0) return IntPoly{1};
    IntPoly R = pseudo_rem(A, B);
    A = std::move(B);
    B = R.primitive();
  }
  return A.primitive();
}

std::string IntPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const mpz_class& x = c_[i];
    if (x == 0) continue;
    mpz_class ax = abs(x);
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << ax.get_str();
      continue;
    }
    if (ax != 1) os << ax.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

RatFuncQ::RatFuncQ(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFuncQ RatFuncQ::from_coprime(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "RatFuncQ: zero denominator");
  RatFuncQ r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.num_.is_zero()) {
    r.den_ = IntPoly{1};
  } else if (r.den_.lead() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFuncQ RatFuncQ::laurent_monomial(long k, const mpz_class& c) {
  if (k >= 0) return from_coprime(IntPoly::monomial(k, c), IntPoly{1});
  return RatFuncQ(IntPoly::constant(c), IntPoly::monomial(-k));
}

void RatFuncQ::normalize() {
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "RatFuncQ: zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly{1};
    return;
  }
  IntPoly g = IntPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = IntPoly::div_exact(num_, g);
    den_ = IntPoly::div_exact(den_, g);
  }
  mpz_class cn = num_.content(), cd = den_.content(), c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.lead() < 0) c = -c;
  if (c != 1) {
    num_ = num_.div_exact(c);
    den_ = den_.div_exact(c);
  }
}

RatFuncQ RatFuncQ::operator-() const { return from_coprime(-num_, den_); }

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.den_ == b.den_) return RatFuncQ(a.num_ + b.num_, a.den_);
  return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
  return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "RatFuncQ: division by zero");
  return RatFuncQ(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFuncQ::at_one() const {
  mpz_class d = den_.at_one();
  if (d == 0) throw Error(Errc::DivisionByZero, "RatFuncQ::at_one: pole at q = 1");
  Rational r(num_.at_one(), d);
  r.canonicalize();
  return r;
}

Rational RatFuncQ::eval(const Rational& q) const {
  Rational d = den_.eval(q);
  if (d == 0) throw Error(Errc::DivisionByZero, "RatFuncQ::eval: pole");
  Rational r = num_.eval(q) / d;
  r.canonicalize();
  return r;
}

double RatFuncQ::eval(double q) const { return num_.eval(q) / den_.eval(q); }

std::complex<double> RatFuncQ::eval(std::complex<double> q) const {
  return num_.eval(q) / den_.eval(q);
}

std::pair<Rational, Rational> RatFuncQ::eval(const Rational& re, const Rational& im) const {
  auto [nr, ni] = num_.eval(re, im);
  auto [dr, di] = den_.eval(re, im);
  Rational m = dr * dr + di * di;
  if (m == 0) throw Error(Errc::DivisionByZero, "RatFuncQ::eval: pole");
  Rational xr = (nr * dr + ni * di) / m;
  Rational xi = (ni * dr - nr * di) / m;
  xr.canonicalize();
  xi.canonicalize();
  return {xr, xi};
}

RatFuncQ RatFuncQ::substitute_inverse() const {
  if (is_zero()) return *this;
  long shift = den_.degree() - num_.degree();
  IntPoly n = num_.reversed(), d = den_.reversed();
  if (shift >= 0)
    n = n.shifted(shift);
  else
    d = d.shifted(-shift);
  return RatFuncQ(std::move(n), std::move(d));
}

std::string RatFuncQ::str() const {
  if (den_ == IntPoly{1}) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qreal
