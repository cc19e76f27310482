#include "qreal/cf_core.hpp"

#include <sstream>

#include "qreal/errors.hpp"

namespace qreal {

long CFWord::weight() const {
  long s = 0;
  for (long c : digits) s += c - 1;
  return s;
}

bool CFWord::valid() const {
  if (digits.empty()) return false;
  if (digits.size() == 1) return digits[0] >= 1;
  for (long c : digits)
    if (c < 2) return false;
  return true;
}

void CFWord::validate() const {
  if (!valid()) throw Error(Errc::Domain, "invalid continued fraction word " + str());
}

std::string CFWord::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < digits.size(); ++i) os << (i ? "," : "") << digits[i];
  os << "]";
  return os.str();
}

CFStream::CFStream(Generator g, std::string name)
    : gen_(std::move(g)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {}

long CFStream::digit(std::size_t i) const {
  if (i == 0) throw Error(Errc::Domain, "CFStream: indices start at 1");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& d = cache_->digits;
  while (d.size() < i) {
    long c = gen_(d.size() + 1);
    if (c < 2) throw Error(Errc::Domain, "CFStream " + name_ + ": digit below 2");
    d.push_back(c);
  }
  return d[i - 1];
}

std::vector<long> CFStream::prefix(std::size_t n) const {
  std::vector<long> out;
  out.reserve(n);
  if (n > 0) digit(n);
  std::lock_guard<std::mutex> lock(cache_->mu);
  out.assign(cache_->digits.begin(), cache_->digits.begin() + static_cast<long>(n));
  return out;
}

CFStream phi_stream() {
  return CFStream([](std::size_t i) { return i == 1 ? 2L : 3L; }, "phi");
}

CFStream arith_stream(long s, long r) {
  if (s < 2 || r < 0) throw Error(Errc::Domain, "arith_stream: need s >= 2, r >= 0");
  return CFStream([s, r](std::size_t i) { return s + r * static_cast<long>(i - 1); },
                  "arith:" + std::to_string(s) + "," + std::to_string(r));
}

CFStream eventually_periodic_stream(std::vector<long> head, std::vector<long> period,
                                    std::string name) {
  if (period.empty()) throw Error(Errc::Domain, "eventually_periodic_stream: empty period");
  return CFStream(
      [head = std::move(head), period = std::move(period)](std::size_t i) {
        if (i <= head.size()) return head[i - 1];
        return period[(i - head.size() - 1) % period.size()];
      },
      std::move(name));
}

DigitSource::DigitSource(const CFWord& w) : word_(w) { w.validate(); }
DigitSource::DigitSource(const CFStream& s) : stream_(s) {}

std::size_t DigitSource::length() const {
  if (!word_) throw Error(Errc::Domain, "DigitSource: stream has no length");
  return word_->size();
}

long DigitSource::digit(std::size_t i) const {
  if (word_) {
    if (i == 0 || i > word_->size()) throw Error(Errc::StreamExhausted, "word index out of range");
    return word_->digits[i - 1];
  }
  return stream_->digit(i);
}

std::vector<long> DigitSource::prefix(std::size_t n) const {
  if (word_) {
    n = std::min(n, word_->size());
    return {word_->digits.begin(), word_->digits.begin() + static_cast<long>(n)};
  }
  return stream_->prefix(n);
}

std::string DigitSource::name() const { return word_ ? word_->str() : stream_->name(); }

// ---------------------------------------------------------------------------

CFWord cf_encode_rational(const Rational& x0) {
  if (x0 < 1) throw Error(Errc::Domain, "cf_encode_rational: x < 1");
  Rational x = x0;
  x.canonicalize();
  CFWord w;
  while (true) {
    if (x.get_den() == 1) {
      w.digits.push_back(x.get_num().get_si());
      break;
    }
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    w.digits.push_back(c.get_si());
    x = 1 / (Rational(c) - x);
    x.canonicalize();
  }
  return w;
}

Rational cf_decode(const CFWord& w) {
  w.validate();
  mpz_class a0 = 1, a1 = w.digits[0], b0 = 0, b1 = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    mpz_class a2 = w.digits[i] * a1 - a0;
    mpz_class b2 = w.digits[i] * b1 - b0;
    a0 = a1;
    a1 = a2;
    b0 = b1;
    b1 = b2;
  }
  Rational r(a1, b1);
  r.canonicalize();
  return r;
}

CFWord cf_encode_real(const std::string& decimal, std::size_t n) {
  std::string s = decimal;
  auto dot = s.find('.');
  std::size_t places = 0;
  std::string digits;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '.') continue;
    if (ch < '0' || ch > '9') throw Error(Errc::Domain, "cf_encode_real: bad decimal " + decimal);
    digits.push_back(ch);
    if (dot != std::string::npos && i > dot) ++places;
  }
  if (digits.empty()) throw Error(Errc::Domain, "cf_encode_real: empty input");
  mpz_class num(digits, 10), den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
  Rational lo(num, den), hi(num + 1, den);
  lo.canonicalize();
  hi.canonicalize();
  return cf_encode_interval(lo, hi, n);
}

CFWord cf_encode_interval(Rational lo, Rational hi, std::size_t n) {
  if (lo < 1) throw Error(Errc::Domain, "cf_encode_interval: x < 1");
  CFWord w;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    // every point of [lo, hi] must lie strictly inside (fl, fl + 1)
    if (lo == Rational(fl) || hi >= Rational(fl + 1))
      throw Error(Errc::PrecisionExhausted,
                  "cf_encode_real: digit " + std::to_string(k + 1) + " not determined");
    mpz_class c = fl + 1;
    w.digits.push_back(c.get_si());
    Rational nlo = 1 / (Rational(c) - lo), nhi = 1 / (Rational(c) - hi);
    nlo.canonicalize();
    nhi.canonicalize();
    lo = nlo;
    hi = nhi;
  }
  return w;
}

// ---------------------------------------------------------------------------

std::vector<IntPoly> continuant_numerators(const std::vector<long>& digits) {
  std::vector<IntPoly> a;
  a.reserve(digits.size() + 1);
  a.push_back(IntPoly{1});
  if (digits.empty()) return a;
  a.push_back(IntPoly::qint(digits[0]));
  for (std::size_t i = 1; i < digits.size(); ++i) {
    a.push_back(IntPoly::qint(digits[i]) * a[i] - a[i - 1].shifted(digits[i - 1] - 1));
  }
  return a;
}

Continuants q_continuants(const std::vector<long>& digits) {
  IntPoly a0{1}, b0{}, a1, b1{1};
  if (digits.empty()) return {a0, b0};
  a1 = IntPoly::qint(digits[0]);
  for (std::size_t i = 1; i < digits.size(); ++i) {
    IntPoly ci = IntPoly::qint(digits[i]);
    long sh = digits[i - 1] - 1;
    IntPoly a2 = ci * a1 - a0.shifted(sh);
    IntPoly b2 = ci * b1 - b0.shifted(sh);
    a0 = std::move(a1);
    a1 = std::move(a2);
    b0 = std::move(b1);
    b1 = std::move(b2);
  }
  return {a1, b1};
}

RatFuncQ q_rational(const CFWord& w) {
  w.validate();
  auto [a, b] = q_continuants(w.digits);
  // a_N b_{N+1} - a_{N+1} b_N = q^{C_N} and b_N(0) = 1, so a_N, b_N are coprime
  return RatFuncQ::from_coprime(std::move(a), std::move(b));
}

RatFuncQ q_integer(long n) {
  if (n >= 0) return RatFuncQ(IntPoly::qint(n));
  return RatFuncQ(-IntPoly::qint(-n), IntPoly::monomial(-n));
}

RatFuncQ translate(const RatFuncQ& f, long n) {
  if (n == 0) return f;
  return RatFuncQ::laurent_monomial(n) * f + q_integer(n);
}

RatFuncQ q_rational(const Rational& x0) {
  Rational x = x0;
  x.canonicalize();
  if (x >= 1) return q_rational(cf_encode_rational(x));
  mpz_class n;
  Rational one_minus = 1 - x;
  one_minus.canonicalize();
  mpz_cdiv_q(n.get_mpz_t(), one_minus.get_num_mpz_t(), one_minus.get_den_mpz_t());
  Rational y = x + Rational(n);
  y.canonicalize();
  return translate(q_rational(cf_encode_rational(y)), -n.get_si());
}

RatFuncQ reciprocal_argument(const Rational& x0) {
  Rational x = x0;
  x.canonicalize();
  if (x == 0) throw Error(Errc::DivisionByZero, "reciprocal_argument: x = 0");
  if (x < 0) {
    Rational r = 1 / x;
    r.canonicalize();
    return q_rational(r);
  }
  if (x <= 1) {
    Rational r = 1 / x;
    r.canonicalize();
    return q_rational(cf_encode_rational(r));
  }
  // [1/x]_q = [1/y]_q / ([1/y]_q + q^{-1}) with y = x - 1
  RatFuncQ g = reciprocal_argument(x - 1);
  return g / (g + RatFuncQ::laurent_monomial(-1));
}

RatFuncQ negate_reciprocal(const RatFuncQ& f) {
  if (f.is_zero()) throw Error(Errc::DivisionByZero, "negate_reciprocal: [x]_q = 0");
  Rational x = f.at_one();
  if (x == 0) throw Error(Errc::DivisionByZero, "negate_reciprocal: x = 0");
  return -(RatFuncQ::laurent_monomial(-1) / reciprocal_argument(x));
}

RatFuncQ parameter_inverse(const RatFuncQ& f) { return f.substitute_inverse(); }

IntPoly infinity_continuant(const CFWord& w) {
  w.validate();
  auto a = continuant_numerators(w.digits);
  const std::size_t n = w.size();
  IntPoly one_minus_q{1, -1};
  return a[n] - (one_minus_q * a[n - 1]).shifted(w.digits[n - 1] - 1);
}

}  // namespace qreal
