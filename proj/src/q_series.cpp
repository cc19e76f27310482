#include "qreal/q_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qreal/errors.hpp"

namespace qreal {

namespace {

long clamp_order(long k) { return std::min(k, IntLaurent::kExact); }

// log |z| for a nonzero integer
double log_abs(const mpz_class& z) {
  long e;
  double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

IntLaurent::IntLaurent(long valuation, std::vector<mpz_class> coeffs, long exact_order)
    : val_(valuation), c_(std::move(coeffs)), order_(clamp_order(exact_order)) {
  normalize();
}

void IntLaurent::normalize() {
  if (order_ < kExact) {
    long keep = order_ - val_;
    if (keep <= 0)
      c_.clear();
    else if (static_cast<long>(c_.size()) > keep)
      c_.resize(static_cast<std::size_t>(keep));
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = 0;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    val_ += static_cast<long>(lead);
  }
}

IntLaurent IntLaurent::from_poly(const IntPoly& p, long exact_order) {
  return IntLaurent(0, p.coeffs(), exact_order);
}

IntLaurent IntLaurent::monomial(long k, const mpz_class& c) {
  return IntLaurent(k, {c}, kExact);
}

IntLaurent IntLaurent::from_ratio(const IntPoly& num, const IntPoly& den, long K) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "IntLaurent::from_ratio: zero denominator");
  if (num.is_zero()) return IntLaurent(0, {}, kExact);
  const long vn = num.valuation(), vd = den.valuation();
  const auto& N = num.coeffs();
  const auto& D = den.coeffs();
  const mpz_class& d0 = D[static_cast<std::size_t>(vd)];
  if (abs(d0) != 1)
    throw Error(Errc::Domain, "IntLaurent::from_ratio: lowest denominator coefficient not a unit");
  const long v = vn - vd;
  const long terms = K - v;
  if (terms <= 0) return IntLaurent(0, {}, K);
  std::vector<mpz_class> y(static_cast<std::size_t>(terms));
  const long dlen = static_cast<long>(D.size()) - vd;
  mpz_class acc;
  for (long k = 0; k < terms; ++k) {
    long ni = vn + k;
    acc = ni < static_cast<long>(N.size()) ? N[static_cast<std::size_t>(ni)] : mpz_class(0);
    long jmax = std::min(k, dlen - 1);
    for (long j = 1; j <= jmax; ++j) {
      const mpz_class& dj = D[static_cast<std::size_t>(vd + j)];
      if (dj != 0) acc -= dj * y[static_cast<std::size_t>(k - j)];
    }
    y[static_cast<std::size_t>(k)] = d0 == 1 ? acc : mpz_class(-acc);
  }
  return IntLaurent(v, std::move(y), K);
}

mpz_class IntLaurent::coeff(long n) const {
  if (n >= order_)
    throw Error(Errc::InsufficientData, "IntLaurent::coeff: q^" + std::to_string(n) +
                                            " beyond exact order " + std::to_string(order_));
  long i = n - val_;
  if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

std::vector<mpz_class> IntLaurent::power_coeffs(long K) const {
  if (!is_zero() && val_ < 0) throw Error(Errc::Domain, "IntLaurent::power_coeffs: negative powers");
  std::vector<mpz_class> out(static_cast<std::size_t>(std::max(K, 0L)));
  for (long n = 0; n < K; ++n) out[static_cast<std::size_t>(n)] = coeff(n);
  return out;
}

IntLaurent IntLaurent::truncated(long K) const {
  return IntLaurent(val_, c_, std::min(order_, K));
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntLaurent operator+(const IntLaurent& a, const IntLaurent& b) {
  long order = std::min(a.order_, b.order_);
  if (a.is_zero()) return b.truncated(order);
  if (b.is_zero()) return a.truncated(order);
  long v = std::min(a.val_, b.val_);
  long top = std::max(a.val_ + static_cast<long>(a.c_.size()), b.val_ + static_cast<long>(b.c_.size()));
  top = std::min(top, order);
  if (top <= v) return IntLaurent(0, {}, order);
  std::vector<mpz_class> c(static_cast<std::size_t>(top - v));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    long e = a.val_ + static_cast<long>(i);
    if (e < top) c[static_cast<std::size_t>(e - v)] += a.c_[i];
  }
  for (std::size_t i = 0; i < b.c_.size(); ++i) {
    long e = b.val_ + static_cast<long>(i);
    if (e < top) c[static_cast<std::size_t>(e - v)] += b.c_[i];
  }
  return IntLaurent(v, std::move(c), order);
}

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
  // the valuation of an inexact zero is at least its order
  long va = a.is_zero() ? a.order_ : a.val_;
  long vb = b.is_zero() ? b.order_ : b.val_;
  long order = IntLaurent::kExact;
  if (a.order_ < IntLaurent::kExact) order = std::min(order, a.order_ + vb);
  if (b.order_ < IntLaurent::kExact) order = std::min(order, b.order_ + va);
  if (a.is_zero() || b.is_zero()) return IntLaurent(0, {}, order);
  long v = a.val_ + b.val_;
  long len = static_cast<long>(a.c_.size() + b.c_.size()) - 1;
  if (order < IntLaurent::kExact) len = std::min(len, order - v);
  if (len <= 0) return IntLaurent(0, {}, order);
  std::vector<mpz_class> c(static_cast<std::size_t>(len));
  for (long i = 0; i < static_cast<long>(a.c_.size()) && i < len; ++i) {
    const mpz_class& ai = a.c_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    long jmax = std::min(static_cast<long>(b.c_.size()), len - i);
    for (long j = 0; j < jmax; ++j)
      mpz_addmul(c[static_cast<std::size_t>(i + j)].get_mpz_t(), ai.get_mpz_t(),
                 b.c_[static_cast<std::size_t>(j)].get_mpz_t());
  }
  return IntLaurent(v, std::move(c), order);
}

IntLaurent IntLaurent::shifted(long k) const {
  IntLaurent r = *this;
  if (!r.is_zero()) r.val_ += k;
  if (r.order_ < kExact) r.order_ += k;
  return r;
}

IntLaurent IntLaurent::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "IntLaurent::inverse of zero");
  if (abs(c_[0]) != 1) throw Error(Errc::Domain, "IntLaurent::inverse: lowest coefficient not a unit");
  long rel = order_ >= kExact ? kExact : order_ - val_;
  if (rel >= kExact) {
    if (c_.size() == 1) return IntLaurent(-val_, {c_[0]}, kExact);
    throw Error(Errc::Domain, "IntLaurent::inverse: exact inverse of a non-monomial needs an order");
  }
  IntPoly p(c_);
  IntLaurent r = from_ratio(IntPoly{1}, p, rel);
  return r.shifted(-val_);
}

bool IntLaurent::congruent(const IntLaurent& o, long K) const {
  long top = std::min({K, order_, o.order_});
  long lo = std::min(is_zero() ? top : val_, o.is_zero() ? top : o.val_);
  for (long n = lo; n < top; ++n)
    if (coeff(n) != o.coeff(n)) return false;
  return true;
}

std::string IntLaurent::str(long max_terms) const {
  std::ostringstream os;
  long shown = 0;
  for (std::size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
    if (c_[i] == 0) continue;
    if (shown) os << " + ";
    os << c_[i].get_str() << "*q^" << val_ + static_cast<long>(i);
    ++shown;
  }
  if (shown == 0) os << "0";
  if (order_ < kExact) os << " + O(q^" << order_ << ")";
  return os.str();
}

IntLaurent translate(const IntLaurent& f, long n) {
  RatFuncQ qn = q_integer(n);
  IntLaurent in;
  if (n >= 0)
    in = IntLaurent::from_poly(qn.num());
  else
    in = IntLaurent(n, qn.num().coeffs(), IntLaurent::kExact);
  return IntLaurent::monomial(n) * f + in;
}

// ---------------------------------------------------------------------------

namespace {

// digits of the shortest prefix with weight >= K (or the whole word)
std::vector<long> prefix_reaching(const DigitSource& src, long K) {
  std::vector<long> d;
  long w = 0;
  for (std::size_t i = 1;; ++i) {
    if (src.finite() && i > src.length()) break;
    long c = src.digit(i);
    d.push_back(c);
    w += c - 1;
    if (w >= K) break;
  }
  return d;
}

IntPoly truncate_poly(const IntPoly& p, long K) {
  if (static_cast<long>(p.size()) <= K) return p;
  return IntPoly(std::vector<mpz_class>(p.coeffs().begin(), p.coeffs().begin() + K));
}

}  // namespace

IntLaurent q_real_series(const DigitSource& src, long K) {
  if (K < 1) throw Error(Errc::Domain, "q_real_series: K < 1");
  auto d = prefix_reaching(src, K);
  auto [a, b] = q_continuants(d);
  return IntLaurent::from_ratio(a, b, K);
}

IntLaurent reciprocal_series(const DigitSource& src, long K) {
  if (K < 1) throw Error(Errc::Domain, "reciprocal_series: K < 1");
  auto d = prefix_reaching(src, K);
  auto a = continuant_numerators(d);
  IntLaurent sum(0, {}, K);
  long C = 0;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    if (C >= K) break;
    long rel = K - C;
    IntPoly den = truncate_poly(truncate_poly(a[j], rel) * truncate_poly(a[j + 1], rel), rel);
    IntLaurent term = IntLaurent::from_ratio(IntPoly{1}, den, rel).shifted(C);
    sum = sum + term;
    C += d[j] - 1;
  }
  return sum;
}

RadiusEstimate radius_estimate(const IntLaurent& s, long window) {
  if (window < 1) throw Error(Errc::Domain, "radius_estimate: window < 1");
  long hi = s.is_exact() ? (s.is_zero() ? 0 : s.stored_end() - 1) : s.exact_order() - 1;
  long lo = std::max(1L, hi - window + 1);
  if (hi - lo + 1 < window) throw Error(Errc::InsufficientData, "radius_estimate: not enough coefficients");
  RadiusEstimate r{0.0, lo, lo, hi};
  for (long n = lo; n <= hi; ++n) {
    mpz_class b = s.coeff(n);
    if (b == 0) continue;
    double v = std::exp(log_abs(b) / static_cast<double>(n));
    if (v > r.value) {
      r.value = v;
      r.argmax = n;
    }
  }
  return r;
}

double ratio_estimate(const IntLaurent& s, long window) {
  long hi = s.exact_order() - 1;
  if (s.is_exact() || hi - window < 1)
    throw Error(Errc::InsufficientData, "ratio_estimate: need a truncated series");
  mpz_class top = s.coeff(hi), bot = s.coeff(hi - window);
  if (top == 0 || bot == 0) throw Error(Errc::InsufficientData, "ratio_estimate: zero coefficient");
  return std::exp((log_abs(top) - log_abs(bot)) / static_cast<double>(window));
}

// ---------------------------------------------------------------------------

namespace {

CFStream blocks_then_phi(const std::vector<long>& blocks, const std::string& name) {
  std::vector<long> head = blocks;
  head.push_back(2);
  return eventually_periodic_stream(std::move(head), {3}, name);
}

double stage_target(int m) { return 1.0 / (kRStar + 1.0 / m); }

bool stage_holds(const mpz_class& b, long n, double target) {
  if (b == 0) return false;
  return log_abs(b) >= static_cast<double>(n) * std::log(target);
}

}  // namespace

Counterexample counterexample_stream(int m_max, long budget) {
  if (m_max < 1) throw Error(Errc::Domain, "counterexample_stream: m_max < 1");
  GrowthSchedule sch;
  sch.budget = budget;
  long n_prev = 0;
  for (int m = 1; m <= m_max; ++m) {
    CFStream xm1 = blocks_then_phi(sch.blocks, "x(" + std::to_string(m - 1) + ")");
    const double target = stage_target(m);
    // n_m > n_{m-1}; n_m >= 2 keeps n_m below the weight of the shared prefix
    long start = std::max(n_prev + 1, 2L);
    long found = -1;
    long K = std::min(budget + 1, std::max(64L, 2 * start));
    long scanned = start;
    while (found < 0) {
      IntLaurent s = q_real_series(DigitSource(xm1), K);
      for (long n = scanned; n < K && n <= budget; ++n) {
        if (stage_holds(s.coeff(n), n, target)) {
          found = n;
          sch.achieved.push_back(std::exp(log_abs(s.coeff(n)) / static_cast<double>(n)));
          break;
        }
      }
      if (found >= 0) break;
      if (K > budget)
        throw Error(Errc::SearchBudgetExceeded,
                    "counterexample_stream: stage " + std::to_string(m) + " not met within budget");
      scanned = K;
      K = std::min(budget + 1, 2 * K);
    }
    sch.n.push_back(found);
    sch.target.push_back(target);
    sch.blocks.push_back(2);
    for (long i = n_prev + 1; i < found; ++i) sch.blocks.push_back(3);
    n_prev = found;
  }
  return {blocks_then_phi(sch.blocks, "counterexample:" + std::to_string(m_max)), sch};
}

bool verify_counterexample(const Counterexample& ce) {
  const auto& sch = ce.schedule;
  if (sch.n.empty()) return false;
  long K = sch.n.back() + 1;
  IntLaurent s = q_real_series(DigitSource(ce.stream), K);
  long prev = 0;
  for (std::size_t m = 0; m < sch.n.size(); ++m) {
    long n = sch.n[m];
    if (n <= prev) return false;
    if (!stage_holds(s.coeff(n), n, stage_target(static_cast<int>(m + 1)))) return false;
    prev = n;
  }
  return true;
}

std::string coefficients_csv(const IntLaurent& s, long K) {
  std::ostringstream os;
  os << "n,beta_n\n";
  long lo = s.is_zero() ? 0 : std::min(0L, s.valuation());
  for (long n = lo; n < K; ++n) os << n << "," << s.coeff(n).get_str() << "\n";
  return os.str();
}

}  // namespace qreal
