#include "qreal/jump_measure.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include <boost/math/special_functions/trigamma.hpp>
#include <json.hpp>

#include "qreal/analytic_eval.hpp"
#include "qreal/errors.hpp"

namespace qreal {

namespace {

using cd = std::complex<double>;

CFWord suffix(const CFWord& w) {
  return CFWord(std::vector<long>(w.digits.begin() + 1, w.digits.end()));
}

template <class T>
T qint_value(long n, T q) {
  T s = 0, p = 1;
  for (long i = 0; i < n; ++i) {
    s += p;
    p *= q;
  }
  return s;
}

// a_N(c | q) by the three-term recursion
template <class T>
T continuant_value(const std::vector<long>& c, T q, T* prev_out = nullptr) {
  T prev = 1, cur = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    T next = i == 0 ? qint_value(c[0], q)
                    : qint_value(c[i], q) * cur - std::pow(q, static_cast<double>(c[i - 1] - 1)) * prev;
    prev = cur;
    cur = next;
  }
  if (prev_out) *prev_out = c.empty() ? T(0) : prev;
  return cur;
}

// suffix word continuants (a, A) with a(empty) = A(empty) = 1
template <class T>
std::pair<T, T> suffix_pair(const std::vector<long>& c, T q) {
  if (c.empty()) return {T(1), T(1)};
  T prev;
  T a = continuant_value(c, q, &prev);
  T A = a - std::pow(q, static_cast<double>(c.back() - 1)) * (T(1) - q) * prev;
  return {a, A};
}

// Depth-first walk over suffix words w (digits >= 2, C(w) <= m). For each
// node calls f(weight, length, count of digits >= 3, g(w)) with
// g(w) = q^{C(w)} (1-q) / (a(w) A(w)).
template <class T, class F>
struct SuffixWalk {
  const std::vector<T>& pw;  // q^k
  const std::vector<T>& qi;  // [k]_q
  T omq;
  long m;
  F& f;

  void emit(T ap, T ac, long dl, long w, T qw, long len, long c3) const {
    T A = ac - pw[static_cast<std::size_t>(dl - 1)] * omq * ap;
    f(w, len, c3, qw * omq / (ac * A));
  }
  void node(T ap, T ac, long dl, long w, T qw, long len, long c3) const {
    emit(ap, ac, dl, w, qw, len, c3);
    const T back = pw[static_cast<std::size_t>(dl - 1)] * ap;
    for (long d = 2; w + d - 1 <= m; ++d)
      node(ac, qi[static_cast<std::size_t>(d)] * ac - back, d, w + d - 1,
           qw * pw[static_cast<std::size_t>(d - 1)], len + 1, c3 + (d >= 3));
  }
  void all() const {
    f(0, 0, 0, omq);
    for (long d = 2; d - 1 <= m; ++d)
      node(T(1), qi[static_cast<std::size_t>(d)], d, d - 1, pw[static_cast<std::size_t>(d - 1)], 1, d >= 3);
  }
};

template <class T>
void power_tables(T q, long m, std::vector<T>& pw, std::vector<T>& qi) {
  pw.assign(static_cast<std::size_t>(m + 3), T(1));
  qi.assign(static_cast<std::size_t>(m + 3), T(0));
  for (std::size_t k = 1; k < pw.size(); ++k) {
    pw[k] = pw[k - 1] * q;
    qi[k] = qi[k - 1] + pw[k - 1];
  }
}

int thread_count() {
  if (const char* env = std::getenv("QREAL_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// layer sums G(k) = sum_{C(w) = k} g(w), k = 0..m
template <class T>
std::vector<std::complex<long double>> layer_sums(T q, long m) {
  using Acc = std::complex<long double>;
  std::vector<T> pw, qi;
  power_tables(q, m, pw, qi);
  const T omq = T(1) - q;
  auto to_acc = [](T v) {
    if constexpr (std::is_same_v<T, double>) return Acc(static_cast<long double>(v), 0.0L);
    else return Acc(static_cast<long double>(v.real()), static_cast<long double>(v.imag()));
  };

  std::vector<Acc> head(static_cast<std::size_t>(m + 1));
  auto add_head = [&](long w, long, long, T v) { head[static_cast<std::size_t>(w)] += to_acc(v); };
  SuffixWalk<T, decltype(add_head)> top{pw, qi, omq, m, add_head};

  // words of length <= 2 here, every length-3 prefix is a task
  struct Task { T ap, ac; long dl, w; T qw; };
  std::vector<Task> tasks;
  top.f(0, 0, 0, omq);
  for (long d1 = 2; d1 - 1 <= m; ++d1) {
    T a1 = qi[static_cast<std::size_t>(d1)];
    long w1 = d1 - 1;
    T q1 = pw[static_cast<std::size_t>(d1 - 1)];
    top.emit(T(1), a1, d1, w1, q1, 1, 0);
    for (long d2 = 2; w1 + d2 - 1 <= m; ++d2) {
      T a2 = qi[static_cast<std::size_t>(d2)] * a1 - pw[static_cast<std::size_t>(d1 - 1)];
      long w2 = w1 + d2 - 1;
      T q2 = q1 * pw[static_cast<std::size_t>(d2 - 1)];
      top.emit(a1, a2, d2, w2, q2, 2, 0);
      for (long d3 = 2; w2 + d3 - 1 <= m; ++d3) {
        T a3 = qi[static_cast<std::size_t>(d3)] * a2 - pw[static_cast<std::size_t>(d2 - 1)] * a1;
        tasks.push_back({a2, a3, d3, w2 + d3 - 1, q2 * pw[static_cast<std::size_t>(d3 - 1)]});
      }
    }
  }

  std::vector<std::vector<Acc>> out(tasks.size(), std::vector<Acc>(static_cast<std::size_t>(m + 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      auto& layer = out[i];
      auto add = [&layer, &to_acc](long w, long, long, T v) { layer[static_cast<std::size_t>(w)] += to_acc(v); };
      SuffixWalk<T, decltype(add)> walk{pw, qi, omq, m, add};
      const Task& t = tasks[i];
      walk.node(t.ap, t.ac, t.dl, t.w, t.qw, 3, 0);
    }
  };
  int nt = std::min<int>(thread_count(), static_cast<int>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < nt; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // fixed reduction order
  for (const auto& layer : out)
    for (std::size_t k = 0; k < head.size(); ++k) head[k] += layer[k];
  return head;
}

// S(K) = sum_{j=1}^{K} q^j T(K-j), T(n) = sum_{k<=n} G(k); K = 1..m+1
std::vector<cd> partial_sums(cd q, const std::vector<std::complex<long double>>& G) {
  const long m = static_cast<long>(G.size()) - 1;
  std::vector<std::complex<long double>> T(G.size());
  std::complex<long double> run = 0;
  for (std::size_t k = 0; k < G.size(); ++k) T[k] = (run += G[k]);
  std::complex<long double> ql(q.real(), q.imag());
  std::vector<cd> S;
  for (long K = 1; K <= m + 1; ++K) {
    std::complex<long double> s = 0, qj = 1;
    for (long j = 1; j <= K; ++j) {
      qj *= ql;
      s += qj * T[static_cast<std::size_t>(K - j)];
    }
    S.emplace_back(static_cast<double>(s.real()), static_cast<double>(s.imag()));
  }
  return S;
}

double qn(long n, double q) { return qint_value(n, q); }

void check_q_range(double q, double z) {
  if (!(q >= 0 && q < 1) || !(z >= 0) || !(q * z < 1))
    throw Error(Errc::Domain, "series needs 0 <= q < 1, z >= 0, qz < 1");
}

// upper bound of a full 1D sum sum_{k>=1} x^k/[k+s]^2 and its tail beyond M
struct Factor {
  double full;
  double tail;
};
Factor factor(double q, double x, long s, long M) {
  // [k+s]_q increases in k for q >= 0
  double sum = 0, xp = 1, Qk = qn(1 + s, q), qpow = std::pow(q, 1 + s);
  long k = 1;
  double tailM = 0;
  for (;; ++k) {
    xp *= x;
    double t = xp / (Qk * Qk);
    sum += t;
    double rest = xp * x / ((1 - x) * (Qk + qpow) * (Qk + qpow));
    if (k == M) tailM = rest;
    if (k >= M && (rest <= 1e-17 * sum || rest == 0)) {
      sum += rest;
      break;
    }
    Qk += qpow;
    qpow *= q;
  }
  if (M < 1) tailM = sum;
  return {sum, tailM};
}

}  // namespace

JumpRecord jump_at(const CFWord& w) {
  w.validate();
  if (w.size() == 1 && w[0] == 1) throw Error(Errc::Domain, "jump_at: x must be > 1");
  JumpRecord r;
  r.word = w;
  r.C_N = w.weight();
  CFWord t = suffix(w);
  IntPoly b{1}, B{1};
  if (t.size() > 0) {
    b = q_continuants(t.digits).a;
    B = infinity_continuant(t);
  }
  r.symbolic = RatFuncQ(IntPoly::monomial(r.C_N) * IntPoly{1, -1}, b * B);
  return r;
}

JumpRecord jump_at(const CFWord& w, cd q) {
  w.validate();
  if (w.size() == 1 && w[0] == 1) throw Error(Errc::Domain, "jump_at: x must be > 1");
  JumpRecord r;
  r.word = w;
  r.C_N = w.weight();
  auto [a, A] = suffix_pair<cd>(suffix(w).digits, q);
  r.numeric = std::pow(q, static_cast<double>(r.C_N)) * (1.0 - q) / (a * A);
  return r;
}

std::vector<CFWord> words_up_to_weight(long K, long budget) {
  if (K < 1) throw Error(Errc::Domain, "words_up_to_weight: K >= 1");
  if (K >= 62 || (1L << K) > budget)
    throw Error(Errc::EnumerationBudget, "2^" + std::to_string(K) + " words exceed the budget");
  std::vector<CFWord> out;
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long w) {
    for (long d = 2; w + d - 1 <= K; ++d) {
      cur.push_back(d);
      out.emplace_back(cur);
      rec(w + d - 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const CFWord& x, const CFWord& y) {
    long wx = x.weight(), wy = y.weight();
    return wx != wy ? wx < wy : x.digits < y.digits;
  });
  return out;
}

IntLaurent formal_total_jump(long K, long budget) {
  IntLaurent total = IntLaurent::monomial(0, 0).truncated(K + 1);
  const IntPoly omq{1, -1};
  for (const CFWord& w : words_up_to_weight(K, budget)) {
    long C = w.weight();
    CFWord t = suffix(w);
    IntPoly b{1}, B{1};
    if (t.size() > 0) {
      b = q_continuants(t.digits).a;
      B = infinity_continuant(t);
    }
    total = total + IntLaurent::from_ratio(omq, b * B, K + 1 - C).shifted(C);
  }
  return total.truncated(K + 1);
}

bool in_region_Dprime(cd q) {
  if (!in_region_D(q)) throw Error(Errc::OutsideRegion, "in_region_Dprime: q outside D");
  if (q == cd(0)) return true;
  double a = solve_a(q).a;
  return 1 / (a * a) < 1 - std::abs(q);
}

TotalJumpResult numeric_total_jump(cd q, double target_tol, long long max_nodes) {
  const bool real = q.imag() == 0;
  if (!(real && q.real() > 0 && q.real() < kQStarLower)) {
    bool ok = false;
    try {
      ok = in_region_Dprime(q);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) throw Error(Errc::OutsideRegion, "numeric_total_jump: q outside D' and (0, q*)");
  }
  TotalJumpResult r;
  r.q = q;
  r.target = q / (1.0 - q);
  if (q == cd(0)) return r;

  long m = 8;
  while (true) {
    if (m >= 62 || (1LL << m) > max_nodes) {
      std::ostringstream os;
      os << "numeric_total_jump: budget reached at depth " << r.depth << ", partial " << r.partial.real()
         << (real ? "" : "+i" + std::to_string(r.partial.imag())) << ", residual " << r.residual;
      throw Error(Errc::Budget, os.str());
    }
    auto G = real ? layer_sums<double>(q.real(), m) : layer_sums<cd>(q, m);
    r.nodes += 1LL << m;
    r.partials = partial_sums(q, G);
    std::vector<double> res;
    for (const cd& s : r.partials) res.push_back(std::abs(s - r.target));
    for (std::size_t K = 0; K < res.size(); ++K) {
      if (res[K] < target_tol) {
        r.depth = static_cast<long>(K) + 1;
        r.partial = r.partials[K];
        r.residual = res[K];
        r.partials.resize(K + 1);
        return r;
      }
    }
    r.depth = m + 1;
    r.partial = r.partials.back();
    r.residual = res.back();
    double rho = std::clamp(res.back() / res[res.size() - 2], 0.05, 0.98);
    long extra = static_cast<long>(std::ceil(std::log(target_tol / res.back()) / std::log(rho)));
    m += std::clamp(extra, 1L, 6L);
  }
}

std::string total_jump_json(const TotalJumpResult& r) {
  auto num = [](cd v) -> nlohmann::json {
    if (v.imag() == 0) return v.real();
    return nlohmann::json::array({v.real(), v.imag()});
  };
  nlohmann::json j = {{"q", num(r.q)},           {"target", num(r.target)}, {"partial", num(r.partial)},
                      {"depth", r.depth},        {"residual", r.residual},  {"nodes", r.nodes}};
  return j.dump();
}

SeriesBounds phi_bounds(double q, double z, long n_max) {
  check_q_range(q, z);
  const double x = q * z;
  double s = 0, xp = 1, Qn = 1;
  for (long n = 2; n <= n_max; ++n) {
    xp *= x;
    Qn = 1 + q * Qn;
    s += xp / (Qn * Qn);
  }
  double Qnext = 1 + q * Qn;
  if (n_max < 2) Qnext = qn(2, q);
  double tail = xp * x / ((1 - x) * Qnext * Qnext);
  if (n_max < 2) tail = x / ((1 - x) * Qnext * Qnext);
  return {s, s + tail};
}

double phi_series(double q, double z, double tol) {
  if (q == 1 && z == 1) return std::numbers::pi * std::numbers::pi / 6 - 1;
  check_q_range(q, z);
  const double x = q * z;
  double s = 0, xp = 1, Qn = 1;
  for (long n = 2;; ++n) {
    xp *= x;
    Qn = 1 + q * Qn;
    s += xp / (Qn * Qn);
    double Qnext = 1 + q * Qn;
    double tail = xp * x / ((1 - x) * Qnext * Qnext);
    if (tail <= tol) return s + tail / 2;
  }
}

SeriesBounds h1_bounds(double q, double z, long M) {
  check_q_range(q, z);
  if (q == 0) return {0, 0};
  const double x = q * z;
  Factor U = factor(q, q, 1, M), V = factor(q, x, 1, M);
  std::vector<double> Q(static_cast<std::size_t>(M + 2)), pw(static_cast<std::size_t>(2 * M + 3)),
      xw(static_cast<std::size_t>(M + 1));
  for (std::size_t k = 0; k < Q.size(); ++k) Q[k] = qn(static_cast<long>(k), q);
  pw[0] = 1;
  for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * q;
  xw[0] = 1;
  for (std::size_t k = 1; k < xw.size(); ++k) xw[k] = xw[k - 1] * x;
  double s = 0;
  for (long m = 1; m <= M; ++m) {
    double row = 0;
    for (long p = 1; p <= M; ++p) {
      double d = Q[static_cast<std::size_t>(m + 1)] * Q[static_cast<std::size_t>(p + 1)] +
                 pw[static_cast<std::size_t>(m + p + 1)];
      row += xw[static_cast<std::size_t>(p)] / (d * d);
    }
    s += pw[static_cast<std::size_t>(m)] * row;
  }
  return {s, s + U.tail * V.full + U.full * V.tail};
}

double h1_series(double q, double z, double tol) {
  if (q == 1 && z == 1) {
    // sum_p 1/((m+1)(p+1)+1)^2 = psi'(2 + 1/(m+1)) / (m+1)^2
    using boost::math::trigamma;
    long M = std::max<long>(64, static_cast<long>(std::sqrt(1.0 / tol)));
    double s = 0;
    for (long m = M; m >= 1; --m) {
      double k = static_cast<double>(m + 1);
      s += trigamma(2 + 1 / k) / (k * k);
    }
    // tail over m > M: psi'(2 + eps) in [psi'(2 + 1/(M+2)), psi'(2)] times psi'(M+2)
    double w = trigamma(static_cast<double>(M + 2));
    double lo = trigamma(2 + 1.0 / static_cast<double>(M + 2)) * w, hi = trigamma(2.0) * w;
    if (hi - lo > tol) throw Error(Errc::ToleranceUnreachable, "h1_series(1): tolerance too small");
    return s + (lo + hi) / 2;
  }
  check_q_range(q, z);
  for (long M = 16;; M = M * 3 / 2) {
    SeriesBounds b = h1_bounds(q, z, M);
    if (b.hi - b.lo <= tol) return b.mid();
    if (M > 200000) throw Error(Errc::ToleranceUnreachable, "h1_series: tolerance unreachable");
  }
}

SeriesBounds h2_bounds(double q, double z, long M) {
  check_q_range(q, z);
  if (q == 0) return {0, 0};
  const double x = q * z;
  // term <= (q^{m1}/[m1+1]^2)(x^{p1}/[p1]^2)(q^{m2}/[m2]^2)(x^{p2}/[p2+1]^2)
  Factor Fa = factor(q, q, 1, M), Fb = factor(q, x, 0, M), Fc = factor(q, q, 0, M), Fd = factor(q, x, 1, M);
  std::vector<double> Q(static_cast<std::size_t>(M + 3)), pw(static_cast<std::size_t>(3 * M + 6)),
      xw(static_cast<std::size_t>(M + 1));
  for (std::size_t k = 0; k < Q.size(); ++k) Q[k] = qn(static_cast<long>(k), q);
  pw[0] = 1;
  for (std::size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * q;
  xw[0] = 1;
  for (std::size_t k = 1; k < xw.size(); ++k) xw[k] = xw[k - 1] * x;
  const double qinv = 1 / q;
  double s = 0;
  for (long m1 = 1; m1 <= M; ++m1) {
    const std::size_t M1 = static_cast<std::size_t>(m1 + 1);
    for (long p1 = 1; p1 <= M; ++p1) {
      const std::size_t P1 = static_cast<std::size_t>(p1);
      const double QQ = Q[M1] * Q[P1];
      for (long m2 = 1; m2 <= M; ++m2) {
        const std::size_t M2 = static_cast<std::size_t>(m2);
        // D = alpha [P2] + gamma q^{P2}
        const double alpha = QQ * Q[M2] + pw[M1 + P1 - 1] * Q[M2] + qinv * Q[M1];
        const double gamma = pw[M2 - 1] * QQ + pw[M1 + P1 + M2 - 2];
        double row = 0;
        for (long p2 = 1; p2 <= M; ++p2) {
          const std::size_t P2 = static_cast<std::size_t>(p2 + 1);
          const double D = alpha * Q[P2] + gamma * pw[P2];
          row += xw[static_cast<std::size_t>(p2)] / (D * D);
        }
        s += pw[static_cast<std::size_t>(m1 + m2)] * xw[P1] * row;
      }
    }
  }
  double tail = Fa.tail * Fb.full * Fc.full * Fd.full + Fa.full * Fb.tail * Fc.full * Fd.full +
                Fa.full * Fb.full * Fc.tail * Fd.full + Fa.full * Fb.full * Fc.full * Fd.tail;
  return {s, s + tail};
}

double h2_series(double q, double z, double tol) {
  check_q_range(q, z);
  for (long M = 8;; M = M * 3 / 2) {
    SeriesBounds b = h2_bounds(q, z, M);
    if (b.hi - b.lo <= tol) return b.mid();
    if (M > 600) throw Error(Errc::ToleranceUnreachable, "h2_series: tolerance unreachable");
  }
}

double beta_root(int level, double tol) {
  if (level < 0 || level > 2) throw Error(Errc::Domain, "beta_root: level in {0,1,2}");
  struct Setup {
    double lo, hi;
    long start, cap;
  };
  const Setup st[] = {{0.1, 0.99, 256, 1L << 22}, {0.5, 0.99, 32, 4096}, {0.8, 0.97, 16, 240}};
  const Setup& S = st[level];
  auto bounds = [&](double q, long n) {
    switch (level) {
      case 0: return phi_bounds(q, 1, n);
      case 1: return h1_bounds(q, 1, n);
      default: return h2_bounds(q, 1, n);
    }
  };
  // sign of h(q)(1+q)^k - 1, refining the truncation until the bounds decide it
  auto sign = [&](double q) {
    double target = level == 0 ? 1 / (1 + q) : 1 / ((1 + q) * (1 + q));
    SeriesBounds b;
    for (long n = S.start; n <= S.cap; n = n * 3 / 2) {
      b = bounds(q, n);
      if (b.lo > target) return 1;
      if (b.hi < target) return -1;
    }
    return b.mid() > target ? 1 : -1;
  };
  double lo = S.lo, hi = S.hi;
  if (sign(lo) >= 0 || sign(hi) <= 0) throw Error(Errc::BracketingFailure, "beta_root: no sign change");
  while (hi - lo > tol) {
    double mid = (lo + hi) / 2;
    (sign(mid) < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

double betterform_bound(const CFWord& w, std::size_t j, double q) {
  w.validate();
  const std::size_t N = w.size();
  if (j < 1 || j + 1 > N || w[j] < 3) throw Error(Errc::Domain, "betterform_bound: needs 1 <= j < N, c_{j+1} >= 3");
  CFWord tail(std::vector<long>(w.digits.begin() + static_cast<long>(j), w.digits.end()));
  double jump = jump_at(tail, cd(q)).numeric.real();
  long Cj = 0;
  for (std::size_t i = 0; i < j; ++i) Cj += w[i] - 1;
  std::vector<long> c(w.digits.begin() + 1, w.digits.begin() + static_cast<long>(j) + 1);
  c.back() -= 1;
  double a = continuant_value(c, q);
  return jump * std::pow(q, static_cast<double>(Cj)) / (a * a);
}

StarSum jump_star(double q, double z, long s, long K) {
  if (!(q > 0 && q < 1) || z < 0 || K < 2) throw Error(Errc::Domain, "jump_star: 0 < q < 1, z >= 0, K >= 2");
  std::vector<double> pw, qi;
  power_tables(q, K, pw, qi);
  long double sum = 0;
  auto f = [&](long w, long len, long c3, double g) {
    if (c3 != s - 1 || w + 2 > K) return;
    // c_1 = 3 .. K - w + 1
    double geo = (pw[2] - pw[static_cast<std::size_t>(K - w + 1)]) / (1 - q);
    sum += static_cast<long double>(g * geo * std::pow(z, static_cast<double>(len + 1)));
  };
  SuffixWalk<double, decltype(f)> walk{pw, qi, 1 - q, K - 2, f};
  walk.all();
  StarSum r;
  r.sum = static_cast<double>(sum);
  double ratio = q * (1 + z);
  r.tail = ratio < 1 ? (1 - q) * z * std::pow(q, static_cast<double>(K + 1)) *
                           std::pow(1 + z, static_cast<double>(K)) / (1 - ratio)
                     : HUGE_VAL;
  return r;
}

double jump_generating(double q, double z, long K) {
  if (!(q > 0 && q < 1) || z < 0 || K < 1) throw Error(Errc::Domain, "jump_generating: 0 < q < 1, K >= 1");
  std::vector<double> pw, qi;
  power_tables(q, K, pw, qi);
  long double sum = 0;
  auto f = [&](long w, long len, long, double g) {
    double geo = (pw[1] - pw[static_cast<std::size_t>(K - w + 1)]) / (1 - q);
    sum += static_cast<long double>(g * geo * std::pow(z, static_cast<double>(len + 1)));
  };
  SuffixWalk<double, decltype(f)> walk{pw, qi, 1 - q, K - 1, f};
  walk.all();
  return static_cast<double>(sum);
}

}  // namespace qreal
