#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qreal/cf_core.hpp"
#include "qreal/q_series.hpp"

namespace qreal {

struct JumpRecord {
  CFWord word;
  long C_N = 0;
  std::optional<RatFuncQ> symbolic;
  std::complex<double> numeric;
};

// Jump_x = q^{C_N} (1-q) / (b_N B_N), b_N = a_{N-1}(c_2..c_N),
// B_N = a_N(c_2..c_N, infinity). Equals [x]_q - [x]_q^-.
JumpRecord jump_at(const CFWord& w);
JumpRecord jump_at(const CFWord& w, std::complex<double> q);

// all words with 1 <= C_N <= K, ordered by (C_N, digits)
std::vector<CFWord> words_up_to_weight(long K, long budget = 1L << 22);

// sum of all jumps with C_N <= K, known mod q^{K+1}
IntLaurent formal_total_jump(long K, long budget = 1L << 22);

struct TotalJumpResult {
  std::complex<double> q;
  std::complex<double> target;   // q/(1-q)
  std::complex<double> partial;  // sum over C_N <= depth
  long depth = 0;
  double residual = 0.0;
  long long nodes = 0;  // suffix words visited
  std::vector<std::complex<double>> partials;  // partial sum for C_N <= 1..depth
};

// real 0 < q < kQStarLower, or q in D'
constexpr double kQStarLower = 0.94;
TotalJumpResult numeric_total_jump(std::complex<double> q, double target_tol,
                                   long long max_nodes = 1LL << 32);
std::string total_jump_json(const TotalJumpResult& r);

// a(q)^{-2} < 1 - |q|; q must lie in D
bool in_region_Dprime(std::complex<double> q);

struct SeriesBounds {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
};

// phi(q,z) = sum_{n>=2} (qz)^{n-1}/[n]_q^2
double phi_series(double q, double z, double tol);
SeriesBounds phi_bounds(double q, double z, long n_max);
// h_1 via [m+1][p+1] + q^{m+p+1}
double h1_series(double q, double z, double tol);
SeriesBounds h1_bounds(double q, double z, long box);
// h_2 via D(m_1+1, p_1, m_2, p_2+1)
double h2_series(double q, double z, double tol);
SeriesBounds h2_bounds(double q, double z, long box);

// level 0: phi(q)(1+q) = 1; level n: h_n(q)(1+q)^2 = 1
double beta_root(int level, double tol);

// Jump_{x(j)}(q) q^{C_j} / a_j(c_2..c_j, c_{j+1}-1 | q)^2, needs c_{j+1} >= 3
double betterform_bound(const CFWord& w, std::size_t j, double q);

struct StarSum {
  double sum = 0.0;
  double tail = 0.0;  // bound on the words with C_N > max_weight
};
// Jump_*(q,z)_s: words with c_1 >= 3 and exactly s digits >= 3
StarSum jump_star(double q, double z, long s, long max_weight);
// sum of Jump_x z^{len} over all words with C_N <= max_weight
double jump_generating(double q, double z, long max_weight);

}  // namespace qreal
