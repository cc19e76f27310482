#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <set>

#include "qreal/analytic_eval.hpp"
#include "qreal/errors.hpp"
#include "qreal/jump_measure.hpp"

using namespace qreal;

namespace {

CFWord random_word(std::mt19937_64& rng, int max_len, long max_digit) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<long> dig(2, max_digit);
  CFWord w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.digits.push_back(dig(rng));
  return w;
}

IntLaurent qgeom(long K) {  // q + ... + q^K
  IntPoly p;
  for (long k = 1; k <= K; ++k) p = p + IntPoly::monomial(k);
  return IntLaurent::from_poly(p).truncated(K + 1);
}

}  // namespace

TEST(JumpAt, Integers) {
  for (long m = 2; m < 9; ++m) {
    RatFuncQ expect(IntPoly::monomial(m - 1) * IntPoly{1, -1});
    EXPECT_EQ(*jump_at(CFWord{m}).symbolic, expect);
  }
  EXPECT_THROW(jump_at(CFWord{1}), Error);
}

TEST(JumpAt, MMinusOneOverN) {
  for (long m = 2; m < 6; ++m)
    for (long n = 2; n < 7; ++n) {
      // q^{m+n-2}(1-q) / ((1+..+q^{n-1})(1+..+q^{n-2}+q^n))
      IntPoly d1 = IntPoly::qint(n), d2 = IntPoly::qint(n - 1) + IntPoly::monomial(n);
      RatFuncQ expect(IntPoly::monomial(m + n - 2) * IntPoly{1, -1}, d1 * d2);
      JumpRecord j = jump_at(CFWord{m, n});
      EXPECT_EQ(*j.symbolic, expect) << m << "," << n;
      EXPECT_EQ(j.C_N, m + n - 2);
    }
}

TEST(JumpAt, EqualsGapToLeftLimit) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    CFWord w = random_word(rng, 6, 6);
    RatFuncQ gap = q_rational(w) - left_limit(w);
    EXPECT_EQ(*jump_at(w).symbolic, gap) << w.str();
  }
}

TEST(JumpAt, TranslationAndLowestTerm) {
  std::mt19937_64 rng(6);
  RatFuncQ q = RatFuncQ::laurent_monomial(1);
  for (int it = 0; it < 100; ++it) {
    CFWord w = random_word(rng, 6, 5);
    CFWord w1 = w;
    w1.digits[0] += 1;
    EXPECT_EQ(*jump_at(w1).symbolic, q * *jump_at(w).symbolic);
    IntLaurent s = IntLaurent::from_ratfunc(*jump_at(w).symbolic, w.weight() + 4);
    EXPECT_EQ(s.valuation(), w.weight());
    EXPECT_EQ(s.coeff(w.weight()), 1);
  }
}

TEST(JumpAt, NumericPositiveAndConsistent) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uq(0.001, 0.999);
  for (int it = 0; it < 200; ++it) {
    CFWord w = random_word(rng, 8, 7);
    double q = uq(rng);
    JumpRecord r = jump_at(w, q);
    EXPECT_GT(r.numeric.real(), 0) << w.str() << " q=" << q;
    EXPECT_EQ(r.numeric.imag(), 0);
    double sym = jump_at(w).symbolic->eval(q);
    EXPECT_NEAR(r.numeric.real(), sym, 1e-12 * std::max(1.0, std::abs(sym)));
  }
  std::complex<double> qc(0.1, 0.05);
  CFWord w{3, 2, 4};
  EXPECT_LT(std::abs(jump_at(w, qc).numeric - jump_at(w).symbolic->eval(qc)), 1e-14);
}

TEST(FormalTotalJump, SmallAndFull) {
  EXPECT_TRUE(formal_total_jump(1).congruent(qgeom(1), 2));
  IntLaurent f12 = formal_total_jump(12);
  EXPECT_EQ(f12.exact_order(), 13);
  EXPECT_TRUE(f12.congruent(qgeom(12), 13));
  EXPECT_EQ(words_up_to_weight(12).size(), (1u << 12) - 1);
}

TEST(FormalTotalJump, ExhaustiveOracleK3) {
  // independent route: sum of exact gaps [x]_q - [x]_q^-
  IntLaurent s = IntLaurent::monomial(0, 0).truncated(4);
  std::vector<CFWord> words = words_up_to_weight(3);
  EXPECT_EQ(words, (std::vector<CFWord>{{2}, {2, 2}, {3}, {2, 2, 2}, {2, 3}, {3, 2}, {4}}));
  for (const CFWord& w : words) s = s + IntLaurent::from_ratfunc(q_rational(w) - left_limit(w), 4);
  EXPECT_TRUE(s.congruent(formal_total_jump(3), 4));
  EXPECT_TRUE(s.congruent(qgeom(3), 4));
}

TEST(FormalTotalJump, Telescoping) {
  for (long K = 1; K <= 12; ++K) {
    std::vector<std::pair<Rational, CFWord>> ys;
    for (const CFWord& w : words_up_to_weight(K)) ys.emplace_back(cf_decode(w), w);
    std::sort(ys.begin(), ys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    IntLaurent prev = IntLaurent::monomial(0).truncated(K + 1);  // [1]_q
    IntLaurent tele = IntLaurent::monomial(0, 0).truncated(K + 1);
    for (const auto& [y, w] : ys) {
      IntLaurent cur = IntLaurent::from_ratfunc(q_rational(y), K + 1);
      IntLaurent diff = cur - prev;
      // each jump is the increment between neighbours mod q^{K+1}
      EXPECT_TRUE(diff.congruent(IntLaurent::from_ratfunc(*jump_at(w).symbolic, K + 1), K + 1))
          << "K=" << K << " y=" << y.get_str();
      tele = tele + diff;
      prev = cur;
    }
    EXPECT_TRUE(tele.congruent(formal_total_jump(K), K + 1)) << K;
    // [y_max]_q = [K+1]_q = 1/(1-q) mod q^{K+1}
    EXPECT_TRUE(prev.congruent(qgeom(K) + IntLaurent::monomial(0), K + 1));
  }
}

TEST(FormalTotalJump, Budget) {
  try {
    formal_total_jump(30, 1L << 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EnumerationBudget);
  }
}

TEST(NumericTotalJump, SmallQ) {
  TotalJumpResult r = numeric_total_jump(0.01, 1e-12);
  EXPECT_LT(std::abs(r.partial - 0.01 / 0.99), 1e-12);
  EXPECT_LE(r.depth, 8);
}

TEST(NumericTotalJump, ModerateQ) {
  TotalJumpResult r = numeric_total_jump(0.3, 1e-6);
  EXPECT_LT(r.residual, 1e-6);
  EXPECT_NEAR(r.partial.real(), 0.3 / 0.7, 1e-6);
  // partial sums of positive terms increase
  for (std::size_t k = 1; k < r.partials.size(); ++k) EXPECT_GT(r.partials[k].real(), r.partials[k - 1].real());
  std::string js = total_jump_json(r);
  for (const char* key : {"\"q\"", "\"target\"", "\"partial\"", "\"depth\"", "\"residual\""})
    EXPECT_NE(js.find(key), std::string::npos) << key;
}

TEST(NumericTotalJump, AboveOneHalf) {
  TotalJumpResult r = numeric_total_jump(0.6, 3e-2, 1LL << 26);
  EXPECT_LT(r.residual, 3e-2);
  EXPECT_GT(r.depth, 12);
}

TEST(NumericTotalJump, ComplexAndNegative) {
  for (std::complex<double> q : {std::complex<double>(0.2, 0.1), std::complex<double>(-0.1, 0),
                                 std::complex<double>(-0.05, -0.12)}) {
    ASSERT_TRUE(in_region_Dprime(q));
    TotalJumpResult r = numeric_total_jump(q, 1e-7);
    EXPECT_LT(std::abs(r.partial - q / (1.0 - q)), 1e-7) << q;
  }
}

TEST(NumericTotalJump, DeterministicAcrossThreadCounts) {
  setenv("QREAL_THREADS", "1", 1);
  TotalJumpResult a = numeric_total_jump(0.35, 1e-5);
  setenv("QREAL_THREADS", "3", 1);
  TotalJumpResult b = numeric_total_jump(0.35, 1e-5);
  unsetenv("QREAL_THREADS");
  EXPECT_EQ(a.partial, b.partial);
  EXPECT_EQ(a.partials, b.partials);
}

TEST(NumericTotalJump, Regions) {
  EXPECT_THROW(numeric_total_jump(0.95, 1e-3), Error);
  EXPECT_THROW(numeric_total_jump(-0.171, 1e-3), Error);  // in D, not in D'
  try {
    numeric_total_jump(0.4, 1e-9, 1 << 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Budget);
  }
}

TEST(RegionDprime, Crossings) {
  EXPECT_TRUE(in_region_Dprime(0.3));
  EXPECT_TRUE(in_region_Dprime(0.49));
  EXPECT_FALSE(in_region_Dprime(0.51));
  EXPECT_THROW(in_region_Dprime(-0.2), Error);
  double lo = 0.3, hi = 0.7;
  for (int i = 0; i < 50; ++i) {
    double mid = (lo + hi) / 2;
    (in_region_Dprime(mid) ? lo : hi) = mid;
  }
  EXPECT_NEAR(lo, 0.5, 1e-9);
  lo = 0.1, hi = 0.1715;
  for (int i = 0; i < 50; ++i) {
    double mid = (lo + hi) / 2;
    (in_region_Dprime(-mid) ? lo : hi) = mid;
  }
  EXPECT_NEAR(lo, 0.170516459, 1e-6);
  EXPECT_LT(lo, 3 - 2 * std::sqrt(2.0));
}

TEST(PhiSeries, Values) {
  EXPECT_EQ(phi_series(0, 1, 1e-12), 0.0);  // the literal series vanishes at q = 0
  EXPECT_NEAR(phi_series(1, 1, 1e-12), std::numbers::pi * std::numbers::pi / 6 - 1, 1e-15);
  double a = phi_series(0.5, 1, 1e-10);
  SeriesBounds b = phi_bounds(0.5, 1, 400);
  EXPECT_NEAR(a, b.lo, 1e-10);
  EXPECT_LT(b.hi - b.lo, 1e-30);
  // approaches pi^2/6 - 1 from below as q -> 1
  EXPECT_LT(phi_series(0.999, 1, 1e-9), std::numbers::pi * std::numbers::pi / 6 - 1);
  EXPECT_GT(phi_series(0.999, 1, 1e-9), 0.6);
  EXPECT_THROW(phi_series(0.5, 2, 1e-8), Error);
  EXPECT_THROW(phi_series(-0.1, 1, 1e-8), Error);
}

TEST(HSeries, Values) {
  EXPECT_EQ(h1_series(0, 1, 1e-10), 0.0);
  double h11 = h1_series(1, 1, 1e-9);
  EXPECT_NEAR(h11, 0.34, 0.015);
  EXPECT_NEAR(h11, 0.35033940974729398, 1e-9);  // mpmath nsum, two routes
  for (double q : {0.3, 0.6, 0.8})
    for (double z : {1.0, 1.1}) {
      double h = h1_series(q, z, 1e-9);
      EXPECT_LE(h, phi_series(q, 1, 1e-12) * phi_series(q, z, 1e-12));
      SeriesBounds hb = h1_bounds(q, z, 40);
      EXPECT_LE(hb.lo, h + 1e-9);
      EXPECT_GE(hb.hi, h - 1e-9);
    }
  // truncation doubling at q = 0.5
  SeriesBounds b1 = h2_bounds(0.5, 1, 20), b2 = h2_bounds(0.5, 1, 40);
  EXPECT_LE(b1.lo, b2.lo);
  EXPECT_GE(b1.hi, b2.hi);
  EXPECT_LT(b2.hi - b2.lo, 1e-9);
  EXPECT_NEAR(h2_series(0.5, 1, 1e-9), b2.mid(), 1e-9);
  EXPECT_EQ(h2_series(0, 1, 1e-9), 0.0);
}

TEST(BetaRoot, Levels) {
  double b0 = beta_root(0, 1e-6), b1 = beta_root(1, 1e-6), b2 = beta_root(2, 1e-3);
  EXPECT_NEAR(b0, 0.816, 0.005);
  EXPECT_NEAR(b1, 0.863, 0.005);
  EXPECT_NEAR(b2, 0.94, 0.01);
  EXPECT_LT(b0, b1);
  EXPECT_LT(b1, b2);
  EXPECT_NEAR(phi_series(b0, 1, 1e-12) * (1 + b0), 1.0, 1e-5);
  EXPECT_NEAR(h1_series(b1, 1, 1e-10) * (1 + b1) * (1 + b1), 1.0, 1e-5);
  EXPECT_THROW(beta_root(3, 1e-3), Error);
}

TEST(Betterform, BoundHolds) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uq(0.05, 0.95);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    CFWord w = random_word(rng, 7, 5);
    double q = uq(rng);
    for (std::size_t j = 1; j + 1 <= w.size(); ++j) {
      if (w[j] < 3) continue;
      double jx = jump_at(w, q).numeric.real();
      EXPECT_LE(jx, betterform_bound(w, j, q) * (1 + 1e-12)) << w.str() << " j=" << j << " q=" << q;
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
  EXPECT_THROW(betterform_bound(CFWord{3, 2}, 1, 0.5), Error);
}

TEST(JumpStar, ChainInequality) {
  const double q = 0.3, z = 1.2;
  const long K = 22;
  double factor = phi_series(q, 1, 1e-14) * phi_series(q, z, 1e-14) * (1 + q) * (1 + q);
  for (long s = 1; s <= 3; ++s) {
    StarSum a = jump_star(q, z, s, K), b = jump_star(q, z, s + 1, K);
    EXPECT_GT(a.sum, 0);
    EXPECT_LE(b.sum, factor * (a.sum + a.tail)) << s;
  }
}

TEST(JumpStar, GeneratingFunctionSplit) {
  for (double z : {1.0, 1.3}) {
    const double q = 0.25;
    const long K = 16;
    double all = jump_generating(q, z, K), star = 0;
    for (long s = 1; s <= K + 1; ++s) star += jump_star(q, z, s, K + 1).sum;
    EXPECT_NEAR(all, star / q, 1e-13);
  }
  // z = 1 recovers the plain partial sums
  TotalJumpResult r = numeric_total_jump(0.25, 1e-3);
  EXPECT_NEAR(jump_generating(0.25, 1, r.depth), r.partial.real(), 1e-13);
}
