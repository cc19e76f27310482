#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qreal/poly.hpp"

namespace qreal {

// Finite negative continued fraction [[c_1, ..., c_N]] = c_1 - 1/(c_2 - 1/(... - 1/c_N)).
struct CFWord {
  std::vector<long> digits;

  CFWord() = default;
  CFWord(std::initializer_list<long> d) : digits(d) {}
  explicit CFWord(std::vector<long> d) : digits(std::move(d)) {}

  std::size_t size() const { return digits.size(); }
  long operator[](std::size_t i) const { return digits[i]; }  // 0-based
  long weight() const;  // C_N = sum (c_i - 1)
  bool valid() const;
  void validate() const;  // throws DomainError
  std::string str() const;
  friend bool operator==(const CFWord&, const CFWord&) = default;
};

// Infinite digit sequence given by a generator; 1-based indices.
// The prefix cache is guarded, so a stream may be shared across threads.
class CFStream {
 public:
  using Generator = std::function<long(std::size_t)>;

  CFStream(Generator g, std::string name);

  long digit(std::size_t i) const;
  std::vector<long> prefix(std::size_t n) const;
  CFWord word(std::size_t n) const { return CFWord(prefix(n)); }
  const std::string& name() const { return name_; }

 private:
  struct Cache {
    std::mutex mu;
    std::vector<long> digits;
  };
  Generator gen_;
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

CFStream phi_stream();                         // 2, 3, 3, 3, ...
CFStream arith_stream(long s, long r);         // s, s+r, s+2r, ...
CFStream eventually_periodic_stream(std::vector<long> head, std::vector<long> period,
                                    std::string name = "");

// A word (complete, exact to all orders) or a stream.
class DigitSource {
 public:
  DigitSource(const CFWord& w);    // NOLINT
  DigitSource(const CFStream& s);  // NOLINT

  bool finite() const { return word_.has_value(); }
  std::size_t length() const;  // word length; throws for streams
  long digit(std::size_t i) const;  // 1-based
  std::vector<long> prefix(std::size_t n) const;  // clipped to the word length
  std::string name() const;

 private:
  std::optional<CFWord> word_;
  std::optional<CFStream> stream_;
};

CFWord cf_encode_rational(const Rational& x);
Rational cf_decode(const CFWord& w);
// x given as the decimal interval [d, d + 10^-P] where P is the number of
// digits after the point in `decimal`.
CFWord cf_encode_real(const std::string& decimal, std::size_t n);
// interval version; lo < hi
CFWord cf_encode_interval(Rational lo, Rational hi, std::size_t n);

struct Continuants {
  IntPoly a;  // a_N
  IntPoly b;  // b_N
};

Continuants q_continuants(const std::vector<long>& digits);
// a_0, a_1, ..., a_N
std::vector<IntPoly> continuant_numerators(const std::vector<long>& digits);

RatFuncQ q_rational(const CFWord& w);
// [x]_q for any rational x, reached from the word of a translate >= 1
RatFuncQ q_rational(const Rational& x);
// [n]_q for any integer n; (1 - q^n)/(1 - q) as a Laurent polynomial
RatFuncQ q_integer(long n);

RatFuncQ translate(const RatFuncQ& f, long n);
// [1/x]_q by the translation/inversion descent on ceil(x); x != 0
RatFuncQ reciprocal_argument(const Rational& x);
RatFuncQ negate_reciprocal(const RatFuncQ& f);
RatFuncQ parameter_inverse(const RatFuncQ& f);
IntPoly infinity_continuant(const CFWord& w);

}  // namespace qreal
