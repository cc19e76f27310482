// qreal command line front end. JSON on stdout by default, --csv for tables.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qreal/analytic_eval.hpp"
#include "qreal/cf_core.hpp"
#include "qreal/errors.hpp"
#include "qreal/jump_measure.hpp"
#include "qreal/q_complex.hpp"
#include "qreal/q_series.hpp"
#include "qreal/special_functions.hpp"

using json = nlohmann::ordered_json;
using namespace qreal;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json coeff_array(const std::vector<mpz_class>& c) {
  json a = json::array();
  for (const auto& v : c) {
    if (v.fits_slong_p())
      a.push_back(v.get_si());
    else
      a.push_back(v.get_str());
  }
  return a;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not a number: " + s);
  }
  if (pos != s.size()) throw UsageError("not a number: " + s);
  return v;
}

long parse_long(const std::string& s) {
  std::size_t pos = 0;
  long v;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer: " + s);
  }
  if (pos != s.size()) throw UsageError("not an integer: " + s);
  return v;
}

cplx parse_complex(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() == 1) return parse_double(parts[0]);
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw UsageError("expected re or re,im: " + s);
}

bool is_decimal(const std::string& s) { return s.find('.') != std::string::npos; }

// p/q, integers and terminating decimals, exactly
Rational parse_rational(const std::string& s) {
  if (s.empty()) throw UsageError("empty number");
  Rational r;
  if (is_decimal(s)) {
    std::string t = s;
    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
      neg = t[0] == '-';
      t = t.substr(1);
    }
    auto dot = t.find('.');
    std::string whole = t.substr(0, dot), frac = t.substr(dot + 1);
    std::string digits = whole + frac;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad decimal: " + s);
    mpz_class num(digits), den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    r = Rational(num, den);
    if (neg) r = -r;
  } else {
    if (s.find_first_not_of("+-0123456789/") != std::string::npos) throw UsageError("bad rational: " + s);
    if (r.set_str(s, 10) != 0) throw UsageError("bad rational: " + s);
    if (r.get_den() == 0) throw UsageError("zero denominator: " + s);
  }
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

struct XSpec {
  std::string label;
  std::optional<Rational> rational;
  std::optional<DigitSource> source;
};

// --x: p/q, phi, arith:s,r, or a decimal (a word of --digits digits when given)
XSpec parse_x(const std::string& x, long digits) {
  XSpec spec;
  spec.label = x;
  if (x == "phi") {
    spec.source = DigitSource(phi_stream());
    return spec;
  }
  if (x.rfind("arith:", 0) == 0) {
    auto parts = split(x.substr(6), ',');
    if (parts.size() != 2) throw UsageError("arith:s,r expected");
    spec.source = DigitSource(arith_stream(parse_long(parts[0]), parse_long(parts[1])));
    return spec;
  }
  if (is_decimal(x) && digits > 0) {
    spec.source = DigitSource(cf_encode_real(x, static_cast<std::size_t>(digits)));
    return spec;
  }
  spec.rational = parse_rational(x);
  if (*spec.rational >= 1) spec.source = DigitSource(cf_encode_rational(*spec.rational));
  return spec;
}

const DigitSource& need_source(const XSpec& x) {
  if (!x.source) throw Error(Errc::Domain, "x must be >= 1 for this command");
  return *x.source;
}

json word_json(const CFWord& w) { return json(w.digits); }

std::string scalar_csv(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    std::string cell;
    for (std::size_t i = 0; i < j.size(); ++i) cell += (i ? ";" : "") + scalar_csv(j[i]);
    out.emplace_back(prefix, cell);
  } else {
    out.emplace_back(prefix, scalar_csv(j));
  }
}

// objects with a "rows" array become one line per row; anything else one line
std::string to_csv(const json& j) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::vector<std::pair<std::string, std::string>>>& rows) {
    if (rows.empty()) return;
    for (std::size_t i = 0; i < rows[0].size(); ++i) os << (i ? "," : "") << rows[0][i].first;
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i].second;
      os << "\n";
    }
  };
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  if (j.is_object() && j.contains("rows") && j["rows"].is_array()) {
    for (const auto& r : j["rows"]) {
      rows.emplace_back();
      flatten(r, "", rows.back());
    }
  } else {
    rows.emplace_back();
    flatten(j, "", rows.back());
  }
  emit(rows);
  return os.str();
}

json cert_json(const std::string& x, cplx q, const CertifiedComplex& c) {
  return {{"x", x}, {"q", cjson(q)}, {"value", cjson(c.value)}, {"err", c.err}, {"flag", flag_name(c.flag)},
          {"terms", c.terms}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-deformed real numbers"};
  app.require_subcommand(1);
  bool csv = false;
  std::string out_path;
  app.add_flag("--csv", csv, "CSV instead of JSON");
  app.add_option("--out", out_path, "write to FILE instead of stdout");

  std::string x_str, q_str = "0.5", word_str, tau_str;
  long digits = 0, K = 40, window = 50, level = -1, s_arg = 2, r_arg = 1, stages = 3, budget = 5000;
  long samples = 0, n_grid = 21;
  unsigned long long seed = 1;
  double tol = 1e-10, t_arg = 0.7, rmax = 0.999;
  std::string method = "auto", mode_str = "reduced";
  bool json_flag = false;

  auto* enc = app.add_subcommand("encode", "negative continued fraction digits of x");
  enc->add_option("--x", x_str, "p/q or decimal")->required();
  enc->add_option("--digits", digits, "number of digits for a decimal input");

  auto* dec = app.add_subcommand("decode", "rational value of a digit word");
  dec->add_option("--word", word_str, "comma separated digits, each >= 2")->required();

  auto* qrat = app.add_subcommand("qrational", "[x]_q as a reduced rational function");
  qrat->add_option("--x", x_str, "rational")->required();

  auto* ser = app.add_subcommand("series", "power series of [x]_q");
  ser->add_option("--x", x_str, "p/q, phi, arith:s,r, or decimal with --digits")->required();
  ser->add_option("--K", K, "order");
  ser->add_option("--digits", digits);

  auto* ev = app.add_subcommand("eval", "numeric value of [x]_q");
  ev->add_option("--x", x_str)->required();
  ev->add_option("--q", q_str, "re or re,im")->required();
  ev->add_option("--tol", tol);
  ev->add_option("--digits", digits);
  ev->add_option("--method", method, "auto, D, disk, negative, series");

  auto* jmp = app.add_subcommand("jump", "jump of x -> [x]_q at a rational");
  jmp->add_option("--x", x_str)->required();
  jmp->add_option("--q", q_str);

  auto* tj = app.add_subcommand("totaljump", "sum of all jumps against q/(1-q)");
  tj->add_option("--q", q_str)->required();
  tj->add_option("--tol", tol);

  auto* bet = app.add_subcommand("beta", "roots of the phi and h equations");
  bet->add_option("--level", level, "0, 1 or 2; all when omitted");
  bet->add_option("--tol", tol);

  auto* rad = app.add_subcommand("radius", "coefficient growth of [x]_q");
  rad->add_option("--x", x_str, "default phi");
  rad->add_option("--K", K);
  rad->add_option("--window", window);

  auto* ce = app.add_subcommand("counterexample", "staged stream with slow coefficient growth");
  ce->add_option("--stages", stages);
  ce->add_option("--budget", budget);

  auto* bes = app.add_subcommand("bessel", "q-Bessel ratio for the stream s, s+r, ...");
  bes->add_option("--s", s_arg);
  bes->add_option("--r", r_arg);
  bes->add_option("--q", q_str);
  bes->add_option("--tol", tol);

  auto* qc = app.add_subcommand("qcomplex", "[tau]_q for Im tau > 0");
  qc->add_option("--tau", tau_str, "re,im")->required();
  qc->add_option("--t", t_arg, "q = e^{-t}");
  qc->add_option("--tol", tol);
  qc->add_option("--mode", mode_str, "reduced or direct");
  qc->add_flag("--json", json_flag, "JSON output (default)");

  auto* rs = app.add_subcommand("regionscan", "membership in D, D' and the drop region");
  rs->add_option("--n", n_grid, "grid size per axis");
  rs->add_option("--rmax", rmax);
  rs->add_option("--samples", samples, "random points in the unit disk instead of a grid");
  rs->add_option("--seed", seed);

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  json result;
  std::string csv_text;
  try {
    if (*enc) {
      if (is_decimal(x_str) && digits > 0) {
        CFWord w = cf_encode_real(x_str, static_cast<std::size_t>(digits));
        result = {{"x", x_str}, {"digits", word_json(w)}};
      } else {
        Rational x = parse_rational(x_str);
        result = {{"x", rational_str(x)}, {"digits", word_json(cf_encode_rational(x))}};
      }
    } else if (*dec) {
      std::vector<long> d;
      for (const auto& p : split(word_str, ',')) d.push_back(parse_long(p));
      CFWord w(d);
      w.validate();
      result = {{"digits", word_json(w)}, {"x", rational_str(cf_decode(w))}};
    } else if (*qrat) {
      RatFuncQ f = q_rational(parse_rational(x_str));
      result = {{"num", coeff_array(f.num().coeffs())}, {"den", coeff_array(f.den().coeffs())}};
    } else if (*ser) {
      XSpec x = parse_x(x_str, digits);
      if (K < 1) throw UsageError("--K >= 1");
      IntLaurent s = x.rational && !x.source ? IntLaurent::from_ratfunc(q_rational(*x.rational), K)
                                             : q_real_series(need_source(x), K);
      if (csv) {
        csv_text = coefficients_csv(s, K);
      } else {
        std::vector<mpz_class> c;
        for (long k = s.valuation(); k < K; ++k) c.push_back(s.coeff(k));
        result = {{"x", x_str}, {"K", K}, {"valuation", s.valuation()}, {"coeffs", coeff_array(c)}};
      }
    } else if (*ev) {
      XSpec x = parse_x(x_str, digits);
      cplx q = parse_complex(q_str);
      const DigitSource& src = need_source(x);
      CertifiedComplex c;
      std::string m = method;
      if (m == "auto") {
        if (q.imag() == 0 && q.real() < 0)
          m = "negative";
        else if (in_region_D(q))
          m = "D";
        else
          m = "series";
      }
      if (m == "D")
        c = eval_in_D(src, q, tol);
      else if (m == "disk")
        c = eval_in_disk(src, q, tol);
      else if (m == "negative") {
        if (q.imag() != 0) throw Error(Errc::Domain, "negative method needs real q");
        c = eval_negative_q(src, q.real(), tol);
      } else if (m == "series")
        c = eval_series(src, q, tol);
      else
        throw UsageError("unknown --method " + method);
      result = cert_json(x_str, q, c);
      result["method"] = m;
    } else if (*jmp) {
      Rational x = parse_rational(x_str);
      if (x < 1) throw Error(Errc::Domain, "jump: x >= 1");
      cplx q = parse_complex(q_str);
      CFWord w = cf_encode_rational(x);
      JumpRecord r = jump_at(w, q);
      result = {{"x", rational_str(x)}, {"digits", word_json(r.word)}, {"C_N", r.C_N},
                {"symbolic", jump_at(w).symbolic->str()}, {"q", cjson(q)},
                {"value", cjson(r.numeric)}};
    } else if (*tj) {
      cplx q = parse_complex(q_str);
      TotalJumpResult r = numeric_total_jump(q, tol);
      result = json::parse(total_jump_json(r));
      json rows = json::array();
      for (std::size_t i = 0; i < r.partials.size(); ++i)
        rows.push_back({{"depth", static_cast<long>(i) + 1}, {"partial", cjson(r.partials[i])},
                        {"gap", std::abs(r.partials[i] - r.target)}});
      if (csv) result = {{"rows", rows}};
    } else if (*bet) {
      json rows = json::array();
      for (int lv = 0; lv <= 2; ++lv) {
        if (level >= 0 && lv != level) continue;
        rows.push_back({{"level", lv}, {"value", beta_root(lv, std::max(tol, 1e-12))}});
      }
      if (rows.empty()) throw Error(Errc::Domain, "beta: level in {0,1,2}");
      result = level >= 0 ? rows[0] : json{{"rows", rows}};
    } else if (*rad) {
      XSpec x = parse_x(x_str.empty() ? "phi" : x_str, digits);
      IntLaurent s = q_real_series(need_source(x), K + 1);
      RadiusEstimate r = radius_estimate(s, window);
      result = {{"x", x_str.empty() ? "phi" : x_str}, {"K", K}, {"window", window}, {"value", r.value},
                {"argmax", r.argmax}, {"ratio", ratio_estimate(s, window)}, {"target", 1 / kRStar},
                {"rel_gap", std::abs(r.value * kRStar - 1)}};
    } else if (*ce) {
      Counterexample c = counterexample_stream(static_cast<int>(stages), budget);
      json rows = json::array();
      for (std::size_t m = 0; m < c.schedule.n.size(); ++m)
        rows.push_back({{"stage", static_cast<long>(m) + 1}, {"n", c.schedule.n[m]},
                        {"achieved", c.schedule.achieved[m]}, {"target", c.schedule.target[m]}});
      result = {{"stages", stages}, {"verified", verify_counterexample(c)}, {"blocks", c.schedule.blocks},
                {"rows", rows}};
    } else if (*bes) {
      double q = parse_double(q_str);
      cplx v = transcendental_qvalue(s_arg, r_arg, q, tol);
      result = {{"s", s_arg}, {"r", r_arg}, {"q", q}, {"value", cjson(v)},
                {"limit", transcendental_limit(s_arg, r_arg)}};
      if (in_region_D(q)) {
        CertifiedComplex c = eval_in_D(arith_stream(s_arg, r_arg), q, std::max(tol, 1e-13));
        result["cf_value"] = cjson(c.value);
        result["cf_err"] = c.err;
      }
    } else if (*qc) {
      cplx tau = parse_complex(tau_str);
      QComplexMode mode;
      if (mode_str == "reduced")
        mode = QComplexMode::reduced;
      else if (mode_str == "direct")
        mode = QComplexMode::direct;
      else
        throw UsageError("unknown --mode " + mode_str);
      QComplexParams p = QComplexParams::from_t(t_arg);
      QComplexValue v = q_complex_value(tau, p, tol, mode);
      result = {{"tau", cjson(tau)}, {"t", p.t}, {"q", p.q}, {"value", cjson(v.value)}, {"lambda", cjson(v.lambda)},
                {"form", v.used_form2 ? "form2" : "form1"}, {"moves", v.moves}, {"mode", mode_str}};
    } else if (*rs) {
      json rows = json::array();
      auto row = [&](cplx q) {
        bool d = in_region_D(q);
        return json{{"re", q.real()}, {"im", q.imag()}, {"D", d}, {"Dprime", d && in_region_Dprime(q)},
                    {"drop", in_drop_region(q)}};
      };
      if (samples > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-1, 1);
        while (static_cast<long>(rows.size()) < samples) {
          cplx q(u(rng), u(rng));
          if (std::abs(q) < rmax && q != 0.0) rows.push_back(row(q));
        }
      } else {
        if (n_grid < 2) throw UsageError("--n >= 2");
        for (long i = 0; i < n_grid; ++i)
          for (long j = 0; j < n_grid; ++j) {
            cplx q(-rmax + 2 * rmax * i / (n_grid - 1), -rmax + 2 * rmax * j / (n_grid - 1));
            if (std::abs(q) < rmax && q != 0.0) rows.push_back(row(q));
          }
      }
      result = {{"rows", rows}};
    }
  } catch (const UsageError& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
    return kExitDomain;
  }

  std::string text = csv ? (csv_text.empty() ? to_csv(result) : csv_text) : result.dump() + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << json{{"error", "io"}, {"message", "cannot open " + out_path}}.dump() << "\n";
      return kExitUsage;
    }
    f << text;
  }
  return 0;
}
