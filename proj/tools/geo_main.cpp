#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geo/constructions.hpp"
#include "geo/errors.hpp"
#include "geo/real.hpp"
#include "geo/script/script.hpp"
#include "geo/verifier/verifier.hpp"
#include "verifier/rng.hpp"

namespace {

using geo::Fuel;
using geo::Int;
using geo::Point;
using geo::Rational;
using geo::Real;

// ---------------------------------------------------------------------------
// run

int cmd_run(const std::string& path, unsigned long fuel_n, unsigned precision, bool as_json) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "geo: cannot open '" << path << "'\n";
    return 2;
  }
  std::ostringstream text;
  text << in.rdbuf();

  geo::script::ScriptProgram prog;
  try {
    prog = geo::script::parse_script(text.str());
  } catch (const geo::Error& e) {
    std::cerr << "geo: " << path << ": " << e.what() << "\n";
    return 2;
  }

  Fuel fuel = geo::default_fuel();
  if (fuel_n) fuel.max_index = fuel_n;
  if (precision) fuel.precision_bits = precision;

  try {
    geo::script::EvalEnv env = geo::script::eval_script(prog, fuel);
    geo::script::write_emits(env);
    if (as_json) {
      std::cout << geo::script::json_report(env);
    } else {
      for (const auto& r : env.results) {
        std::cout << "line " << r.line << ": " << r.relation << ": "
                  << geo::outcome_name(r.verdict.outcome);
        if (!r.verdict.note.empty()) std::cout << " (" << r.verdict.note << ")";
        std::cout << "\n";
      }
      std::cout << (geo::script::all_assertions_hold(env) ? "ok" : "FAILED") << ": "
                << env.results.size() << " assertion(s)\n";
    }
    return geo::script::all_assertions_hold(env) ? 0 : 1;
  } catch (const geo::IoError& e) {
    std::cerr << "geo: " << e.what() << "\n";
    return 2;
  } catch (const geo::Error& e) {
    std::cerr << "geo: " << e.what() << "\n";
    return 1;
  }
}

// ---------------------------------------------------------------------------
// check-axioms

int cmd_check_axioms(int samples, std::uint64_t seed, const std::string& only) {
  std::vector<geo::verifier::AxiomId> ids;
  if (only.empty()) {
    auto all = geo::verifier::all_axioms();
    ids.assign(all.begin(), all.end());
  } else {
    std::string item;
    std::istringstream list(only);
    while (std::getline(list, item, ',')) {
      const auto from = item.find_first_not_of(" \t");
      if (from == std::string::npos) continue;
      const auto to = item.find_last_not_of(" \t");
      item = item.substr(from, to - from + 1);
      const auto id = geo::verifier::axiom_from_name(item);
      if (!id) {
        std::cerr << "geo: unknown axiom '" << item << "'\n";
        return 2;
      }
      ids.push_back(*id);
    }
    if (ids.empty()) {
      std::cerr << "geo: --only named no axioms\n";
      return 2;
    }
  }
  const auto report = geo::verifier::run_suite(ids, samples, seed, geo::default_fuel());
  std::cout << geo::verifier::suite_to_json(report) << "\n";
  return report.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// steiner-lehmus

// "(ax,ay),(bx,by),(cx,cy)" with rational components.
std::vector<Rational> parse_point_list(const std::string& s, std::size_t points) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  std::vector<Rational> out;
  std::size_t i = 0;
  auto expect = [&](char c) {
    if (i >= t.size() || t[i] != c)
      throw geo::Error(std::string("expected '") + c + "' in point list");
    ++i;
  };
  auto component = [&](char stop) {
    const std::size_t from = i;
    while (i < t.size() && t[i] != stop) ++i;
    if (i == from) throw geo::Error("empty coordinate in point list");
    return Rational::parse(t.substr(from, i - from));
  };
  for (std::size_t p = 0; p < points; ++p) {
    if (p) expect(',');
    expect('(');
    out.push_back(component(','));
    expect(',');
    out.push_back(component(')'));
    expect(')');
  }
  if (i != t.size()) throw geo::Error("trailing input in point list");
  return out;
}

std::string quad_or_note(const std::optional<geo::Quad>& v) {
  return v ? v->str() : std::string("(irrational)");
}

int sl_single(const std::string& triangle) {
  std::vector<Rational> c;
  try {
    c = parse_point_list(triangle, 3);
  } catch (const geo::Error& e) {
    std::cerr << "geo: --triangle: " << e.what() << "\n";
    return 2;
  }
  const Point a = Point::rational(c[0], c[1]);
  const Point b = Point::rational(c[2], c[3]);
  const Point cc = Point::rational(c[4], c[5]);
  try {
    const geo::SLInstance inst = geo::build_sl_instance(a, b, cc, geo::default_fuel());
    std::cout << "|ay|^2 = " << quad_or_note(inst.ay2) << "\n";
    std::cout << "|cx|^2 = " << quad_or_note(inst.cx2) << "\n";
    std::cout << "|ab|^2 = " << quad_or_note(inst.ab2) << "\n";
    std::cout << "|cb|^2 = " << quad_or_note(inst.cb2) << "\n";
    const bool iso = inst.ab2 && inst.cb2 && *inst.ab2 == *inst.cb2;
    std::cout << "isosceles: " << (iso ? "yes" : "no") << "\n";
    return 0;
  } catch (const geo::Error& e) {
    std::cerr << "geo: " << e.what() << "\n";
    return 2;
  }
}

// Scalene triangles with three rational side lengths: two legs u, v drawn
// from Pythagorean pairs over the shared altitude 12, so both bisector feet
// come out rational and the squared-length signs are exact.
int sl_sweep(int n) {
  namespace vd = geo::verifier::detail;
  static const long kLegs[] = {5, 9, 16, 35};  // (leg, 12, hyp) all integral
  vd::Rng rng(0x51ee7a11u);
  int mismatches = 0;
  for (int i = 0; i < n; ++i) {
    const long u = kLegs[rng.below(4)];
    long v = u;
    while (v == u) v = kLegs[rng.below(4)];
    const Rational lam(rng.range(1, 8));
    vd::RatPt a{Rational(-u) * lam, Rational(0)};
    vd::RatPt b{Rational(0), Rational(12) * lam};
    vd::RatPt c{Rational(v) * lam, Rational(0)};
    const vd::Motion m = vd::random_motion(rng);
    const auto pts = vd::to_points({m.apply(a), m.apply(b), m.apply(c)});
    try {
      const geo::SLInstance inst =
          geo::build_sl_instance(pts[0], pts[1], pts[2], geo::default_fuel());
      const auto [sx, sb] = geo::sl_signs(inst);
      if (sx != sb) ++mismatches;
    } catch (const geo::Error&) {
      ++mismatches;
    }
  }
  std::cout << "sweep: " << n << " instances, mismatches: " << mismatches << "\n";
  if (mismatches == 0)
    std::cout << "sign(|cx|^2 - |ay|^2) == sign(|cb|^2 - |ab|^2) on every instance\n";
  return mismatches == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// approx: tiny expression evaluator over +, -, *, /, sqrt, rationals.

struct ExprVal {
  Real r;
  std::optional<Rational> exact;  // set while the value is provably rational
};

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  ExprVal parse() {
    ExprVal v = expr();
    skip();
    if (i_ != s_.size()) throw geo::Error("trailing input in expression");
    return v;
  }

 private:
  ExprVal expr() {
    ExprVal v = term();
    for (;;) {
      skip();
      if (eat('+')) {
        ExprVal w = term();
        v = {real_add(v.r, w.r),
             v.exact && w.exact ? std::optional(*v.exact + *w.exact) : std::nullopt};
      } else if (eat('-')) {
        ExprVal w = term();
        v = {real_sub(v.r, w.r),
             v.exact && w.exact ? std::optional(*v.exact - *w.exact) : std::nullopt};
      } else {
        return v;
      }
    }
  }

  ExprVal term() {
    ExprVal v = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        ExprVal w = factor();
        v = {real_mul(v.r, w.r),
             v.exact && w.exact ? std::optional(*v.exact * *w.exact) : std::nullopt};
      } else if (eat('/')) {
        ExprVal w = factor();
        if (!w.exact) throw geo::Error("division requires an exactly rational divisor");
        if (w.exact->sgn() == 0) throw geo::Error("division by zero");
        const Rational inv = Rational(1) / *w.exact;
        v = {real_mul(v.r, Real::from_rational(inv)),
             v.exact ? std::optional(*v.exact * inv) : std::nullopt};
      } else {
        return v;
      }
    }
  }

  ExprVal factor() {
    skip();
    if (eat('-')) {
      ExprVal v = factor();
      return {real_neg(v.r), v.exact ? std::optional(-*v.exact) : std::nullopt};
    }
    if (eat('(')) {
      ExprVal v = expr();
      skip();
      if (!eat(')')) throw geo::Error("expected ')'");
      return v;
    }
    if (isalpha()) {
      const std::string id = ident();
      if (id != "sqrt") throw geo::Error("unknown function '" + id + "'");
      skip();
      if (!eat('(')) throw geo::Error("expected '(' after sqrt");
      ExprVal v = expr();
      skip();
      if (!eat(')')) throw geo::Error("expected ')'");
      if (v.exact && v.exact->sgn() < 0) throw geo::Error("sqrt of a negative value");
      std::optional<Rational> root;
      if (v.exact) root = v.exact->exact_sqrt();
      return {real_sqrt(v.r), root};
    }
    return number();
  }

  ExprVal number() {
    skip();
    const std::size_t from = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == from) throw geo::Error("expected a number");
    Int num(s_.substr(from, i_ - from));
    if (i_ < s_.size() && s_[i_] == '/') {
      // Only a slash glued to digits is a literal's denominator; otherwise
      // leave it for term() to treat as division.
      std::size_t j = i_ + 1;
      std::size_t dfrom = j;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      if (j > dfrom) {
        Int den(s_.substr(dfrom, j - dfrom));
        i_ = j;
        if (den == 0) throw geo::Error("literal with zero denominator");
        const Rational q(num, den);
        return {Real::from_rational(q), q};
      }
    }
    const Rational q(num);
    return {Real::from_rational(q), q};
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool isalpha() const {
    return i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]));
  }
  std::string ident() {
    const std::size_t from = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    return s_.substr(from, i_ - from);
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

int cmd_approx(const std::string& expr_text, const std::string& k_text) {
  Int k;
  try {
    k = Int(k_text);
  } catch (const std::exception&) {
    std::cerr << "geo: --k must be a positive integer\n";
    return 2;
  }
  if (k < 1) {
    std::cerr << "geo: --k must be a positive integer\n";
    return 2;
  }
  try {
    const ExprVal v = ExprParser(expr_text).parse();
    const Rational r = v.r.approx(k);
    const unsigned digits = static_cast<unsigned>(k.get_str().size());
    std::cout << r.str() << " (within 1/" << k.get_str() << ")\n";
    std::cout << "~ " << geo::script::format_decimal(r, digits) << "\n";
    return 0;
  } catch (const geo::Error& e) {
    std::cerr << "geo: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructive plane geometry: scripts, checks, approximations"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Evaluate a .geo script");
  std::string run_path;
  unsigned long run_fuel = 0;
  unsigned run_precision = 0;
  bool run_json = false;
  run->add_option("file", run_path, "script file")->required();
  run->add_option("--fuel", run_fuel, "witness search budget (approximant index bound)");
  run->add_option("--precision", run_precision, "precision bits for numeric output paths");
  run->add_flag("--json", run_json, "print the JSON report to stdout");

  auto* axioms = app.add_subcommand("check-axioms", "Replay the randomized axiom suite");
  int ax_samples = 100;
  std::uint64_t ax_seed = 42;
  std::string ax_only;
  axioms->add_option("--samples", ax_samples, "instances per axiom")
      ->check(CLI::PositiveNumber);
  axioms->add_option("--seed", ax_seed, "master seed");
  axioms->add_option("--only", ax_only, "comma-separated axiom names (default: all)");

  auto* sl = app.add_subcommand("steiner-lehmus", "Bisector lengths of a triangle");
  std::string sl_triangle;
  int sl_n = 0;
  sl->add_option("--triangle", sl_triangle, "\"(ax,ay),(bx,by),(cx,cy)\" with b the apex");
  sl->add_option("--sweep", sl_n, "check the sign law on N generated scalene triangles")
      ->check(CLI::PositiveNumber);

  auto* approx = app.add_subcommand("approx", "Rational approximation of an expression");
  std::string ap_expr, ap_k = "1000000";
  approx->add_option("expr", ap_expr, "expression over + - * / sqrt and rationals")
      ->required();
  approx->add_option("--k", ap_k, "approximation is within 1/k (default 10^6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (run->parsed()) return cmd_run(run_path, run_fuel, run_precision, run_json);
  if (axioms->parsed()) return cmd_check_axioms(ax_samples, ax_seed, ax_only);
  if (sl->parsed()) {
    if (sl_n > 0) return sl_sweep(sl_n);
    if (sl_triangle.empty()) {
      std::cerr << "geo: steiner-lehmus needs --triangle or --sweep\n";
      return 2;
    }
    return sl_single(sl_triangle);
  }
  if (approx->parsed()) return cmd_approx(ap_expr, ap_k);
  return 2;
}
