#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "geo/errors.hpp"
#include "geo/script/script.hpp"

namespace geo::script {

std::string format_decimal(const Rational& r, unsigned digits) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int n = (r * Rational(scale)).round_half_away();
  const bool neg = n < 0;
  if (neg) n = -n;
  const Int whole = n / scale;
  const Int frac = n % scale;
  std::string f = frac.get_str();
  f.insert(f.begin(), digits - f.size(), '0');
  return (neg ? "-" : "") + whole.get_str() + "." + f;
}

namespace {

std::string coord(const Real& v, unsigned digits, const Int& k) {
  return format_decimal(v.approx(k), digits);
}

struct FlatPoint {
  Rational x, y;
};

// Screen coordinates: y axis flipped so the figure reads the usual way up.
FlatPoint flatten(const Point& p) {
  static const Int k(10000);
  return {p.x().approx(k), Rational(0) - p.y().approx(k)};
}

}  // namespace

std::string json_report(const EvalEnv& env) {
  static const Int k(100000000);  // coordinates good to 1e-8, printed to 1e-6
  nlohmann::json doc;
  doc["assertions"] = nlohmann::json::array();
  for (const AssertionOutcome& r : env.results) {
    nlohmann::json a{{"line", r.line},
                     {"relation", r.relation},
                     {"verdict", outcome_name(r.verdict.outcome)}};
    if (r.verdict.index) a["witness"] = r.verdict.index->n.get_str();
    doc["assertions"].push_back(std::move(a));
  }
  doc["constructions"] = nlohmann::json::array();
  for (const ConstructionRecord& c : env.constructions) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& [name, p] : c.points)
      pts.push_back({{"name", name}, {"x", coord(p.x(), 6, k)}, {"y", coord(p.y(), 6, k)}});
    doc["constructions"].push_back({{"name", c.name}, {"points", std::move(pts)}});
  }
  return doc.dump(2) + "\n";
}

std::string svg_figure(const EvalEnv& env) {
  std::vector<std::pair<std::string, FlatPoint>> labeled;
  for (const auto& [name, p] : env.bindings) labeled.emplace_back(name, flatten(p));
  std::vector<std::pair<FlatPoint, FlatPoint>> segs;
  for (const ConstructionRecord& c : env.constructions)
    for (const auto& [a, b] : c.segments) segs.emplace_back(flatten(a), flatten(b));

  if (labeled.empty() && segs.empty())
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\"></svg>\n";

  bool first = true;
  Rational minx, maxx, miny, maxy;
  auto grow = [&](const FlatPoint& f) {
    if (first) {
      minx = maxx = f.x;
      miny = maxy = f.y;
      first = false;
      return;
    }
    if (f.x < minx) minx = f.x;
    if (maxx < f.x) maxx = f.x;
    if (f.y < miny) miny = f.y;
    if (maxy < f.y) maxy = f.y;
  };
  for (const auto& [_, f] : labeled) grow(f);
  for (const auto& [a, b] : segs) {
    grow(a);
    grow(b);
  }

  auto pad = [](Rational& lo, Rational& hi) {
    const Rational w = hi - lo;
    const Rational m = w.sgn() == 0 ? Rational(1) : w / Rational(10);
    lo -= m;
    hi += m;
  };
  pad(minx, maxx);
  pad(miny, maxy);
  const Rational w = maxx - minx, h = maxy - miny;
  const Rational dim = w < h ? h : w;
  const Rational radius = dim / Rational(50);
  const Rational font = dim / Rational(25);
  const Rational stroke = dim / Rational(250);
  auto d = [](const Rational& v) { return format_decimal(v, 4); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + d(minx) + " " +
                    d(miny) + " " + d(w) + " " + d(h) + "\">\n";
  for (const auto& [a, b] : segs)
    out += "  <line x1=\"" + d(a.x) + "\" y1=\"" + d(a.y) + "\" x2=\"" + d(b.x) + "\" y2=\"" +
           d(b.y) + "\" stroke=\"black\" stroke-width=\"" + d(stroke) + "\"/>\n";
  for (const auto& [name, f] : labeled)
    out += "  <circle cx=\"" + d(f.x) + "\" cy=\"" + d(f.y) + "\" r=\"" + d(radius) +
           "\" fill=\"black\"/>\n";
  for (const auto& [name, f] : labeled)
    out += "  <text x=\"" + d(f.x + radius) + "\" y=\"" + d(f.y - radius) + "\" font-size=\"" +
           d(font) + "\">" + name + "</text>\n";
  out += "</svg>\n";
  return out;
}

void write_emits(const EvalEnv& env) {
  for (const EmitRequest& e : env.emits) {
    const std::string body = e.format == "json" ? json_report(env) : svg_figure(env);
    std::ofstream out(e.path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("line " + std::to_string(e.line) + ": cannot open '" + e.path + "'");
    out << body;
    out.flush();
    if (!out) throw IoError("line " + std::to_string(e.line) + ": write failed for '" + e.path + "'");
  }
}

}  // namespace geo::script
