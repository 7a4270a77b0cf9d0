#include <string>
#include <vector>

#include "geo/angles.hpp"
#include "geo/constructions.hpp"
#include "geo/errors.hpp"
#include "geo/relations.hpp"
#include "geo/script/script.hpp"
#include "ops.hpp"

namespace geo::script {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void bind_name(EvalEnv& env, const std::string& name, const Point& p, int line) {
  for (const auto& [n, _] : env.bindings)
    if (n == name)
      throw Rebind("line " + std::to_string(line) + ": name '" + name + "' is already bound");
  env.bindings.emplace_back(name, p);
}

Verdict rel(RelationKind k, const std::vector<Point>& pts, const Fuel& fuel) {
  return relation(k, pts, fuel);
}

AngleTriple triple(const std::vector<Point>& p, std::size_t off) {
  return AngleTriple{p[off], p[off + 1], p[off + 2]};
}

ConstructionResult dispatch(const LetStmt& l, const std::vector<Point>& a, const Fuel& fuel) {
  using K = RelationKind;
  if (l.call == "midpoint")
    return midpoint(a[0], a[1], rel(K::PointApart, {a[0], a[1]}, fuel), fuel);
  if (l.call == "extend")
    return extend(a[0], a[1], Segment{a[2], a[3]}, rel(K::PointApart, {a[0], a[1]}, fuel), fuel);
  if (l.call == "straightedge_compass")
    return straightedge_compass(a[0], a[1], a[2], a[3],
                                rel(K::PointApart, {a[0], a[1]}, fuel),
                                rel(K::Between, {a[2], a[1], a[3]}, fuel), fuel);
  if (l.call == "compass_compass") {
    CompassWitnesses w{rel(K::Cong, {a[0], a[1], a[0], a[4]}, fuel),
                       seg_gt(Segment{a[2], a[3]}, Segment{a[2], a[4]}, fuel),
                       rel(K::Cong, {a[2], a[3], a[2], a[5]}, fuel),
                       seg_gt(Segment{a[0], a[1]}, Segment{a[0], a[5]}, fuel),
                       rel(K::PointApart, {a[0], a[2]}, fuel)};
    return compass_compass(a[0], a[1], a[2], a[3], a[4], a[5], w, fuel);
  }
  if (l.call == "plane_separation")
    return plane_separation(a[0], a[1], a[2], a[3],
                            left(a[2], Segment{a[0], a[1]}, fuel),
                            left(a[3], Segment{a[1], a[0]}, fuel), fuel);
  if (l.call == "outer_pasch")
    return outer_pasch(a[0], a[1], a[2], a[3], a[4],
                       rel(K::PointSegApart, {a[3], a[1], a[4]}, fuel),
                       rel(K::StrictBetween, {a[1], a[4], a[2]}, fuel),
                       rel(K::StrictBetween, {a[4], a[3], a[0]}, fuel), fuel);
  if (l.call == "parallelogram_fourth")
    return parallelogram_fourth(a[0], a[1], a[2],
                                rel(K::PointApart, {a[0], a[1]}, fuel),
                                rel(K::PointApart, {a[0], a[2]}, fuel),
                                rel(K::PointApart, {a[1], a[2]}, fuel), fuel);
  if (l.call == "bisector_foot") return bisector_foot(a[0], a[1], a[2], fuel);
  throw Error("unknown construction '" + l.call + "'");
}

// Segments worth drawing for each construction: defining strokes plus the
// strokes through the new point.
std::vector<std::pair<Point, Point>> figure_segments(const LetStmt& l,
                                                     const std::vector<Point>& a,
                                                     const Point& out) {
  if (l.call == "midpoint") return {{a[0], a[1]}};
  if (l.call == "extend") return {{a[0], out}};
  if (l.call == "straightedge_compass") return {{a[0], out}};
  if (l.call == "compass_compass") return {{a[0], out}, {a[2], out}};
  if (l.call == "plane_separation") return {{a[0], a[1]}, {a[2], a[3]}};
  if (l.call == "outer_pasch") return {{a[1], out}, {a[2], a[0]}};
  if (l.call == "parallelogram_fourth")
    return {{a[0], a[1]}, {a[0], a[2]}, {a[1], out}, {a[2], out}};
  if (l.call == "bisector_foot") return {{a[0], out}, {a[1], a[2]}};
  return {};
}

Verdict run_assert(const AssertStmt& st, const std::vector<Point>& pts, const Fuel& fuel) {
  if (auto k = relation_from_name(st.relation)) return relation(*k, pts, fuel);
  if (st.relation == "angle_cong") return angle_cong(triple(pts, 0), triple(pts, 3), fuel);
  if (st.relation == "angle_lt") return angle_lt(triple(pts, 0), triple(pts, 3), fuel);
  if (st.relation == "angle_sum")
    return angle_sum(triple(pts, 0), triple(pts, 3), triple(pts, 6), fuel);
  throw Error("unknown relation '" + st.relation + "'");
}

}  // namespace

const Point& EvalEnv::lookup(const std::string& name, int line) const {
  for (const auto& [n, p] : bindings)
    if (n == name) return p;
  throw UnboundName("line " + std::to_string(line) + ": unbound name '" + name + "'");
}

EvalEnv eval_script(const ScriptProgram& prog, const Fuel& fuel) {
  EvalEnv env;
  for (const Statement& stv : prog.statements) {
    std::visit(
        overloaded{
            [&](const PointDecl& d) { bind_name(env, d.name, Point::rational(d.x, d.y), d.line); },
            [&](const LetStmt& l) {
              std::vector<Point> args;
              args.reserve(l.args.size());
              for (const std::string& n : l.args) args.push_back(env.lookup(n, l.line));
              ConstructionResult res;
              try {
                res = dispatch(l, args, fuel);
              } catch (const Error& e) {
                throw Error("line " + std::to_string(l.line) + ": " + l.call + ": " + e.what());
              }
              ConstructionRecord rec;
              rec.name = l.call;
              for (std::size_t i = 0; i < l.names.size(); ++i) {
                bind_name(env, l.names[i], res.points[i], l.line);
                rec.points.emplace_back(l.names[i], res.points[i]);
              }
              rec.segments = figure_segments(l, args, res.points[0]);
              env.constructions.push_back(std::move(rec));
            },
            [&](const AssertStmt& a) {
              std::vector<Point> pts;
              pts.reserve(a.args.size());
              for (const std::string& n : a.args) pts.push_back(env.lookup(n, a.line));
              Fuel f = fuel;
              if (a.fuel_override) f.max_index = *a.fuel_override;
              Verdict v;
              try {
                v = run_assert(a, pts, f);
              } catch (const Error& e) {
                throw Error("line " + std::to_string(a.line) + ": " + a.relation + ": " +
                            e.what());
              }
              env.results.push_back({a.line, a.relation, std::move(v)});
            },
            [&](const EmitStmt& e) { env.emits.push_back({e.format, e.path, e.line}); },
        },
        stv);
  }
  return env;
}

bool all_assertions_hold(const EvalEnv& env) {
  for (const AssertionOutcome& r : env.results)
    if (!r.verdict.holds()) return false;
  return true;
}

}  // namespace geo::script
