#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geo/point.hpp"
#include "geo/real.hpp"
#include "geo/verdict.hpp"

namespace geo::script {

// Statements of a construction script.  `line` is 1-based source position,
// kept for error messages and the JSON report.

struct PointDecl {
  std::string name;
  Rational x, y;
  int line = 0;
};

struct LetStmt {
  std::vector<std::string> names;  // bound to the construction's output points
  std::string call;
  std::vector<std::string> args;
  int line = 0;
};

struct AssertStmt {
  std::string relation;
  std::vector<std::string> args;
  std::optional<unsigned long> fuel_override;  // "@ N": witness budget for this check only
  int line = 0;
};

struct EmitStmt {
  std::string format;  // "json" or "svg"
  std::string path;
  int line = 0;
};

using Statement = std::variant<PointDecl, LetStmt, AssertStmt, EmitStmt>;

struct ScriptProgram {
  std::vector<Statement> statements;
};

bool operator==(const ScriptProgram& a, const ScriptProgram& b);

// Parses a script.  Binding discipline is static: every name is declared
// before use (UnboundName) and declared at most once (Rebind); syntax
// problems raise ParseError with line/column.
ScriptProgram parse_script(const std::string& text);

// Canonical rendering; parses back to an equal program.
std::string pretty_print(const ScriptProgram& p);

struct AssertionOutcome {
  int line = 0;
  std::string relation;
  Verdict verdict;
};

struct ConstructionRecord {
  std::string name;  // the operation invoked
  std::vector<std::pair<std::string, Point>> points;
  std::vector<std::pair<Point, Point>> segments;  // drawn in figures
};

struct EmitRequest {
  std::string format;
  std::string path;
  int line = 0;
};

struct EvalEnv {
  std::vector<std::pair<std::string, Point>> bindings;  // in binding order
  std::vector<AssertionOutcome> results;
  std::vector<ConstructionRecord> constructions;
  std::vector<EmitRequest> emits;

  const Point& lookup(const std::string& name, int line) const;
};

// Runs the program in order.  Witnesses demanded by constructions are
// derived on the spot from the relation checks at the ambient fuel.
// Emit statements are collected, not written; see write_emits.
EvalEnv eval_script(const ScriptProgram& p, const Fuel& fuel);

bool all_assertions_hold(const EvalEnv& env);

// Fixed-point rendering with `digits` fractional places, ties away from
// zero.  Deterministic: no binary floating point on any output path.
std::string format_decimal(const Rational& r, unsigned digits);

// {"assertions": [{line, relation, verdict, witness?}],
//  "constructions": [{name, points}]}
std::string json_report(const EvalEnv& env);

// Static figure: labeled circles per binding, lines per constructed segment,
// viewBox fitted with a 10% margin, coordinates at 1/10^4.
std::string svg_figure(const EvalEnv& env);

// Renders every emit request to its path (IoError on failure).
void write_emits(const EvalEnv& env);

}  // namespace geo::script
