#include <set>
#include <sstream>

#include "geo/errors.hpp"
#include "geo/script/script.hpp"
#include "lexer.hpp"
#include "ops.hpp"

namespace geo::script {
namespace {

using detail::Tok;
using detail::Token;

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(detail::lex(text)) {}

  ScriptProgram run() {
    ScriptProgram prog;
    while (peek().kind != Tok::End) prog.statements.push_back(statement());
    return prog;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& expected) {
    throw ParseError(t.line, t.col,
                     "expected " + expected + ", got " + detail::tok_name(t.kind) +
                         (t.text.empty() ? "" : " '" + t.text + "'"));
  }

  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), what);
    return take();
  }

  Int integer(const std::string& what) {
    Token t = expect(Tok::Integer, what);
    return Int(t.text);
  }

  Rational rational() {
    Token t = expect(Tok::Integer, "numerator");
    Int num(t.text);
    if (peek().kind != Tok::Slash) return Rational(num);
    take();
    Token d = expect(Tok::Integer, "denominator");
    Int den(d.text);
    if (den == 0) throw ParseError(d.line, d.col, "zero denominator");
    return Rational(num, den);
  }

  void define(const Token& t) {
    if (!names_.insert(t.text).second)
      throw Rebind("line " + std::to_string(t.line) + ": name '" + t.text +
                   "' is already bound");
  }

  std::string use(const Token& t) {
    if (!names_.count(t.text))
      throw UnboundName("line " + std::to_string(t.line) + ": unbound name '" + t.text + "'");
    return t.text;
  }

  Statement statement() {
    Token kw = expect(Tok::Ident, "'point', 'let', 'assert' or 'emit'");
    if (kw.text == "point") return point_decl(kw.line);
    if (kw.text == "let") return let_stmt(kw.line);
    if (kw.text == "assert") return assert_stmt(kw.line);
    if (kw.text == "emit") return emit_stmt(kw.line);
    fail(kw, "'point', 'let', 'assert' or 'emit'");
  }

  Statement point_decl(int line) {
    Token name = expect(Tok::Ident, "point name");
    expect(Tok::Equals, "'='");
    expect(Tok::LParen, "'('");
    Rational x = rational();
    expect(Tok::Comma, "','");
    Rational y = rational();
    expect(Tok::RParen, "')'");
    define(name);
    return PointDecl{name.text, x, y, line};
  }

  Statement let_stmt(int line) {
    std::vector<Token> names{expect(Tok::Ident, "binding name")};
    while (peek().kind == Tok::Comma) {
      take();
      names.push_back(expect(Tok::Ident, "binding name"));
    }
    expect(Tok::Equals, "'='");
    Token call = expect(Tok::Ident, "construction name");
    const detail::OpSig* sig = detail::op_sig(call.text);
    if (!sig) fail(call, "a construction name");
    expect(Tok::LParen, "'('");
    std::vector<std::string> args{use(expect(Tok::Ident, "argument name"))};
    while (peek().kind == Tok::Comma) {
      take();
      args.push_back(use(expect(Tok::Ident, "argument name")));
    }
    expect(Tok::RParen, "')'");
    if (args.size() != sig->args)
      throw ParseError(call.line, call.col,
                       call.text + " takes " + std::to_string(sig->args) + " arguments, got " +
                           std::to_string(args.size()));
    if (names.size() != sig->outs)
      throw ParseError(call.line, call.col,
                       call.text + " yields " + std::to_string(sig->outs) + " point(s), got " +
                           std::to_string(names.size()) + " binding name(s)");
    LetStmt st;
    st.call = call.text;
    st.args = std::move(args);
    st.line = line;
    for (Token& n : names) {
      define(n);
      st.names.push_back(n.text);
    }
    return st;
  }

  Statement assert_stmt(int line) {
    Token rel = expect(Tok::Ident, "relation name");
    std::optional<std::size_t> arity = detail::assert_arity(rel.text);
    if (!arity) fail(rel, "a relation name");
    AssertStmt st;
    st.relation = rel.text;
    st.line = line;
    for (std::size_t k = 0; k < *arity; ++k)
      st.args.push_back(use(expect(Tok::Ident, "argument name")));
    if (peek().kind == Tok::At) {
      take();
      Token f = peek();
      Int n = integer("fuel bound");
      if (n <= 0 || !n.fits_ulong_p())
        throw ParseError(f.line, f.col, "fuel bound out of range");
      st.fuel_override = n.get_ui();
    }
    return st;
  }

  Statement emit_stmt(int line) {
    Token fmt = expect(Tok::Ident, "'json' or 'svg'");
    if (fmt.text != "json" && fmt.text != "svg") fail(fmt, "'json' or 'svg'");
    Token path = expect(Tok::String, "output path");
    return EmitStmt{fmt.text, path.text, line};
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::set<std::string> names_;
};

}  // namespace

ScriptProgram parse_script(const std::string& text) { return Parser(text).run(); }

namespace {

// Source positions are layout, not meaning: equality is structural.
bool eq(const PointDecl& a, const PointDecl& b) {
  return a.name == b.name && a.x == b.x && a.y == b.y;
}
bool eq(const LetStmt& a, const LetStmt& b) {
  return a.names == b.names && a.call == b.call && a.args == b.args;
}
bool eq(const AssertStmt& a, const AssertStmt& b) {
  return a.relation == b.relation && a.args == b.args && a.fuel_override == b.fuel_override;
}
bool eq(const EmitStmt& a, const EmitStmt& b) { return a.format == b.format && a.path == b.path; }

struct StmtEq {
  template <class T, class U>
  bool operator()(const T&, const U&) const {
    return false;
  }
  template <class T>
  bool operator()(const T& a, const T& b) const {
    return eq(a, b);
  }
};

}  // namespace

bool operator==(const ScriptProgram& a, const ScriptProgram& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i)
    if (!std::visit(StmtEq{}, a.statements[i], b.statements[i])) return false;
  return true;
}

namespace {

struct Printer {
  std::ostringstream out;

  void operator()(const PointDecl& d) {
    out << "point " << d.name << " = (" << d.x.str() << ", " << d.y.str() << ")\n";
  }
  void operator()(const LetStmt& l) {
    out << "let ";
    for (std::size_t i = 0; i < l.names.size(); ++i) out << (i ? ", " : "") << l.names[i];
    out << " = " << l.call << "(";
    for (std::size_t i = 0; i < l.args.size(); ++i) out << (i ? ", " : "") << l.args[i];
    out << ")\n";
  }
  void operator()(const AssertStmt& a) {
    out << "assert " << a.relation;
    for (const std::string& s : a.args) out << " " << s;
    if (a.fuel_override) out << " @ " << *a.fuel_override;
    out << "\n";
  }
  void operator()(const EmitStmt& e) { out << "emit " << e.format << " \"" << e.path << "\"\n"; }
};

}  // namespace

std::string pretty_print(const ScriptProgram& p) {
  Printer pr;
  for (const Statement& st : p.statements) std::visit(pr, st);
  return std::move(pr.out).str();
}

}  // namespace geo::script
