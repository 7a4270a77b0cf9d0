#include "lexer.hpp"

#include <cctype>

#include "geo/errors.hpp"

namespace geo::script::detail {

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Integer: return "integer";
    case Tok::String: return "string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Slash: return "'/'";
    case Tok::At: return "'@'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(c);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') bump(text[i]);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        s.push_back(text[i]);
        bump(text[i]);
      }
      out.push_back({Tok::Ident, std::move(s), tl, tc});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::string s;
      if (c == '-') {
        s.push_back('-');
        bump(c);
      }
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        s.push_back(text[i]);
        bump(text[i]);
      }
      out.push_back({Tok::Integer, std::move(s), tl, tc});
      continue;
    }
    if (c == '"') {
      bump(c);
      std::string s;
      for (;;) {
        if (i >= text.size() || text[i] == '\n')
          throw ParseError(tl, tc, "unterminated string");
        if (text[i] == '"') {
          bump(text[i]);
          break;
        }
        s.push_back(text[i]);
        bump(text[i]);
      }
      out.push_back({Tok::String, std::move(s), tl, tc});
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '=': k = Tok::Equals; break;
      case '/': k = Tok::Slash; break;
      case '@': k = Tok::At; break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), tl, tc});
    bump(c);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

}  // namespace geo::script::detail
