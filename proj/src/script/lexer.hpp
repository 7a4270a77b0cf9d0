#pragma once

#include <string>
#include <vector>

namespace geo::script::detail {

enum class Tok { Ident, Integer, String, LParen, RParen, Comma, Equals, Slash, At, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

const char* tok_name(Tok t);

// Whitespace- and comment-skipping scanner; throws ParseError on stray
// characters or unterminated strings.
std::vector<Token> lex(const std::string& text);

}  // namespace geo::script::detail
