#pragma once

#include <string>
#include <vector>

#include "nxkit/diagnostics.hpp"

namespace nxkit {

enum class TokenKind {
  LowerWord,     // foo, bar_1
  UpperWord,     // X, Var
  DefinedWord,   // $true, $modal, $tType
  SystemWord,    // $$system
  HashWord,      // #alex, #1, #$w
  SingleQuoted,  // 'quoted atom' (lexeme keeps the quotes)
  Integer,       // 42
  Punct,         // ( ) [ ] { } , . : * > @ ^ == :=
  Connective,    // ~ & | ! ? = != => <= <=> <~> [.] <.>
  Comment,       // % line or /* block */ (lexeme keeps the markers)
  End            // end of input
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string lexeme;
  Position position;

  bool is(TokenKind k) const { return kind == k; }
  bool is(TokenKind k, const char* lex) const {
    return kind == k && lexeme == lex;
  }
  bool punct(const char* lex) const { return is(TokenKind::Punct, lex); }
  bool conn(const char* lex) const { return is(TokenKind::Connective, lex); }
};

// Tokenizes TPTP text. Comments are emitted as Comment tokens; whitespace is
// skipped. Every non-whitespace input byte is covered by exactly one token,
// so lexemes plus whitespace gaps reconstruct the input. Throws ParseError
// on malformed input (unterminated quote/comment, stray characters).
std::vector<Token> tokenize(std::string_view text);

const char* token_kind_name(TokenKind kind);

}  // namespace nxkit
