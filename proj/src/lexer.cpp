#include "nxkit/token.hpp"

#include <cctype>

namespace nxkit {

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)); }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_whitespace();
      if (at_end()) break;
      tokens.push_back(next_token());
    }
    tokens.push_back(Token{TokenKind::End, "", position()});
    return tokens;
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool at_end() const { return i_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }
  Position position() const { return Position{i_, line_, col_}; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_whitespace() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v')
        advance();
      else
        break;
    }
  }

  Token make(TokenKind kind, Position start) {
    return Token{kind, std::string(text_.substr(start.offset, i_ - start.offset)), start};
  }

  [[noreturn]] void fail(Position pos, const std::string& msg) {
    throw ParseError(pos, msg);
  }

  Token next_token() {
    Position start = position();
    char c = peek();

    if (c == '%') {
      while (!at_end() && peek() != '\n') advance();
      return make(TokenKind::Comment, start);
    }
    if (c == '/' && peek(1) == '*') {
      advance();
      advance();
      while (!(peek() == '*' && peek(1) == '/')) {
        if (at_end()) fail(start, "unterminated block comment");
        advance();
      }
      advance();
      advance();
      return make(TokenKind::Comment, start);
    }
    if (c == '\'') return single_quoted(start);
    if (is_lower(c)) {
      while (is_alnum(peek())) advance();
      return make(TokenKind::LowerWord, start);
    }
    if (is_upper(c)) {
      while (is_alnum(peek())) advance();
      return make(TokenKind::UpperWord, start);
    }
    if (is_digit(c)) {
      while (is_digit(peek())) advance();
      if (is_alnum(peek())) fail(start, "malformed number");
      return make(TokenKind::Integer, start);
    }
    if (c == '$') return defined_word(start);
    if (c == '#') return hash_word(start);
    return symbolic(start);
  }

  Token single_quoted(Position start) {
    advance();  // opening quote
    for (;;) {
      if (at_end()) fail(start, "unterminated single-quoted atom");
      char c = peek();
      if (c == '\\') {
        advance();
        if (at_end()) fail(start, "unterminated escape in single-quoted atom");
        char e = peek();
        if (e != '\\' && e != '\'') fail(position(), "invalid escape in single-quoted atom");
        advance();
        continue;
      }
      if (c == '\'') {
        advance();
        return make(TokenKind::SingleQuoted, start);
      }
      if (c == '\n') fail(start, "unterminated single-quoted atom");
      advance();
    }
  }

  Token defined_word(Position start) {
    advance();  // '$'
    bool system = false;
    if (peek() == '$') {
      system = true;
      advance();
    }
    if (!is_lower(peek()) && !is_upper(peek()))
      fail(start, "expected word after '$'");
    while (is_alnum(peek())) advance();
    return make(system ? TokenKind::SystemWord : TokenKind::DefinedWord, start);
  }

  Token hash_word(Position start) {
    advance();  // '#'
    if (peek() == '$') {
      advance();
      if (peek() == '$') advance();
      if (!is_lower(peek()) && !is_upper(peek()))
        fail(start, "expected word after '#$'");
      while (is_alnum(peek())) advance();
      return make(TokenKind::HashWord, start);
    }
    if (is_digit(peek())) {
      while (is_digit(peek())) advance();
      return make(TokenKind::HashWord, start);
    }
    if (is_lower(peek()) || is_upper(peek())) {
      while (is_alnum(peek())) advance();
      return make(TokenKind::HashWord, start);
    }
    fail(start, "expected index after '#'");
  }

  Token symbolic(Position start) {
    char c = peek();
    switch (c) {
      case '(': case ')': case ',': case '.': case '*': case '>': case '@':
      case '^': case '-': case '{': case '}':
        advance();
        return make(TokenKind::Punct, start);
      case '[':
        if (peek(1) == '.' && peek(2) == ']') {
          advance(); advance(); advance();
          return make(TokenKind::Connective, start);
        }
        advance();
        return make(TokenKind::Punct, start);
      case ']':
        advance();
        return make(TokenKind::Punct, start);
      case ':':
        if (peek(1) == '=') {
          advance(); advance();
          return make(TokenKind::Punct, start);
        }
        advance();
        return make(TokenKind::Punct, start);
      case '~': case '&': case '|':
        advance();
        return make(TokenKind::Connective, start);
      case '!':
        advance();
        if (peek() == '=') {
          advance();
          return make(TokenKind::Connective, start);
        }
        return make(TokenKind::Connective, start);
      case '?':
        advance();
        return make(TokenKind::Connective, start);
      case '=':
        advance();
        if (peek() == '=') {
          advance();
          return make(TokenKind::Punct, start);  // identity in logic specifications
        }
        if (peek() == '>') {
          advance();
          return make(TokenKind::Connective, start);
        }
        return make(TokenKind::Connective, start);
      case '<':
        if (peek(1) == '=' && peek(2) == '>') {
          advance(); advance(); advance();
          return make(TokenKind::Connective, start);
        }
        if (peek(1) == '~' && peek(2) == '>') {
          advance(); advance(); advance();
          return make(TokenKind::Connective, start);
        }
        if (peek(1) == '.' && peek(2) == '>') {
          advance(); advance(); advance();
          return make(TokenKind::Connective, start);
        }
        if (peek(1) == '=') {
          advance(); advance();
          return make(TokenKind::Connective, start);
        }
        if (peek(1) == '#') {  // opens an indexed dia short form <#i>
          advance();
          return make(TokenKind::Punct, start);
        }
        fail(start, "unexpected character '<'");
      default:
        fail(start, std::string("unexpected character '") + c + "'");
    }
  }
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::LowerWord: return "lower word";
    case TokenKind::UpperWord: return "upper word";
    case TokenKind::DefinedWord: return "defined word";
    case TokenKind::SystemWord: return "system word";
    case TokenKind::HashWord: return "hash word";
    case TokenKind::SingleQuoted: return "single-quoted atom";
    case TokenKind::Integer: return "integer";
    case TokenKind::Punct: return "punctuation";
    case TokenKind::Connective: return "connective";
    case TokenKind::Comment: return "comment";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

}  // namespace nxkit
