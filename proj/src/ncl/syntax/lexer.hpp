#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ncl::syntax {

enum class TokenKind {
  LowerWord,
  UpperWord,
  DollarWord,        // $word
  DollarDollarWord,  // $$word
  SingleQuoted,      // text holds the unescaped content
  DistinctObject,    // "..."
  Number,
  IndexWord,         // #word, text keeps the '#'
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Dot,
  Colon,
  ColonEquals,   // :=
  DoubleEquals,  // ==
  Equals,
  NotEquals,
  Tilde,
  Ampersand,
  Pipe,
  Implies,         // =>
  ReverseImplies,  // <=
  Iff,             // <=>
  Xor,             // <~>
  Nor,             // ~|
  Nand,            // ~&
  Bang,
  Question,
  Caret,
  At,
  Greater,
  Star,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::string describe(const Token& token);

/// Splits TPTP text into tokens, dropping whitespace, `%` line comments and
/// `/* */` block comments. Throws ncl::Error(ParseError) on stray characters.
std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token vector with positioned error reporting.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  bool at(TokenKind kind, std::size_t ahead = 0) const { return peek(ahead).kind == kind; }
  bool at_word(std::string_view text) const;
  Token next();
  bool accept(TokenKind kind);
  Token expect(TokenKind kind, std::string_view what);
  [[noreturn]] void fail(const Token& at, const std::string& what) const;
  [[noreturn]] void unexpected(std::string_view expected) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace ncl::syntax
