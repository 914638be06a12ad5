#include "ncl/syntax/lexer.hpp"

#include <cctype>

#include "ncl/error.hpp"

namespace ncl::syntax {

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Punct {
  std::string_view text;
  TokenKind kind;
};

// Longest match first.
constexpr Punct kPunctuation[] = {
    {"<=>", TokenKind::Iff},          {"<~>", TokenKind::Xor},
    {":=", TokenKind::ColonEquals},   {"==", TokenKind::DoubleEquals},
    {"=>", TokenKind::Implies},       {"<=", TokenKind::ReverseImplies},
    {"!=", TokenKind::NotEquals},     {"~|", TokenKind::Nor},
    {"~&", TokenKind::Nand},          {"(", TokenKind::LParen},
    {")", TokenKind::RParen},         {"[", TokenKind::LBracket},
    {"]", TokenKind::RBracket},       {"{", TokenKind::LBrace},
    {"}", TokenKind::RBrace},         {",", TokenKind::Comma},
    {".", TokenKind::Dot},            {":", TokenKind::Colon},
    {"=", TokenKind::Equals},         {"~", TokenKind::Tilde},
    {"&", TokenKind::Ampersand},      {"|", TokenKind::Pipe},
    {"!", TokenKind::Bang},           {"?", TokenKind::Question},
    {"^", TokenKind::Caret},          {"@", TokenKind::At},
    {">", TokenKind::Greater},        {"*", TokenKind::Star},
};

[[noreturn]] void fail(int line, int column, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

}  // namespace

std::string describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::SingleQuoted: return "'" + token.text + "'";
    case TokenKind::DistinctObject: return "\"" + token.text + "\"";
    default: return "'" + token.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, column = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      int l = line, col = column;
      advance(2);
      while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/')) advance(1);
      if (i + 1 >= text.size()) fail(l, col, "unterminated block comment");
      advance(2);
      continue;
    }

    Token tok;
    tok.line = line;
    tok.column = column;

    if (c == '\'' || c == '"') {
      char quote = c;
      std::string body;
      std::size_t j = i + 1;
      for (;;) {
        if (j >= text.size()) fail(line, column, "unterminated quoted token");
        if (text[j] == '\\' && j + 1 < text.size()) {
          body += text[j + 1];
          j += 2;
          continue;
        }
        if (text[j] == quote) break;
        body += text[j++];
      }
      tok.kind = quote == '\'' ? TokenKind::SingleQuoted : TokenKind::DistinctObject;
      tok.text = std::move(body);
      advance(j + 1 - i);
      out.push_back(std::move(tok));
      continue;
    }

    if (c == '$' || c == '#' || is_alnum(c)) {
      std::size_t j = i;
      if (c == '$') {
        ++j;
        if (j < text.size() && text[j] == '$') ++j;
      } else if (c == '#') {
        ++j;
      }
      std::size_t start = j;
      while (j < text.size() && is_alnum(text[j])) ++j;
      if (j == start) fail(line, column, "dangling '" + std::string(text.substr(i, j - i)) + "'");
      tok.text = std::string(text.substr(i, j - i));
      if (c == '$') {
        tok.kind = tok.text.size() > 1 && tok.text[1] == '$' ? TokenKind::DollarDollarWord
                                                              : TokenKind::DollarWord;
      } else if (c == '#') {
        tok.kind = TokenKind::IndexWord;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        tok.kind = TokenKind::Number;
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        tok.kind = TokenKind::UpperWord;
      } else if (c == '_') {
        tok.kind = TokenKind::UpperWord;
      } else {
        tok.kind = TokenKind::LowerWord;
      }
      advance(j - i);
      out.push_back(std::move(tok));
      continue;
    }

    bool matched = false;
    for (const auto& p : kPunctuation) {
      if (text.substr(i, p.text.size()) == p.text) {
        tok.kind = p.kind;
        tok.text = std::string(p.text);
        advance(p.text.size());
        out.push_back(std::move(tok));
        matched = true;
        break;
      }
    }
    if (!matched) fail(line, column, std::string("unexpected character '") + c + "'");
  }

  Token end;
  end.kind = TokenKind::End;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  std::size_t k = pos_ + ahead;
  return k < tokens_.size() ? tokens_[k] : tokens_.back();
}

bool TokenCursor::at_word(std::string_view text) const {
  const Token& t = peek();
  return t.kind == TokenKind::LowerWord && t.text == text;
}

Token TokenCursor::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenCursor::accept(TokenKind kind) {
  if (!at(kind)) return false;
  next();
  return true;
}

Token TokenCursor::expect(TokenKind kind, std::string_view what) {
  if (!at(kind)) unexpected(what);
  return next();
}

void TokenCursor::fail(const Token& at, const std::string& what) const {
  ::ncl::syntax::fail(at.line, at.column, what);
}

void TokenCursor::unexpected(std::string_view expected) const {
  const Token& t = peek();
  if (t.kind == TokenKind::End)
    fail(t, "unterminated formula: expected " + std::string(expected) + " but reached end of input");
  fail(t, "expected " + std::string(expected) + " but found " + describe(t));
}

}  // namespace ncl::syntax
