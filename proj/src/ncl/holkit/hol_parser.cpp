#include "ncl/holkit/hol_parser.hpp"

#include <map>

#include "ncl/error.hpp"
#include "ncl/syntax/lexer.hpp"

namespace ncl::hol {

namespace {

using syntax::Token;
using syntax::TokenKind;

class HolParser {
 public:
  explicit HolParser(std::string_view text) : cur_(syntax::tokenize(text)) {}

  HolProblem problem() {
    HolProblem p;
    while (!cur_.at(TokenKind::End)) p.entries.push_back(entry());
    return p;
  }

  HolTermPtr whole_term() {
    HolTermPtr t = expr();
    cur_.expect(TokenKind::End, "end of input");
    return t;
  }

  HolTypePtr whole_type() {
    HolTypePtr t = type();
    cur_.expect(TokenKind::End, "end of input");
    return t;
  }

 private:
  HolEntry entry() {
    Token kw = cur_.expect(TokenKind::LowerWord, "'thf'");
    if (kw.text != "thf") cur_.fail(kw, "expected 'thf'");
    cur_.expect(TokenKind::LParen, "'('");
    HolEntry e;
    e.name = name();
    cur_.expect(TokenKind::Comma, "','");
    e.role = cur_.expect(TokenKind::LowerWord, "a role").text;
    cur_.expect(TokenKind::Comma, "','");
    if (e.role == "type") {
      e.segment = Segment::Declaration;
      e.symbol = name();
      cur_.expect(TokenKind::Colon, "':'");
      if (cur_.at(TokenKind::DollarWord) && cur_.peek().text == "$tType") {
        cur_.next();
      } else {
        e.type = type();
      }
    } else {
      e.formula = expr();
      if (e.role == "definition") {
        e.segment = Segment::Definition;
        if (e.formula->kind != TermKind::Equal || e.formula->left->kind != TermKind::Const)
          throw Error(ErrorCode::ParseError, "definition '" + e.name + "' is not an equation");
        e.symbol = e.formula->left->name;
      } else {
        e.segment = e.role == "axiom" ? Segment::Axiom : Segment::UserFormula;
      }
    }
    cur_.expect(TokenKind::RParen, "')'");
    cur_.expect(TokenKind::Dot, "'.'");
    return e;
  }

  std::string name() {
    const Token& t = cur_.peek();
    if (t.kind == TokenKind::LowerWord || t.kind == TokenKind::SingleQuoted ||
        t.kind == TokenKind::Number)
      return cur_.next().text;
    cur_.unexpected("a name");
  }

  HolTypePtr type() {
    HolTypePtr left = type_unit();
    if (cur_.accept(TokenKind::Greater)) return arrow(left, type());
    return left;
  }

  HolTypePtr type_unit() {
    if (cur_.accept(TokenKind::LParen)) {
      HolTypePtr t = type();
      cur_.expect(TokenKind::RParen, "')'");
      return t;
    }
    const Token& t = cur_.peek();
    if (t.kind == TokenKind::LowerWord || t.kind == TokenKind::DollarWord ||
        t.kind == TokenKind::SingleQuoted)
      return base(cur_.next().text);
    cur_.unexpected("a type");
  }

  HolTermPtr expr() {
    HolTermPtr left = unit();
    if (cur_.at(TokenKind::At)) {
      while (cur_.accept(TokenKind::At)) left = app(left, unit());
      return left;
    }
    static const std::map<TokenKind, TermKind> ops = {
        {TokenKind::Ampersand, TermKind::And}, {TokenKind::Pipe, TermKind::Or},
        {TokenKind::Implies, TermKind::Implies}, {TokenKind::Iff, TermKind::Iff},
        {TokenKind::Equals, TermKind::Equal}};
    auto it = ops.find(cur_.peek().kind);
    if (it == ops.end()) return left;
    cur_.next();
    return connective(it->second, left, unit());
  }

  HolTermPtr unit() {
    const Token& t = cur_.peek();
    switch (t.kind) {
      case TokenKind::LParen: {
        cur_.next();
        HolTermPtr inner = expr();
        cur_.expect(TokenKind::RParen, "')'");
        return inner;
      }
      case TokenKind::Tilde:
        cur_.next();
        return lnot(unit());
      case TokenKind::Caret:
        return binder_term(TermKind::Lambda);
      case TokenKind::Bang:
        return binder_term(TermKind::Forall);
      case TokenKind::Question:
        return binder_term(TermKind::Exists);
      case TokenKind::UpperWord: {
        Token v = cur_.next();
        auto it = scope_.find(v.text);
        if (it == scope_.end() || it->second.empty()) cur_.fail(v, "unbound variable " + v.text);
        return var(v.text, it->second.back());
      }
      case TokenKind::DollarWord:
        if (t.text == "$true" || t.text == "$false") return truth(cur_.next().text == "$true");
        return cnst(cur_.next().text);
      case TokenKind::LowerWord:
      case TokenKind::SingleQuoted:
      case TokenKind::Number:
        return cnst(cur_.next().text);
      default:
        cur_.unexpected("a term");
    }
  }

  HolTermPtr binder_term(TermKind kind) {
    cur_.next();
    cur_.expect(TokenKind::LBracket, "'['");
    std::vector<std::pair<std::string, HolTypePtr>> vars;
    do {
      std::string v = cur_.expect(TokenKind::UpperWord, "a variable").text;
      cur_.expect(TokenKind::Colon, "':'");
      vars.emplace_back(v, type());
    } while (cur_.accept(TokenKind::Comma));
    cur_.expect(TokenKind::RBracket, "']'");
    cur_.expect(TokenKind::Colon, "':'");
    for (const auto& [v, t] : vars) scope_[v].push_back(t);
    HolTermPtr body = unit();
    for (const auto& [v, t] : vars) scope_[v].pop_back();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      body = binder(kind, it->first, it->second, body);
    return body;
  }

  syntax::TokenCursor cur_;
  std::map<std::string, std::vector<HolTypePtr>> scope_;
};

}  // namespace

HolProblem parse_hol_problem(std::string_view text) { return HolParser(text).problem(); }
HolTermPtr parse_hol_term(std::string_view text) { return HolParser(text).whole_term(); }
HolTypePtr parse_hol_type(std::string_view text) { return HolParser(text).whole_type(); }

}  // namespace ncl::hol
