#include "ncl/syntax/parser.hpp"

#include "ncl/error.hpp"
#include "ncl/syntax/lexer.hpp"

namespace ncl::syntax {

namespace {

bool is_binary_token(TokenKind k) {
  switch (k) {
    case TokenKind::Ampersand:
    case TokenKind::Pipe:
    case TokenKind::Implies:
    case TokenKind::ReverseImplies:
    case TokenKind::Iff:
    case TokenKind::Xor:
    case TokenKind::Nor:
    case TokenKind::Nand:
      return true;
    default:
      return false;
  }
}

Connective binary_connective(TokenKind k) {
  switch (k) {
    case TokenKind::Ampersand: return Connective::And;
    case TokenKind::Pipe: return Connective::Or;
    case TokenKind::Implies: return Connective::Implies;
    case TokenKind::ReverseImplies: return Connective::ReverseImplies;
    case TokenKind::Iff: return Connective::Iff;
    case TokenKind::Xor: return Connective::Xor;
    case TokenKind::Nor: return Connective::Nor;
    default: return Connective::Nand;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : cur_(tokenize(text)) {}

  Problem problem() {
    Problem p;
    while (!cur_.at(TokenKind::End)) {
      if (cur_.at_word("include")) {
        p.includes.push_back(include(p.formulas.size()));
      } else {
        p.formulas.push_back(annotated());
      }
    }
    return p;
  }

  FormulaPtr lone_formula() {
    FormulaPtr f = formula();
    if (!cur_.at(TokenKind::End)) cur_.unexpected("end of formula");
    return f;
  }

  TypePtr lone_type() {
    TypePtr t = type();
    if (!cur_.at(TokenKind::End)) cur_.unexpected("end of type");
    return t;
  }

 private:
  IncludeDirective include(std::size_t position) {
    cur_.next();
    cur_.expect(TokenKind::LParen, "'('");
    IncludeDirective inc;
    inc.position = position;
    inc.path = cur_.expect(TokenKind::SingleQuoted, "a quoted file name").text;
    if (cur_.accept(TokenKind::Comma)) {
      cur_.expect(TokenKind::LBracket, "'['");
      if (!cur_.at(TokenKind::RBracket)) {
        do {
          inc.selection.push_back(name());
        } while (cur_.accept(TokenKind::Comma));
      }
      cur_.expect(TokenKind::RBracket, "']'");
    }
    cur_.expect(TokenKind::RParen, "')'");
    cur_.expect(TokenKind::Dot, "'.'");
    return inc;
  }

  std::string name() {
    const Token& t = cur_.peek();
    if (t.kind == TokenKind::LowerWord || t.kind == TokenKind::SingleQuoted ||
        t.kind == TokenKind::Number)
      return cur_.next().text;
    cur_.unexpected("a formula name");
  }

  AnnotatedFormula annotated() {
    AnnotatedFormula af;
    const Token lang = cur_.peek();
    if (cur_.at_word("tff")) {
      af.language = Language::Tff;
    } else if (cur_.at_word("thf")) {
      af.language = Language::Thf;
    } else {
      cur_.unexpected("'tff', 'thf' or 'include'");
    }
    cur_.next();
    cur_.expect(TokenKind::LParen, "'('");
    af.name = name();
    cur_.expect(TokenKind::Comma, "','");
    const Token role_tok = cur_.expect(TokenKind::LowerWord, "a formula role");
    auto role = role_from_name(role_tok.text);
    if (!role) cur_.fail(role_tok, "unsupported formula role '" + role_tok.text + "'");
    af.role = *role;
    cur_.expect(TokenKind::Comma, "','");

    if (af.role == Role::Type) {
      af.content = type_declaration();
    } else if (af.role == Role::Logic) {
      const Token start = cur_.peek();
      FormulaPtr f = formula();
      if (f->kind != FormulaKind::Assign || f->args[0]->kind != FormulaKind::Apply ||
          !f->args[0]->args.empty() || f->args[0]->name.empty() || f->args[0]->name[0] != '$')
        cur_.fail(start, "logic specification must have the form <logic_name> == <properties>");
      af.content = LogicSpecBody{f};
    } else {
      af.content = formula();
    }
    if (cur_.accept(TokenKind::Comma)) skip_annotations();
    cur_.expect(TokenKind::RParen, "')' closing annotated formula '" + af.name + "'");
    cur_.expect(TokenKind::Dot, "'.'");
    (void)lang;
    return af;
  }

  // Source and useful-info fields are accepted and dropped.
  void skip_annotations() {
    int depth = 0;
    for (;;) {
      const Token& t = cur_.peek();
      if (t.kind == TokenKind::End) cur_.unexpected("')'");
      if (depth == 0 && t.kind == TokenKind::RParen) return;
      if (t.kind == TokenKind::LParen || t.kind == TokenKind::LBracket) ++depth;
      if (t.kind == TokenKind::RParen || t.kind == TokenKind::RBracket) --depth;
      cur_.next();
    }
  }

  TypeDeclaration type_declaration() {
    if (cur_.accept(TokenKind::LParen)) {
      TypeDeclaration d = type_declaration();
      cur_.expect(TokenKind::RParen, "')'");
      return d;
    }
    const Token& t = cur_.peek();
    TypeDeclaration d;
    if (t.kind == TokenKind::LowerWord || t.kind == TokenKind::SingleQuoted ||
        t.kind == TokenKind::DollarWord || t.kind == TokenKind::DollarDollarWord) {
      d.symbol = cur_.next().text;
    } else {
      cur_.unexpected("a symbol name");
    }
    cur_.expect(TokenKind::Colon, "':'");
    d.type = type();
    return d;
  }

  struct TypeUnit {
    std::vector<TypePtr> parts;  // more than one: a product
  };

  TypeUnit type_unit() {
    const Token start = cur_.peek();
    if (cur_.accept(TokenKind::LParen)) {
      TypeUnit u;
      u.parts.push_back(type());
      while (cur_.accept(TokenKind::Star)) u.parts.push_back(type());
      cur_.expect(TokenKind::RParen, "')'");
      return u;
    }
    if (start.kind == TokenKind::LowerWord || start.kind == TokenKind::DollarWord ||
        start.kind == TokenKind::SingleQuoted || start.kind == TokenKind::DollarDollarWord) {
      cur_.next();
      return TypeUnit{{base_type(start.text)}};
    }
    cur_.unexpected("a type");
  }

  TypePtr type() {
    const Token start = cur_.peek();
    TypeUnit u = type_unit();
    if (!cur_.accept(TokenKind::Greater)) {
      if (u.parts.size() > 1) cur_.fail(start, "product type without '>'");
      return u.parts[0];
    }
    TypePtr rhs = type();
    std::vector<TypePtr> args = u.parts;
    TypePtr result = rhs;
    if (rhs->is_mapping()) {
      args.insert(args.end(), rhs->args.begin(), rhs->args.end());
      result = rhs->result;
    }
    try {
      return mapping_type(std::move(args), result);
    } catch (const Error& e) {
      cur_.fail(start, e.what());
    }
  }

  FormulaPtr formula() {
    FormulaPtr lhs = unit();
    TokenKind k = cur_.peek().kind;
    if (!is_binary_token(k)) return lhs;
    Connective c = binary_connective(k);
    if (c == Connective::And || c == Connective::Or) {
      while (cur_.accept(k)) lhs = binary(c, lhs, unit());
    } else {
      cur_.next();
      lhs = binary(c, lhs, unit());
    }
    if (is_binary_token(cur_.peek().kind))
      cur_.fail(cur_.peek(), "mixed binary connectives need parentheses near " + describe(cur_.peek()));
    return lhs;
  }

  FormulaPtr unit() {
    const Token& t = cur_.peek();
    if (t.kind == TokenKind::Tilde) {
      cur_.next();
      return negate(unit());
    }
    if ((t.kind == TokenKind::Bang || t.kind == TokenKind::Question) &&
        cur_.at(TokenKind::LBracket, 1)) {
      bool universal = t.kind == TokenKind::Bang;
      cur_.next();
      auto vars = variables();
      cur_.expect(TokenKind::Colon, "':'");
      FormulaPtr body = unit();
      return universal ? forall(std::move(vars), body) : exists(std::move(vars), body);
    }
    if (t.kind == TokenKind::Caret) cur_.fail(t, "lambda abstraction is not supported in problem input");
    return atomic();
  }

  std::vector<TypedVariable> variables() {
    cur_.expect(TokenKind::LBracket, "'['");
    std::vector<TypedVariable> vars;
    do {
      TypedVariable v;
      v.name = cur_.expect(TokenKind::UpperWord, "a variable").text;
      if (cur_.accept(TokenKind::Colon)) v.type = type();
      vars.push_back(std::move(v));
    } while (cur_.accept(TokenKind::Comma));
    cur_.expect(TokenKind::RBracket, "']'");
    return vars;
  }

  FormulaPtr atomic() {
    FormulaPtr lhs = application();
    if (cur_.accept(TokenKind::Equals)) return equal(lhs, application());
    if (cur_.accept(TokenKind::NotEquals)) return not_equal(lhs, application());
    if (cur_.accept(TokenKind::DoubleEquals)) return assign(lhs, application());
    return lhs;
  }

  FormulaPtr application() {
    const Token start = cur_.peek();
    FormulaPtr head = primary();
    if (!cur_.at(TokenKind::At)) return head;
    bool symbol = head->kind == FormulaKind::Apply;
    bool connective = head->kind == FormulaKind::NonClassical;
    if ((!symbol && !connective) || !head->args.empty())
      cur_.fail(start, "only symbols and non-classical connectives may be applied with '@'");
    std::vector<FormulaPtr> args;
    while (cur_.accept(TokenKind::At)) args.push_back(primary());
    if (symbol) return apply(head->name, std::move(args));
    return non_classical(head->name, head->params, std::move(args));
  }

  std::vector<FormulaPtr> arguments() {
    cur_.expect(TokenKind::LParen, "'('");
    std::vector<FormulaPtr> args;
    do {
      args.push_back(formula());
    } while (cur_.accept(TokenKind::Comma));
    cur_.expect(TokenKind::RParen, "')' or ','");
    return args;
  }

  FormulaPtr primary() {
    const Token t = cur_.peek();
    switch (t.kind) {
      case TokenKind::UpperWord:
        cur_.next();
        return variable(t.text);
      case TokenKind::LowerWord:
      case TokenKind::SingleQuoted:
      case TokenKind::DollarWord:
      case TokenKind::DollarDollarWord: {
        cur_.next();
        if (t.kind == TokenKind::DollarWord && t.text == "$true") return truth(true);
        if (t.kind == TokenKind::DollarWord && t.text == "$false") return truth(false);
        if (cur_.at(TokenKind::LParen)) return apply(t.text, arguments());
        return apply(t.text);
      }
      case TokenKind::Number:
        cur_.next();
        return apply(t.text);
      case TokenKind::DistinctObject: {
        // Kept in source form so the printer can emit it unchanged.
        cur_.next();
        std::string quoted = "\"";
        for (char c : t.text) {
          if (c == '"' || c == '\\') quoted += '\\';
          quoted += c;
        }
        return apply(quoted + "\"");
      }
      case TokenKind::IndexWord:
        cur_.next();
        return index(t.text);
      case TokenKind::LBrace:
        return connective();
      case TokenKind::RBrace:
        cur_.fail(t, "unbalanced '}' in non-classical connective");
      case TokenKind::LBracket: {
        cur_.next();
        std::vector<FormulaPtr> elems;
        if (!cur_.at(TokenKind::RBracket)) {
          do {
            elems.push_back(formula());
          } while (cur_.accept(TokenKind::Comma));
        }
        cur_.expect(TokenKind::RBracket, "']' or ','");
        return list(std::move(elems));
      }
      case TokenKind::LParen: {
        cur_.next();
        FormulaPtr f = formula();
        cur_.expect(TokenKind::RParen, "')'");
        return f;
      }
      default:
        cur_.unexpected("a formula");
    }
  }

  FormulaPtr connective() {
    const Token open = cur_.next();
    const Token name_tok = cur_.peek();
    if (name_tok.kind != TokenKind::DollarWord && name_tok.kind != TokenKind::DollarDollarWord)
      cur_.fail(name_tok, "non-classical connective name must start with '$' or '$$'");
    cur_.next();
    std::vector<ConnectiveParam> params;
    if (cur_.accept(TokenKind::LParen)) {
      do {
        ConnectiveParam p;
        const Token& k = cur_.peek();
        bool keyed = (k.kind == TokenKind::DollarWord || k.kind == TokenKind::DollarDollarWord ||
                      k.kind == TokenKind::LowerWord) &&
                     cur_.at(TokenKind::ColonEquals, 1);
        if (keyed) {
          p.key = cur_.next().text;
          cur_.next();
        }
        p.value = formula();
        params.push_back(std::move(p));
      } while (cur_.accept(TokenKind::Comma));
      if (!cur_.accept(TokenKind::RParen)) {
        if (cur_.at(TokenKind::RBrace) || cur_.at(TokenKind::End))
          cur_.fail(cur_.peek(), "unbalanced parentheses in connective '" + name_tok.text + "'");
        cur_.unexpected("')' or ','");
      }
    }
    if (!cur_.accept(TokenKind::RBrace))
      cur_.fail(cur_.at(TokenKind::End) ? open : cur_.peek(),
                "unbalanced '{' in non-classical connective '" + name_tok.text + "'");
    std::vector<FormulaPtr> args;
    if (cur_.at(TokenKind::LParen)) args = arguments();
    return non_classical(name_tok.text, std::move(params), std::move(args));
  }

  TokenCursor cur_;
};

}  // namespace

Problem parse_problem(std::string_view text) { return Parser(text).problem(); }

FormulaPtr parse_formula(std::string_view text) { return Parser(text).lone_formula(); }

TypePtr parse_type(std::string_view text) { return Parser(text).lone_type(); }

}  // namespace ncl::syntax
