#include "ncl/syntax/printer.hpp"

#include <cctype>

namespace ncl::syntax {

namespace {

bool word_chars(std::string_view s) {
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !s.empty();
}

std::string print_variables(const std::vector<TypedVariable>& vars, Language lang) {
  std::string out = "[";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i].name;
    if (vars[i].type) out += ": " + to_string(*vars[i].type, lang);
  }
  return out + "]";
}

class Printer {
 public:
  explicit Printer(Language lang) : lang_(lang) {}

  std::string print(const Formula& f) const {
    switch (f.kind) {
      case FormulaKind::Variable:
        return f.name;
      case FormulaKind::Index:
        return f.name;
      case FormulaKind::True:
        return "$true";
      case FormulaKind::False:
        return "$false";
      case FormulaKind::Apply:
        return application(print_symbol(f.name), f.args);
      case FormulaKind::Equal:
        return "(" + print(*f.args[0]) + " = " + print(*f.args[1]) + ")";
      case FormulaKind::NotEqual:
        return "(" + print(*f.args[0]) + " != " + print(*f.args[1]) + ")";
      case FormulaKind::Assign:
        return print(*f.args[0]) + " == " + print(*f.args[1]);
      case FormulaKind::Unary:
        return "~ " + print(*f.args[0]);
      case FormulaKind::Binary:
        return "(" + print(*f.args[0]) + " " + std::string(connective_token(f.connective)) + " " +
               print(*f.args[1]) + ")";
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        return std::string("(") + (f.kind == FormulaKind::Forall ? "! " : "? ") +
               print_variables(f.variables, lang_) + " : " + print(*f.args[0]) + ")";
      case FormulaKind::List: {
        std::string out = "[";
        for (std::size_t i = 0; i < f.args.size(); ++i) {
          if (i) out += ", ";
          out += print(*f.args[i]);
        }
        return out + "]";
      }
      case FormulaKind::NonClassical: {
        std::string head = "{" + f.name;
        if (!f.params.empty()) {
          head += "(";
          for (std::size_t i = 0; i < f.params.size(); ++i) {
            if (i) head += ", ";
            if (f.params[i].key) head += *f.params[i].key + " := ";
            head += print(*f.params[i].value);
          }
          head += ")";
        }
        head += "}";
        return application(head, f.args);
      }
    }
    return "";
  }

 private:
  std::string application(const std::string& head, const std::vector<FormulaPtr>& args) const {
    if (args.empty()) return head;
    std::string out;
    if (lang_ == Language::Thf) {
      out = "(" + head;
      for (const auto& a : args) {
        // `@` operands are unitary, so a negation needs its own parentheses.
        out += a->kind == FormulaKind::Unary ? " @ (" + print(*a) + ")" : " @ " + print(*a);
      }
      return out + ")";
    }
    out = head + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ", ";
      out += print(*args[i]);
    }
    return out + ")";
  }

  Language lang_;
};

}  // namespace

std::string print_symbol(const std::string& name) {
  if (name.empty()) return "''";
  if (name[0] == '$' || name[0] == '"') return name;
  if (std::islower(static_cast<unsigned char>(name[0])) && word_chars(name)) return name;
  bool digits = true;
  for (char c : name) digits = digits && std::isdigit(static_cast<unsigned char>(c));
  if (digits) return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

std::string print_formula(const Formula& formula, Language lang) {
  return Printer(lang).print(formula);
}

std::string print_annotated(const AnnotatedFormula& af) {
  std::string out = af.language == Language::Thf ? "thf(" : "tff(";
  out += print_symbol(af.name) + ", " + std::string(role_name(af.role)) + ", ";
  if (auto d = af.type_declaration()) {
    out += print_symbol(d->symbol) + ": " + to_string(*d->type, af.language);
  } else if (auto l = af.logic_spec()) {
    out += print_formula(*l->definition, af.language);
  } else {
    out += print_formula(*af.formula(), af.language);
  }
  return out + ").";
}

std::string print_problem(const Problem& problem) {
  std::string out;
  auto emit_includes = [&](std::size_t position) {
    for (const auto& inc : problem.includes) {
      if (inc.position != position) continue;
      out += "include('" + inc.path + "'";
      if (!inc.selection.empty()) {
        out += ", [";
        for (std::size_t i = 0; i < inc.selection.size(); ++i) {
          if (i) out += ", ";
          out += print_symbol(inc.selection[i]);
        }
        out += "]";
      }
      out += ").\n";
    }
  };
  for (std::size_t i = 0; i < problem.formulas.size(); ++i) {
    emit_includes(i);
    out += print_annotated(problem.formulas[i]) + "\n";
  }
  emit_includes(problem.formulas.size());
  return out;
}

}  // namespace ncl::syntax
