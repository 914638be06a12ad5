#include "ncl/holkit/hol_printer.hpp"

#include "ncl/syntax/printer.hpp"

namespace ncl::hol {

namespace {

std::string_view binder_token(TermKind k) {
  switch (k) {
    case TermKind::Lambda: return "^";
    case TermKind::Forall: return "! ";
    default: return "? ";
  }
}

std::string_view op_token(TermKind k) {
  switch (k) {
    case TermKind::And: return "&";
    case TermKind::Or: return "|";
    case TermKind::Implies: return "=>";
    case TermKind::Iff: return "<=>";
    default: return "=";
  }
}

std::string nested(const HolTerm& t);

// `^[X: a, Y: b]: body`, merging consecutive binders of one kind.
std::string binder_chain(const HolTerm& t) {
  std::string out = std::string(binder_token(t.kind)) + "[";
  const HolTerm* cur = &t;
  bool first = true;
  while (true) {
    if (!first) out += ", ";
    first = false;
    out += cur->name + ": " + to_string(*cur->type);
    if (cur->left->kind != t.kind) break;
    cur = cur->left.get();
  }
  out += "]: ";
  const HolTerm& body = *cur->left;
  return out + (body.is_binder() ? binder_chain(body) : nested(body));
}

std::string nested(const HolTerm& t) {
  switch (t.kind) {
    case TermKind::Var:
      return t.name;
    case TermKind::Const:
      return syntax::print_symbol(t.name);
    case TermKind::True:
      return "$true";
    case TermKind::False:
      return "$false";
    case TermKind::Not:
      return "(~ " + nested(*t.left) + ")";
    case TermKind::App: {
      std::vector<const HolTerm*> args;
      const HolTerm* head = &t;
      while (head->kind == TermKind::App) {
        args.push_back(head->right.get());
        head = head->left.get();
      }
      std::string out = "(";
      out += nested(*head);
      for (auto it = args.rbegin(); it != args.rend(); ++it) out += " @ " + nested(**it);
      return out + ")";
    }
    case TermKind::Lambda:
    case TermKind::Forall:
    case TermKind::Exists:
      return "( " + binder_chain(t) + ")";
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Implies:
    case TermKind::Iff:
    case TermKind::Equal:
      return "(" + nested(*t.left) + " " + std::string(op_token(t.kind)) + " " +
             nested(*t.right) + ")";
  }
  return "";
}

}  // namespace

std::string print_term(const HolTermPtr& term) {
  if (term->is_binder()) return binder_chain(*term);
  if (term->kind == TermKind::Equal) return nested(*term->left) + " = " + nested(*term->right);
  return nested(*term);
}

std::string print_entry(const HolEntry& e) {
  std::string out = "thf(" + syntax::print_symbol(e.name) + ", " + e.role + ", ";
  if (e.segment == Segment::Declaration)
    out += syntax::print_symbol(e.symbol) + ": " + (e.type ? to_string(*e.type) : "$tType");
  else
    out += print_term(e.formula);
  return out + ").";
}

std::string print_hol_problem(const HolProblem& problem) {
  std::string out;
  for (const auto& e : problem.entries) out += print_entry(e) + "\n";
  return out;
}

}  // namespace ncl::hol
