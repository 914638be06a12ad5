#include "ncl/syntax/signature.hpp"

#include <algorithm>

#include "ncl/error.hpp"
#include "ncl/syntax/printer.hpp"

namespace ncl::syntax {

namespace {

const std::string kWorldMarker = "<world>";

TypePtr individual() { return base_type(std::string(kIndividual)); }
TypePtr boolean() { return base_type(std::string(kBoolean)); }

bool is_boolean(const TypePtr& t) { return !t->is_mapping() && t->name == kBoolean; }

class Inference {
 public:
  Signature sig;

  void declare(const TypeDeclaration& d) {
    if (!d.type->is_mapping() && d.type->name == kTypeOfTypes) {
      if (std::find(sig.type_names.begin(), sig.type_names.end(), d.symbol) ==
          sig.type_names.end())
        sig.type_names.push_back(d.symbol);
      return;
    }
    if (auto* existing = sig.find(d.symbol)) {
      if (!same_type(*existing, d.type))
        throw Error(ErrorCode::TypeError, "conflicting declarations for '" + d.symbol + "'");
      return;
    }
    check_known(d.type);
    sig.symbols.emplace_back(d.symbol, d.type);
  }

  void formula(const Formula& f) {
    switch (f.kind) {
      case FormulaKind::True:
      case FormulaKind::False:
        return;
      case FormulaKind::Variable: {
        auto it = env_.find(f.name);
        if (it == env_.end() || it->second.empty())
          throw Error(ErrorCode::TypeError, "unbound variable '" + f.name + "'");
        if (it->second.back() != kWorldMarker)
          throw Error(ErrorCode::TypeError,
                      "variable '" + f.name + "' used in formula position");
        return;
      }
      case FormulaKind::Apply:
        symbol(f, true);
        return;
      case FormulaKind::Equal:
      case FormulaKind::NotEqual: {
        TypePtr l = term(*f.args[0]);
        TypePtr r = term(*f.args[1]);
        if (!same_type(l, r))
          throw Error(ErrorCode::TypeError, "equation between " + to_string(*l) + " and " +
                                                to_string(*r) + ": " + print_formula(f));
        return;
      }
      case FormulaKind::Unary:
      case FormulaKind::Binary:
        for (const auto& a : f.args) formula(*a);
        return;
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        for (const auto& v : f.variables) {
          TypePtr t = variable_type(v);
          if (t->is_mapping() || t->name == kBoolean || t->name == kTypeOfTypes)
            throw Error(ErrorCode::TypeError, "quantification over type " + to_string(*t) +
                                                  " is not supported");
          check_known(t);
          if (std::find(sig.quantified_types.begin(), sig.quantified_types.end(), t->name) ==
              sig.quantified_types.end())
            sig.quantified_types.push_back(t->name);
          env_[v.name].push_back(t->name);
        }
        formula(*f.args[0]);
        for (const auto& v : f.variables) env_[v.name].pop_back();
        return;
      }
      case FormulaKind::NonClassical:
        connective(f);
        return;
      case FormulaKind::List:
      case FormulaKind::Index:
      case FormulaKind::Assign:
        throw Error(ErrorCode::TypeError, "unexpected '" + print_formula(f) + "' in formula position");
    }
  }

 private:
  void connective(const Formula& f) {
    if (f.name == "$$nominal") {
      for (const auto& a : f.args) {
        if (a->kind != FormulaKind::Apply || !a->args.empty())
          throw Error(ErrorCode::MalformedConnective,
                      "{$$nominal} expects a nominal constant, got " + print_formula(*a));
        nominal(a->name);
      }
      return;
    }
    std::vector<std::string> bound;
    for (const auto& idx : f.indices()) {
      std::string name = idx.substr(1);
      if (f.name == "$$bind") {
        env_[name].push_back(kWorldMarker);
        bound.push_back(name);
      } else if (f.name == "$$shift") {
        auto it = env_.find(name);
        bool is_var = it != env_.end() && !it->second.empty();
        if (is_var && it->second.back() != kWorldMarker)
          throw Error(ErrorCode::TypeError, "shift index '" + idx + "' is not a world");
        if (!is_var) nominal(name);
      }
    }
    for (const auto& p : f.params)
      if (p.key && *p.key == "$$formula") formula(*p.value);
    for (const auto& a : f.args) formula(*a);
    for (const auto& b : bound) env_[b].pop_back();
  }

  void nominal(const std::string& name) {
    if (sig.find(name))
      throw Error(ErrorCode::TypeError, "'" + name + "' is used both as a symbol and a nominal");
    if (!sig.is_nominal(name)) sig.nominals.push_back(name);
  }

  TypePtr term(const Formula& f) {
    if (f.kind == FormulaKind::Variable) {
      auto it = env_.find(f.name);
      if (it == env_.end() || it->second.empty())
        throw Error(ErrorCode::TypeError, "unbound variable '" + f.name + "'");
      if (it->second.back() == kWorldMarker)
        throw Error(ErrorCode::TypeError, "world variable '" + f.name + "' used as a term");
      return base_type(it->second.back());
    }
    if (f.kind != FormulaKind::Apply)
      throw Error(ErrorCode::TypeError, "expected a term, got " + print_formula(f));
    return symbol(f, false);
  }

  TypePtr symbol(const Formula& f, bool formula_position) {
    if (sig.is_nominal(f.name))
      throw Error(ErrorCode::TypeError, "nominal '" + f.name + "' used outside {$$nominal}");
    std::vector<TypePtr> arg_types;
    for (const auto& a : f.args) arg_types.push_back(term(*a));

    const TypePtr* declared = sig.find(f.name);
    if (!declared) {
      TypePtr result = formula_position ? boolean() : individual();
      TypePtr t = f.args.empty()
                      ? result
                      : mapping_type(std::vector<TypePtr>(f.args.size(), individual()), result);
      sig.symbols.emplace_back(f.name, t);
      declared = &sig.symbols.back().second;
    }
    const TypePtr& t = *declared;
    std::size_t arity = t->is_mapping() ? t->args.size() : 0;
    if (arity != f.args.size())
      throw Error(ErrorCode::TypeError, "'" + f.name + "' has arity " + std::to_string(arity) +
                                            " but is applied to " +
                                            std::to_string(f.args.size()) + " arguments");
    for (std::size_t i = 0; i < arity; ++i) {
      if (!same_type(t->args[i], arg_types[i]))
        throw Error(ErrorCode::TypeError, "argument " + std::to_string(i + 1) + " of '" +
                                              f.name + "' expects " + to_string(*t->args[i]) +
                                              " but has type " + to_string(*arg_types[i]));
    }
    TypePtr result = result_type(t);
    if (formula_position != is_boolean(result))
      throw Error(ErrorCode::TypeError,
                  "'" + f.name + "' of type " + to_string(*t) +
                      (formula_position ? " used as a formula" : " used as a term"));
    return result;
  }

  void check_known(const TypePtr& t) {
    if (t->is_mapping()) {
      for (const auto& a : t->args) {
        if (a->is_mapping() || a->name == kBoolean)
          throw Error(ErrorCode::TypeError, "higher-order argument type " + to_string(*a) +
                                                " is not supported");
        check_known(a);
      }
      if (t->result->is_mapping())
        throw Error(ErrorCode::TypeError, "curried result type " + to_string(*t) +
                                              " is not supported");
      check_known(t->result);
      return;
    }
    if (t->name == kIndividual || t->name == kBoolean) return;
    if (std::find(sig.type_names.begin(), sig.type_names.end(), t->name) == sig.type_names.end())
      throw Error(ErrorCode::TypeError, "undeclared type '" + t->name + "'");
  }

  std::map<std::string, std::vector<std::string>> env_;
};

}  // namespace

const TypePtr* Signature::find(const std::string& name) const {
  for (const auto& [n, t] : symbols)
    if (n == name) return &t;
  return nullptr;
}

bool Signature::is_predicate(const std::string& name) const {
  const TypePtr* t = find(name);
  return t && is_boolean(result_type(*t));
}

bool Signature::is_nominal(const std::string& name) const {
  return std::find(nominals.begin(), nominals.end(), name) != nominals.end();
}

TypePtr result_type(const TypePtr& type) { return type->is_mapping() ? type->result : type; }

TypePtr variable_type(const TypedVariable& v) { return v.type ? v.type : individual(); }

Signature infer_signature(const Problem& problem) {
  Inference inf;
  for (const auto& af : problem.formulas)
    if (auto* d = af.type_declaration()) inf.declare(*d);
  for (const auto& af : problem.formulas)
    if (auto* f = af.formula()) inf.formula(*f);
  return std::move(inf.sig);
}

}  // namespace ncl::syntax
