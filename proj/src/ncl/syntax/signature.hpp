#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ncl/syntax/ast.hpp"

namespace ncl::syntax {

/// Symbol typing of a problem after the default typing rule: an undeclared
/// n-ary symbol in formula position is `$i * ... * $i > $o`, in term
/// position `$i * ... * $i > $i`. Hybrid nominals (arguments of
/// `{$$nominal}` and lower-case `{$$shift(#n)}` indices) are tracked apart
/// from ordinary symbols.
struct Signature {
  std::vector<std::string> type_names;                    // declared `t: $tType`, in order
  std::vector<std::pair<std::string, TypePtr>> symbols;   // first declaration or use
  std::vector<std::string> nominals;                      // in first-use order
  std::vector<std::string> quantified_types;              // base types under quantifiers

  const TypePtr* find(const std::string& name) const;
  bool is_predicate(const std::string& name) const;
  bool is_nominal(const std::string& name) const;
};

/// Result type of a symbol type (`$o` for `p: $i > $o`, the type itself for
/// constants).
TypePtr result_type(const TypePtr& type);

/// Declared type of a bound variable, `$i` when the source omits it.
TypePtr variable_type(const TypedVariable& v);

/// Walks every non-`logic` formula of `problem`. Throws ncl::Error(TypeError)
/// on arity or type clashes, unbound variables and quantification over
/// non-base types.
Signature infer_signature(const Problem& problem);

}  // namespace ncl::syntax
