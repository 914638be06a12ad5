#pragma once

// Naming and conversion helpers shared by the embeddings (and by the oracle,
// which needs to find the emitted constants again).

#include <set>
#include <string>
#include <vector>

#include "ncl/holkit/hol.hpp"
#include "ncl/syntax/ast.hpp"
#include "ncl/syntax/signature.hpp"

namespace ncl::embed {

inline constexpr const char* kWorld = "mworld";

hol::HolTypePtr world();
hol::HolTypePtr prop();  // mworld > $o

/// `#a` -> `a`, unindexed (``) -> ``.
std::string index_suffix(const std::string& index);
/// `mrel` for the unindexed box, `mrel_a` for `#a`.
std::string relation_name(const std::string& index);
std::string box_name(const std::string& index);
std::string dia_name(const std::string& index);
/// `$i` -> `i`; other characters outside [A-Za-z0-9_] become `_`.
std::string type_suffix(const std::string& type);
std::string eiw_name(const std::string& type);
std::string forall_name(const std::string& type);
std::string exists_name(const std::string& type);
std::string knows_name(const std::string& agent);

/// HOL image of a TPTP type; base types from the problem are marked user.
hol::HolTypePtr hol_type(const syntax::TypePtr& type);
/// As hol_type, but a `$o` result becomes `mworld > $o`.
hol::HolTypePtr lifted_type(const syntax::TypePtr& type);

/// All variable names of the problem, including `#X` bind indices, so
/// introduced binders can avoid them.
std::set<std::string> variable_names(const syntax::Problem& problem);

/// Rejects quantifiers, equality and non-nullary or non-`$o` symbols.
void require_propositional(const syntax::Problem& problem, const syntax::Signature& sig,
                           const std::string& logic);

/// Collects every non-classical connective node of `f`, including those
/// nested in parameters.
void collect_connectives(const syntax::FormulaPtr& f, std::vector<const syntax::Formula*>& out);

/// Throws UnsupportedConnective for connectives outside `allowed`.
void require_connectives(const syntax::Problem& problem, const std::set<std::string>& allowed,
                         const std::string& logic);

/// Declarations for user types and symbols (`lift` applies lifted_type to
/// `$o`-valued symbols).
std::vector<hol::HolEntry> user_declarations(const syntax::Signature& sig, bool lift);

/// The user-formula entry for `af`: `lifted` is the world-lifted term,
/// `wrapped` the role-wrapped closed formula.
hol::HolEntry user_formula(const syntax::AnnotatedFormula& af, hol::HolTermPtr lifted,
                           hol::HolTermPtr wrapped);

/// Output role for a source role (definition becomes axiom).
std::string output_role(syntax::Role role);

/// Classical connective in lifted form: `mand @ a @ b` etc., with the
/// derived connectives expressed through the basic ones.
hol::HolTermPtr lifted_connective(syntax::Connective c, const hol::HolTermPtr& l,
                                  const hol::HolTermPtr& r);

}  // namespace ncl::embed
