#pragma once

#include "ncl/holkit/hol.hpp"
#include "ncl/syntax/ast.hpp"

namespace ncl::embed {

/// Embeds a propositional `$$pal` problem. Formulas are lifted to
/// `(mworld > $o) > mworld > $o`, the first argument being the set of worlds
/// that survived the announcements so far. Agent relations are equivalences.
/// Throws NotPropositional, MalformedConnective or UnsupportedConnective.
hol::HolProblem embed_pal_problem(const syntax::Problem& problem);

/// `mtc`: the least transitive relation containing its argument,
/// defined impredicatively.
hol::HolTermPtr transitive_closure_definition();

/// The PAL proposition type `(mworld > $o) > mworld > $o`.
hol::HolTypePtr pal_prop();

/// Agent names (without `#`) of a `$$knows` or `$$common` occurrence.
std::vector<std::string> pal_agents(const syntax::Formula& connective);

}  // namespace ncl::embed
