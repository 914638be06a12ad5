#pragma once

#include <vector>

#include "ncl/holkit/hol.hpp"
#include "ncl/logicspec/modal_config.hpp"
#include "ncl/syntax/ast.hpp"

namespace ncl::embed {

/// Embeds a propositional `$$ddl` problem. `{$$obl}(a, b)` reads "a is
/// obligatory given b". Throws NotPropositional, MalformedConnective or
/// UnsupportedConnective.
hol::HolProblem embed_ddl_problem(const syntax::Problem& problem, const logic::DdlConfig& config);

/// Carmo-Jones conditions on `mob`, named `mob_5a` ... `mob_5e`.
std::vector<hol::HolEntry> cj_ob_axioms();

}  // namespace ncl::embed
