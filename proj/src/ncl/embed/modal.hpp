#pragma once

#include <string>
#include <vector>

#include "ncl/holkit/hol.hpp"
#include "ncl/logicspec/modal_config.hpp"
#include "ncl/syntax/ast.hpp"

namespace ncl::embed {

/// Embeds a `$modal` (or, with `hybrid`, `$$hybrid`) problem without its
/// logic formula. Throws UnsupportedConnective, MalformedConnective,
/// ParseError (non-`#` index) or TypeError.
hol::HolProblem embed_modal_problem(const syntax::Problem& problem,
                                    const logic::ModalConfig& config, bool hybrid);

/// The closed frame condition of scheme `s` over `relation`; null for K.
hol::HolTermPtr frame_condition(logic::Scheme s, const std::string& relation);

/// Name suffix of a frame axiom, e.g. "reflexive".
std::string frame_property(logic::Scheme s);

/// One axiom per non-K scheme over the relation of `index`.
std::vector<hol::HolEntry> frame_axioms(const std::string& index, const logic::SchemeSet& schemes);

}  // namespace ncl::embed
