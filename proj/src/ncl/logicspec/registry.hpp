#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ncl/holkit/hol.hpp"
#include "ncl/logicspec/logic_spec.hpp"
#include "ncl/syntax/ast.hpp"

namespace ncl::logic {

/// Validates `spec` and embeds `problem` (which no longer contains it).
using EmbedFn = std::function<hol::HolProblem(const LogicSpec& spec, const syntax::Problem& problem)>;

struct EmbeddingHandle {
  std::string name;
  std::string description;
  EmbedFn embed;
};

/// The supported logics, in a fixed order.
const std::vector<EmbeddingHandle>& registry();

/// Throws ncl::Error(UnsupportedLogic) naming `logic_name` and listing the
/// supported names.
const EmbeddingHandle& lookup_embedding(std::string_view logic_name);

}  // namespace ncl::logic
