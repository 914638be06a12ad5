#include "ncl/logicspec/registry.hpp"

#include "ncl/embed/ddl.hpp"
#include "ncl/embed/modal.hpp"
#include "ncl/embed/pal.hpp"
#include "ncl/error.hpp"

namespace ncl::logic {

const std::vector<EmbeddingHandle>& registry() {
  static const std::vector<EmbeddingHandle> table = {
      {"$modal", "quantified normal multi-modal logics",
       [](const LogicSpec& spec, const syntax::Problem& p) {
         return embed::embed_modal_problem(p, validate_modal_config(spec), false);
       }},
      {"$$hybrid", "hybrid logic with nominals, shift and bind",
       [](const LogicSpec& spec, const syntax::Problem& p) {
         return embed::embed_modal_problem(p, validate_modal_config(spec), true);
       }},
      {"$$pal", "public announcement logic",
       [](const LogicSpec& spec, const syntax::Problem& p) {
         validate_pal_config(spec);
         return embed::embed_pal_problem(p);
       }},
      {"$$ddl", "dyadic deontic logic (aqvistE, carmoJones)",
       [](const LogicSpec& spec, const syntax::Problem& p) {
         return embed::embed_ddl_problem(p, validate_ddl_config(spec));
       }},
  };
  return table;
}

const EmbeddingHandle& lookup_embedding(std::string_view logic_name) {
  std::string names;
  for (const auto& h : registry()) {
    if (h.name == logic_name) return h;
    names += (names.empty() ? "" : ", ") + h.name;
  }
  throw Error(ErrorCode::UnsupportedLogic,
              "unsupported logic '" + std::string(logic_name) + "' (supported: " + names + ")");
}

}  // namespace ncl::logic
