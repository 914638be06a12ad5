#pragma once

// What a finite model has to interpret for one problem: sorts, symbols,
// nominals and accessibility relations, read off the source problem alone.

#include <string>
#include <vector>

#include "ncl/logicspec/logic_spec.hpp"
#include "ncl/logicspec/modal_config.hpp"
#include "ncl/syntax/ast.hpp"

namespace ncl::oracle {

enum class Family { Modal, Hybrid, Pal, Ddl };

struct OracleLogic {
  Family family = Family::Modal;
  logic::ModalConfig modal;
  logic::DdlConfig ddl;
};

/// Validates the specification for one of the four supported families.
/// Throws UnsupportedLogic for any other logic name.
OracleLogic oracle_logic(const logic::LogicSpec& spec);

struct Sort {
  std::string name;
  logic::Quantification quantification = logic::Quantification::Constant;

  bool guarded() const { return quantification != logic::Quantification::Constant; }
};

/// Argument sorts are indices into Vocabulary::sorts; `result` is -1 for
/// predicates.
struct Symbol {
  std::string name;
  std::vector<int> args;
  int result = -1;
};

/// An accessibility relation: a modality index (`""` or `#a`) or, for
/// PAL, an agent written `#a`. `schemes` are the frame conditions it obeys.
struct Relation {
  std::string index;
  logic::SchemeSet schemes;
};

struct Vocabulary {
  OracleLogic logic;
  std::vector<Sort> sorts;
  std::vector<Symbol> predicates;
  std::vector<Symbol> functions;
  std::vector<std::string> nominals;
  std::vector<Relation> relations;

  int sort_id(const std::string& name) const;
  int predicate_id(const std::string& name) const;
  int function_id(const std::string& name) const;
  int nominal_id(const std::string& name) const;
  int relation_id(const std::string& index) const;
};

/// `problem` must not contain its logic formula any more.
Vocabulary build_vocabulary(const syntax::Problem& problem, const OracleLogic& logic);

}  // namespace ncl::oracle
