#pragma once

#include <string>

#include "ncl/oracle/enumerate.hpp"
#include "ncl/oracle/model.hpp"
#include "ncl/syntax/ast.hpp"

namespace ncl::oracle {

/// Either no countermodel exists within `bounds`, or `model` is the first
/// countermodel in enumeration order and the conjecture fails at `world`.
struct Verdict {
  bool countermodel = false;
  Bounds bounds;
  Vocabulary vocabulary;
  FiniteModel model;
  int world = 0;
  uint64_t models_checked = 0;

  /// The text printed by `nclembed check`.
  std::string text() const;
};

/// Bounded countermodel search on a problem that still carries its logic
/// formula. Axioms (and lemmas, theorems, definitions) must hold at every
/// world and hypotheses at world 0; the conjecture must fail at world 0
/// when there are hypotheses and at some world otherwise. A problem
/// without conjecture is read as conjecturing `$false`. Every countermodel
/// is re-checked before it is returned.
Verdict decide_bounded(const syntax::Problem& problem, const Bounds& bounds);

}  // namespace ncl::oracle
