#pragma once

// Possible-worlds evaluation of source formulas, written directly against
// FiniteModel and independent of the embeddings.

#include <memory>
#include <vector>

#include "ncl/oracle/model.hpp"
#include "ncl/syntax/ast.hpp"

namespace ncl::oracle {

/// Compiles source formulas against a vocabulary once and evaluates them on
/// many models. A formula's value is the set of worlds where it holds; PAL
/// formulas are evaluated in the unrestricted model.
class DirectEvaluator {
 public:
  explicit DirectEvaluator(const Vocabulary& vocabulary);
  ~DirectEvaluator();
  DirectEvaluator(const DirectEvaluator&) = delete;
  DirectEvaluator& operator=(const DirectEvaluator&) = delete;

  /// Throws NotPropositional or UnsupportedConnective on formulas outside
  /// the logic's fragment and TypeError on ill-sorted ones.
  int compile(const syntax::Formula& formula);
  WorldSet eval(int handle, const FiniteModel& model);

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

/// One-shot evaluation of a closed formula at `world`.
bool eval_direct(const FiniteModel& model, int world, const syntax::Formula& formula,
                 const Vocabulary& vocabulary);

}  // namespace ncl::oracle
