#pragma once

#include <string>
#include <vector>

#include "ncl/holkit/hol.hpp"
#include "ncl/oracle/enumerate.hpp"
#include "ncl/oracle/hol_eval.hpp"
#include "ncl/syntax/ast.hpp"

namespace ncl::oracle {

/// Translates finite models into interpretations of an embedded problem:
/// `mworld` is the world set, relations, `meiw_*`, nominals, `mactual`
/// (world 0), `mbetter` and `mob` come from the model, and user symbols
/// (possibly renamed by the embedding) from its valuation and functions.
class ModelInterpreter {
 public:
  ModelInterpreter(const Vocabulary& vocabulary, const hol::HolProblem& embedded);

  /// Loads `model` into `eval` as a fresh model.
  void load(HolEvaluator& eval, const FiniteModel& model) const;

 private:
  struct Binding {
    enum Kind { Relation, Exists, Predicate, Function, Nominal, Actual, Better, Ob } kind;
    int id = 0;
    std::string symbol;
    hol::HolTypePtr type;
  };
  const Vocabulary& voc_;
  std::vector<std::string> sort_names_;
  std::vector<Binding> bindings_;
};

struct Disagreement {
  std::string formula;
  std::string model;
  int world = -1;  // -1 for whole-formula checks
  std::string detail;
};

struct FaithReport {
  uint64_t models = 0;
  uint64_t comparisons = 0;
  std::vector<Disagreement> disagreements;
  uint64_t disagreement_count = 0;

  bool ok() const { return disagreement_count == 0; }
  std::string text() const;
};

/// For every model within `bounds` and every formula of `problem` (which
/// still carries its logic formula), compares the worlds where the direct
/// semantics makes the formula true with the worlds where its embedded,
/// world-lifted term is true (PAL terms get the full domain). Role-wrapped
/// formulas and emitted axioms are checked too; every axiom must hold in
/// every enumerated model. At most `max_reports` disagreements are kept.
FaithReport check_faithfulness(const syntax::Problem& problem, const hol::HolProblem& embedded,
                               const Bounds& bounds, std::size_t max_reports = 5);

}  // namespace ncl::oracle
