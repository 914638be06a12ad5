#pragma once

// Finite evaluation of HOL terms. Values of "small" types (a base type, or a
// function type whose whole table fits in 64 bits) are encoded as integers:
// a base value is its index in the carrier, a function value is the mixed
// radix number of its table (bit-packed when the codomain size is a power of
// two). Larger function values are closures with a per-argument memo.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncl/holkit/hol.hpp"

namespace ncl::oracle {

class HolEvaluator;

struct BigFunction;

struct Value {
  uint64_t bits = 0;
  std::shared_ptr<BigFunction> big;
};

struct BigFunction {
  virtual ~BigFunction() = default;
  virtual Value apply(HolEvaluator& eval, const Value& arg) = 0;
};

/// Carrier sizes for the base types (`$o` is implicit) and values for every
/// constant that has no definition.
struct FiniteInterp {
  std::map<std::string, uint64_t> carriers;
  std::map<std::string, Value> constants;
};

class HolEvaluator {
 public:
  /// Quantifying over a type with more than `quantifier_budget` elements
  /// throws ncl::Error(BudgetExceeded).
  explicit HolEvaluator(const hol::HolProblem& problem, uint64_t quantifier_budget = 1u << 16);
  ~HolEvaluator();
  HolEvaluator(const HolEvaluator&) = delete;
  HolEvaluator& operator=(const HolEvaluator&) = delete;

  /// Switches carriers (compiled terms and closed definitions are kept per
  /// carrier assignment) and starts a new model with no constants bound.
  void set_carriers(const std::map<std::string, uint64_t>& carriers);
  void set_constant(const std::string& name, Value value);
  void set_interp(const FiniteInterp& interp);

  /// Builds a small value of `type` from its table: `table(args)` gives the
  /// result index for a full tuple of curried argument indices.
  Value encode(const hol::HolTypePtr& type,
               const std::function<uint64_t(const std::vector<uint64_t>&)>& table);

  /// Evaluates a closed term. The term is compiled once per carrier
  /// assignment and must outlive the evaluator.
  Value eval(const hol::HolTermPtr& term);
  bool eval_bool(const hol::HolTermPtr& term) { return eval(term).bits != 0; }

  Value apply(const Value& fn, const Value& arg, const hol::HolTypePtr& fn_type);

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

}  // namespace ncl::oracle
