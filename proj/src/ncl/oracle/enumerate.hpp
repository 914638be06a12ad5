#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ncl/logicspec/modal_config.hpp"
#include "ncl/oracle/model.hpp"

namespace ncl::oracle {

struct Bounds {
  int min_worlds = 1;
  int max_worlds = 3;
  int max_domain = 2;
  /// Enumerating more models than this throws BudgetExceeded.
  uint64_t max_models = 200'000'000;
};

/// Whether `rel` (bit u*n+v) on n worlds has the frame property of `s`.
bool frame_holds(logic::Scheme s, uint64_t rel, int n);

/// All relations on n worlds satisfying every scheme in `schemes`, in
/// increasing bit order. Throws BudgetExceeded for n > 4.
std::vector<uint64_t> frame_relations(const logic::SchemeSet& schemes, int n);

/// A Carmo-Jones ob table on n worlds: ob[X] has bit Y set iff ob(X, Y).
using ObTable = std::vector<uint64_t>;

/// Checks one of the conditions 'a' ... 'e' on `ob`.
bool cj_condition(char which, const ObTable& ob, int n);
bool cj_conditions(const ObTable& ob, int n);

/// Every table on n <= 3 worlds satisfying conditions (a)-(e), in a fixed
/// order. Throws BudgetExceeded for larger n.
const std::vector<ObTable>& cj_tables(int n);

/// Return false to stop the enumeration.
using ModelVisitor = std::function<bool(const FiniteModel&)>;

/// Visits every model of `vocabulary` within `bounds` in a deterministic
/// order: world count, domain sizes, relations, existence tables, nominals,
/// betterness, ob table, function tables and valuations (fastest). Returns
/// the number of models visited.
uint64_t enumerate_models(const Vocabulary& vocabulary, const Bounds& bounds,
                          const ModelVisitor& visit);

}  // namespace ncl::oracle
