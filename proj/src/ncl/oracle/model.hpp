#pragma once

// Finite Kripke, preference and ob-function models. Worlds are 0..n-1
// (n <= 8) and sets of worlds are bit masks; world 0 is the designated
// world.

#include <cstdint>
#include <string>
#include <vector>

#include "ncl/oracle/vocabulary.hpp"

namespace ncl::oracle {

inline constexpr int kMaxWorlds = 8;

using WorldSet = uint32_t;

struct FiniteModel {
  int worlds = 1;
  /// Per relation, bit u*n+v set iff u sees v.
  std::vector<uint64_t> relations;
  /// Individuals per sort.
  std::vector<int> domain;
  /// exists[sort][individual]: worlds where the individual exists.
  std::vector<std::vector<WorldSet>> exists;
  /// valuation[predicate][tuple]: worlds where the atom holds. Tuples are
  /// numbered first-argument-major.
  std::vector<std::vector<WorldSet>> valuation;
  /// functions[function][tuple]: the (world-independent) value.
  std::vector<std::vector<int>> functions;
  /// World named by each nominal.
  std::vector<int> nominals;
  /// Betterness: bit u*n+v set iff u is at least as good as v.
  uint64_t better = 0;
  /// ob[X]: bit Y set iff Y is obligatory in context X (sets as masks).
  std::vector<uint64_t> ob;

  WorldSet all() const { return (WorldSet{1} << worlds) - 1; }
  bool related(int relation, int u, int v) const {
    return (relations[relation] >> (u * worlds + v)) & 1;
  }
  WorldSet successors(uint64_t rel, int u) const {
    return static_cast<WorldSet>((rel >> (u * worlds)) & all());
  }
  bool prefers(int u, int v) const { return (better >> (u * worlds + v)) & 1; }
};

/// Number of argument tuples of `sym` in `m`.
std::size_t tuple_count(const FiniteModel& m, const Symbol& sym);
/// Position of an argument tuple (first-argument-major).
std::size_t tuple_index(const FiniteModel& m, const Symbol& sym, const std::vector<int>& args);

/// Multi-line human-readable rendering, using the vocabulary's names.
std::string describe(const FiniteModel& m, const Vocabulary& v);

}  // namespace ncl::oracle
