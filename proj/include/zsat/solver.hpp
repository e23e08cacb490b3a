#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zsat/bdd.hpp"
#include "zsat/clause_zdd.hpp"
#include "zsat/cnf.hpp"
#include "zsat/limits.hpp"

namespace zsat {

enum class Verdict { kSat, kUnsat };

enum class SolveMethod { kDp, kBddDirect, kBddViaZdd };

/// Variable-selection strategy for DP elimination. The bounded kinds
/// speculatively eliminate candidates in scan order and keep the first
/// result whose size stays within `bound` of the current size; if none
/// qualifies, the first candidate with the lowest increase is taken.
struct Strategy {
  enum class Kind { kOriginal, kNodeBound, kClauseBound };

  Kind kind = Kind::kOriginal;
  uint64_t bound = 0;
};

/// One elimination attempt. Rejected speculative candidates are recorded with
/// accepted = false; the elimination actually applied has accepted = true.
/// within_bound tells whether the applied step met the bound or came from the
/// lowest-increase fallback.
struct StepStat {
  int variable = 0;
  bool accepted = false;
  bool within_bound = false;
  uint64_t nodes_before = 0;
  uint64_t nodes_after = 0;
  uint64_t clauses_before = 0;
  uint64_t clauses_after = 0;
};

struct SolveReport {
  SolveMethod method{};
  Verdict verdict{};
  std::optional<Assignment> model;  ///< BDD methods only; DP gives no witness
  std::vector<StepStat> steps;      ///< DP only
  uint64_t initial_nodes = 0;       ///< clause-set ZDD nodes after build
  uint64_t initial_literals = 0;    ///< literal occurrences in the instance
  double compression_ratio = 0.0;   ///< initial_nodes / initial_literals
  uint64_t bdd_nodes = 0;           ///< BDD methods: size of the model BDD
  double elapsed_seconds = 0.0;
};

/// One DP step: splits off the clauses mentioning `var`, distributes the
/// positive against the negative part (all resolvents on var), and merges
/// them back into the remainder. The result no longer mentions var and is
/// satisfiable iff the input is.
ClauseSet eliminate_variable(const ClauseSet& clauses, int var);

struct Selection {
  int variable = 0;
  ClauseSet result;
  bool within_bound = false;
  std::vector<StepStat> attempts;  ///< scan order; exactly one has accepted = true
};

/// Applies the strategy to pick and eliminate one variable from `remaining`
/// (which must be non-empty and ordered by first occurrence in the input).
Selection select_and_eliminate(const ClauseSet& clauses,
                               const std::vector<int>& remaining,
                               const Strategy& strategy);

/// Davis-Putnam variable elimination over the clause-set ZDD.
SolveReport dp_solve(const CnfInstance& cnf, const Strategy& strategy,
                     const Limits& limits = {});

/// Builds the BDD of all models, either clause-by-clause or via the clause
/// ZDD, and reads the verdict (plus a witness when satisfiable).
SolveReport bdd_solve(const CnfInstance& cnf, SolveMethod method,
                      const Limits& limits = {});

const char* to_string(Verdict v);
const char* to_string(SolveMethod m);
const char* to_string(Strategy::Kind k);

}  // namespace zsat
