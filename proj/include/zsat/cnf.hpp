#pragma once

#include <cstdint>
#include <vector>

namespace zsat {

/// A clause as a list of DIMACS-signed literals.
using Clause = std::vector<int>;

/// Sorts literals into rank order (by variable, positive before negative) and
/// removes duplicates in place. Returns false if the clause is tautological
/// (contains both v and -v), leaving the clause in unspecified state.
bool normalize_clause(Clause& clause);

struct CnfInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;

  /// Total number of literal occurrences over all clauses.
  uint64_t literal_count() const {
    uint64_t n = 0;
    for (const Clause& c : clauses) n += c.size();
    return n;
  }
};

}  // namespace zsat
