#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zsat/clause_zdd.hpp"
#include "zsat/cnf.hpp"
#include "zsat/limits.hpp"

namespace zsat {

/// Reference to a node owned by a BddStore. Value 0 is the FALSE sink,
/// value 1 the TRUE sink. Handle equality is Boolean-function equality.
struct BddHandle {
  uint32_t value = 0;

  bool is_false() const { return value == 0; }
  bool is_true() const { return value == 1; }
  bool is_sink() const { return value <= 1; }

  friend bool operator==(BddHandle, BddHandle) = default;
};

inline constexpr BddHandle kBddFalse{0};
inline constexpr BddHandle kBddTrue{1};

struct BddNode {
  uint32_t var = 0;  // 1-based; children carry strictly larger variables
  BddHandle hi;      // var = true
  BddHandle lo;      // var = false
};

/// Partial assignment as (variable, value) pairs; unmentioned variables are
/// free.
using Assignment = std::vector<std::pair<int, bool>>;

/// Reduced ordered BDDs over SAT variables in ascending index order, with a
/// hash-consing unique table and a lossy conjunction cache.
class BddStore {
 public:
  explicit BddStore(int num_vars, unsigned cache_size_log2 = 20);

  int num_vars() const { return num_vars_; }

  BddHandle make_node(int var, BddHandle hi, BddHandle lo);

  /// f AND g, memoized with commutative cache-key normalization.
  BddHandle conj(BddHandle f, BddHandle g);

  /// Disjunction of the clause's literals; the empty clause maps to FALSE.
  /// Tautological clauses are rejected.
  BddHandle clause_to_bdd(const Clause& clause);

  /// Conjunction of all clauses, folded in list order (or as a balanced tree
  /// when tree_fold is set). The BDD of all models of the instance.
  BddHandle conjoin_direct(const CnfInstance& cnf, bool tree_fold = false);

  /// Model BDD computed recursively from a clause-set ZDD, memoized per ZDD
  /// node. Equals conjoin_direct on the same clause set (handle equality).
  BddHandle from_clause_zdd(const ClauseSet& clauses);

  /// Number of satisfying assignments over exactly num_vars variables.
  /// Throws OverflowError beyond 64 bits, UsageError if f mentions a larger
  /// variable.
  uint64_t satcount(BddHandle f, int num_vars) const;

  /// Empty for TRUE, nullopt for FALSE, otherwise the assignments along one
  /// TRUE-reaching path.
  std::optional<Assignment> any_model(BddHandle f) const;

  uint64_t node_count(BddHandle root) const;

  const BddNode& node(BddHandle h) const { return nodes_[h.value]; }
  uint64_t arena_size() const { return nodes_.size() - 2; }

  void set_node_limit(uint64_t max_nodes) { max_nodes_ = max_nodes; }
  void arm_deadline(const Deadline& deadline) { deadline_ = deadline; }

 private:
  struct CacheEntry {
    uint32_t a = UINT32_MAX;  // UINT32_MAX marks an empty slot
    uint32_t b = UINT32_MAX;
    uint32_t result = 0;
  };

  uint32_t child_var(BddHandle h) const {
    return h.is_sink() ? UINT32_MAX : nodes_[h.value].var;
  }

  uint32_t find_or_make(uint32_t var, BddHandle hi, BddHandle lo);
  size_t probe(uint32_t var, BddHandle hi, BddHandle lo, bool* found) const;
  void grow_table();

  int num_vars_;
  std::vector<BddNode> nodes_;
  std::vector<uint32_t> table_;  // open addressing; 0 = empty slot
  size_t table_count_ = 0;
  std::vector<CacheEntry> cache_;
  size_t cache_mask_ = 0;
  uint64_t max_nodes_ = 0;
  Deadline deadline_;
  uint64_t tick_ = 0;
};

}  // namespace zsat
