#pragma once

#include <vector>

#include "zsat/cnf.hpp"
#include "zsat/zdd_store.hpp"

namespace zsat {

/// A clause set represented by a canonical ZDD in a shared store. Cheap value
/// type (store pointer + root handle); all operations are pure and return new
/// sets in the same store. Two sets are equal iff they hold the same clauses.
class ClauseSet {
 public:
  ClauseSet(ZddStore& store, ZddHandle root) : store_(&store), root_(root) {}

  /// Builds the ZDD enumerating exactly the given clauses (duplicates
  /// collapse, no subsumption removal). Duplicate literals inside a clause
  /// are dropped; a tautological clause or a variable outside the store's
  /// order is rejected with UsageError.
  static ClauseSet from_clauses(ZddStore& store,
                                const std::vector<Clause>& clauses);

  ZddStore& store() const { return *store_; }
  ZddHandle root() const { return root_; }

  bool empty() const { return root_.is_zero(); }
  bool has_empty_clause() const;
  uint64_t node_count() const { return store_->node_count(root_); }
  uint64_t clause_count() const { return store_->path_count(root_); }

  /// Variables labelling any reachable node, ascending.
  std::vector<int> support() const;

  /// One clause per root-to-1 path, sorted by (length, literal ranks).
  std::vector<Clause> enumerate() const;

  /// Merges two clause sets; where one set's clause is a prefix-extension of
  /// the other's, the longer clause is dropped. Conjunction of the CNFs.
  ClauseSet unite(const ClauseSet& other) const;

  /// Clauses of this set that no clause of `other` subsumes (equal clauses
  /// count as subsuming).
  ClauseSet without_subsumed_by(const ClauseSet& other) const;

  /// The minimal clauses of this set: drops every clause that strictly
  /// contains another (duplicates already collapse in the diagram).
  ClauseSet subsumption_free() const;

  /// Merge that also removes cross-subsumed clauses; on subsumption-free
  /// inputs the result is exactly the minimal clauses of the union.
  ClauseSet unite_subsuming(const ClauseSet& other) const;

  /// All non-tautological pairwise unions of a clause from each set, with
  /// cross-subsumed combinations removed. Disjunction of the CNFs.
  ClauseSet distribute(const ClauseSet& other) const;

  struct Extraction {
    ClauseSet pos;   ///< clauses containing +var, with +var removed
    ClauseSet neg;   ///< clauses containing -var, with -var removed
    ClauseSet rest;  ///< clauses not mentioning var
  };

  /// Partitions the set by occurrence of `var`.
  Extraction extract(int var) const;

  friend bool operator==(const ClauseSet& a, const ClauseSet& b) {
    return a.store_ == b.store_ && a.root_ == b.root_;
  }

 private:
  void require_same_store(const ClauseSet& other) const;

  ZddStore* store_;
  ZddHandle root_;
};

}  // namespace zsat
