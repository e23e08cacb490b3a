#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zsat/limits.hpp"
#include "zsat/literal.hpp"

namespace zsat {

/// Reference to a node owned by a ZddStore. Value 0 is the 0 sink (the empty
/// clause set), value 1 the 1 sink (the set holding only the empty clause);
/// internal nodes start at 2. Handle equality is clause-set equality.
struct ZddHandle {
  uint32_t value = 0;

  bool is_zero() const { return value == 0; }
  bool is_one() const { return value == 1; }
  bool is_sink() const { return value <= 1; }

  friend bool operator==(ZddHandle, ZddHandle) = default;
};

inline constexpr ZddHandle kZddZero{0};
inline constexpr ZddHandle kZddOne{1};

struct ZddNode {
  uint32_t label_rank = 0;
  ZddHandle then_child;
  ZddHandle else_child;
};

/// View of a node (pair) as one decision on a variable: `pos` holds the
/// clauses containing +var with +var stripped, `neg` those containing -var
/// with -var stripped, `rest` the clauses not mentioning var. Covers a
/// +var node with or without a matching -var else-child, and a bare -var node.
struct ZddTriple {
  int var = 0;
  ZddHandle pos;
  ZddHandle neg;
  ZddHandle rest;
};

/// Memoization tags for the operator cache.
enum class ZddOp : uint32_t {
  kFamilyUnion = 1,
  kUnite,
  kSubdiff,
  kSubsumptionFree,
  kUniteSubsuming,
  kDistribute,
};

/// Append-only arena of hash-consed, reduced ZDD nodes over a fixed literal
/// order. The unique table is lossless (required for canonicity); the
/// operator cache is a lossy direct-mapped memo whose evictions never change
/// results. There is no garbage collection.
class ZddStore {
 public:
  explicit ZddStore(int num_vars, unsigned cache_size_log2 = 20);

  const LiteralOrder& order() const { return order_; }

  /// Applies the zero-suppression rule (then-child 0 collapses the node) and
  /// hash-conses the triple. The label must precede both children's labels;
  /// a violation is a programming error and throws.
  ZddHandle make_node(Literal label, ZddHandle then_child, ZddHandle else_child);

  /// Builds the reduced form of a +var decision whose else-branch is a -var
  /// decision, folding away empty branches. All three operands must only
  /// contain labels ranked after -var.
  ZddHandle make_combined(int var, ZddHandle pos, ZddHandle neg, ZddHandle rest);

  /// Decision view of a non-sink node; see ZddTriple.
  ZddTriple combined_view(ZddHandle h) const;

  /// Number of distinct internal nodes reachable from root (sinks excluded).
  uint64_t node_count(ZddHandle root) const;

  /// Number of paths from root to the 1 sink. Throws OverflowError when the
  /// count does not fit 64 bits.
  uint64_t path_count(ZddHandle root) const;

  /// Test aid: "root <id>" then one line per reachable internal node in DFS
  /// preorder (then-edge first), "id label then_id else_id" with the label in
  /// DIMACS encoding and the sinks appearing as ids 0 and 1.
  void dump(std::ostream& os, ZddHandle root) const;

  const ZddNode& node(ZddHandle h) const { return nodes_[h.value]; }
  uint64_t arena_size() const { return nodes_.size() - 2; }

  /// Handles of all internal nodes ever created: [first_handle, end_handle).
  uint32_t first_handle() const { return 2; }
  uint32_t end_handle() const { return static_cast<uint32_t>(nodes_.size()); }

  static constexpr uint32_t kCacheMiss = UINT32_MAX;
  uint32_t cache_lookup(ZddOp op, uint32_t a, uint32_t b) const;
  void cache_insert(ZddOp op, uint32_t a, uint32_t b, uint32_t result);
  void set_cache_enabled(bool enabled) { cache_enabled_ = enabled; }
  void clear_cache();

  void set_node_limit(uint64_t max_nodes) { max_nodes_ = max_nodes; }
  void arm_deadline(const Deadline& deadline) { deadline_ = deadline; }

 private:
  struct CacheEntry {
    uint32_t op = 0;  // 0 marks an empty slot
    uint32_t a = 0;
    uint32_t b = 0;
    uint32_t result = 0;
  };

  uint32_t child_rank(ZddHandle h) const {
    return h.is_sink() ? UINT32_MAX : nodes_[h.value].label_rank;
  }

  uint32_t find_or_make(uint32_t label_rank, ZddHandle t, ZddHandle e);
  size_t probe(uint32_t label_rank, ZddHandle t, ZddHandle e, bool* found) const;
  void grow_table();
  size_t cache_index(ZddOp op, uint32_t a, uint32_t b) const;

  /// Epoch-stamped visit marks over the arena; O(1) reset between walks.
  uint32_t new_mark_epoch() const;

  LiteralOrder order_;
  std::vector<ZddNode> nodes_;
  std::vector<uint32_t> table_;  // open addressing; 0 = empty slot
  size_t table_count_ = 0;
  std::vector<CacheEntry> cache_;
  size_t cache_mask_ = 0;
  bool cache_enabled_ = true;
  uint64_t max_nodes_ = 0;
  Deadline deadline_;
  uint64_t tick_ = 0;
  mutable std::vector<uint32_t> mark_;
  mutable std::vector<uint64_t> value_;  // per-node scratch for path counting
  mutable uint32_t mark_epoch_ = 0;
};

}  // namespace zsat
