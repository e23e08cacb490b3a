#include "zsat/zdd_store.hpp"

#include <algorithm>
#include <ostream>

#include "zsat/errors.hpp"

namespace zsat {
namespace {

uint64_t mix64(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

uint64_t hash_triple(uint32_t a, uint32_t b, uint32_t c) {
  uint64_t h = (static_cast<uint64_t>(b) << 32) | c;
  return mix64(h ^ (a * 0x9e3779b97f4a7c15ULL));
}

constexpr uint32_t kMaxHandles = 0xfffffffe;  // keeps UINT32_MAX free as a sentinel

}  // namespace

ZddStore::ZddStore(int num_vars, unsigned cache_size_log2) : order_(num_vars) {
  nodes_.resize(2);  // sink slots; never dereferenced
  nodes_.reserve(1 << 16);
  table_.assign(1 << 14, 0);
  cache_.resize(size_t{1} << cache_size_log2);
  cache_mask_ = cache_.size() - 1;
}

ZddHandle ZddStore::make_node(Literal label, ZddHandle then_child,
                              ZddHandle else_child) {
  const uint32_t rank = order_.rank(label);
  if (rank >= child_rank(then_child) || rank >= child_rank(else_child))
    throw UsageError("node label must precede child labels");
  if (then_child.is_zero()) return else_child;  // zero-suppression
  if ((++tick_ & 0x3fff) == 0) deadline_.check();
  return ZddHandle{find_or_make(rank, then_child, else_child)};
}

ZddHandle ZddStore::make_combined(int var, ZddHandle pos, ZddHandle neg,
                                  ZddHandle rest) {
  const uint32_t neg_rank = order_.rank(Literal{var, false});
  if (child_rank(pos) <= neg_rank)
    throw UsageError("combined-node branch must only contain later labels");
  const ZddHandle inner = make_node(Literal{var, false}, neg, rest);
  return make_node(Literal{var, true}, pos, inner);
}

ZddTriple ZddStore::combined_view(ZddHandle h) const {
  const ZddNode n = nodes_[h.value];
  const Literal lit = order_.literal_at(n.label_rank);
  if (lit.positive) {
    const ZddHandle e = n.else_child;
    if (!e.is_sink()) {
      const ZddNode en = nodes_[e.value];
      if (en.label_rank == n.label_rank + 1)  // matching -var node
        return ZddTriple{lit.var, n.then_child, en.then_child, en.else_child};
    }
    return ZddTriple{lit.var, n.then_child, kZddZero, e};
  }
  return ZddTriple{lit.var, kZddZero, n.then_child, n.else_child};
}

size_t ZddStore::probe(uint32_t label_rank, ZddHandle t, ZddHandle e,
                       bool* found) const {
  const size_t mask = table_.size() - 1;
  size_t i = hash_triple(label_rank, t.value, e.value) & mask;
  while (true) {
    const uint32_t slot = table_[i];
    if (slot == 0) {
      *found = false;
      return i;
    }
    const ZddNode& n = nodes_[slot];
    if (n.label_rank == label_rank && n.then_child == t && n.else_child == e) {
      *found = true;
      return i;
    }
    i = (i + 1) & mask;
  }
}

uint32_t ZddStore::find_or_make(uint32_t label_rank, ZddHandle t, ZddHandle e) {
  bool found = false;
  size_t i = probe(label_rank, t, e, &found);
  if (found) return table_[i];

  if (max_nodes_ != 0 && arena_size() >= max_nodes_)
    throw BudgetError("node budget exceeded");
  if (nodes_.size() >= kMaxHandles) throw BudgetError("node arena exhausted");

  if ((table_count_ + 1) * 10 > table_.size() * 7) {
    grow_table();
    i = probe(label_rank, t, e, &found);
  }
  nodes_.push_back(ZddNode{label_rank, t, e});
  const uint32_t handle = static_cast<uint32_t>(nodes_.size() - 1);
  table_[i] = handle;
  ++table_count_;
  return handle;
}

void ZddStore::grow_table() {
  std::vector<uint32_t> old;
  old.swap(table_);
  table_.assign(old.size() * 2, 0);
  const size_t mask = table_.size() - 1;
  for (uint32_t slot : old) {
    if (slot == 0) continue;
    const ZddNode& n = nodes_[slot];
    size_t i = hash_triple(n.label_rank, n.then_child.value, n.else_child.value) & mask;
    while (table_[i] != 0) i = (i + 1) & mask;
    table_[i] = slot;
  }
}

size_t ZddStore::cache_index(ZddOp op, uint32_t a, uint32_t b) const {
  return mix64((static_cast<uint64_t>(a) << 32 | b) ^
               (static_cast<uint64_t>(op) * 0xbf58476d1ce4e5b9ULL)) &
         cache_mask_;
}

uint32_t ZddStore::cache_lookup(ZddOp op, uint32_t a, uint32_t b) const {
  if (!cache_enabled_) return kCacheMiss;
  const CacheEntry& e = cache_[cache_index(op, a, b)];
  if (e.op == static_cast<uint32_t>(op) && e.a == a && e.b == b) return e.result;
  return kCacheMiss;
}

void ZddStore::cache_insert(ZddOp op, uint32_t a, uint32_t b, uint32_t result) {
  if (!cache_enabled_) return;
  cache_[cache_index(op, a, b)] = CacheEntry{static_cast<uint32_t>(op), a, b, result};
}

void ZddStore::clear_cache() {
  std::fill(cache_.begin(), cache_.end(), CacheEntry{});
}

uint32_t ZddStore::new_mark_epoch() const {
  if (mark_.size() < nodes_.size()) mark_.resize(nodes_.size(), 0);
  if (++mark_epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    mark_epoch_ = 1;
  }
  return mark_epoch_;
}

uint64_t ZddStore::node_count(ZddHandle root) const {
  if (root.is_sink()) return 0;
  const uint32_t epoch = new_mark_epoch();
  std::vector<uint32_t> stack{root.value};
  mark_[root.value] = epoch;
  uint64_t count = 0;
  while (!stack.empty()) {
    const uint32_t h = stack.back();
    stack.pop_back();
    ++count;
    for (const ZddHandle c : {nodes_[h].then_child, nodes_[h].else_child}) {
      if (!c.is_sink() && mark_[c.value] != epoch) {
        mark_[c.value] = epoch;
        stack.push_back(c.value);
      }
    }
  }
  return count;
}

uint64_t ZddStore::path_count(ZddHandle root) const {
  if (root.is_zero()) return 0;
  if (root.is_one()) return 1;
  const uint32_t epoch = new_mark_epoch();
  if (value_.size() < nodes_.size()) value_.resize(nodes_.size(), 0);

  // Post-order over the DAG with an explicit stack; value_ memoizes per node.
  struct Frame {
    uint32_t handle;
    bool expanded;
  };
  std::vector<Frame> stack{{root.value, false}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const ZddNode n = nodes_[f.handle];
    if (!f.expanded) {
      f.expanded = true;
      for (const ZddHandle c : {n.then_child, n.else_child})
        if (!c.is_sink() && mark_[c.value] != epoch)
          stack.push_back({c.value, false});
      continue;
    }
    stack.pop_back();
    if (mark_[f.handle] == epoch) continue;  // shared node finished elsewhere
    uint64_t total = 0;
    for (const ZddHandle c : {n.then_child, n.else_child}) {
      const uint64_t part = c.is_sink() ? (c.is_one() ? 1 : 0) : value_[c.value];
      if (__builtin_add_overflow(total, part, &total))
        throw OverflowError("clause count exceeds 64 bits");
    }
    value_[f.handle] = total;
    mark_[f.handle] = epoch;
  }
  return value_[root.value];
}

void ZddStore::dump(std::ostream& os, ZddHandle root) const {
  os << "root " << root.value << '\n';
  if (root.is_sink()) return;
  const uint32_t epoch = new_mark_epoch();
  // Recursive preorder, then-edge first.
  auto walk = [&](auto&& self, ZddHandle h) -> void {
    if (h.is_sink() || mark_[h.value] == epoch) return;
    mark_[h.value] = epoch;
    const ZddNode n = nodes_[h.value];
    os << h.value << ' ' << order_.literal_at(n.label_rank).to_dimacs() << ' '
       << n.then_child.value << ' ' << n.else_child.value << '\n';
    self(self, n.then_child);
    self(self, n.else_child);
  };
  walk(walk, root);
}

}  // namespace zsat
