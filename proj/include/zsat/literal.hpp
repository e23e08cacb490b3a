#pragma once

#include <cstdint>
#include <cstdlib>

#include "zsat/errors.hpp"

namespace zsat {

/// A signed SAT literal. Variables are 1-based, DIMACS style.
struct Literal {
  int var = 0;
  bool positive = true;

  static Literal from_dimacs(int encoded) {
    if (encoded == 0) throw UsageError("literal 0 is reserved");
    return Literal{encoded > 0 ? encoded : -encoded, encoded > 0};
  }

  int to_dimacs() const { return positive ? var : -var; }
  Literal negated() const { return Literal{var, !positive}; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Total order over the 2n literals of variables 1..n. The positive literal
/// of each variable sits directly before the negative one and variables
/// ascend by index: rank(+v) = 2(v-1), rank(-v) = 2(v-1)+1.
class LiteralOrder {
 public:
  explicit LiteralOrder(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw UsageError("negative variable count");
  }

  int num_vars() const { return num_vars_; }
  int num_ranks() const { return 2 * num_vars_; }
  bool contains(int var) const { return var >= 1 && var <= num_vars_; }

  uint32_t rank(Literal lit) const {
    if (!contains(lit.var))
      throw UsageError("variable outside order domain: " +
                       std::to_string(lit.var));
    return 2 * static_cast<uint32_t>(lit.var - 1) + (lit.positive ? 0 : 1);
  }

  Literal literal_at(uint32_t rank) const {
    return Literal{static_cast<int>(rank / 2) + 1, (rank & 1) == 0};
  }

  static int var_of_rank(uint32_t rank) { return static_cast<int>(rank / 2) + 1; }

 private:
  int num_vars_;
};

}  // namespace zsat
