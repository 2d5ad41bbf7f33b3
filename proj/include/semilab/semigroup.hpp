#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semilab/errors.hpp"

namespace semilab {

// Index/period data of a single element: the minimal (k, r) with
// x^(k+r) = x^k.  The period bounds the admissible character values at x.
struct ElementProfile {
  int element = 0;
  int index_k = 1;
  int period_r = 1;
};

// A finite semigroup given by its Cayley table.  Elements are dense indices
// 0..n-1; the name is metadata only.  Associativity is verified eagerly at
// construction, so everything downstream may assume a true semigroup.
// Immutable after construction.
class Semigroup {
 public:
  static constexpr int kDefaultOrderCap = 12;

  // Validates shape, range and associativity (full triple scan).
  // Throws NonSquareError, EntryOutOfRangeError, NonAssociativeError,
  // OrderCapExceededError.
  static Semigroup validate(const std::vector<std::vector<int>>& raw_table,
                            std::string name = "",
                            int order_cap = kDefaultOrderCap);

  int order() const { return order_; }
  const std::string& name() const { return name_; }

  int mul(int x, int y) const { return table_[x * order_ + y]; }

  // x^e for e >= 1 (bracketing is irrelevant by associativity).
  int power(int x, int e) const;

  // Ascending list of elements commuting with everything; may be empty.
  const std::vector<int>& center() const { return center_; }
  bool is_central(int z) const;

  // The unique two-sided identity, if any.
  std::optional<int> identity() const { return identity_; }

  bool is_abelian() const { return abelian_; }

  // Minimal (k, r) with x^(k+r) = x^k; terminates within order() steps.
  ElementProfile element_profile(int x) const;

  std::vector<std::vector<int>> rows() const;

 private:
  Semigroup() = default;

  int order_ = 0;
  std::vector<int> table_;  // row-major, table_[x*n + y] = x*y
  std::string name_;
  std::vector<int> center_;
  std::optional<int> identity_;
  bool abelian_ = false;
};

}  // namespace semilab
