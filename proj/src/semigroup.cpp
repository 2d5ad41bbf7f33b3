#include "semilab/semigroup.hpp"

#include <unordered_map>

namespace semilab {

Semigroup Semigroup::validate(const std::vector<std::vector<int>>& raw_table,
                              std::string name, int order_cap) {
  const int n = static_cast<int>(raw_table.size());
  if (n == 0) throw NonSquareError("table is empty");
  for (const auto& row : raw_table) {
    if (static_cast<int>(row.size()) != n)
      throw NonSquareError("table is not square: row of length " +
                           std::to_string(row.size()) + " in an order-" +
                           std::to_string(n) + " table");
  }
  if (n > order_cap) throw OrderCapExceededError(n, order_cap);

  Semigroup s;
  s.order_ = n;
  s.name_ = std::move(name);
  s.table_.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int v = raw_table[x][y];
      if (v < 0 || v >= n) throw EntryOutOfRangeError(x, y, v, n);
      s.table_[x * n + y] = v;
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z)))
          throw NonAssociativeError(x, y, z);

  s.abelian_ = true;
  for (int x = 0; x < n && s.abelian_; ++x)
    for (int y = x + 1; y < n; ++y)
      if (s.mul(x, y) != s.mul(y, x)) {
        s.abelian_ = false;
        break;
      }

  for (int z = 0; z < n; ++z) {
    bool central = true;
    for (int x = 0; x < n; ++x)
      if (s.mul(z, x) != s.mul(x, z)) {
        central = false;
        break;
      }
    if (central) s.center_.push_back(z);
  }

  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (s.mul(e, x) != x || s.mul(x, e) != x) {
        ok = false;
        break;
      }
    if (ok) {
      s.identity_ = e;
      break;  // two-sided identities are unique
    }
  }

  return s;
}

int Semigroup::power(int x, int e) const {
  int p = x;
  for (int i = 1; i < e; ++i) p = mul(p, x);
  return p;
}

bool Semigroup::is_central(int z) const {
  for (int x = 0; x < order_; ++x)
    if (mul(z, x) != mul(x, z)) return false;
  return true;
}

ElementProfile Semigroup::element_profile(int x) const {
  // Walk x, x^2, ... until the first repeat; the first collision gives the
  // minimal index and period.
  std::unordered_map<int, int> seen;  // element -> exponent
  int p = x;
  int step = 1;
  while (true) {
    auto it = seen.find(p);
    if (it != seen.end())
      return ElementProfile{x, it->second, step - it->second};
    seen.emplace(p, step);
    p = mul(p, x);
    ++step;
  }
}

std::vector<std::vector<int>> Semigroup::rows() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y) out[x][y] = mul(x, y);
  return out;
}

}  // namespace semilab
