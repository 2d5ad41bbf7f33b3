#include "semilab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>

namespace semilab {

RootOfUnity RootOfUnity::root(long long num, long long den) {
  RootOfUnity r;
  r.zero_ = false;
  num %= den;
  if (num < 0) num += den;
  const long long g = std::gcd(num, den);
  r.num_ = num / g;
  r.den_ = den / g;
  return r;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  if (zero_ || o.zero_) return zero();
  return root(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RootOfUnity RootOfUnity::negated() const {
  return *this * minus_one();
}

RootOfUnity RootOfUnity::pow(long long e) const {
  if (zero_) return zero();
  return root(num_ * e, den_);
}

bool RootOfUnity::operator<(const RootOfUnity& o) const {
  if (zero_ != o.zero_) return zero_;
  if (den_ != o.den_) return den_ < o.den_;
  return num_ < o.num_;
}

Cx RootOfUnity::value() const {
  if (zero_) return {0.0, 0.0};
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  return {std::cos(angle), std::sin(angle)};
}

bool Character::is_identically_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const RootOfUnity& v) { return v.is_zero(); });
}

bool Character::is_nowhere_zero() const {
  return std::none_of(values_.begin(), values_.end(),
                      [](const RootOfUnity& v) { return v.is_zero(); });
}

bool Character::multiplicative_on(const Semigroup& s) const {
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      if (values_[s.mul(x, y)] != values_[x] * values_[y]) return false;
  return true;
}

bool Character::operator<(const Character& o) const {
  return std::lexicographical_compare(values_.begin(), values_.end(),
                                      o.values_.begin(), o.values_.end());
}

Character Character::constant_one(int n) {
  return Character(std::vector<RootOfUnity>(n, RootOfUnity::one()));
}

namespace {

// Propagate forced products; returns false on contradiction.  A nonzero
// forced value must be a period(c)-th root of unity, otherwise no
// multiplicative completion exists.
bool propagate(const Semigroup& s, const std::vector<int>& periods,
               std::vector<std::optional<RootOfUnity>>& val) {
  const int n = s.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      if (!val[x]) continue;
      for (int y = 0; y < n; ++y) {
        if (!val[y]) continue;
        const int c = s.mul(x, y);
        const RootOfUnity v = *val[x] * *val[y];
        if (val[c]) {
          if (*val[c] != v) return false;
        } else {
          if (!v.is_zero() && periods[c] % v.order() != 0) return false;
          val[c] = v;
          changed = true;
        }
      }
    }
  }
  return true;
}

void search_characters(const Semigroup& s, const std::vector<int>& periods,
                       std::vector<std::optional<RootOfUnity>> val,
                       std::vector<Character>& out) {
  const int n = s.order();
  int x = 0;
  while (x < n && val[x]) ++x;
  if (x == n) {
    std::vector<RootOfUnity> values;
    values.reserve(n);
    for (const auto& v : val) values.push_back(*v);
    Character chi(std::move(values));
    if (chi.multiplicative_on(s)) out.push_back(std::move(chi));
    return;
  }
  std::vector<RootOfUnity> candidates;
  candidates.push_back(RootOfUnity::zero());
  for (int j = 0; j < periods[x]; ++j)
    candidates.push_back(RootOfUnity::root(j, periods[x]));
  for (const auto& cand : candidates) {
    auto next = val;
    next[x] = cand;
    if (propagate(s, periods, next))
      search_characters(s, periods, std::move(next), out);
  }
}

}  // namespace

std::vector<Character> enumerate_characters(const Semigroup& s) {
  const int n = s.order();
  std::vector<int> periods(n);
  for (int x = 0; x < n; ++x) periods[x] = s.element_profile(x).period_r;

  std::vector<Character> out;
  search_characters(s, periods, std::vector<std::optional<RootOfUnity>>(n),
                    out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Character> admissible_mus(const Semigroup& s,
                                      const InvolutiveMorphism& tau) {
  std::vector<Character> out;
  for (auto& chi : enumerate_characters(s)) {
    bool ok = true;
    for (int x = 0; x < s.order(); ++x)
      if (chi.at(x) * chi.at(tau(x)) != RootOfUnity::one()) {
        ok = false;
        break;
      }
    if (ok) out.push_back(chi);
  }
  return out;
}

bool sign_condition(const Semigroup& s, const Character& chi,
                    const InvolutiveMorphism& tau, const Character& mu, int z0,
                    Sign sign) {
  if (!s.is_central(z0)) throw NonCentralZ0Error(z0);
  const RootOfUnity lhs = mu.at(z0) * chi.at(tau(z0));
  const RootOfUnity rhs =
      sign == Sign::plus ? chi.at(z0) : chi.at(z0).negated();
  return lhs == rhs;
}

}  // namespace semilab
