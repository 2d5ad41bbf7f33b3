#pragma once

#include <complex>
#include <vector>

#include "semilab/morphisms.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

using Cx = std::complex<double>;

// Exactly zero or exp(2*pi*i * num/den) with the fraction reduced and
// normalized to [0,1).  Multiplication and sign tests stay exact; conversion
// to complex happens only at evaluation time.
class RootOfUnity {
 public:
  static RootOfUnity zero() { return RootOfUnity(); }
  static RootOfUnity one() { return root(0, 1); }
  static RootOfUnity minus_one() { return root(1, 2); }
  // exp(2*pi*i * num/den); den >= 1.
  static RootOfUnity root(long long num, long long den);

  bool is_zero() const { return zero_; }
  // Reduced denominator: the multiplicative order of the value (1 for the
  // value 1).  Zero reports order 0.
  long long order() const { return zero_ ? 0 : den_; }
  long long exponent() const { return num_; }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity negated() const;  // multiply by -1
  RootOfUnity pow(long long e) const;

  bool operator==(const RootOfUnity& o) const {
    return zero_ == o.zero_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
  // (order, exponent) key with zero first; used for canonical listings.
  bool operator<(const RootOfUnity& o) const;

  Cx value() const;

 private:
  RootOfUnity() = default;
  bool zero_ = true;
  long long num_ = 0;
  long long den_ = 1;
};

// A multiplicative function S -> C stored exactly, one RootOfUnity per
// element.  Houses both chi and mu.
class Character {
 public:
  explicit Character(std::vector<RootOfUnity> values)
      : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  const RootOfUnity& at(int x) const { return values_[x]; }
  Cx eval(int x) const { return values_[x].value(); }

  bool is_identically_zero() const;
  bool is_nowhere_zero() const;

  // Full exact pair scan of value(x*y) == value(x)*value(y).
  bool multiplicative_on(const Semigroup& s) const;

  bool operator==(const Character& o) const { return values_ == o.values_; }
  bool operator<(const Character& o) const;

  static Character constant_one(int n);

 private:
  std::vector<RootOfUnity> values_;
};

// Every multiplicative function S -> C, found by backtracking over
// per-element candidate sets {0} union {period(x)-th roots of unity} with
// propagation through the table.  Includes the identically-zero character.
// Canonical (order, exponent)-lexicographic output order.
std::vector<Character> enumerate_characters(const Semigroup& s);

// The subset of enumerate_characters(s) with mu(x)*mu(tau(x)) = 1 for all x;
// such mu are automatically nowhere zero.  Order inherited, so positions are
// stable handles.
std::vector<Character> admissible_mus(const Semigroup& s,
                                      const InvolutiveMorphism& tau);

enum class Sign { plus, minus };

// Exact test of mu(z0)*chi(tau(z0)) == +/- chi(z0); no tolerance involved.
// Throws NonCentralZ0Error.
bool sign_condition(const Semigroup& s, const Character& chi,
                    const InvolutiveMorphism& tau, const Character& mu, int z0,
                    Sign sign);

}  // namespace semilab
