#pragma once

#include <string>
#include <vector>

#include "semilab/semigroup.hpp"

namespace semilab {

enum class MorphismKind { automorphism, anti_automorphism };

std::string to_string(MorphismKind kind);

// A self-inverse permutation tau of the elements with
//   automorphism:       tau(x*y) = tau(x)*tau(y)
//   anti-automorphism:  tau(x*y) = tau(y)*tau(x)
struct InvolutiveMorphism {
  MorphismKind kind = MorphismKind::automorphism;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  int size() const { return static_cast<int>(map.size()); }

  bool operator==(const InvolutiveMorphism& o) const = default;
};

// True iff map is a self-inverse permutation satisfying the kind's law.
bool is_involutive_morphism(const Semigroup& s, const std::vector<int>& map,
                            MorphismKind kind);

// All involutive morphisms of the requested kind, in lexicographic one-line
// order.  On abelian semigroups both laws coincide and the result is tagged
// automorphism regardless of the requested kind.  Full permutation scan up
// to n = 8, image backtracking beyond.
std::vector<InvolutiveMorphism> enumerate_involutive_morphisms(
    const Semigroup& s, MorphismKind kind);

// Canonical combined list: automorphisms first, then anti-automorphisms
// (empty second block on abelian semigroups).  This is the index space the
// CLI uses for --tau.
std::vector<InvolutiveMorphism> all_involutive_morphisms(const Semigroup& s);

}  // namespace semilab
