#include "semilab/morphisms.hpp"

#include <algorithm>
#include <numeric>

namespace semilab {

std::string to_string(MorphismKind kind) {
  return kind == MorphismKind::automorphism ? "automorphism"
                                            : "anti-automorphism";
}

bool is_involutive_morphism(const Semigroup& s, const std::vector<int>& map,
                            MorphismKind kind) {
  const int n = s.order();
  if (static_cast<int>(map.size()) != n) return false;
  for (int x = 0; x < n; ++x) {
    if (map[x] < 0 || map[x] >= n) return false;
    if (map[map[x]] != x) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int image = kind == MorphismKind::automorphism
                            ? s.mul(map[x], map[y])
                            : s.mul(map[y], map[x]);
      if (map[s.mul(x, y)] != image) return false;
    }
  return true;
}

namespace {

constexpr int kFullScanMax = 8;

// Partial-assignment consistency: involution pairing plus the morphism law
// on every pair whose images are already known.
bool partial_ok(const Semigroup& s, const std::vector<int>& map,
                MorphismKind kind) {
  const int n = s.order();
  for (int x = 0; x < n; ++x) {
    if (map[x] < 0) continue;
    for (int y = 0; y < n; ++y) {
      if (map[y] < 0) continue;
      const int p = s.mul(x, y);
      if (map[p] < 0) continue;
      const int image = kind == MorphismKind::automorphism
                            ? s.mul(map[x], map[y])
                            : s.mul(map[y], map[x]);
      if (map[p] != image) return false;
    }
  }
  return true;
}

void backtrack(const Semigroup& s, MorphismKind kind, std::vector<int>& map,
               std::vector<InvolutiveMorphism>& out) {
  const int n = s.order();
  int x = 0;
  while (x < n && map[x] >= 0) ++x;
  if (x == n) {
    if (is_involutive_morphism(s, map, kind))
      out.push_back(InvolutiveMorphism{kind, map});
    return;
  }
  for (int y = x; y < n; ++y) {
    if (map[y] >= 0) continue;  // y already paired
    map[x] = y;
    map[y] = x;
    if (partial_ok(s, map, kind)) backtrack(s, kind, map, out);
    map[x] = -1;
    if (y != x) map[y] = -1;
  }
}

}  // namespace

std::vector<InvolutiveMorphism> enumerate_involutive_morphisms(
    const Semigroup& s, MorphismKind kind) {
  const int n = s.order();
  // On abelian semigroups the two laws coincide; report once, tagged
  // automorphism.
  const MorphismKind law = s.is_abelian() ? MorphismKind::automorphism : kind;

  std::vector<InvolutiveMorphism> out;
  if (n <= kFullScanMax) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (is_involutive_morphism(s, perm, law))
        out.push_back(InvolutiveMorphism{law, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<int> map(n, -1);
    backtrack(s, law, map, out);
  }
  std::sort(out.begin(), out.end(),
            [](const InvolutiveMorphism& a, const InvolutiveMorphism& b) {
              return a.map < b.map;
            });
  return out;
}

std::vector<InvolutiveMorphism> all_involutive_morphisms(const Semigroup& s) {
  auto list = enumerate_involutive_morphisms(s, MorphismKind::automorphism);
  if (!s.is_abelian()) {
    auto anti =
        enumerate_involutive_morphisms(s, MorphismKind::anti_automorphism);
    list.insert(list.end(), anti.begin(), anti.end());
  }
  return list;
}

}  // namespace semilab
