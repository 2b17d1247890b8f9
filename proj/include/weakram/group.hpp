#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace weakram {

// A finite group given by its composition table; element 0..n-1, with the
// table validated on construction.  All subgroup values are sorted index
// vectors, so set comparisons are plain vector comparisons.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> table) : mul_(std::move(table)) {
    const int n = static_cast<int>(mul_.size());
    if (n == 0) throw dimension_mismatch("group: empty table");
    for (const auto& row : mul_)
      for (int x : row)
        if (static_cast<int>(row.size()) != n || x < 0 || x >= n)
          throw dimension_mismatch("group: malformed table");
    id_ = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
      if (ok) {
        id_ = e;
        break;
      }
    }
    if (id_ < 0) throw theorem_violation("group: no identity element");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (mul_[a][b] == id_ && mul_[b][a] == id_) inv_[a] = b;
    for (int a = 0; a < n; ++a)
      if (inv_[a] < 0) throw theorem_violation("group: element without inverse");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
            throw theorem_violation("group: associativity fails");
  }

  int order() const { return static_cast<int>(mul_.size()); }
  int identity() const { return id_; }
  int op(int a, int b) const { return mul_[a][b]; }
  int inverse(int a) const { return inv_[a]; }

  int pow(int a, long k) const {
    int acc = id_;
    long t = k >= 0 ? k : -k;
    int base = k >= 0 ? a : inv_[a];
    for (; t > 0; --t) acc = mul_[acc][base];
    return acc;
  }

  int element_order(int a) const {
    int x = a, ord = 1;
    while (x != id_) {
      x = mul_[x][a];
      ++ord;
    }
    return ord;
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < a; ++b)
        if (mul_[a][b] != mul_[b][a]) return false;
    return true;
  }

  std::vector<int> closure(std::vector<int> gens) const {
    std::vector<char> in(mul_.size(), 0);
    in[id_] = 1;
    std::vector<int> stack{id_};
    for (int g : gens)
      if (!in[g]) {
        in[g] = 1;
        stack.push_back(g);
      }
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t t = 0; t < stack.size(); ++t)
        for (std::size_t s = 0; s < stack.size(); ++s) {
          int x = mul_[stack[t]][stack[s]];
          if (!in[x]) {
            in[x] = 1;
            stack.push_back(x);
            grew = true;
          }
        }
    }
    std::sort(stack.begin(), stack.end());
    return stack;
  }

  bool is_subgroup(const std::vector<int>& h) const {
    if (!std::binary_search(h.begin(), h.end(), id_)) return false;
    for (int a : h)
      for (int b : h)
        if (!std::binary_search(h.begin(), h.end(), mul_[a][b])) return false;
    return true;
  }

  bool is_normal(const std::vector<int>& h) const {
    for (int g = 0; g < order(); ++g)
      for (int a : h)
        if (!std::binary_search(h.begin(), h.end(), mul_[mul_[g][a]][inv_[g]]))
          return false;
    return true;
  }

  bool is_normal_in(const std::vector<int>& h, const std::vector<int>& ambient) const {
    for (int g : ambient)
      for (int a : h)
        if (!std::binary_search(h.begin(), h.end(), mul_[mul_[g][a]][inv_[g]]))
          return false;
    return true;
  }

  std::vector<int> conjugate_subgroup(const std::vector<int>& h, int g) const {
    std::vector<int> out;
    out.reserve(h.size());
    for (int a : h) out.push_back(mul_[mul_[g][a]][inv_[g]]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> normalizer(const std::vector<int>& h) const {
    std::vector<int> out;
    for (int g = 0; g < order(); ++g)
      if (conjugate_subgroup(h, g) == h) out.push_back(g);
    return out;
  }

  std::vector<int> set_product(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> out;
    out.reserve(a.size() * b.size());
    for (int x : a)
      for (int y : b) out.push_back(mul_[x][y]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  static std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

 private:
  std::vector<std::vector<int>> mul_;
  int id_ = 0;
  std::vector<int> inv_;
};

// The set of elements of p-power order within the subgroup h, verified to be
// closed.  Valid whenever that set is the unique (hence normal) Sylow
// p-subgroup, as it is for inertia groups.
inline std::vector<int> grp_sylow_p(const FiniteGroup& g, const std::vector<int>& h, long p) {
  std::vector<int> out;
  for (int a : h) {
    int ord = g.element_order(a);
    while (ord % p == 0) ord /= p;
    if (ord == 1) out.push_back(a);
  }
  if (!g.is_subgroup(out))
    throw not_normal_sylow("p-power-order elements do not form a subgroup");
  return out;
}

namespace grp_detail {

inline bool complement_dfs(const FiniteGroup& g, const std::vector<int>& ambient,
                           const std::vector<int>& n, std::size_t target,
                           std::vector<int>& cur, int next) {
  if (cur.size() == target) return true;
  for (std::size_t t = 0; t < ambient.size(); ++t) {
    int cand = ambient[t];
    if (cand < next || std::binary_search(cur.begin(), cur.end(), cand)) continue;
    std::vector<int> grown = g.closure([&] {
      std::vector<int> gens = cur;
      gens.push_back(cand);
      return gens;
    }());
    if (grown.size() > target || target % grown.size() != 0) continue;
    if (FiniteGroup::intersect(grown, n).size() != 1) continue;
    std::vector<int> saved = std::move(cur);
    cur = std::move(grown);
    if (complement_dfs(g, ambient, n, target, cur, cand + 1)) return true;
    cur = std::move(saved);
  }
  return false;
}

}  // namespace grp_detail

// A complement of the normal subgroup n inside the subgroup ambient: the
// first subgroup h in the deterministic search order with h ∩ n = 1 and
// h·n = ambient.
inline std::vector<int> grp_complement(const FiniteGroup& g, const std::vector<int>& ambient,
                                       const std::vector<int>& n) {
  if (ambient.size() % n.size() != 0)
    throw dimension_mismatch("complement: subgroup order does not divide");
  const std::size_t target = ambient.size() / n.size();
  std::vector<int> cur{g.identity()};
  if (!grp_detail::complement_dfs(g, ambient, n, target, cur, 0))
    throw no_complement("no complement exists for the given normal subgroup");
  return cur;
}

// Replaces the lift tau0 of the Frobenius generator with i^{-1}·tau0 for the
// first i in the inertia subgroup making the result normalize c.
inline int grp_frobenius_lift_in_normalizer(const FiniteGroup& g, const std::vector<int>& inertia,
                                            const std::vector<int>& c, int tau0) {
  for (int i : inertia) {
    int tau = g.op(g.inverse(i), tau0);
    if (g.conjugate_subgroup(c, tau) == c) return tau;
  }
  throw theorem_violation("no inertia shift of the lift normalizes the complement");
}

// The compatible pair of semidirect decompositions: I = W⋊C and G = I⋊U with
// T = C⋊U, S = W⋊U, G = W⋊T.
struct SplitData {
  std::vector<int> W, I, C, U, T, S;
  int tau;
};

inline SplitData grp_doubly_split(const FiniteGroup& g, const std::vector<int>& inertia,
                                  int tau0, long p) {
  SplitData out;
  out.I = inertia;
  if (!g.is_subgroup(out.I) || !g.is_normal(out.I))
    throw not_doubly_split("inertia is not a normal subgroup");
  out.W = grp_sylow_p(g, out.I, p);
  if (!g.is_normal(out.W)) throw not_doubly_split("wild inertia is not normal");
  out.C = grp_complement(g, out.I, out.W);

  const int d = g.order() / static_cast<int>(out.I.size());
  if (d == 1) {
    out.tau = g.identity();
    out.U = {g.identity()};
  } else {
    out.tau = -1;
    for (int i : out.I) {
      int t = g.op(g.inverse(i), tau0);
      if (g.conjugate_subgroup(out.C, t) != out.C) continue;
      if (g.pow(t, d) != g.identity()) continue;
      if (static_cast<int>(g.closure({t}).size()) != d) continue;
      out.tau = t;
      break;
    }
    if (out.tau < 0)
      throw not_doubly_split("no inertia shift of the lift generates a complement");
    out.U = g.closure({out.tau});
  }

  out.T = g.set_product(out.C, out.U);
  out.S = g.set_product(out.W, out.U);

  auto factor = [&](const std::vector<int>& n, const std::vector<int>& h,
                    const std::vector<int>& whole) {
    return g.is_subgroup(n) && g.is_subgroup(h) && g.set_product(n, h) == whole &&
           FiniteGroup::intersect(n, h).size() == 1 &&
           n.size() * h.size() == whole.size();
  };
  std::vector<int> all;
  for (int k = 0; k < g.order(); ++k) all.push_back(k);
  bool ok = factor(out.W, out.C, out.I) && g.is_normal_in(out.W, out.I);
  ok = ok && factor(out.I, out.U, all);
  ok = ok && factor(out.C, out.U, out.T) && g.is_normal_in(out.C, out.T);
  ok = ok && factor(out.W, out.T, all);
  if (!ok) throw not_doubly_split("a semidirect factorization check failed");
  return out;
}

}  // namespace weakram
