#pragma once

// Slow reference implementations used only by the tests.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tamari_b/tamari_b.hpp"

namespace oracle {

using namespace tamari_b;

inline SignedPermutation perm(std::vector<int> v) {
  return SignedPermutation::from_right_part(std::move(v));
}

inline TypeBComposition comp(char const* text) {
  return TypeBComposition::parse(text);
}

// Every element of B_n from permutations times sign vectors.
inline std::vector<SignedPermutation> whole_group(int n) {
  std::vector<SignedPermutation> out;
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      auto v = base;
      for (int a = 0; a < n; ++a) {
        if (signs & (1u << a)) v[a] = -v[a];
      }
      out.push_back(perm(v));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Word length by breadth-first search over left multiplication.
inline std::map<SignedPermutation, int> bfs_lengths(int n) {
  std::map<SignedPermutation, int> dist;
  std::deque<SignedPermutation> queue;
  auto const e = SignedPermutation::identity(n);
  dist[e] = 0;
  queue.push_back(e);
  while (!queue.empty()) {
    auto const p = queue.front();
    queue.pop_front();
    for (int s = 0; s < n; ++s) {
      auto const q = mul_gen_left(Generator{s}, p);
      if (dist.emplace(q, dist[p] + 1).second) queue.push_back(q);
    }
  }
  return dist;
}

// Generators of the parabolic subgroup W_J whose left cosets H_alpha
// represents: s_i for i not a cut point, and s_0 unless alpha is split.
inline std::vector<Generator> parabolic_generators(TypeBComposition const& a) {
  std::set<int> cuts;
  for (int i = 1; i < a.num_regions(); ++i) cuts.insert(a.prefix(i));
  if (a.split()) cuts.insert(0);
  std::vector<Generator> out;
  for (int s = 0; s < a.degree(); ++s) {
    if (!cuts.count(s)) out.push_back(Generator{s});
  }
  return out;
}

inline std::size_t subgroup_order(TypeBComposition const& a) {
  auto const gens = parabolic_generators(a);
  std::set<SignedPermutation> seen{SignedPermutation::identity(a.degree())};
  std::deque<SignedPermutation> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    auto const p = queue.front();
    queue.pop_front();
    for (auto s : gens) {
      auto const q = mul_gen_right(p, s);
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return seen.size();
}

// Minimal left coset representatives: no right descent inside J.
inline std::vector<SignedPermutation> filtered_quotient(
    TypeBComposition const& a) {
  auto const gens = parabolic_generators(a);
  std::vector<SignedPermutation> out;
  for (auto const& p : whole_group(a.degree())) {
    bool ok = true;
    for (auto s : gens) {
      if (coxeter_length(mul_gen_right(p, s)) < coxeter_length(p)) ok = false;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

// Meet in the weak order on a finite set, by brute force over lower bounds.
inline SignedPermutation weak_meet(std::vector<SignedPermutation> const& set,
                                   SignedPermutation const& x,
                                   SignedPermutation const& y) {
  std::vector<SignedPermutation> lower;
  for (auto const& z : set) {
    if (weak_leq(z, x) && weak_leq(z, y)) lower.push_back(z);
  }
  for (auto const& z : lower) {
    bool top = true;
    for (auto const& w : lower) top = top && weak_leq(w, z);
    if (top) return z;
  }
  throw std::logic_error("no meet");
}

inline std::vector<SignedPermutation> aligned_by_root(TypeBComposition const& a) {
  auto const order = inversion_order(a);
  std::vector<SignedPermutation> out;
  for (auto const& p : enumerate_quotient(a)) {
    if (is_aligned_root(p, order)) out.push_back(p);
  }
  return out;
}

// Weak-order maximum of each class, found by comparing lengths.
inline std::set<SignedPermutation> class_maxima(ThetaPartition const& theta) {
  std::set<SignedPermutation> out;
  for (auto const& cls : theta.classes) {
    auto best = theta.elements[cls.members.front()];
    for (auto x : cls.members) {
      if (coxeter_length(theta.elements[x]) > coxeter_length(best)) {
        best = theta.elements[x];
      }
    }
    out.insert(best);
  }
  return out;
}

inline std::vector<TypeBComposition> compositions_up_to(int max_n) {
  std::vector<TypeBComposition> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto const& a : all_compositions(n)) out.push_back(a);
  }
  return out;
}

inline SignedPermutation random_element(int n, std::mt19937& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  for (auto& x : v) {
    if (rng() & 1u) x = -x;
  }
  return perm(v);
}

// Sorts each block of the long one-line notation, giving a member of H_alpha.
inline SignedPermutation random_member(TypeBComposition const& a,
                                       std::mt19937& rng) {
  auto p = random_element(a.degree(), rng);
  std::vector<int> right(p.right_part().begin(), p.right_part().end());
  for (int r = 1; r <= a.num_regions(); ++r) {
    int const lo = a.prefix(r - 1);
    int const hi = a.prefix(r);
    if (a.join() && r == 1) {
      for (int x = lo; x < hi; ++x) right[x] = std::abs(right[x]);
    }
    std::sort(right.begin() + lo, right.begin() + hi);
  }
  return perm(right);
}

// Every set partition of {0, ..., n-1} as a block-id vector.
inline void for_each_set_partition(std::size_t n,
                                   std::function<void(std::vector<std::size_t> const&)> fn) {
  std::vector<std::size_t> ids(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k,
                                                         std::size_t used) {
    if (k == n) {
      fn(ids);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      ids[k] = b;
      rec(k + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    fn(ids);
    return;
  }
  ids[0] = 0;
  rec(1, 1);
}

// Congruence test straight from the definition on the join and meet tables.
template <class L>
bool respects_operations(FiniteLattice<L> const& lat,
                         std::vector<std::size_t> const& ids) {
  std::size_t const n = lat.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (ids[x] != ids[y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (ids[lat.join(x, z)] != ids[lat.join(y, z)]) return false;
        if (ids[lat.meet(x, z)] != ids[lat.meet(y, z)]) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
