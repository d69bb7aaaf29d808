#pragma once

// The downward projection onto 231-avoiding elements, the involution
// pi -> pi * omega, the upward projection and the classes of the resulting
// congruence.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "alignment.hpp"
#include "composition.hpp"
#include "options.hpp"
#include "parabolic.hpp"
#include "signed_perm.hpp"

namespace tamari_b {

namespace detail {

// Exchanges the values at positions i and k; for a pattern these are
// consecutive, so the length drops by one.
inline SignedPermutation resolve(SignedPermutation const& p,
                                 PatternWitness const& w) {
  return mul_reflection_left(Reflection::exchanging(p(w.i), p(w.k)), p);
}

}  // namespace detail

// Eliminates 231 patterns until none is left, picking the witness with
// choose(patterns) -> index.
template <class Chooser>
SignedPermutation project_down_with(TypeBComposition const& alpha,
                                    SignedPermutation p, Chooser&& choose) {
  require_member(alpha, p);
  for (;;) {
    auto const ws = all_231_patterns(alpha, p);
    if (ws.empty()) return p;
    p = detail::resolve(p, ws.at(choose(ws)));
  }
}

inline SignedPermutation project_down(TypeBComposition const& alpha,
                                      SignedPermutation p) {
  require_member(alpha, p);
  while (auto w = find_231_pattern(alpha, p)) {
    p = detail::resolve(p, *w);
  }
  return p;
}

inline SignedPermutation project_onto_312(TypeBComposition const& alpha,
                                          SignedPermutation p) {
  require_member(alpha, p);
  while (auto w = find_312_pattern(alpha, p)) {
    p = detail::resolve(p, *w);
  }
  return p;
}

// pi * omega_{o;alpha} by the block recipe: each region outside a join first
// region is negated and reversed.
inline SignedPermutation iota(TypeBComposition const& alpha,
                              SignedPermutation const& p) {
  require_member(alpha, p);
  SignedPermutation q = p;
  for (int i = 1; i <= alpha.num_regions(); ++i) {
    if (alpha.join() && i == 1) continue;
    int const lo = alpha.prefix(i - 1) + 1;
    int const hi = alpha.prefix(i);
    for (int a = lo; a <= hi; ++a) q.set_unchecked(a, -p(lo + hi - a));
  }
  if (crosschecks_enabled() && q != compose(p, longest_element(alpha))) {
    throw std::logic_error("iota recipe disagrees with pi * omega");
  }
  return q;
}

inline SignedPermutation project_up(TypeBComposition const& alpha,
                                    SignedPermutation const& p) {
  return iota(alpha, project_onto_312(alpha, iota(alpha, p)));
}

// One class of the congruence; indices refer to the sorted quotient.
struct ThetaClass {
  SignedPermutation bottom;
  SignedPermutation top;
  std::vector<std::size_t> members;
};

struct ThetaPartition {
  TypeBComposition alpha;
  std::vector<SignedPermutation> elements;  // enumerate_quotient(alpha)
  std::vector<ThetaClass> classes;          // sorted by bottom
  std::vector<std::size_t> class_of;        // element index -> class index
};

inline ThetaPartition theta_classes(TypeBComposition const& alpha,
                                    EnumerationOptions const& opt = {}) {
  ThetaPartition out;
  out.alpha = alpha;
  out.elements = enumerate_quotient(alpha, opt);
  auto const& el = out.elements;
  std::vector<SignedPermutation> down(el.size());
  std::vector<SignedPermutation> up(el.size());
  std::size_t const chunks = std::max(1u, opt.threads) * 8;
  std::size_t const step = (el.size() + chunks - 1) / chunks;
  parallel_for(chunks, opt.threads, [&](std::size_t c) {
    for (std::size_t x = c * step; x < std::min(el.size(), (c + 1) * step);
         ++x) {
      down[x] = project_down(alpha, el[x]);
      up[x] = project_up(alpha, el[x]);
    }
  });
  std::map<SignedPermutation, std::size_t> index;
  for (std::size_t x = 0; x < el.size(); ++x) {
    if (down[x] == el[x]) index.emplace(el[x], 0);
  }
  std::size_t c = 0;
  for (auto& [bottom, k] : index) {
    k = c++;
    out.classes.push_back({bottom, bottom, {}});
  }
  out.class_of.resize(el.size());
  for (std::size_t x = 0; x < el.size(); ++x) {
    std::size_t const k = index.at(down[x]);
    out.class_of[x] = k;
    out.classes[k].members.push_back(x);
  }
  for (auto& cls : out.classes) {
    cls.top = up[cls.members.front()];
  }
  return out;
}

}  // namespace tamari_b
