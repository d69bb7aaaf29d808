#pragma once

// Aligned elements of a parabolic quotient, three ways: the root-level
// definition against an inversion order, the forcing conditions on cover
// inversions, and avoidance of 231 patterns. Also 312 patterns.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "composition.hpp"
#include "errors.hpp"
#include "options.hpp"
#include "parabolic.hpp"
#include "signed_perm.hpp"

namespace tamari_b {

// root(target) = a * root(left) + b * root(right).
struct Decomposition {
  Reflection target;
  Reflection left;
  Reflection right;
  int a = 1;
  int b = 1;
  bool operator==(Decomposition const&) const = default;
};

// Coordinates in the basis e_1, ..., e_n: [[i]] -> e_i, ((i j)) -> e_j - e_i,
// ((-j i)) -> e_i + e_j.
inline std::vector<int> root_vector(Reflection const& t, int n) {
  std::vector<int> v(n, 0);
  switch (t.kind) {
    case ReflectionKind::Sign:
      v[t.i - 1] = 1;
      break;
    case ReflectionKind::Pos:
      v[t.i - 1] = -1;
      v[t.j - 1] = 1;
      break;
    case ReflectionKind::Neg:
      v[t.i - 1] = 1;
      v[t.j - 1] = 1;
      break;
  }
  return v;
}

// Every way of writing the root of t as a positive combination of two
// positive roots.
inline std::vector<Decomposition> decompositions(Reflection const& t, int n) {
  if (t.max_index() > n) {
    throw DomainError("reflection " + to_string(t) + " out of range");
  }
  std::vector<Decomposition> out;
  switch (t.kind) {
    case ReflectionKind::Sign:
      for (int j = 1; j < t.i; ++j) {
        out.push_back({t, Reflection::pos(j, t.i), Reflection::sign(j)});
      }
      break;
    case ReflectionKind::Pos:
      for (int j = t.i + 1; j < t.j; ++j) {
        out.push_back({t, Reflection::pos(t.i, j), Reflection::pos(j, t.j)});
      }
      break;
    case ReflectionKind::Neg: {
      int const i = t.i;
      int const k = t.j;
      out.push_back({t, Reflection::sign(i), Reflection::sign(k)});
      for (int j = 1; j < k; ++j) {
        if (j == i) {
          out.push_back({t, Reflection::sign(i), Reflection::pos(i, k), 2, 1});
        } else {
          out.push_back({t, Reflection::neg(i, j), Reflection::pos(j, k)});
        }
      }
      for (int j = 1; j < i; ++j) {
        out.push_back({t, Reflection::pos(j, i), Reflection::neg(j, k)});
      }
      break;
    }
  }
  return out;
}

// Aligned with respect to an inversion order: for every cover inversion t and
// decomposition whose parts t1, t2 both occur in the order with t1 < t < t2,
// t1 is an inversion.
inline bool is_aligned_root(SignedPermutation const& p,
                            std::span<Reflection const> order) {
  std::array<int, kMaxDegree * kMaxDegree> where;
  where.fill(-1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    where[reflection_code(order[k])] = static_cast<int>(k);
  }
  InversionMask const inv = inversion_mask(p);
  for (std::size_t c = 0; c < where.size(); ++c) {
    if (inv.test(c) && where[c] < 0) {
      throw DomainError(to_string(p)
                        + " has an inversion outside the given order");
    }
  }
  int const n = p.degree();
  for (auto const& t : cover_inversions(p)) {
    int const pt = where[reflection_code(t)];
    for (auto const& d : decompositions(t, n)) {
      int const pl = where[reflection_code(d.left)];
      int const pr = where[reflection_code(d.right)];
      if (pl < 0 || pr < 0) continue;
      if (pl < pt && pt < pr && !inv.test(reflection_code(d.left))) {
        return false;
      }
      if (pr < pt && pt < pl && !inv.test(reflection_code(d.right))) {
        return false;
      }
    }
  }
  return true;
}

// True when the cover inversion t of p breaks one of the forcing conditions.
inline bool violates_forcing(TypeBComposition const& alpha,
                             SignedPermutation const& p, Reflection const& t) {
  auto rho = [&](int a) { return alpha.region_of(a); };
  auto inv = [&](Reflection const& s) { return is_inversion(p, s); };
  int const a1 = alpha.first_part();
  bool const join = alpha.join();
  switch (t.kind) {
    case ReflectionKind::Sign: {
      int const i = t.i;
      for (int j = join ? a1 + 1 : 1; j < i; ++j) {
        if (rho(j) < rho(i) && !inv(Reflection::sign(j))) return true;
      }
      return false;
    }
    case ReflectionKind::Pos: {
      int const i = t.i;
      int const k = t.j;
      for (int j = i + 1; j < k; ++j) {
        if (rho(i) < rho(j) && rho(j) < rho(k) && !inv(Reflection::pos(i, j))) {
          return true;
        }
      }
      return false;
    }
    case ReflectionKind::Neg: {
      int const i = t.i;
      int const k = t.j;
      if (!join) {
        if (!inv(Reflection::sign(i))) return true;
        for (int j = 1; j < k; ++j) {
          if (j != i && rho(j) < rho(k) && !inv(Reflection::neg(i, j))) {
            return true;
          }
        }
        for (int j = 1; j < i; ++j) {
          if (rho(j) < rho(i) && !inv(Reflection::neg(j, k))) return true;
        }
        return false;
      }
      if (i > a1 && !inv(Reflection::sign(i))) return true;
      for (int j = 1; j <= a1; ++j) {
        if (j != i && !inv(Reflection::pos(j, k))) return true;
        if (i > a1 && !inv(Reflection::pos(j, i))) return true;
      }
      for (int j = a1 + 1; j < k; ++j) {
        if (j != i && !inv(Reflection::neg(i, j))) {
          return true;
        }
      }
      for (int j = a1 + 1; j < i; ++j) {
        if (!inv(Reflection::neg(j, k))) return true;
      }
      return false;
    }
  }
  return false;
}

inline bool is_aligned_forcing(TypeBComposition const& alpha,
                               SignedPermutation const& p) {
  require_member(alpha, p);
  for (auto const& t : cover_inversions(p)) {
    if (violates_forcing(alpha, p, t)) return false;
  }
  return true;
}

enum class PatternFlavor { Split231, Join231, Split312, Join312 };

inline std::string to_string(PatternFlavor f) {
  switch (f) {
    case PatternFlavor::Split231:
      return "split231";
    case PatternFlavor::Join231:
      return "join231";
    case PatternFlavor::Split312:
      return "split312";
    case PatternFlavor::Join312:
      return "join312";
  }
  return {};
}

struct PatternWitness {
  int i = 0;
  int j = 0;
  int k = 0;
  PatternFlavor flavor = PatternFlavor::Split231;
  bool operator==(PatternWitness const&) const = default;
};

namespace detail {

inline bool pattern_frame(TypeBComposition const& alpha,
                          SignedPermutation const& p, int i, int j, int k) {
  int const n = alpha.degree();
  if (i == 0 || j <= 0 || k <= 0 || i < -n || k > n) return false;
  if (!(i < j && j < k)) return false;
  int const bi = alpha.block_of(i);
  int const bj = alpha.block_of(j);
  int const bk = alpha.block_of(k);
  if (bi == bj || bj == bk || bi == bk) return false;
  return p(i) == succ(p(k));
}

template <class Pred>
std::vector<PatternWitness> scan_patterns(TypeBComposition const& alpha,
                                          SignedPermutation const& p,
                                          PatternFlavor flavor, Pred pred,
                                          bool first_only) {
  std::vector<PatternWitness> out;
  int const n = alpha.degree();
  for (int k = 2; k <= n; ++k) {
    if (p(k) == n) continue;
    int const i = p.position_of(succ(p(k)));
    if (i >= k) continue;
    for (int j = std::max(i, 0) + 1; j < k; ++j) {
      if (pattern_frame(alpha, p, i, j, k) && pred(i, j, k)) {
        out.push_back({i, j, k, flavor});
        if (first_only) return out;
      }
    }
  }
  return out;
}

}  // namespace detail

inline bool is_231_pattern(TypeBComposition const& alpha,
                           SignedPermutation const& p, int i, int j, int k) {
  check_degree(alpha, p);
  if (!detail::pattern_frame(alpha, p, i, j, k)) return false;
  if (alpha.join() && j <= alpha.first_part()) return p(j) < p(k);
  return p(j) > p(i);
}

inline bool is_312_pattern(TypeBComposition const& alpha,
                           SignedPermutation const& p, int i, int j, int k) {
  check_degree(alpha, p);
  if (!detail::pattern_frame(alpha, p, i, j, k)) return false;
  return p(k) > p(j);
}

namespace detail {

inline std::vector<PatternWitness> patterns(TypeBComposition const& alpha,
                                            SignedPermutation const& p,
                                            bool is231, bool first_only) {
  require_member(alpha, p);
  PatternFlavor const flavor =
      is231 ? (alpha.join() ? PatternFlavor::Join231 : PatternFlavor::Split231)
            : (alpha.join() ? PatternFlavor::Join312 : PatternFlavor::Split312);
  int const a1 = alpha.join() ? alpha.first_part() : 0;
  auto pred = [&](int i, int j, int k) {
    if (!is231) return p(k) > p(j);
    return j <= a1 ? p(j) < p(k) : p(j) > p(i);
  };
  return scan_patterns(alpha, p, flavor, pred, first_only);
}

}  // namespace detail

// First witness in lexicographic order of (k, j, i).
inline std::optional<PatternWitness> find_231_pattern(
    TypeBComposition const& alpha, SignedPermutation const& p) {
  auto w = detail::patterns(alpha, p, true, true);
  if (w.empty()) return std::nullopt;
  return w.front();
}

inline std::optional<PatternWitness> find_312_pattern(
    TypeBComposition const& alpha, SignedPermutation const& p) {
  auto w = detail::patterns(alpha, p, false, true);
  if (w.empty()) return std::nullopt;
  return w.front();
}

inline std::vector<PatternWitness> all_231_patterns(
    TypeBComposition const& alpha, SignedPermutation const& p) {
  return detail::patterns(alpha, p, true, false);
}

inline std::vector<PatternWitness> all_312_patterns(
    TypeBComposition const& alpha, SignedPermutation const& p) {
  return detail::patterns(alpha, p, false, false);
}

inline bool is_aligned(TypeBComposition const& alpha,
                       SignedPermutation const& p) {
  return !find_231_pattern(alpha, p).has_value();
}

// H_alpha(231), sorted.
inline std::vector<SignedPermutation> enumerate_aligned(
    TypeBComposition const& alpha, EnumerationOptions const& opt = {}) {
  auto const all = enumerate_quotient(alpha, opt);
  std::vector<char> keep(all.size(), 0);
  std::size_t const chunks = std::max<std::size_t>(1, opt.threads) * 8;
  std::size_t const step = (all.size() + chunks - 1) / chunks;
  parallel_for(chunks, opt.threads, [&](std::size_t c) {
    for (std::size_t x = c * step; x < std::min(all.size(), (c + 1) * step);
         ++x) {
      keep[x] = is_aligned(alpha, all[x]);
    }
  });
  std::vector<SignedPermutation> out;
  for (std::size_t x = 0; x < all.size(); ++x) {
    if (keep[x]) out.push_back(all[x]);
  }
  return out;
}

}  // namespace tamari_b
