#pragma once

// The parabolic Tamari lattice Tam_B(alpha): construction as a subposet of
// the weak order and as a quotient of it, its join-irreducible elements, and
// a structural verification report.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alignment.hpp"
#include "composition.hpp"
#include "json.hpp"
#include "lattice.hpp"
#include "options.hpp"
#include "parabolic.hpp"
#include "projection.hpp"
#include "signed_perm.hpp"

namespace tamari_b {

using PermLattice = FiniteLattice<SignedPermutation>;

// Weak order on the given sorted subset of a quotient, from covers s * pi.
inline PermLattice weak_order_lattice(std::vector<SignedPermutation> elements) {
  std::vector<Cover> covers;
  for (std::size_t b = 0; b < elements.size(); ++b) {
    auto const& p = elements[b];
    int const len = coxeter_length(p);
    for (int s = 0; s < p.degree(); ++s) {
      auto const q = mul_gen_left(Generator{s}, p);
      if (coxeter_length(q) != len - 1) continue;
      auto const it = std::lower_bound(elements.begin(), elements.end(), q);
      if (it == elements.end() || *it != q) {
        throw DomainError("element set is not closed downwards");
      }
      covers.emplace_back(static_cast<std::size_t>(it - elements.begin()), b);
    }
  }
  return make_lattice(poset_from_covers(std::move(elements), std::move(covers)));
}

inline PermLattice weak_order_lattice(TypeBComposition const& alpha,
                                      EnumerationOptions const& opt = {}) {
  return weak_order_lattice(enumerate_quotient(alpha, opt));
}

inline CongruencePartition as_partition(ThetaPartition const& theta) {
  return CongruencePartition::from_block_ids(theta.class_of);
}

enum class TamariRoute { Subposet, Quotient };

struct TamariLattice {
  TypeBComposition alpha;
  PermLattice lattice;
  TamariRoute provenance = TamariRoute::Subposet;
};

inline TamariLattice build_tamari(TypeBComposition const& alpha,
                                  TamariRoute route,
                                  EnumerationOptions const& opt = {}) {
  if (route == TamariRoute::Subposet) {
    auto elements = enumerate_aligned(alpha, opt);
    std::vector<InversionMask> masks;
    for (auto const& p : elements) masks.push_back(inversion_mask(p));
    auto P = poset_from_index_leq(std::move(elements), [&](auto a, auto b) {
      return (masks[a] & ~masks[b]).none();
    });
    auto r = try_lattice(std::move(P));
    if (auto* e = std::get_if<NotALattice>(&r)) {
      throw std::logic_error("aligned elements of " + alpha.to_string()
                             + " do not form a lattice: " + e->message());
    }
    return {alpha, std::get<PermLattice>(std::move(r)), route};
  }
  auto const theta = theta_classes(alpha, opt);
  auto const weak = weak_order_lattice(theta.elements);
  return {alpha, quotient_lattice(weak, as_partition(theta)), route};
}

// Same labels and the same order between them.
template <class Label>
bool label_isomorphic(FiniteLattice<Label> const& x,
                      FiniteLattice<Label> const& y) {
  if (x.size() != y.size()) return false;
  std::map<Label, std::size_t> where;
  for (std::size_t a = 0; a < y.size(); ++a) where.emplace(y.label(a), a);
  std::vector<std::size_t> to(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    auto const it = where.find(x.label(a));
    if (it == where.end()) return false;
    to[a] = it->second;
  }
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x.leq(a, b) != y.leq(to[a], to[b])) return false;
    }
  }
  return true;
}

// The reflection of the tableau cell with row label r and column label c.
inline Reflection tableau_cell_reflection(int r, int c) {
  return detail::tableau_cell(r, c);
}

// Index pair (i, j) naming t in the join-irreducible construction: ((a b))
// is (a, b), [[a]] is (-a, a), and ((-b a)) is (-a, b), except for a join
// composition with a <= alpha_1, where it is (a, -b).
inline std::pair<int, int> irreducible_pair(TypeBComposition const& alpha,
                                            Reflection const& t) {
  switch (t.kind) {
    case ReflectionKind::Pos:
      return {t.i, t.j};
    case ReflectionKind::Sign:
      return {-t.i, t.i};
    case ReflectionKind::Neg:
      if (alpha.join() && t.i <= alpha.first_part()) return {t.i, -t.j};
      return {-t.i, t.j};
  }
  return {};
}

inline bool is_inversion_of_longest(TypeBComposition const& alpha,
                                    Reflection const& t) {
  return t.max_index() <= alpha.degree()
         && is_inversion(longest_element(alpha), t);
}

// The unique join-irreducible element of Tam_B(alpha) whose cover inversion
// is t.
inline SignedPermutation join_irreducible_for(TypeBComposition const& alpha,
                                              Reflection const& t) {
  if (!is_inversion_of_longest(alpha, t)) {
    throw DomainError(to_string(t) + " is not an inversion of the longest "
                      "element of " + alpha.to_string());
  }
  int const n = alpha.degree();
  int const a1 = alpha.first_part();
  std::vector<int> right;
  auto run = [&](int from, int to) {
    if (from <= to) {
      for (int v = from; v <= to; ++v) right.push_back(v);
    }
  };
  switch (t.kind) {
    case ReflectionKind::Pos: {
      int const a = t.i;
      int const b = t.j;
      int const skip_end = alpha.prefix(alpha.region_of(a));
      right.assign(n, 0);
      int v = 1;
      for (int pos = 1; pos <= b; ++pos) {
        if (pos >= a && pos <= skip_end) continue;
        right[pos - 1] = v++;
      }
      for (int pos = 1; pos <= n; ++pos) {
        if (right[pos - 1] == 0) right[pos - 1] = v++;
      }
      break;
    }
    case ReflectionKind::Sign: {
      int const a = t.i;
      right.assign(n, 0);
      int const first = alpha.join() ? a1 : 0;
      for (int x = first + 1; x <= a; ++x) right[x - 1] = -(a - x + 1);
      for (int x = 1; x <= first; ++x) right[x - 1] = a - first + x;
      for (int x = a + 1; x <= n; ++x) right[x - 1] = x;
      break;
    }
    case ReflectionKind::Neg: {
      int const a = t.i;
      int const b = t.j;
      if (alpha.split()) {
        int const k = b - a;
        run(-b, -(k + 1));
        run(1, k);
        run(b + 1, n);
      } else if (a > a1) {
        int const k = b - a;
        int const l = b - a1;
        run(l + 1, l + a1);
        run(-l, -(k + 1));
        run(1, k);
        run(l + a1 + 1, n);
      } else {
        int const k = a;
        int const l = a + b - a1;
        run(1, k);
        run(l + 1, l + a1 - a);
        run(-l, -(k + 1));
        run(l + a1 - a + 1, n);
      }
      break;
    }
  }
  return SignedPermutation::from_right_part(std::move(right));
}

// (i, j) as printed in the construction, e.g. (2, -5) or (-6, 6).
inline SignedPermutation join_irreducible_for(TypeBComposition const& alpha,
                                              int i, int j) {
  return join_irreducible_for(alpha, Reflection::exchanging(i, j));
}

// The cell of the inversion tableau with row label r and column label c.
inline SignedPermutation join_irreducible_for_cell(
    TypeBComposition const& alpha, int r, int c) {
  return join_irreducible_for(alpha, tableau_cell_reflection(r, c));
}

struct SublatticeWitness {
  SignedPermutation first;
  SignedPermutation second;
  SignedPermutation weak;    // meet (or join) in the weak order
  SignedPermutation tamari;  // meet (or join) in Tam_B(alpha)
  bool is_meet = true;
};

// Two aligned elements whose meet or join in Tam_B(alpha) differs from the one
// in the weak order on H_alpha. Meets are searched first.
inline std::optional<SublatticeWitness> not_sublattice_witness(
    TypeBComposition const& alpha, EnumerationOptions const& opt = {}) {
  auto const weak = weak_order_lattice(alpha, opt);
  auto const tam = build_tamari(alpha, TamariRoute::Subposet, opt).lattice;
  std::vector<std::size_t> in_weak(tam.size());
  auto const& wl = weak.poset().labels();
  for (std::size_t a = 0; a < tam.size(); ++a) {
    in_weak[a] = static_cast<std::size_t>(
        std::lower_bound(wl.begin(), wl.end(), tam.label(a)) - wl.begin());
  }
  for (bool meet : {true, false}) {
    for (std::size_t a = 0; a < tam.size(); ++a) {
      for (std::size_t b = a + 1; b < tam.size(); ++b) {
        auto const w = meet ? weak.meet(in_weak[a], in_weak[b])
                            : weak.join(in_weak[a], in_weak[b]);
        auto const t = meet ? tam.meet(a, b) : tam.join(a, b);
        if (weak.label(w) != tam.label(t)) {
          return SublatticeWitness{tam.label(a), tam.label(b), weak.label(w),
                                   tam.label(t), meet};
        }
      }
    }
  }
  return std::nullopt;
}

struct VerifyOptions {
  EnumerationOptions enumeration;
  // Certify trimness by an explicit left-modular chain as well as by the
  // semidistributive shortcut.
  bool chain_search = true;
};

struct TheoremReport {
  TypeBComposition alpha;
  std::vector<std::pair<std::string, bool>> checks;
  std::size_t size = 0;
  std::size_t length = 0;
  std::size_t join_irreducibles = 0;
  std::size_t meet_irreducibles = 0;
  std::vector<std::string> notes;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](auto const& c) { return c.second; });
  }

  bool check(std::string const& name) const {
    for (auto const& [k, v] : checks) {
      if (k == name) return v;
    }
    throw DomainError("no check named " + name);
  }

  nlohmann::json to_json() const {
    nlohmann::json out;
    out["alpha"] = alpha.to_string();
    out["checks"] = nlohmann::json::object();
    for (auto const& [k, v] : checks) out["checks"][k] = v;
    out["stats"] = {{"size", size},
                    {"length", length},
                    {"join_irreducibles", join_irreducibles},
                    {"meet_irreducibles", meet_irreducibles}};
    if (!notes.empty()) out["notes"] = notes;
    return out;
  }

  std::string summary() const {
    std::string out = "alpha " + alpha.to_string() + ": size "
                      + std::to_string(size) + ", length "
                      + std::to_string(length) + ", |J| "
                      + std::to_string(join_irreducibles) + ", |M| "
                      + std::to_string(meet_irreducibles) + "\n";
    for (auto const& [k, v] : checks) {
      out += "  " + std::string(v ? "ok   " : "FAIL ") + k + "\n";
    }
    for (auto const& note : notes) out += "  note: " + note + "\n";
    return out;
  }
};

namespace detail {

inline bool theta_intervals_ok(ThetaPartition const& theta,
                               PermLattice const& weak) {
  for (auto const& cls : theta.classes) {
    auto const lo = std::lower_bound(theta.elements.begin(),
                                     theta.elements.end(), cls.bottom)
                    - theta.elements.begin();
    auto const hi = std::lower_bound(theta.elements.begin(),
                                     theta.elements.end(), cls.top)
                    - theta.elements.begin();
    Bits members(theta.elements.size());
    for (auto x : cls.members) {
      members.set(x);
      if (project_up(theta.alpha, theta.elements[x]) != cls.top) return false;
    }
    auto const interval = weak.poset().up_set(lo) & weak.poset().down_set(hi);
    if (interval != members) return false;
  }
  return true;
}

inline bool irreducible_constructor_ok(TypeBComposition const& alpha,
                                       PermLattice const& tam) {
  std::vector<SignedPermutation> built;
  for (auto const& t : inversion_order(alpha)) {
    auto const p = join_irreducible_for(alpha, t);
    auto const cov = cover_inversions(p);
    if (cov.size() != 1 || cov.front() != t) return false;
    if (!is_member(alpha, p) || !is_aligned(alpha, p)) return false;
    built.push_back(p);
  }
  std::vector<SignedPermutation> expected;
  for (auto j : join_irreducibles(tam)) expected.push_back(tam.label(j));
  std::sort(built.begin(), built.end());
  std::sort(expected.begin(), expected.end());
  return built == expected
         && std::adjacent_find(built.begin(), built.end()) == built.end();
}

// The suffixes of the sorting word of the longest element give a maximal
// chain of Tam_B(alpha).
inline bool sorting_word_chain_ok(TypeBComposition const& alpha,
                                  PermLattice const& tam) {
  auto const word = sorting_word_longest(alpha);
  auto const& labels = tam.poset().labels();
  auto index = [&](SignedPermutation const& p) -> std::optional<std::size_t> {
    auto const it = std::lower_bound(labels.begin(), labels.end(), p);
    if (it == labels.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
  };
  SignedPermutation p = SignedPermutation::identity(alpha.degree());
  auto prev = index(p);
  if (!prev || *prev != tam.bottom()) return false;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    p = mul_gen_left(*it, p);
    auto const cur = index(p);
    if (!cur) return false;
    auto const& up = tam.poset().upper_covers(*prev);
    if (std::find(up.begin(), up.end(), *cur) == up.end()) return false;
    prev = cur;
  }
  return *prev == tam.top()
         && word.size() == static_cast<std::size_t>(parabolic_length(alpha));
}

}  // namespace detail

inline TheoremReport verify_theorems(TypeBComposition const& alpha,
                                     VerifyOptions const& opt = {}) {
  TheoremReport rep;
  rep.alpha = alpha;
  auto add = [&](std::string name, bool ok) {
    rep.checks.emplace_back(std::move(name), ok);
  };
  auto const theta = theta_classes(alpha, opt.enumeration);
  auto const weak = weak_order_lattice(theta.elements);
  auto const partition = as_partition(theta);

  std::optional<TamariLattice> sub, quo;
  try {
    sub = build_tamari(alpha, TamariRoute::Subposet, opt.enumeration);
    quo = TamariLattice{alpha, quotient_lattice(weak, partition),
                        TamariRoute::Quotient};
  } catch (std::exception const& e) {
    rep.notes.push_back(e.what());
  }
  add("is_lattice", sub.has_value() && quo.has_value());
  add("congruence_valid", static_cast<bool>(check_congruence(weak, partition)));
  add("theta_intervals", detail::theta_intervals_ok(theta, weak));
  if (!sub || !quo) return rep;
  auto const& tam = sub->lattice;
  add("quotient_iso_subposet", label_isomorphic(tam, quo->lattice));
  add("classes_match_aligned", theta.classes.size() == tam.size());

  rep.size = tam.size();
  rep.length = length(tam);
  rep.join_irreducibles = join_irreducibles(tam).size();
  rep.meet_irreducibles = meet_irreducibles(tam).size();

  bool const cu = is_congruence_uniform(tam);
  bool const sd = static_cast<bool>(is_semidistributive(tam));
  add("congruence_uniform", cu);
  add("semidistributive", sd);
  add("extremal", is_extremal(tam));
  bool trim = is_trim(tam, TrimMethod::Auto);
  if (opt.chain_search && tam.size() <= kChainSearchLimit) {
    trim = trim && is_trim(tam, TrimMethod::ChainSearch);
  }
  add("trim", trim);
  add("length_formula",
      rep.length == static_cast<std::size_t>(parabolic_length(alpha)));
  add("irreducible_counts", rep.join_irreducibles == rep.length
                                && rep.meet_irreducibles == rep.length);
  add("irreducible_constructor", detail::irreducible_constructor_ok(alpha, tam));
  add("sorting_word_chain", detail::sorting_word_chain_ok(alpha, tam));
  return rep;
}

}  // namespace tamari_b
