#pragma once

// Finite posets and lattices over opaque labels: construction, meets and
// joins, irreducibles, semidistributivity, congruences, extremality and
// trimness.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "errors.hpp"

namespace tamari_b {

using Bits = boost::dynamic_bitset<>;
using Cover = std::pair<std::size_t, std::size_t>;

class NotAPartialOrder : public Error {
 public:
  NotAPartialOrder(std::string const& what, std::vector<std::size_t> witness)
      : Error(what), witness_(std::move(witness)) {}
  std::vector<std::size_t> const& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

template <class Label>
class FinitePoset {
 public:
  FinitePoset() = default;

  std::size_t size() const { return labels_.size(); }
  Label const& label(std::size_t a) const { return labels_[a]; }
  std::vector<Label> const& labels() const { return labels_; }

  // Sorted (a, b) pairs with a covered by b.
  std::vector<Cover> const& covers() const { return covers_; }
  std::vector<std::size_t> const& lower_covers(std::size_t a) const {
    return lower_[a];
  }
  std::vector<std::size_t> const& upper_covers(std::size_t a) const {
    return upper_[a];
  }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  Bits const& up_set(std::size_t a) const { return up_[a]; }
  Bits const& down_set(std::size_t a) const { return down_[a]; }

  // A linear extension: topo()[r] is the r-th element.
  std::vector<std::size_t> const& topo() const { return topo_; }
  std::size_t topo_position(std::size_t a) const { return topo_pos_[a]; }

  template <class L>
  friend FinitePoset<L> poset_from_covers(std::vector<L>, std::vector<Cover>);
  template <class L>
  friend FinitePoset<L> poset_from_relation(std::vector<L>, std::vector<Bits>);

 private:
  void finish_from_up_sets() {
    std::size_t const n = size();
    down_.assign(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (auto b = up_[a].find_first(); b != Bits::npos;
           b = up_[a].find_next(b)) {
        down_[b].set(a);
      }
    }
    // Covers of a: strict upper set minus everything above a strict upper
    // element.
    lower_.assign(n, {});
    upper_.assign(n, {});
    covers_.clear();
    for (std::size_t a = 0; a < n; ++a) {
      Bits strict = up_[a];
      strict.reset(a);
      Bits reached(n);
      for (auto c = strict.find_first(); c != Bits::npos;
           c = strict.find_next(c)) {
        Bits above = up_[c];
        above.reset(c);
        reached |= above;
      }
      Bits const cov = strict - reached;
      for (auto b = cov.find_first(); b != Bits::npos; b = cov.find_next(b)) {
        covers_.emplace_back(a, b);
        upper_[a].push_back(b);
        lower_[b].push_back(a);
      }
    }
    for (auto& v : lower_) std::sort(v.begin(), v.end());
    // Linear extension by size of down-set, ties by index.
    topo_.resize(n);
    std::iota(topo_.begin(), topo_.end(), std::size_t{0});
    std::vector<std::size_t> depth(n);
    for (std::size_t a = 0; a < n; ++a) depth[a] = down_[a].count();
    std::stable_sort(topo_.begin(), topo_.end(),
                     [&](auto x, auto y) { return depth[x] < depth[y]; });
    topo_pos_.resize(n);
    for (std::size_t r = 0; r < n; ++r) topo_pos_[topo_[r]] = r;
  }

  std::vector<Label> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::size_t> topo_;
  std::vector<std::size_t> topo_pos_;
};

// up[a] has bit b set iff a <= b. Checks the partial-order axioms.
template <class Label>
FinitePoset<Label> poset_from_relation(std::vector<Label> labels,
                                       std::vector<Bits> up) {
  std::size_t const n = labels.size();
  if (up.size() != n) throw DomainError("relation size mismatch");
  for (std::size_t a = 0; a < n; ++a) {
    if (up[a].size() != n) throw DomainError("relation size mismatch");
    if (!up[a].test(a)) {
      throw NotAPartialOrder("not reflexive at " + std::to_string(a), {a});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = up[a].find_next(a); b != Bits::npos; b = up[a].find_next(b)) {
      if (up[b].test(a)) {
        throw NotAPartialOrder("not antisymmetric", {a, b});
      }
    }
    for (auto b = up[a].find_first(); b != Bits::npos; b = up[a].find_next(b)) {
      if (!up[b].is_subset_of(up[a])) {
        Bits const miss = up[b] - up[a];
        throw NotAPartialOrder("not transitive", {a, b, miss.find_first()});
      }
    }
  }
  FinitePoset<Label> p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.finish_from_up_sets();
  return p;
}

// leq(a, b) on indices into labels.
template <class Label, class IndexLeq>
FinitePoset<Label> poset_from_index_leq(std::vector<Label> labels,
                                        IndexLeq&& leq) {
  std::size_t const n = labels.size();
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (leq(a, b)) up[a].set(b);
    }
  }
  return poset_from_relation(std::move(labels), std::move(up));
}

template <class Label, class Leq>
FinitePoset<Label> poset_from_leq(std::vector<Label> labels, Leq&& leq) {
  std::vector<Label> const& l = labels;
  std::size_t const n = l.size();
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (leq(l[a], l[b])) up[a].set(b);
    }
  }
  return poset_from_relation(std::move(labels), std::move(up));
}

// Transitive closure of the given covering pairs. Pairs implied by others are
// rejected.
template <class Label>
FinitePoset<Label> poset_from_covers(std::vector<Label> labels,
                                     std::vector<Cover> covers) {
  std::size_t const n = labels.size();
  std::vector<std::vector<std::size_t>> upper(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n || a == b) {
      throw DomainError("bad cover (" + std::to_string(a) + ","
                        + std::to_string(b) + ")");
    }
    upper[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::size_t> order;
  for (std::size_t a = 0; a < n; ++a) {
    if (indegree[a] == 0) order.push_back(a);
  }
  for (std::size_t r = 0; r < order.size(); ++r) {
    for (auto b : upper[order[r]]) {
      if (--indegree[b] == 0) order.push_back(b);
    }
  }
  if (order.size() != n) {
    throw NotAPartialOrder("cover relation has a cycle", {});
  }
  std::vector<Bits> up(n, Bits(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    up[*it].set(*it);
    for (auto b : upper[*it]) up[*it] |= up[b];
  }
  FinitePoset<Label> p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.finish_from_up_sets();
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  if (covers != p.covers_) {
    throw NotAPartialOrder("cover list contains a transitively implied pair",
                           {});
  }
  return p;
}

struct NotALattice {
  enum class Reason { NoLub, NoGlb };
  std::size_t a = 0;
  std::size_t b = 0;
  Reason reason = Reason::NoLub;

  std::string message() const {
    return std::string(reason == Reason::NoLub ? "no least upper bound"
                                               : "no greatest lower bound")
           + " for elements " + std::to_string(a) + " and "
           + std::to_string(b);
  }
};

inline constexpr std::size_t kEagerTableLimit = 20'000;

template <class Label>
class FiniteLattice {
 public:
  FinitePoset<Label> const& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Label const& label(std::size_t a) const { return poset_.label(a); }
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  bool has_tables() const { return !join_.empty(); }

  std::size_t join(std::size_t a, std::size_t b) const {
    if (has_tables()) return join_[a * size() + b];
    return *bound(a, b, true);
  }

  std::size_t meet(std::size_t a, std::size_t b) const {
    if (has_tables()) return meet_[a * size() + b];
    return *bound(a, b, false);
  }

  template <class L>
  friend std::variant<FiniteLattice<L>, NotALattice> try_lattice(
      FinitePoset<L> poset);

 private:
  // Least upper (or greatest lower) bound, when it exists.
  std::optional<std::size_t> bound(std::size_t a, std::size_t b,
                                   bool upper) const {
    Bits const common = upper ? (up_topo_[a] & up_topo_[b])
                              : (down_rtopo_[a] & down_rtopo_[b]);
    auto const first = common.find_first();
    if (first == Bits::npos) return std::nullopt;
    std::size_t const n = size();
    std::size_t const c = upper ? poset_.topo()[first]
                                : poset_.topo()[n - 1 - first];
    Bits const& cs = upper ? up_topo_[c] : down_rtopo_[c];
    if (cs != common) return std::nullopt;
    return c;
  }

  FinitePoset<Label> poset_;
  std::vector<Bits> up_topo_;     // up-sets indexed by topological position
  std::vector<Bits> down_rtopo_;  // down-sets indexed by reversed position
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

template <class Label>
std::variant<FiniteLattice<Label>, NotALattice> try_lattice(
    FinitePoset<Label> poset) {
  std::size_t const n = poset.size();
  FiniteLattice<Label> L;
  L.poset_ = std::move(poset);
  auto const& P = L.poset_;
  if (n == 0) return NotALattice{0, 0, NotALattice::Reason::NoGlb};
  L.up_topo_.assign(n, Bits(n));
  L.down_rtopo_.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = P.up_set(a).find_first(); b != Bits::npos;
         b = P.up_set(a).find_next(b)) {
      L.up_topo_[a].set(P.topo_position(b));
      L.down_rtopo_[b].set(n - 1 - P.topo_position(a));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!P.leq(P.topo().front(), a)) {
      return NotALattice{P.topo().front(), a, NotALattice::Reason::NoGlb};
    }
    if (!P.leq(a, P.topo().back())) {
      return NotALattice{a, P.topo().back(), NotALattice::Reason::NoLub};
    }
  }
  L.bottom_ = P.topo().front();
  L.top_ = P.topo().back();
  bool const eager = n <= kEagerTableLimit;
  if (eager) {
    L.join_.assign(n * n, 0);
    L.meet_.assign(n * n, 0);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto const j = L.bound(a, b, true);
      if (!j) return NotALattice{a, b, NotALattice::Reason::NoLub};
      auto const m = L.bound(a, b, false);
      if (!m) return NotALattice{a, b, NotALattice::Reason::NoGlb};
      if (eager) {
        L.join_[a * n + b] = L.join_[b * n + a] = static_cast<std::uint32_t>(*j);
        L.meet_[a * n + b] = L.meet_[b * n + a] = static_cast<std::uint32_t>(*m);
      }
    }
  }
  return L;
}

// try_lattice, throwing on failure.
template <class Label>
FiniteLattice<Label> make_lattice(FinitePoset<Label> poset) {
  auto r = try_lattice(std::move(poset));
  if (auto* e = std::get_if<NotALattice>(&r)) {
    throw Error("not a lattice: " + e->message());
  }
  return std::get<FiniteLattice<Label>>(std::move(r));
}

template <class Label>
std::vector<std::size_t> join_irreducibles(FiniteLattice<Label> const& L) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (L.poset().lower_covers(a).size() == 1) out.push_back(a);
  }
  return out;
}

template <class Label>
std::vector<std::size_t> meet_irreducibles(FiniteLattice<Label> const& L) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < L.size(); ++a) {
    if (L.poset().upper_covers(a).size() == 1) out.push_back(a);
  }
  return out;
}

// Rank of every element: longest chain from the bottom.
template <class Label>
std::vector<std::size_t> ranks(FinitePoset<Label> const& P) {
  std::vector<std::size_t> r(P.size(), 0);
  for (auto a : P.topo()) {
    for (auto b : P.upper_covers(a)) r[b] = std::max(r[b], r[a] + 1);
  }
  return r;
}

template <class Label>
std::size_t length(FiniteLattice<Label> const& L) {
  auto const r = ranks(L.poset());
  return *std::max_element(r.begin(), r.end());
}

struct SemidistributivityResult {
  bool ok = true;
  bool join_side = true;  // which law failed
  std::array<std::size_t, 3> witness{};  // p, q, r
  explicit operator bool() const { return ok; }
};

// p v q = p v r implies p v q = p v (q ^ r), and dually.
template <class Label>
SemidistributivityResult is_semidistributive(FiniteLattice<Label> const& L) {
  std::size_t const n = L.size();
  for (bool join_side : {true, false}) {
    auto op = [&](std::size_t x, std::size_t y) {
      return join_side ? L.join(x, y) : L.meet(x, y);
    };
    auto dual = [&](std::size_t x, std::size_t y) {
      return join_side ? L.meet(x, y) : L.join(x, y);
    };
    for (std::size_t p = 0; p < n; ++p) {
      std::map<std::size_t, std::vector<std::size_t>> bucket;
      for (std::size_t q = 0; q < n; ++q) bucket[op(p, q)].push_back(q);
      for (auto const& [value, qs] : bucket) {
        for (std::size_t x = 0; x < qs.size(); ++x) {
          for (std::size_t y = x + 1; y < qs.size(); ++y) {
            if (op(p, dual(qs[x], qs[y])) != value) {
              return {false, join_side, {p, qs[x], qs[y]}};
            }
          }
        }
      }
    }
  }
  return {};
}

struct CongruencePartition {
  std::vector<std::vector<std::size_t>> blocks;  // sorted, by first element
  std::vector<std::size_t> block_of;

  static CongruencePartition from_block_ids(std::vector<std::size_t> const& id) {
    std::map<std::size_t, std::size_t> renum;
    CongruencePartition out;
    out.block_of.resize(id.size());
    for (std::size_t x = 0; x < id.size(); ++x) {
      auto [it, fresh] = renum.emplace(id[x], out.blocks.size());
      if (fresh) out.blocks.emplace_back();
      out.blocks[it->second].push_back(x);
      out.block_of[x] = it->second;
    }
    return out;
  }

  static CongruencePartition discrete(std::size_t n) {
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), std::size_t{0});
    return from_block_ids(id);
  }

  bool operator==(CongruencePartition const& o) const {
    return block_of == o.block_of;
  }
};

namespace detail {
struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};
}  // namespace detail

// The finest congruence identifying a and b.
template <class Label>
CongruencePartition principal_congruence(FiniteLattice<Label> const& L,
                                         std::size_t a, std::size_t b) {
  std::size_t const n = L.size();
  detail::UnionFind uf(n);
  std::vector<std::pair<std::size_t, std::size_t>> work;
  if (uf.unite(a, b)) work.emplace_back(a, b);
  while (!work.empty()) {
    auto const [x, y] = work.back();
    work.pop_back();
    for (std::size_t z = 0; z < n; ++z) {
      std::size_t const jx = L.join(x, z), jy = L.join(y, z);
      if (uf.unite(jx, jy)) work.emplace_back(jx, jy);
      std::size_t const mx = L.meet(x, z), my = L.meet(y, z);
      if (uf.unite(mx, my)) work.emplace_back(mx, my);
    }
  }
  std::vector<std::size_t> id(n);
  for (std::size_t x = 0; x < n; ++x) id[x] = uf.find(x);
  return CongruencePartition::from_block_ids(id);
}

template <class Label>
bool is_congruence_uniform(FiniteLattice<Label> const& L) {
  std::set<std::vector<std::size_t>> seen;
  for (auto j : join_irreducibles(L)) {
    auto const cg = principal_congruence(L, L.poset().lower_covers(j)[0], j);
    if (!seen.insert(cg.block_of).second) return false;
  }
  seen.clear();
  for (auto m : meet_irreducibles(L)) {
    auto const cg = principal_congruence(L, m, L.poset().upper_covers(m)[0]);
    if (!seen.insert(cg.block_of).second) return false;
  }
  return true;
}

struct CongruenceCheck {
  bool ok = true;
  std::string failure;
  explicit operator bool() const { return ok; }
};

// Classes are intervals and both the class-minimum and class-maximum maps are
// order-preserving.
template <class Label>
CongruenceCheck check_congruence(FiniteLattice<Label> const& L,
                                 CongruencePartition const& theta,
                                 std::vector<std::size_t>* minima = nullptr,
                                 std::vector<std::size_t>* maxima = nullptr) {
  auto const& P = L.poset();
  std::size_t const n = L.size();
  if (theta.block_of.size() != n) {
    return {false, "partition does not cover the lattice"};
  }
  std::vector<std::size_t> lo(theta.blocks.size()), hi(theta.blocks.size());
  for (std::size_t k = 0; k < theta.blocks.size(); ++k) {
    auto const& blk = theta.blocks[k];
    Bits members(n);
    for (auto x : blk) members.set(x);
    std::optional<std::size_t> mn, mx;
    for (auto x : blk) {
      if (members.is_subset_of(P.up_set(x))) mn = x;
      if (members.is_subset_of(P.down_set(x))) mx = x;
    }
    if (!mn || !mx) {
      return {false, "class " + std::to_string(k) + " has no minimum or maximum"};
    }
    if ((P.up_set(*mn) & P.down_set(*mx)) != members) {
      return {false, "class " + std::to_string(k) + " is not an interval"};
    }
    lo[k] = *mn;
    hi[k] = *mx;
  }
  for (auto [a, b] : P.covers()) {
    auto const ka = theta.block_of[a], kb = theta.block_of[b];
    if (!P.leq(lo[ka], lo[kb])) {
      return {false, "class minimum map not order-preserving at cover ("
                         + std::to_string(a) + "," + std::to_string(b) + ")"};
    }
    if (!P.leq(hi[ka], hi[kb])) {
      return {false, "class maximum map not order-preserving at cover ("
                         + std::to_string(a) + "," + std::to_string(b) + ")"};
    }
  }
  if (minima) *minima = lo;
  if (maxima) *maxima = hi;
  return {};
}

// Elements are the class minima, in block order.
template <class Label>
FiniteLattice<Label> quotient_lattice(FiniteLattice<Label> const& L,
                                      CongruencePartition const& theta) {
  std::vector<std::size_t> lo;
  auto const check = check_congruence(L, theta, &lo);
  if (!check) throw NotACongruence(check.failure);
  std::vector<Label> labels;
  for (auto x : lo) labels.push_back(L.label(x));
  auto P = poset_from_index_leq(std::move(labels), [&](auto a, auto b) {
    return L.leq(lo[a], lo[b]);
  });
  return make_lattice(std::move(P));
}

template <class Label>
bool is_extremal(FiniteLattice<Label> const& L) {
  std::size_t const len = length(L);
  return join_irreducibles(L).size() == len
         && meet_irreducibles(L).size() == len;
}

// (r v p) ^ q = r v (p ^ q) whenever r <= q.
template <class Label>
bool is_left_modular_element(FiniteLattice<Label> const& L, std::size_t p) {
  auto const& P = L.poset();
  for (std::size_t r = 0; r < L.size(); ++r) {
    std::size_t const rp = L.join(r, p);
    for (auto q = P.up_set(r).find_first(); q != Bits::npos;
         q = P.up_set(r).find_next(q)) {
      if (L.meet(rp, q) != L.join(r, L.meet(p, q))) return false;
    }
  }
  return true;
}

// A maximal chain of left-modular elements of length length(L), bottom first.
template <class Label>
std::optional<std::vector<std::size_t>> left_modular_chain(
    FiniteLattice<Label> const& L) {
  auto const& P = L.poset();
  std::size_t const n = L.size();
  std::vector<char> lm(n);
  for (std::size_t x = 0; x < n; ++x) lm[x] = is_left_modular_element(L, x);
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(n, none), prev(n, none);
  if (!lm[L.bottom()]) return std::nullopt;
  best[L.bottom()] = 0;
  for (auto a : P.topo()) {
    if (best[a] == none) continue;
    for (auto b : P.upper_covers(a)) {
      if (lm[b] && (best[b] == none || best[b] < best[a] + 1)) {
        best[b] = best[a] + 1;
        prev[b] = a;
      }
    }
  }
  if (best[L.top()] != length(L)) return std::nullopt;
  std::vector<std::size_t> chain;
  for (std::size_t x = L.top(); x != none; x = prev[x]) chain.push_back(x);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

enum class TrimMethod { Auto, ChainSearch };

inline constexpr std::size_t kChainSearchLimit = 2'000;

// Extremal with a maximal chain of left-modular elements. Auto uses the
// semidistributive shortcut when it applies and otherwise searches for the
// chain.
template <class Label>
bool is_trim(FiniteLattice<Label> const& L, TrimMethod method = TrimMethod::Auto) {
  if (!is_extremal(L)) return false;
  if (method == TrimMethod::Auto && is_semidistributive(L)) return true;
  if (L.size() > kChainSearchLimit) {
    throw DomainError("left-modular chain search is limited to "
                      + std::to_string(kChainSearchLimit) + " elements");
  }
  return left_modular_chain(L).has_value();
}

}  // namespace tamari_b
