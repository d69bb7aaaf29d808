#pragma once

// Signed permutations of ±[n], reflections, inversion sets and the right weak
// order.

#include <algorithm>
#include <bitset>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace tamari_b {

inline constexpr int kMaxDegree = 12;

// The Coxeter generator s_index, 0 <= index < n.
struct Generator {
  int index = 0;
  auto operator<=>(Generator const&) const = default;
};

enum class ReflectionKind : std::uint8_t { Sign, Pos, Neg };

// A reflection in canonical form:
//   Sign  [[i]]      exchanges i and -i
//   Pos   ((i j))    exchanges i and j (and -i, -j), 0 < i < j
//   Neg   ((-j i))   exchanges -j and i (and j, -i), 0 < i < j
// For Sign, j is 0.
struct Reflection {
  ReflectionKind kind = ReflectionKind::Sign;
  int i = 1;
  int j = 0;

  auto operator<=>(Reflection const&) const = default;

  static Reflection sign(int a) {
    if (a <= 0) {
      throw DomainError("[[i]] needs i > 0");
    }
    return {ReflectionKind::Sign, a, 0};
  }

  static Reflection pos(int a, int b) {
    if (a <= 0 || b <= 0 || a == b) {
      throw DomainError("((i j)) needs distinct positive i, j");
    }
    return {ReflectionKind::Pos, std::min(a, b), std::max(a, b)};
  }

  // ((-b a)): exchanges -b and a. Any order of the two magnitudes is accepted.
  static Reflection neg(int a, int b) {
    if (a <= 0 || b <= 0 || a == b) {
      throw DomainError("((-j i)) needs distinct positive i, j");
    }
    return {ReflectionKind::Neg, std::min(a, b), std::max(a, b)};
  }

  // The reflection exchanging a and b, where a, b are nonzero and a != b.
  static Reflection exchanging(int a, int b) {
    if (a == 0 || b == 0 || a == b) {
      throw DomainError("exchanging needs distinct nonzero points");
    }
    if (a == -b) {
      return sign(std::abs(a));
    }
    if ((a > 0) == (b > 0)) {
      return pos(std::abs(a), std::abs(b));
    }
    return neg(std::abs(a), std::abs(b));
  }

  // Image of x in ±[n] under the reflection.
  int operator()(int x) const {
    int const s = x > 0 ? 1 : -1;
    int const m = std::abs(x);
    switch (kind) {
      case ReflectionKind::Sign:
        return m == i ? -x : x;
      case ReflectionKind::Pos:
        if (m == i) return s * j;
        if (m == j) return s * i;
        return x;
      case ReflectionKind::Neg:
        if (m == i) return -s * j;
        if (m == j) return -s * i;
        return x;
    }
    return x;
  }

  int max_index() const { return kind == ReflectionKind::Sign ? i : j; }
};

inline std::string to_string(Reflection const& t) {
  switch (t.kind) {
    case ReflectionKind::Sign:
      return "[[" + std::to_string(t.i) + "]]";
    case ReflectionKind::Pos:
      return "((" + std::to_string(t.i) + " " + std::to_string(t.j) + "))";
    case ReflectionKind::Neg:
      return "((-" + std::to_string(t.j) + " " + std::to_string(t.i) + "))";
  }
  return {};
}

// Dense code in [0, kMaxDegree^2), independent of the degree.
inline int reflection_code(Reflection const& t) {
  constexpr int n = kMaxDegree;
  int const pair = (t.j - 1) * (t.j - 2) / 2 + (t.i - 1);
  switch (t.kind) {
    case ReflectionKind::Sign:
      return t.i - 1;
    case ReflectionKind::Pos:
      return n + pair;
    case ReflectionKind::Neg:
      return n + n * (n - 1) / 2 + pair;
  }
  return 0;
}

using InversionMask = std::bitset<kMaxDegree * kMaxDegree>;

class SignedPermutation {
 public:
  SignedPermutation() = default;

  static SignedPermutation identity(int n) {
    check_degree(n);
    SignedPermutation p;
    p.right_.resize(n);
    for (int a = 1; a <= n; ++a) {
      p.right_[a - 1] = a;
    }
    return p;
  }

  // Throws NotAPermutation unless |values| is a permutation of [n].
  static SignedPermutation from_right_part(std::vector<int> values) {
    int const n = static_cast<int>(values.size());
    if (n < 1 || n > kMaxDegree) {
      throw NotAPermutation("degree must be in [1, "
                            + std::to_string(kMaxDegree) + "], got "
                            + std::to_string(n));
    }
    std::vector<bool> seen(n + 1, false);
    for (int v : values) {
      int const m = std::abs(v);
      if (m < 1 || m > n) {
        throw NotAPermutation("value " + std::to_string(v)
                              + " out of range for degree "
                              + std::to_string(n));
      }
      if (seen[m]) {
        throw NotAPermutation("repeated absolute value "
                              + std::to_string(m));
      }
      seen[m] = true;
    }
    SignedPermutation p;
    p.right_ = std::move(values);
    return p;
  }

  int degree() const { return static_cast<int>(right_.size()); }

  // pi(a) for a in ±[n].
  int operator()(int a) const {
    return a > 0 ? right_[a - 1] : -right_[-a - 1];
  }

  int at(int a) const {
    if (a == 0 || std::abs(a) > degree()) {
      throw DomainError("position " + std::to_string(a) + " out of range");
    }
    return (*this)(a);
  }

  // The position a with pi(a) == v.
  int position_of(int v) const {
    for (int a = 1; a <= degree(); ++a) {
      if (right_[a - 1] == v) return a;
      if (right_[a - 1] == -v) return -a;
    }
    throw DomainError("value " + std::to_string(v) + " out of range");
  }

  std::span<int const> right_part() const { return right_; }

  // pi(-n), ..., pi(-1), pi(1), ..., pi(n).
  std::vector<int> long_one_line() const {
    std::vector<int> out;
    out.reserve(2 * right_.size());
    for (int a = degree(); a >= 1; --a) out.push_back(-right_[a - 1]);
    for (int v : right_) out.push_back(v);
    return out;
  }

  bool operator==(SignedPermutation const&) const = default;
  auto operator<=>(SignedPermutation const& other) const {
    return right_ <=> other.right_;
  }

  void set_unchecked(int a, int v) {
    if (a > 0) {
      right_[a - 1] = v;
    } else {
      right_[-a - 1] = -v;
    }
  }

 private:
  static void check_degree(int n) {
    if (n < 1 || n > kMaxDegree) {
      throw DomainError("degree must be in [1, " + std::to_string(kMaxDegree)
                        + "]");
    }
  }

  std::vector<int> right_;
};

namespace detail {
inline void check_generator(SignedPermutation const& p, Generator s) {
  if (s.index < 0 || s.index >= p.degree()) {
    throw DomainError("generator s_" + std::to_string(s.index)
                      + " out of range for degree "
                      + std::to_string(p.degree()));
  }
}

inline void check_reflection(SignedPermutation const& p, Reflection const& t) {
  if (t.i < 1 || t.max_index() > p.degree()) {
    throw DomainError("reflection " + to_string(t) + " out of range");
  }
}

inline Reflection generator_reflection(Generator s) {
  return s.index == 0 ? Reflection::sign(1)
                      : Reflection::pos(s.index, s.index + 1);
}
}  // namespace detail

inline Reflection as_reflection(Generator s) {
  return detail::generator_reflection(s);
}

// t * pi: exchanges values.
inline SignedPermutation mul_reflection_left(Reflection const& t,
                                             SignedPermutation const& p) {
  detail::check_reflection(p, t);
  SignedPermutation q = p;
  for (int a = 1; a <= p.degree(); ++a) {
    q.set_unchecked(a, t(p(a)));
  }
  return q;
}

// pi * t: permutes positions.
inline SignedPermutation mul_reflection_right(SignedPermutation const& p,
                                              Reflection const& t) {
  detail::check_reflection(p, t);
  SignedPermutation q = p;
  for (int a = 1; a <= p.degree(); ++a) {
    q.set_unchecked(a, p(t(a)));
  }
  return q;
}

inline SignedPermutation mul_gen_left(Generator s, SignedPermutation const& p) {
  detail::check_generator(p, s);
  return mul_reflection_left(detail::generator_reflection(s), p);
}

inline SignedPermutation mul_gen_right(SignedPermutation const& p, Generator s) {
  detail::check_generator(p, s);
  return mul_reflection_right(p, detail::generator_reflection(s));
}

// (a b)(x) = a(b(x)).
inline SignedPermutation compose(SignedPermutation const& a,
                                 SignedPermutation const& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("degree mismatch in compose");
  }
  SignedPermutation q = a;
  for (int x = 1; x <= a.degree(); ++x) {
    q.set_unchecked(x, a(b(x)));
  }
  return q;
}

inline SignedPermutation inverse(SignedPermutation const& p) {
  SignedPermutation q = p;
  for (int x = 1; x <= p.degree(); ++x) {
    q.set_unchecked(p(x), x);
  }
  return q;
}

// The signed permutation acting as t on ±[n].
inline SignedPermutation as_permutation(Reflection const& t, int n) {
  return mul_reflection_right(SignedPermutation::identity(n), t);
}

// Canonical form of an involution that is a reflection. Throws otherwise.
inline Reflection reflection_of(SignedPermutation const& p) {
  for (int a = 1; a <= p.degree(); ++a) {
    if (p(a) == -a) {
      Reflection const t = Reflection::sign(a);
      if (as_permutation(t, p.degree()) != p) break;
      return t;
    }
  }
  for (int a = 1; a <= p.degree(); ++a) {
    if (p(a) != a) {
      if (p(a) == -a) break;
      Reflection const t = Reflection::exchanging(a, p(a));
      if (as_permutation(t, p.degree()) != p) break;
      return t;
    }
  }
  throw DomainError("not a reflection");
}

inline bool is_inversion(SignedPermutation const& p, Reflection const& t) {
  switch (t.kind) {
    case ReflectionKind::Sign:
      return p(t.i) < 0;
    case ReflectionKind::Pos:
      return p(t.i) > p(t.j);
    case ReflectionKind::Neg:
      return p(-t.j) > p(t.i);
  }
  return false;
}

// i+ : the successor of i in -n < ... < -1 < 1 < ... < n.
inline int succ(int v) { return v == -1 ? 1 : v + 1; }

inline bool is_cover_inversion(SignedPermutation const& p,
                               Reflection const& t) {
  switch (t.kind) {
    case ReflectionKind::Sign:
      return p(t.i) == -1;
    case ReflectionKind::Pos:
      return p(t.i) == p(t.j) + 1;
    case ReflectionKind::Neg:
      return p(-t.j) == p(t.i) + 1;
  }
  return false;
}

// Every reflection of B_n in canonical order.
inline std::vector<Reflection> all_reflections(int n) {
  std::vector<Reflection> out;
  for (int a = 1; a <= n; ++a) out.push_back(Reflection::sign(a));
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) out.push_back(Reflection::pos(a, b));
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) out.push_back(Reflection::neg(a, b));
  }
  return out;
}

inline std::vector<Reflection> inversion_set(SignedPermutation const& p) {
  std::vector<Reflection> out;
  for (auto const& t : all_reflections(p.degree())) {
    if (is_inversion(p, t)) out.push_back(t);
  }
  return out;
}

inline InversionMask inversion_mask(SignedPermutation const& p) {
  InversionMask m;
  int const n = p.degree();
  for (int a = 1; a <= n; ++a) {
    if (p(a) < 0) m.set(reflection_code(Reflection::sign(a)));
    for (int b = a + 1; b <= n; ++b) {
      if (p(a) > p(b)) m.set(reflection_code(Reflection::pos(a, b)));
      if (-p(b) > p(a)) m.set(reflection_code(Reflection::neg(a, b)));
    }
  }
  return m;
}

inline std::vector<Reflection> cover_inversions(SignedPermutation const& p) {
  std::vector<Reflection> out;
  for (auto const& t : all_reflections(p.degree())) {
    if (is_cover_inversion(p, t)) out.push_back(t);
  }
  return out;
}

inline int coxeter_length(SignedPermutation const& p) {
  int len = 0;
  int const n = p.degree();
  for (int a = 1; a <= n; ++a) {
    if (p(a) < 0) ++len;
    for (int b = a + 1; b <= n; ++b) {
      if (p(a) > p(b)) ++len;
      if (-p(b) > p(a)) ++len;
    }
  }
  return len;
}

// Right weak order: containment of inversion sets.
inline bool weak_leq(SignedPermutation const& u, SignedPermutation const& v) {
  if (u.degree() != v.degree()) {
    throw DomainError("degree mismatch in weak_leq");
  }
  return (inversion_mask(u) & ~inversion_mask(v)).none();
}

inline bool has_right_descent(SignedPermutation const& p, Generator s) {
  detail::check_generator(p, s);
  if (s.index == 0) return p(1) < 0;
  int const a = p(s.index);
  int const b = p(s.index + 1);
  return a > b;
}

// Accepts "[-3,1,-2]", "-3 1 -2", "-3,1,-2" and surrounding whitespace.
inline SignedPermutation parse_signed_permutation(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || c == ',') {
      cleaned.push_back(' ');
    } else if (c == '-' || c == '+' || c == ' ' || c == '\t'
               || (c >= '0' && c <= '9')) {
      cleaned.push_back(c);
    } else {
      throw ParseError("unexpected character '" + std::string(1, c)
                       + "' in signed permutation");
    }
  }
  std::istringstream in(cleaned);
  std::vector<int> values;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (std::exception const&) {
      throw ParseError("bad integer '" + tok + "'");
    }
    if (used != tok.size()) {
      throw ParseError("bad integer '" + tok + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw ParseError("empty signed permutation");
  }
  return SignedPermutation::from_right_part(std::move(values));
}

// "[-3,1,-2]"
inline std::string to_string(SignedPermutation const& p) {
  std::string out = "[";
  for (int a = 1; a <= p.degree(); ++a) {
    if (a > 1) out += ",";
    out += std::to_string(p(a));
  }
  return out + "]";
}

// "2 -1 3 | -3 1 -2"
inline std::string to_long_string(SignedPermutation const& p) {
  std::string out;
  auto const line = p.long_one_line();
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (k == line.size() / 2) out += "| ";
    out += std::to_string(line[k]);
    if (k + 1 < line.size()) out += " ";
  }
  return out;
}

}  // namespace tamari_b
