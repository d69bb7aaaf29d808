#pragma once

// Parabolic quotients H_alpha, their longest elements, the skew shape with its
// reflection and generator fillings, c-sorting words and inversion orders.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "composition.hpp"
#include "errors.hpp"
#include "options.hpp"
#include "signed_perm.hpp"

namespace tamari_b {

inline void check_degree(TypeBComposition const& alpha,
                         SignedPermutation const& p) {
  if (alpha.degree() != p.degree()) {
    throw DomainError("degree mismatch: composition " + alpha.to_string()
                      + " has degree " + std::to_string(alpha.degree())
                      + ", permutation " + to_string(p) + " has degree "
                      + std::to_string(p.degree()));
  }
}

// Increasing in every block of Part(alpha) of the long one-line notation.
inline bool is_member(TypeBComposition const& alpha,
                      SignedPermutation const& p) {
  check_degree(alpha, p);
  if (alpha.join() && p(1) < 0) return false;
  for (int i = 1; i <= alpha.num_regions(); ++i) {
    for (int a = alpha.prefix(i - 1) + 1; a < alpha.prefix(i); ++a) {
      if (p(a) > p(a + 1)) return false;
    }
  }
  return true;
}

inline void require_member(TypeBComposition const& alpha,
                           SignedPermutation const& p) {
  if (!is_member(alpha, p)) {
    throw DomainError(to_string(p) + " is not in the quotient of "
                      + alpha.to_string());
  }
}

// |H_alpha| = n! / prod(alpha_i!) * 2^(n - [join] alpha_1).
inline std::uint64_t quotient_size(TypeBComposition const& alpha) {
  std::uint64_t count = 1;
  int used = 0;
  for (int a : alpha.parts()) {
    for (int k = 1; k <= a; ++k) {
      count = count * static_cast<std::uint64_t>(used + k) / k;
    }
    used += a;
  }
  int const free_signs = alpha.degree() - (alpha.join() ? alpha.first_part() : 0);
  return count << free_signs;
}

namespace detail {

// Every increasing signed sequence of length m using absolute values from
// `available` (bit v for value v), all positive when `positive_only`.
inline std::vector<std::vector<int>> region_fillings(unsigned available, int m,
                                                     bool positive_only) {
  std::vector<int> values;
  for (int v = 1; v <= kMaxDegree; ++v) {
    if (available & (1u << v)) values.push_back(v);
  }
  std::vector<std::vector<int>> out;
  int const total = static_cast<int>(values.size());
  std::vector<int> pick(m);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == m) {
      unsigned const sign_limit = positive_only ? 1u : (1u << m);
      for (unsigned signs = 0; signs < sign_limit; ++signs) {
        std::vector<int> seq(m);
        for (int t = 0; t < m; ++t) {
          seq[t] = (signs & (1u << t)) ? -values[pick[t]] : values[pick[t]];
        }
        std::sort(seq.begin(), seq.end());
        out.push_back(std::move(seq));
      }
      return;
    }
    for (int s = start; s <= total - (m - depth); ++s) {
      pick[depth] = s;
      choose(s + 1, depth + 1);
    }
  };
  choose(0, 0);
  return out;
}

inline unsigned used_mask(std::span<int const> seq) {
  unsigned m = 0;
  for (int v : seq) m |= 1u << std::abs(v);
  return m;
}

template <class Fn>
void fill_regions(TypeBComposition const& alpha, int region, unsigned available,
                  std::vector<int>& right, Fn& fn) {
  if (region > alpha.num_regions()) {
    fn(SignedPermutation::from_right_part(right));
    return;
  }
  int const start = alpha.prefix(region - 1);
  bool const positive = alpha.join() && region == 1;
  for (auto const& seq :
       region_fillings(available, alpha.part(region), positive)) {
    std::copy(seq.begin(), seq.end(), right.begin() + start);
    fill_regions(alpha, region + 1, available & ~used_mask(seq), right, fn);
  }
}

inline unsigned all_values_mask(int n) {
  unsigned m = 0;
  for (int v = 1; v <= n; ++v) m |= 1u << v;
  return m;
}

}  // namespace detail

// Calls fn(pi) for every pi in H_alpha, in no particular order, without
// storing the quotient.
template <class Fn>
void for_each_quotient_element(TypeBComposition const& alpha, Fn&& fn) {
  std::vector<int> right(alpha.degree());
  detail::fill_regions(alpha, 1, detail::all_values_mask(alpha.degree()), right,
                       fn);
}

// H_alpha sorted lexicographically by right part.
inline std::vector<SignedPermutation> enumerate_quotient(
    TypeBComposition const& alpha, EnumerationOptions const& opt = {}) {
  check_cap(quotient_size(alpha), opt);
  int const n = alpha.degree();
  auto const firsts = detail::region_fillings(
      detail::all_values_mask(n), alpha.first_part(), alpha.join());
  std::vector<std::vector<SignedPermutation>> parts(firsts.size());
  parallel_for(firsts.size(), opt.threads, [&](std::size_t k) {
    std::vector<int> right(n);
    std::copy(firsts[k].begin(), firsts[k].end(), right.begin());
    auto collect = [&](SignedPermutation const& p) { parts[k].push_back(p); };
    detail::fill_regions(alpha, 2,
                         detail::all_values_mask(n)
                             & ~detail::used_mask(firsts[k]),
                         right, collect);
  });
  std::vector<SignedPermutation> out;
  out.reserve(quotient_size(alpha));
  for (auto& part : parts) {
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// omega_{o;alpha}(a) = a on a join first region, otherwise
// -(p_i + p_{i-1} + 1 - a) for a in region i.
inline SignedPermutation longest_element(TypeBComposition const& alpha) {
  std::vector<int> right(alpha.degree());
  for (int a = 1; a <= alpha.degree(); ++a) {
    int const i = alpha.region_of(a);
    if (alpha.join() && i == 1) {
      right[a - 1] = a;
    } else {
      right[a - 1] = -(alpha.prefix(i) + alpha.prefix(i - 1) + 1 - a);
    }
  }
  return SignedPermutation::from_right_part(std::move(right));
}

inline int parabolic_length(TypeBComposition const& alpha) {
  int const n = alpha.degree();
  int len = n * n;
  for (int a : alpha.parts()) len -= a * (a - 1) / 2;
  if (alpha.join()) {
    int const a1 = alpha.first_part();
    len -= a1 * (a1 + 1) / 2;
  }
  return len;
}

struct Word {
  std::vector<Generator> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(Word const&) const = default;
};

// "s6 s5 s4"
inline std::string to_string(Word const& w) {
  std::string out;
  for (auto const& s : w.letters) {
    if (!out.empty()) out += " ";
    out += "s" + std::to_string(s.index);
  }
  return out;
}

// The product a_1 a_2 ... a_k.
inline SignedPermutation evaluate(Word const& w, int n) {
  SignedPermutation p = SignedPermutation::identity(n);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    p = mul_gen_left(*it, p);
  }
  return p;
}

inline bool is_reduced(Word const& w, int n) {
  SignedPermutation p = SignedPermutation::identity(n);
  int len = 0;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    p = mul_gen_left(*it, p);
    if (coxeter_length(p) != ++len) return false;
  }
  return true;
}

// Rightmost reduced word for pi inside ... | s_{n-1} ... s_1 s_0 | ...
inline Word c_sorting_word(SignedPermutation p) {
  int const n = p.degree();
  std::vector<Generator> peeled;
  int j = 0;
  for (;;) {
    int found = -1;
    for (int step = 0; step < n; ++step) {
      int const k = (j + step) % n;
      if (has_right_descent(p, Generator{k})) {
        found = k;
        break;
      }
    }
    if (found < 0) break;
    p = mul_gen_right(p, Generator{found});
    peeled.push_back(Generator{found});
    j = (found + 1) % n;
  }
  return Word{{peeled.rbegin(), peeled.rend()}};
}

struct TableauRow {
  int label = 0;
  int first_column = 0;  // mu_k + 1
  int last_column = 0;   // lambda_k
  std::vector<Reflection> cells;       // left to right
  std::vector<Generator> generators;   // left to right
};

// The skew shape skew(alpha) with row and column labels, the reflection
// filling and the generator filling. Columns are numbered from 1.
struct InversionTableau {
  TypeBComposition alpha;
  std::vector<int> mu;
  std::vector<int> lambda;
  std::vector<int> column_labels;  // column c has label column_labels[c-1]
  std::vector<TableauRow> rows;    // top to bottom

  std::size_t cell_count() const {
    std::size_t c = 0;
    for (auto const& r : rows) c += r.cells.size();
    return c;
  }

  TableauRow const& row(int k) const { return rows.at(k - 1); }

  // Plain-text grid, one reflection per cell.
  std::string dump() const {
    std::size_t width = 1;
    for (auto const& r : rows) {
      for (auto const& t : r.cells) width = std::max(width, to_string(t).size());
    }
    for (int c : column_labels) {
      width = std::max(width, std::to_string(c).size());
    }
    std::ostringstream out;
    out << std::setw(4) << "" << " ";
    for (int c : column_labels) out << std::setw(width) << c << " ";
    out << "\n";
    for (auto const& r : rows) {
      out << std::setw(4) << r.label << " ";
      for (int c = 1; c <= static_cast<int>(column_labels.size()); ++c) {
        std::string cell;
        if (c >= r.first_column && c <= r.last_column) {
          cell = to_string(r.cells[c - r.first_column]);
        }
        out << std::setw(width) << cell << " ";
      }
      out << "\n";
    }
    return out.str();
  }
};

namespace detail {

inline Reflection tableau_cell(int r, int c) {
  if (r > 0 && c > 0) return Reflection::pos(r, c);
  if (r < 0 && c == -r) return Reflection::sign(-r);
  if (r < 0 && c > 0) return Reflection::neg(-r, c);
  if (r < 0 && c < 0 && -c < -r) return Reflection::pos(-c, -r);
  throw std::logic_error("tableau cell with labels (" + std::to_string(r) + ","
                         + std::to_string(c) + ") has no filling");
}

}  // namespace detail

inline InversionTableau inversion_tableau(TypeBComposition const& alpha) {
  int const n = alpha.degree();
  int const a1 = alpha.first_part();
  bool const join = alpha.join();
  InversionTableau tab;
  tab.alpha = alpha;
  SignedPermutation const w = longest_element(alpha);
  int const width = 2 * n - (join ? a1 : 0);
  for (int c = 1; c <= width; ++c) {
    tab.column_labels.push_back(c <= n ? w(n + 1 - c) : 2 * n + 1 - c);
  }
  for (int k = 1; k <= n; ++k) {
    int const mu = n - alpha.prefix(alpha.region_of(k) - 1);
    int const lambda = (join && k <= a1) ? 2 * n - a1 : 2 * n + 1 - k;
    tab.mu.push_back(mu);
    tab.lambda.push_back(lambda);
    TableauRow row;
    row.label = (join && k <= a1) ? a1 + 1 - k : -k;
    row.first_column = mu + 1;
    row.last_column = lambda;
    int const start = (join && k <= a1) ? a1 + 1 - k : 0;
    int const cells = lambda - mu;
    for (int c = row.first_column; c <= row.last_column; ++c) {
      row.cells.push_back(
          detail::tableau_cell(row.label, tab.column_labels[c - 1]));
    }
    for (int t = cells - 1; t >= 0; --t) {
      row.generators.push_back(Generator{start + t});
    }
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

inline InversionTableau skew_shape(TypeBComposition const& alpha) {
  return inversion_tableau(alpha);
}

// Reading word of the generator filling: rows bottom to top, each left to
// right.
inline Word sorting_word_longest(TypeBComposition const& alpha) {
  auto const tab = inversion_tableau(alpha);
  Word w;
  for (auto it = tab.rows.rbegin(); it != tab.rows.rend(); ++it) {
    w.letters.insert(w.letters.end(), it->generators.begin(),
                     it->generators.end());
  }
  return w;
}

// t_i = a_k a_{k-1} ... a_{k-i+1} ... a_{k-1} a_k.
inline std::vector<Reflection> inversion_order_from_word(Word const& w, int n) {
  std::vector<Reflection> out;
  SignedPermutation prefix = SignedPermutation::identity(n);  // a_k ... a_{k-i+2}
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    SignedPermutation const conj =
        compose(compose(prefix, as_permutation(as_reflection(*it), n)),
                inverse(prefix));
    out.push_back(reflection_of(conj));
    prefix = mul_gen_right(prefix, *it);
  }
  return out;
}

// Reflection filling read top to bottom, right to left.
inline std::vector<Reflection> inversion_order(TypeBComposition const& alpha) {
  auto const tab = inversion_tableau(alpha);
  std::vector<Reflection> out;
  for (auto const& row : tab.rows) {
    out.insert(out.end(), row.cells.rbegin(), row.cells.rend());
  }
  if (crosschecks_enabled()
      && out != inversion_order_from_word(sorting_word_longest(alpha),
                                          alpha.degree())) {
    throw std::logic_error("tableau and word inversion orders disagree for "
                           + alpha.to_string());
  }
  return out;
}

}  // namespace tamari_b
