#pragma once

// Cover enumerators of Tam_B(alpha), the sequence t_n and checks of the
// closed forms observed for special compositions.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "alignment.hpp"
#include "composition.hpp"
#include "json.hpp"
#include "options.hpp"
#include "parabolic.hpp"

namespace tamari_b {

using BigInt = boost::multiprecision::cpp_int;

struct Polynomial {
  std::vector<std::uint64_t> coefficients;  // index = exponent

  Polynomial() = default;
  explicit Polynomial(std::vector<std::uint64_t> c) : coefficients(std::move(c)) {
    trim();
  }

  void trim() {
    while (!coefficients.empty() && coefficients.back() == 0) {
      coefficients.pop_back();
    }
  }

  std::size_t degree() const {
    return coefficients.empty() ? 0 : coefficients.size() - 1;
  }

  std::uint64_t coefficient(std::size_t k) const {
    return k < coefficients.size() ? coefficients[k] : 0;
  }

  std::uint64_t at_one() const {
    return std::accumulate(coefficients.begin(), coefficients.end(),
                           std::uint64_t{0});
  }

  bool operator==(Polynomial const&) const = default;

  // "1 + 9x + 9x^2 + x^3"
  std::string to_string() const {
    if (coefficients.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
      auto const c = coefficients[k];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (k == 0 || c != 1) out += std::to_string(c);
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

  // "1,9,9,1"
  std::string to_csv() const {
    std::string out;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(coefficients[k]);
    }
    return out.empty() ? "0" : out;
  }
};

// Coefficient of x^k counts aligned elements with k cover inversions.
inline Polynomial cover_enumerator(TypeBComposition const& alpha,
                                   EnumerationOptions const& opt = {}) {
  check_cap(quotient_size(alpha), opt);
  std::vector<std::uint64_t> c(alpha.degree() + 1, 0);
  for_each_quotient_element(alpha, [&](SignedPermutation const& p) {
    if (is_aligned(alpha, p)) ++c.at(cover_inversions(p).size());
  });
  return Polynomial(std::move(c));
}

inline std::uint64_t count_aligned(TypeBComposition const& alpha,
                                   EnumerationOptions const& opt = {}) {
  check_cap(quotient_size(alpha), opt);
  std::uint64_t count = 0;
  for_each_quotient_element(alpha, [&](SignedPermutation const& p) {
    if (is_aligned(alpha, p)) ++count;
  });
  return count;
}

// [t_1, ..., t_max_n] with t_n the number of aligned elements summed over
// all type-B compositions of n.
inline std::vector<std::uint64_t> t_sequence(int max_n,
                                             EnumerationOptions const& opt = {}) {
  if (max_n < 1 || max_n > kMaxDegree) {
    throw DomainError("max_n must lie in 1.." + std::to_string(kMaxDegree));
  }
  std::vector<std::uint64_t> out;
  for (int n = 1; n <= max_n; ++n) {
    auto const comps = all_compositions(n);
    for (auto const& a : comps) check_cap(quotient_size(a), opt);
    std::vector<std::uint64_t> counts(comps.size());
    parallel_for(comps.size(), opt.threads, [&](std::size_t k) {
      counts[k] = count_aligned(comps[k], opt);
    });
    out.push_back(std::accumulate(counts.begin(), counts.end(),
                                  std::uint64_t{0}));
  }
  return out;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string to_string(BigInt const& x) { return x.str(); }

struct ConjectureReport {
  int t = 0;
  int n = 0;
  TypeBComposition alpha;
  Polynomial observed;
  std::vector<BigInt> predicted;  // coefficients
  BigInt predicted_size;
  bool coefficients_match = false;
  bool size_matches = false;

  bool matches() const { return coefficients_match && size_matches; }

  nlohmann::json to_json() const {
    nlohmann::json pred = nlohmann::json::array();
    for (auto const& c : predicted) pred.push_back(c.str());
    return {{"t", t},
            {"n", n},
            {"alpha", alpha.to_string()},
            {"observed", observed.coefficients},
            {"predicted", pred},
            {"observed_size", observed.at_one()},
            {"predicted_size", predicted_size.str()},
            {"coefficients_match", coefficients_match},
            {"size_matches", size_matches}};
  }

  std::string summary() const {
    std::string pred;
    for (std::size_t k = 0; k < predicted.size(); ++k) {
      pred += (k ? "," : "") + predicted[k].str();
    }
    return "t=" + std::to_string(t) + " n=" + std::to_string(n) + " alpha "
           + alpha.to_string() + ": observed " + observed.to_csv()
           + " predicted " + pred + " size " + std::to_string(observed.at_one())
           + " vs " + predicted_size.str() + (matches() ? "  match" : "  MISMATCH");
  }
};

// (t, 1, ..., 1) of n; t = 0 gives the full group.
inline TypeBComposition hook_composition(int t, int n) {
  if (n < 1 || t < 0 || t > n) {
    throw DomainError("need 0 <= t <= n and n >= 1");
  }
  std::vector<int> parts;
  if (t > 0) parts.push_back(t);
  for (int k = t; k < n; ++k) parts.push_back(1);
  return TypeBComposition(parts, t == 0);
}

// Compares c_alpha(x) for alpha = (t, 1, ..., 1) with
// sum_k C(n-t, k) C(n+t, k) x^k and |H_alpha(231)| with C(2n, n-t).
inline ConjectureReport check_conjecture_t(int t, int n,
                                           EnumerationOptions const& opt = {}) {
  ConjectureReport rep;
  rep.t = t;
  rep.n = n;
  rep.alpha = hook_composition(t, n);
  rep.observed = cover_enumerator(rep.alpha, opt);
  for (int k = 0; k <= n - t; ++k) {
    rep.predicted.push_back(binomial(n - t, k) * binomial(n + t, k));
  }
  while (!rep.predicted.empty() && rep.predicted.back() == 0) {
    rep.predicted.pop_back();
  }
  rep.predicted_size = binomial(2 * n, n - t);
  rep.coefficients_match =
      rep.predicted.size() == rep.observed.coefficients.size();
  for (std::size_t k = 0; rep.coefficients_match && k < rep.predicted.size();
       ++k) {
    rep.coefficients_match = rep.predicted[k] == rep.observed.coefficients[k];
  }
  rep.size_matches = rep.predicted_size == rep.observed.at_one();
  return rep;
}

struct TypeDReport {
  int n = 0;
  TypeBComposition alpha;
  std::uint64_t observed = 0;
  BigInt predicted;

  bool matches() const { return predicted == observed; }

  nlohmann::json to_json() const {
    return {{"n", n},
            {"alpha", alpha.to_string()},
            {"observed", observed},
            {"predicted", predicted.str()},
            {"match", matches()}};
  }

  std::string summary() const {
    return "n=" + std::to_string(n) + " alpha " + alpha.to_string()
           + ": observed " + std::to_string(observed) + " predicted "
           + predicted.str() + (matches() ? "  match" : "  MISMATCH");
  }
};

// (3n-2)/n * C(2n-2, n-1)
inline BigInt type_d_catalan(int n) {
  if (n < 2) throw DomainError("the type-D count needs n >= 2");
  return BigInt(3 * n - 2) * binomial(2 * n - 2, n - 1) / n;
}

// alpha = (0, 1, ..., 1, 2) of n.
inline TypeDReport check_type_d_count(int n,
                                      EnumerationOptions const& opt = {}) {
  if (n < 2) throw DomainError("the type-D composition needs n >= 2");
  std::vector<int> parts(n - 2, 1);
  parts.push_back(2);
  TypeDReport rep;
  rep.n = n;
  rep.alpha = TypeBComposition(parts, true);
  rep.observed = count_aligned(rep.alpha, opt);
  rep.predicted = type_d_catalan(n);
  return rep;
}

}  // namespace tamari_b
