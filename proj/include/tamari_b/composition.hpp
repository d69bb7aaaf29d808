#pragma once

// Type-B compositions: a composition of n, optionally preceded by a zero part
// ("split"); without it the composition is "join".

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "signed_perm.hpp"

namespace tamari_b {

class TypeBComposition {
 public:
  TypeBComposition() = default;

  TypeBComposition(std::vector<int> parts, bool split)
      : parts_(std::move(parts)), split_(split) {
    if (parts_.empty()) {
      throw DomainError("a composition needs at least one part");
    }
    prefix_.assign(1, 0);
    for (int a : parts_) {
      if (a < 1) {
        throw DomainError("composition parts must be positive");
      }
      prefix_.push_back(prefix_.back() + a);
    }
    if (prefix_.back() > kMaxDegree) {
      throw DomainError("composition of " + std::to_string(prefix_.back())
                        + " exceeds the maximal degree");
    }
  }

  // (0,1,...,1): the quotient is the whole group.
  static TypeBComposition full_group(int n) {
    return TypeBComposition(std::vector<int>(n, 1), true);
  }

  std::vector<int> const& parts() const { return parts_; }
  bool split() const { return split_; }
  bool join() const { return !split_; }
  int degree() const { return prefix_.back(); }
  int num_regions() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i - 1]; }  // alpha_i, 1-based
  int first_part() const { return parts_.front(); }
  int prefix(int i) const { return prefix_[i]; }  // p_i

  // rho(a) for 1 <= a <= n: the i with p_{i-1} < a <= p_i.
  int region_of(int a) const {
    if (a < 1 || a > degree()) {
      throw DomainError("position " + std::to_string(a) + " out of range");
    }
    int i = 1;
    while (prefix_[i] < a) ++i;
    return i;
  }

  // Identifier of the block of Part(alpha) containing a in ±[n]. Positive
  // blocks are the regions, negative ids their mirror images; for join the
  // central block [-p_1, p_1] is 1.
  int block_of(int a) const {
    int const r = region_of(std::abs(a));
    if (a > 0 || (join() && r == 1)) return r;
    return -r;
  }

  bool operator==(TypeBComposition const&) const = default;

  // "0,3,1,2,1" (split) or "4,2,2" (join).
  std::string to_string() const {
    std::string out = split_ ? "0" : "";
    for (int a : parts_) {
      if (!out.empty()) out += ",";
      out += std::to_string(a);
    }
    return out;
  }

  static TypeBComposition parse(std::string_view text) {
    std::vector<int> values;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      auto const b = item.find_first_not_of(" \t");
      auto const e = item.find_last_not_of(" \t");
      if (b == std::string::npos) {
        throw ParseError("empty part in composition '" + std::string(text)
                         + "'");
      }
      item = item.substr(b, e - b + 1);
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (std::exception const&) {
        throw ParseError("bad part '" + item + "'");
      }
      if (used != item.size() || v < 0) {
        throw ParseError("bad part '" + item + "'");
      }
      values.push_back(v);
    }
    if (values.empty()) {
      throw ParseError("empty composition");
    }
    bool const split = values.front() == 0;
    if (split) values.erase(values.begin());
    if (values.empty()) {
      throw ParseError("composition '" + std::string(text) + "' has no parts");
    }
    for (int v : values) {
      if (v == 0) {
        throw ParseError("only the first part may be zero");
      }
    }
    try {
      return TypeBComposition(std::move(values), split);
    } catch (DomainError const& e) {
      throw ParseError(e.what());
    }
  }

 private:
  std::vector<int> parts_;
  bool split_ = true;
  std::vector<int> prefix_{0};
};

inline std::string to_string(TypeBComposition const& a) {
  return a.to_string();
}

// All 2^n type-B compositions of n: joins first, then splits; within each,
// ordered by the bitmask of cut points 1..n-1.
inline std::vector<TypeBComposition> all_compositions(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw DomainError("all_compositions needs 1 <= n <= "
                      + std::to_string(kMaxDegree));
  }
  std::vector<TypeBComposition> out;
  for (bool split : {false, true}) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> parts;
      int last = 0;
      for (int c = 1; c < n; ++c) {
        if (mask & (1u << (c - 1))) {
          parts.push_back(c - last);
          last = c;
        }
      }
      parts.push_back(n - last);
      out.emplace_back(std::move(parts), split);
    }
  }
  return out;
}

}  // namespace tamari_b
