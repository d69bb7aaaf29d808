#pragma once

// JSON and DOT renderings of finite posets.

#include <map>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lattice.hpp"

namespace tamari_b {

// {"elements": [label, ...], "covers": [[a, b], ...]}
template <class Label, class Format>
nlohmann::json poset_to_json(FinitePoset<Label> const& P, Format&& fmt) {
  nlohmann::json out;
  out["elements"] = nlohmann::json::array();
  for (auto const& l : P.labels()) out["elements"].push_back(fmt(l));
  out["covers"] = nlohmann::json::array();
  for (auto [a, b] : P.covers()) out["covers"].push_back({a, b});
  return out;
}

// Hasse diagram; nodes of equal rank share a rank=same group.
template <class Label, class Format>
std::string poset_to_dot(FinitePoset<Label> const& P, Format&& fmt,
                         std::string const& name = "hasse") {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t a = 0; a < P.size(); ++a) {
    out << "  n" << a << " [label=\"" << fmt(P.label(a)) << "\"];\n";
  }
  std::map<std::size_t, std::vector<std::size_t>> by_rank;
  auto const r = ranks(P);
  for (std::size_t a = 0; a < P.size(); ++a) by_rank[r[a]].push_back(a);
  for (auto const& [rank, nodes] : by_rank) {
    out << "  { rank=same;";
    for (auto a : nodes) out << " n" << a << ";";
    out << " }\n";
  }
  for (auto [a, b] : P.covers()) {
    out << "  n" << a << " -> n" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tamari_b
