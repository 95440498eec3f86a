#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ortholab/order.hpp"
#include "ortholab/table.hpp"

namespace ortholab {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

inline std::string export_dot_impl(const BoundedLattice& l, const UnaryTable* comp) {
  const std::size_t n = l.size();
  const auto covers = l.poset().covers();

  // Rank = length of the longest chain from bottom.
  std::vector<std::size_t> rank(n, 0);
  std::vector<ElementId> by_height(n);
  for (std::size_t i = 0; i < n; ++i) by_height[i] = ElementId(i);
  auto below = [&](ElementId x) {
    std::size_t c = 0;
    for (std::size_t y = 0; y < n; ++y) c += l.leq(ElementId(y), x);
    return c;
  };
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](ElementId a, ElementId b) { return below(a) < below(b); });
  for (ElementId x : by_height)
    for (const auto& [lo, hi] : covers)
      if (hi == x) rank[x] = std::max(rank[x], rank[lo] + 1);

  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t x = 0; x < n; ++x) out += "  " + dot_quote(l.name(ElementId(x))) + ";\n";
  std::map<std::size_t, std::vector<ElementId>> ranks;
  for (std::size_t x = 0; x < n; ++x) ranks[rank[x]].push_back(ElementId(x));
  for (const auto& [r, members] : ranks) {
    out += "  { rank=same;";
    for (ElementId x : members) out += " " + dot_quote(l.name(x)) + ";";
    out += " }  // rank " + std::to_string(r) + "\n";
  }
  for (const auto& [lo, hi] : covers)
    out += "  " + dot_quote(l.name(lo)) + " -> " + dot_quote(l.name(hi)) + ";\n";
  if (comp) {
    std::vector<std::pair<ElementId, ElementId>> pairs;
    for (std::size_t x = 0; x < n; ++x) {
      const auto y = (*comp)[x];
      if (y == x) continue;
      pairs.emplace_back(std::min(ElementId(x), y), std::max(ElementId(x), y));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const auto& [a, b] : pairs)
      out += "  " + dot_quote(l.name(a)) + " -> " + dot_quote(l.name(b)) +
             " [dir=none, style=dashed, constraint=false];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace detail

/// Hasse diagram as Graphviz DOT: one directed edge per cover pair, bottom at
/// rank 0. Complement pairs, when given, are dashed undirected edges.
inline std::string export_dot(const BoundedLattice& l) { return detail::export_dot_impl(l, nullptr); }

inline std::string export_dot(const BoundedLattice& l, const UnaryTable& comp) {
  return detail::export_dot_impl(l, &comp);
}

}  // namespace ortholab
