#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ortholab/error.hpp"
#include "ortholab/order.hpp"
#include "ortholab/ortho.hpp"

// Small named structures used throughout tests and the CLI.
namespace ortholab::catalog {

using CoverList = std::vector<std::pair<std::string, std::string>>;

inline OrthoCandidate make_ortho(std::vector<std::string> names, const CoverList& covers,
                                 const std::vector<std::pair<std::string, std::string>>& comp_pairs) {
  BoundedLattice l(poset_from_covers(names, covers));
  UnaryTable comp(l.size(), 0);
  for (const auto& [a, b] : comp_pairs) {
    auto x = l.poset().index_of(a), y = l.poset().index_of(b);
    if (!x || !y) throw Error(ErrorKind::UnknownElement, a + "/" + b);
    comp[*x] = *y;
    comp[*y] = *x;
  }
  return OrthoCandidate(std::move(l), std::move(comp));
}

/// n-element chain 0 < c1 < ... < 1.
inline BoundedLattice chain(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "chain needs at least one element");
  std::vector<std::string> names;
  names.push_back("0");
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back("c" + std::to_string(i));
  if (n >= 2) names.push_back("1");
  CoverList covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(names[i], names[i + 1]);
  return BoundedLattice(poset_from_covers(std::move(names), covers));
}

/// Two-element chain with 0' = 1.
inline OrthoCandidate boolean2() { return make_ortho({"0", "1"}, {{"0", "1"}}, {{"0", "1"}}); }

/// Boolean algebra of subsets of a k-element set with set complement.
/// Elements are named by their letters; the empty set is 0 and the full set 1.
inline OrthoCandidate boolean_algebra(std::size_t k) {
  if (k > 6) throw Error(ErrorKind::SizeLimitExceeded, "boolean algebra too large");
  const std::size_t n = std::size_t(1) << k;
  const std::size_t full = n - 1;
  auto name = [&](std::size_t s) {
    if (s == 0) return std::string("0");
    if (s == full) return std::string("1");
    std::string out;
    for (std::size_t i = 0; i < k; ++i)
      if (s >> i & 1u) out += char('a' + i);
    return out;
  };
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) names.push_back(name(s));
  Relation leq(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) leq(s, t) = (s & t) == s ? 1 : 0;
  BoundedLattice l(Poset(std::move(names), std::move(leq)));
  UnaryTable comp(n);
  for (std::size_t s = 0; s < n; ++s) comp[s] = ElementId(full ^ s);
  return OrthoCandidate(std::move(l), std::move(comp));
}

/// MO_k: 2k pairwise incomparable atoms a, a', b, b', ... between 0 and 1.
inline OrthoCandidate mo(std::size_t k) {
  std::vector<std::string> names{"0"};
  CoverList covers;
  std::vector<std::pair<std::string, std::string>> comp{{"0", "1"}};
  for (std::size_t i = 0; i < k; ++i) {
    const std::string a(1, char('a' + i));
    names.push_back(a);
    names.push_back(a + "'");
    comp.emplace_back(a, a + "'");
  }
  names.push_back("1");
  for (std::size_t i = 1; i + 1 < names.size(); ++i) {
    covers.emplace_back("0", names[i]);
    covers.emplace_back(names[i], "1");
  }
  return make_ortho(std::move(names), covers, comp);
}

/// The six-element orthomodular lattice with four middle atoms.
inline OrthoCandidate mo2() { return mo(2); }

/// Hexagon: chains 0 < x < y < 1 and 0 < y' < x' < 1, complement x<->x', y<->y'.
/// An ortholattice that is not orthomodular.
inline OrthoCandidate hexagon() {
  return make_ortho({"0", "x", "y", "x'", "y'", "1"},
                    {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "y'"}, {"y'", "x'"}, {"x'", "1"}},
                    {{"0", "1"}, {"x", "x'"}, {"y", "y'"}});
}

}  // namespace ortholab::catalog
