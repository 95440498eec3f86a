#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ortholab/error.hpp"
#include "ortholab/order.hpp"
#include "ortholab/table.hpp"

namespace ortholab {

/// Default permutation budget: exhaustive canonicalization up to n = 10.
inline constexpr std::uint64_t kDefaultPermutationBudget = 40320;

struct CanonicalCertificate {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalCertificate&) const = default;
  bool operator==(const CanonicalCertificate&) const = default;
};

struct CanonicalLabeling {
  /// order[k] is the original element placed at canonical index k. Bottom
  /// sits at index 0 and top at index n-1.
  std::vector<ElementId> order;
  CanonicalCertificate certificate;
};

inline std::uint64_t factorial_saturating(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) return std::numeric_limits<std::uint64_t>::max();
    f *= i;
  }
  return f;
}

namespace detail {

// Lexicographically minimal serialization over all orderings of the middle
// elements. Placing element e after the already placed p_0..p_{k-1} emits a
// block of one byte per earlier element plus one byte for e itself; because
// every block is fully determined by the prefix, a branch whose prefix is
// already larger than the best known one is cut.
class CanonicalSearch {
 public:
  CanonicalSearch(const BoundedLattice& l, const UnaryTable* comp) : l_(l), comp_(comp) {
    for (std::size_t x = 0; x < l.size(); ++x)
      if (ElementId(x) != l.bottom() && ElementId(x) != l.top()) middle_.push_back(ElementId(x));
    used_.assign(l.size(), 0);
  }

  std::vector<ElementId> run() {
    if (middle_.empty()) return {};
    descend(0, false);
    return best_order_;
  }

 private:
  std::uint8_t pair_code(ElementId earlier, ElementId e) const {
    std::uint8_t c = 0;
    if (l_.leq(e, earlier)) c |= 1;
    if (l_.leq(earlier, e)) c |= 2;
    if (comp_) {
      if ((*comp_)[e] == earlier) c |= 4;
      if ((*comp_)[earlier] == e) c |= 8;
    }
    return c;
  }

  std::uint8_t self_code(ElementId e) const {
    if (!comp_) return 0;
    std::uint8_t c = 0;
    if ((*comp_)[e] == e) c |= 1;
    if ((*comp_)[e] == l_.bottom()) c |= 2;
    if ((*comp_)[e] == l_.top()) c |= 4;
    if ((*comp_)[l_.bottom()] == e) c |= 8;
    if ((*comp_)[l_.top()] == e) c |= 16;
    return c;
  }

  // `strictly_less`: current prefix is already smaller than the best prefix.
  // Returns true if the best order was replaced somewhere below this node.
  bool descend(std::size_t depth, bool strictly_less) {
    if (depth == middle_.size()) {
      if (best_order_.empty() || strictly_less) {
        best_code_ = code_;
        best_order_ = placed_;
        return true;
      }
      return false;
    }
    bool improved_any = false;
    const std::size_t block_start = code_.size();
    for (ElementId e : middle_) {
      if (used_[e]) continue;
      for (ElementId p : placed_) code_.push_back(pair_code(p, e));
      code_.push_back(self_code(e));

      bool less = strictly_less || best_order_.empty();
      bool prune = false;
      if (!less) {
        for (std::size_t i = block_start; i < code_.size(); ++i) {
          if (code_[i] < best_code_[i]) { less = true; break; }
          if (code_[i] > best_code_[i]) { prune = true; break; }
        }
      }
      if (!prune) {
        used_[e] = 1;
        placed_.push_back(e);
        if (descend(depth + 1, less)) {
          improved_any = true;
          // The best now shares this node's prefix.
          strictly_less = false;
        }
        placed_.pop_back();
        used_[e] = 0;
      }
      code_.resize(block_start);
    }
    return improved_any;
  }

  const BoundedLattice& l_;
  const UnaryTable* comp_;
  std::vector<ElementId> middle_;
  std::vector<std::uint8_t> used_;
  std::vector<ElementId> placed_;
  std::vector<std::uint8_t> code_;
  std::vector<std::uint8_t> best_code_;
  std::vector<ElementId> best_order_;
};

}  // namespace detail

/// Canonical relabeling of a lattice, optionally with a unary operation.
/// Minimizes over all (n-2)! permutations fixing bottom and top; throws
/// SizeLimitExceeded when that count exceeds `budget`.
inline CanonicalLabeling canonical_labeling(const BoundedLattice& l,
                                            const UnaryTable* comp = nullptr,
                                            std::uint64_t budget = kDefaultPermutationBudget) {
  const std::size_t n = l.size();
  if (comp && comp->size() != n)
    throw Error(ErrorKind::TableNotTotal, "unary table size does not match carrier");
  if (comp)
    for (ElementId v : *comp)
      if (v >= n) throw Error(ErrorKind::TableNotTotal, "unary table entry out of range");
  if (n > 255) throw Error(ErrorKind::SizeLimitExceeded, "carrier too large to canonicalize");
  const std::size_t middle = n >= 2 ? n - 2 : 0;
  if (factorial_saturating(middle) > budget)
    throw Error(ErrorKind::SizeLimitExceeded,
                std::to_string(middle) + "! permutations exceed budget " + std::to_string(budget));

  CanonicalLabeling out;
  out.order.push_back(l.bottom());
  for (ElementId e : detail::CanonicalSearch(l, comp).run()) out.order.push_back(e);
  if (!l.trivial()) out.order.push_back(l.top());

  const auto pos = inverse_order(out.order);
  auto& bytes = out.certificate.bytes;
  bytes.reserve(2 + n * n + n);
  bytes.push_back(std::uint8_t(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bytes.push_back(l.leq(out.order[i], out.order[j]) ? 1 : 0);
  bytes.push_back(comp ? 1 : 0);
  if (comp)
    for (std::size_t i = 0; i < n; ++i) bytes.push_back(std::uint8_t(pos[(*comp)[out.order[i]]]));
  return out;
}

inline CanonicalCertificate canonical_certificate(const BoundedLattice& l,
                                                  const UnaryTable* comp = nullptr,
                                                  std::uint64_t budget = kDefaultPermutationBudget) {
  return canonical_labeling(l, comp, budget).certificate;
}

inline CanonicalCertificate canonical_certificate(const BoundedLattice& l, const UnaryTable& comp,
                                                  std::uint64_t budget = kDefaultPermutationBudget) {
  return canonical_labeling(l, &comp, budget).certificate;
}

}  // namespace ortholab
