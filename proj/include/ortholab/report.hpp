#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ortholab/table.hpp"

namespace ortholab {

struct Binding {
  std::string variable;
  ElementId element;

  bool operator==(const Binding&) const = default;
};

/// Concrete assignment of carrier elements to the variables of a law.
using Witness = std::vector<Binding>;

struct AxiomResult {
  std::string id;
  bool passed = true;
  std::optional<Witness> witness;
  std::string note;
};

class VerificationReport {
 public:
  void add(AxiomResult result) { results_.push_back(std::move(result)); }

  void append(const VerificationReport& other) {
    results_.insert(results_.end(), other.results_.begin(), other.results_.end());
    for (const auto& n : other.notes_) note(n);
    conditional_ = conditional_ || other.conditional_;
  }

  void note(std::string text) {
    if (std::find(notes_.begin(), notes_.end(), text) == notes_.end())
      notes_.push_back(std::move(text));
  }

  void mark_conditional() { conditional_ = true; }

  /// True iff every recorded axiom passed.
  bool overall() const {
    return std::all_of(results_.begin(), results_.end(),
                       [](const AxiomResult& r) { return r.passed; });
  }

  bool conditional() const noexcept { return conditional_; }
  std::span<const AxiomResult> results() const noexcept { return results_; }
  std::span<const std::string> notes() const noexcept { return notes_; }

  const AxiomResult* find(std::string_view id) const {
    auto it = std::find_if(results_.begin(), results_.end(),
                           [&](const AxiomResult& r) { return r.id == id; });
    return it == results_.end() ? nullptr : &*it;
  }

  bool passed(std::string_view id) const {
    const auto* r = find(id);
    return r != nullptr && r->passed;
  }

 private:
  std::vector<AxiomResult> results_;
  std::vector<std::string> notes_;
  bool conditional_ = false;
};

namespace detail {

inline constexpr std::array<std::string_view, 3> kVariables{"x", "y", "z"};

template <std::size_t K>
Witness make_witness(const std::array<ElementId, K>& tuple) {
  Witness w;
  for (std::size_t i = 0; i < K; ++i) w.push_back({std::string(kVariables[i]), tuple[i]});
  return w;
}

// First failing tuple in row-major order (first variable outermost).
template <typename Holds>
std::optional<Witness> scan1(std::size_t n, Holds&& holds) {
  for (std::size_t x = 0; x < n; ++x)
    if (!holds(ElementId(x))) return make_witness<1>({ElementId(x)});
  return std::nullopt;
}

template <typename Holds>
std::optional<Witness> scan2(std::size_t n, Holds&& holds) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!holds(ElementId(x), ElementId(y))) return make_witness<2>({ElementId(x), ElementId(y)});
  return std::nullopt;
}

template <typename Holds>
std::optional<Witness> scan3(std::size_t n, Holds&& holds) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!holds(ElementId(x), ElementId(y), ElementId(z)))
          return make_witness<3>({ElementId(x), ElementId(y), ElementId(z)});
  return std::nullopt;
}

inline AxiomResult result_of(std::string id, std::optional<Witness> failure,
                             std::string note = {}) {
  AxiomResult r;
  r.id = std::move(id);
  r.passed = !failure.has_value();
  r.witness = std::move(failure);
  r.note = std::move(note);
  return r;
}

}  // namespace detail

/// "x=a y=b" using display names.
inline std::string render_witness(const Witness& w, std::span<const std::string> names) {
  std::string out;
  for (const auto& b : w) {
    if (!out.empty()) out += ' ';
    out += b.variable + "=" + names[b.element];
  }
  return out;
}

/// Human-readable, one line per axiom.
inline std::string render_report(const VerificationReport& report,
                                 std::span<const std::string> names) {
  std::string out;
  for (const auto& r : report.results()) {
    out += r.passed ? "PASS " : "FAIL ";
    out += r.id;
    if (r.witness) out += "  [" + render_witness(*r.witness, names) + "]";
    if (!r.note.empty()) out += "  (" + r.note + ")";
    out += '\n';
  }
  for (const auto& n : report.notes()) out += "note: " + n + '\n';
  if (report.conditional()) out += "note: results are conditional on failed prerequisites\n";
  out += report.overall() ? "OVERALL PASS\n" : "OVERALL FAIL\n";
  return out;
}

}  // namespace ortholab
