#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ortholab {

/// Dense index of a carrier element, 0..n-1.
using ElementId = std::uint16_t;

/// Row-major n x n table.
template <typename T>
class SquareTable {
 public:
  using value_type = T;

  SquareTable() = default;
  explicit SquareTable(std::size_t n, T fill = T{}) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  T operator()(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
  T& operator()(std::size_t row, std::size_t col) { return cells_[row * n_ + col]; }

  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(cells_).subspan(r * n_, n_);
  }
  std::span<const T> cells() const noexcept { return cells_; }

  bool operator==(const SquareTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> cells_;
};

/// Boolean relation; cell (x, y) nonzero means x R y.
using Relation = SquareTable<std::uint8_t>;

/// Binary operation table, cell (x, y) holds x op y.
using BinOpTable = SquareTable<ElementId>;

/// Total unary operation, entry x holds the image of x.
using UnaryTable = std::vector<ElementId>;

}  // namespace ortholab
