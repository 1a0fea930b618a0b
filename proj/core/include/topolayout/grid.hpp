#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace topolayout {

// Dense row-major grid. Indexed as (row, col) with row in [0, height).
template <typename T>
struct Grid {
  int width = 0;
  int height = 0;
  std::vector<T> data;

  Grid() = default;
  Grid(int w, int h, T fill = T{}) : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  T& at(int row, int col) {
    assert(row >= 0 && row < height && col >= 0 && col < width);
    return data[static_cast<size_t>(row) * width + col];
  }
  const T& at(int row, int col) const {
    assert(row >= 0 && row < height && col >= 0 && col < width);
    return data[static_cast<size_t>(row) * width + col];
  }

  bool in_bounds(int row, int col) const {
    return row >= 0 && row < height && col >= 0 && col < width;
  }

  size_t size() const { return data.size(); }

  bool operator==(const Grid&) const = default;
};

using BinaryGrid = Grid<uint8_t>;
using ScalarField = Grid<double>;

inline size_t foreground_count(const BinaryGrid& g) {
  size_t n = 0;
  for (uint8_t v : g.data) n += (v != 0);
  return n;
}

}  // namespace topolayout
