#pragma once

#include <cstdint>

#include "topolayout/grid.hpp"
#include "topolayout/layout.hpp"

namespace topolayout {

// Exact Euclidean distance transform of a binary grid. Squared distances are
// held as integers, so the transform is exact, not approximate. For each
// pixel the nearest foreground pixel (site) is recorded; ties are broken by
// the lexicographically smallest (row, col) site, and tie presence is kept
// for downstream gradient gating.
struct EdtResult {
  ScalarField dist;          // sqrt of dist2
  Grid<int64_t> dist2;       // exact squared distance
  Grid<int32_t> site;        // flat index row*width+col of nearest site
  Grid<uint8_t> site_tied;   // 1 if more than one site attains the minimum
};

// Throws validation_error when the grid has no foreground pixel.
EdtResult exact_edt(const BinaryGrid& grid);

// Gradient of the distance value at one pixel with respect to the position of
// the cell point owning the nearest site. On foreground pixels the distance
// is not differentiable and a zero vector is returned with on_foreground set.
struct PointGradient {
  int owner = -1;        // owner id from the rasterization, -1 if none
  double gx = 0.0;
  double gy = 0.0;
  bool on_foreground = false;
  bool tied = false;
};

PointGradient edt_point_gradient(const EdtResult& edt, const Grid<int32_t>& owner, int row, int col);

}  // namespace topolayout
