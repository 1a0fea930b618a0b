#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topolayout/grid.hpp"

namespace topolayout {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

struct ClassSpec {
  std::vector<std::string> names;  // index = class id, contiguous from 0

  int count() const { return static_cast<int>(names.size()); }
  bool operator==(const ClassSpec&) const = default;
};

// Multi-class point layout on a fixed canvas. Points are continuous pixel
// coordinates in [0, width) x [0, height).
struct CellLayout {
  int width = 0;
  int height = 0;
  ClassSpec classes;
  std::vector<std::vector<Point>> points;  // one vector per class

  int n_classes() const { return classes.count(); }
  std::vector<int> counts() const;
  int total_count() const;
  void validate() const;  // throws validation_error
};

// Binary multi-channel raster; one channel per class.
struct RasterLayout {
  int width = 0;
  int height = 0;
  std::vector<BinaryGrid> channels;
};

// A rasterized channel plus the per-pixel index of the point whose footprint
// wrote the pixel (first writer in point order; -1 on background).
struct MaskWithOwners {
  BinaryGrid mask;
  Grid<int32_t> owner;
};

struct CountReport {
  std::vector<double> per_class_cce;
  double tce = 0.0;
  // per sample: (real counts, synthetic counts)
  std::vector<std::pair<std::vector<int>, std::vector<int>>> per_sample_counts;
};

// ---- file I/O ------------------------------------------------------------
// Layout CSV: header `class,x,y`. Sidecar JSON next to it (same stem,
// `.json`): {"width":int,"height":int,"classes":[names]}.

std::string sidecar_path(const std::string& csv_path);
CellLayout load_layout(const std::string& csv_path);
void save_layout(const CellLayout& layout, const std::string& csv_path);

// Grayscale mask image (PGM P2/P5); foreground = value >= 128.
BinaryGrid load_mask_pgm(const std::string& path);

// ---- raster operations ----------------------------------------------------

// Each point stamps a 3x3 block of ones centered at (round(x), round(y)),
// clipped at the canvas border; overlapping blocks merge.
RasterLayout rasterize(const CellLayout& layout);
MaskWithOwners rasterize_channel(const CellLayout& layout, int class_id);
// Union of all classes; owners are global point ids (see global_point_index).
MaskWithOwners rasterize_aggregate(const CellLayout& layout);

// Global point id for (class_id, point index within class).
int global_point_index(const CellLayout& layout, int class_id, int point_idx);

// Pixel-wise maximum across channels.
BinaryGrid aggregate(const RasterLayout& raster);

enum class Connectivity { four = 4, eight = 8 };

int count_components(const BinaryGrid& grid, Connectivity conn = Connectivity::eight);

// Paired per-class (CCE) and total (TCE) absolute count errors; counts are
// the layouts' per-class point counts.
CountReport count_metrics(const std::vector<CellLayout>& real_set,
                          const std::vector<CellLayout>& syn_set);

}  // namespace topolayout
