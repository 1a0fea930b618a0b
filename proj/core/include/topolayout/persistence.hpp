#pragma once

#include <cstdint>
#include <vector>

#include "topolayout/grid.hpp"
#include "topolayout/layout.hpp"

namespace topolayout {

// One finite persistence interval. Infinite-persistence classes are excluded
// from diagrams, as are zero-length intervals (death == birth).
//
// Provenance encodes the critical cells:
//   - cubical: birth_cell / death_cell are flat pixel indices (the vertex
//     that determines the critical cell's filtration value);
//   - rips: packed vertex tuples, (u<<21|v) for edges and (i<<42|j<<21|k)
//     for triangles; vertices are their own index.
struct Bar {
  int dim = 0;
  double birth = 0.0;
  double death = 0.0;
  int64_t birth_cell = -1;
  int64_t death_cell = -1;
};

struct PersistenceDiagram {
  std::vector<Bar> bars;  // sorted by (dim, birth, death, birth_cell, death_cell)

  std::vector<Bar> dim_bars(int dim) const;
  bool empty() const { return bars.empty(); }
  double total_persistence() const;
};

struct FiltrationSpec {
  enum class Mode { rips, cubical_sublevel };
  Mode mode = Mode::rips;
  int max_dimension = 1;   // 0 or 1
  double max_scale = 0.0;  // rips truncation; must be > 0 for rips
};

// H0 and H1 of the Vietoris-Rips filtration of a planar point set; edge
// filtration value is the Euclidean distance, triangles enter at their
// longest edge. Classes alive at max_scale are dropped.
PersistenceDiagram rips_diagram(const std::vector<Point>& points, const FiltrationSpec& spec);

// H0 and H1 of the sublevel filtration of a scalar field on the pixel grid
// (V-construction: pixels are vertices, edges and squares take the max of
// their vertices).
PersistenceDiagram cubical_sublevel_diagram(const ScalarField& field, const FiltrationSpec& spec);

// Betti numbers beta_d(t) = #bars with birth <= t < death, per dimension.
std::vector<std::vector<int>> betti_curve(const PersistenceDiagram& diagram,
                                          const std::vector<double>& thresholds,
                                          int max_dimension = 1);

// Diagram CSV: header `dim,birth,death,b_cell,d_cell` (provenance optional on read).
void write_diagram_csv(const PersistenceDiagram& diagram, const std::string& path,
                       const std::string& manifest_comment = "");
PersistenceDiagram read_diagram_csv(const std::string& path);

namespace detail {
// Sorts bars into the canonical order and drops zero-length ones.
void finalize_diagram(PersistenceDiagram& d);
}  // namespace detail

}  // namespace topolayout
