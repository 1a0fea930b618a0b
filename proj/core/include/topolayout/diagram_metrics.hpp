#pragma once

#include <string>
#include <vector>

#include "topolayout/matching.hpp"
#include "topolayout/persistence.hpp"

namespace topolayout {

// Persistence landscape sampled on a fixed grid.
// values[k][i] = lambda_{k+1}(grid[i]) = (k+1)-th largest tent value
// min(t - birth, death - t)_+ over the diagram's points.
struct LandscapeVector {
  int levels = 0;
  std::vector<double> grid;
  std::vector<std::vector<double>> values;

  std::vector<double> flatten() const;
};

LandscapeVector landscape(const PersistenceDiagram& diagram, int levels,
                          const std::vector<double>& grid);

std::vector<double> uniform_grid(double t_min, double t_max, int samples);

struct BarycenterResult {
  PersistenceDiagram diagram;
  double objective = 0.0;  // sum of squared 2-Wasserstein distances
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_trace;  // non-increasing
};

// Frechet mean of a set of diagrams under W2^2: alternate optimal matchings
// with closed-form per-group updates; matched points average arithmetically
// and diagonal-matched slots pull the point toward the diagonal. Input points
// left unmatched spawn new candidate points, so the mean can grow beyond the
// initial diagram. Local optimality only.
BarycenterResult barycenter(const std::vector<PersistenceDiagram>& diagrams, int max_iterations = 50,
                            double relative_tolerance = 1e-7);

// Median of pairwise W1 distances over the pooled diagram collection
// (the kernel bandwidth heuristic); 1.0 when the median is not positive.
double median_w1_sigma(const std::vector<PersistenceDiagram>& pooled);

void write_landscape_csv(const LandscapeVector& lv, const std::string& path);

}  // namespace topolayout
