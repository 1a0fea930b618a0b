#pragma once

#include <string>
#include <vector>

#include "topolayout/persistence.hpp"

namespace topolayout {

// Minimum-cost assignment on a dense square matrix (shortest augmenting
// paths, O(n^3)). Returns for each row the assigned column.
std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost);

constexpr int kDiagonal = -1;

// Optimal correspondence between two diagrams, diagonal projections included.
struct Matching {
  // (index in A or kDiagonal, index in B or kDiagonal); covers all points of
  // both diagrams, diagonal-to-diagonal pairs omitted.
  std::vector<std::pair<int, int>> pairs;
  double cost = 0.0;  // the p-Wasserstein distance certified by the pairs
};

struct WassersteinResult {
  double distance = 0.0;
  Matching matching;
};

// p-Wasserstein distance between single-dimension diagrams under the L2
// ground metric, where any point may be matched to its orthogonal diagonal
// projection instead of a partner.
WassersteinResult wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, double p);

// Recompute the objective of a matching (for certification).
double matching_cost(const Matching& m, const PersistenceDiagram& a, const PersistenceDiagram& b,
                     double p);

// exp(-W1(a,b)/sigma^2)
double w1_gaussian_kernel(const PersistenceDiagram& a, const PersistenceDiagram& b, double sigma);

void write_matching_json(const Matching& m, const std::string& path);

// distance from a bar to its diagonal projection under L2
inline double diagonal_gap(const Bar& b) { return (b.death - b.birth) / 1.4142135623730951; }

}  // namespace topolayout
