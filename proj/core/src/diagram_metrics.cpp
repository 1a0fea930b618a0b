#include "topolayout/diagram_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "topolayout/errors.hpp"

namespace topolayout {

std::vector<double> LandscapeVector::flatten() const {
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(levels) * grid.size());
  for (const auto& level : values) flat.insert(flat.end(), level.begin(), level.end());
  return flat;
}

std::vector<double> uniform_grid(double t_min, double t_max, int samples) {
  if (samples < 2 || !(t_max > t_min))
    throw validation_error("landscape grid needs samples >= 2 and t_max > t_min");
  std::vector<double> g(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i)
    g[static_cast<size_t>(i)] = t_min + (t_max - t_min) * i / (samples - 1);
  return g;
}

LandscapeVector landscape(const PersistenceDiagram& diagram, int levels,
                          const std::vector<double>& grid) {
  if (levels < 1) throw validation_error("landscape needs at least one level");
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw validation_error("landscape grid must be strictly increasing");

  LandscapeVector lv;
  lv.levels = levels;
  lv.grid = grid;
  lv.values.assign(static_cast<size_t>(levels), std::vector<double>(grid.size(), 0.0));
  std::vector<double> tents;
  tents.reserve(diagram.bars.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    double t = grid[i];
    tents.clear();
    for (const Bar& b : diagram.bars) {
      double v = std::min(t - b.birth, b.death - t);
      if (v > 0.0) tents.push_back(v);
    }
    std::sort(tents.begin(), tents.end(), std::greater<>());
    int top = std::min<int>(levels, static_cast<int>(tents.size()));
    for (int k = 0; k < top; ++k) lv.values[static_cast<size_t>(k)][i] = tents[static_cast<size_t>(k)];
  }
  return lv;
}

namespace {

struct GroupUpdate {
  double sum_birth = 0.0;
  double sum_death = 0.0;
  int matched = 0;
};

// Closed-form minimizer of sum ||y - x_i||^2 + (n - m) * dist(y, diagonal)^2.
Bar group_optimum(const GroupUpdate& g, int n_diagrams, int dim) {
  Bar y;
  y.dim = dim;
  double xb = g.sum_birth / g.matched;
  double xd = g.sum_death / g.matched;
  double mid = 0.5 * (xb + xd);
  double half = 0.5 * (xd - xb);
  double shrink = static_cast<double>(g.matched) / n_diagrams;
  y.birth = mid - shrink * half;
  y.death = mid + shrink * half;
  return y;
}

double total_objective(const PersistenceDiagram& y, const std::vector<PersistenceDiagram>& diagrams) {
  double obj = 0.0;
  for (const auto& d : diagrams) {
    double w = wasserstein(y, d, 2.0).distance;
    obj += w * w;
  }
  return obj;
}

}  // namespace

BarycenterResult barycenter(const std::vector<PersistenceDiagram>& diagrams, int max_iterations,
                            double relative_tolerance) {
  if (diagrams.empty()) throw validation_error("barycenter needs at least one diagram");
  int dim = 0;
  for (const auto& d : diagrams) {
    for (size_t i = 0; i < d.bars.size(); ++i) {
      if (i == 0 && &d == &diagrams.front()) dim = d.bars[0].dim;
      if (d.bars[i].dim != (d.bars.empty() ? dim : d.bars[0].dim))
        throw validation_error("barycenter input mixes homological dimensions");
    }
    if (!d.bars.empty()) dim = d.bars[0].dim;
  }
  const int n = static_cast<int>(diagrams.size());

  // init: the input with median total persistence
  std::vector<size_t> order(diagrams.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return diagrams[a].total_persistence() < diagrams[b].total_persistence();
  });
  BarycenterResult res;
  res.diagram = diagrams[order[(order.size() - 1) / 2]];

  double obj = total_objective(res.diagram, diagrams);
  res.objective_trace.push_back(obj);

  for (int iter = 0; iter < max_iterations; ++iter) {
    const size_t ny = res.diagram.bars.size();
    std::vector<GroupUpdate> groups(ny);
    std::vector<Bar> spawned;
    for (const auto& d : diagrams) {
      Matching m = wasserstein(res.diagram, d, 2.0).matching;
      for (auto [yi, xi] : m.pairs) {
        if (yi != kDiagonal && xi != kDiagonal) {
          auto& g = groups[static_cast<size_t>(yi)];
          g.sum_birth += d.bars[static_cast<size_t>(xi)].birth;
          g.sum_death += d.bars[static_cast<size_t>(xi)].death;
          g.matched += 1;
        } else if (xi != kDiagonal) {
          // unmatched input point: candidate new barycenter point, shrunk
          // toward the diagonal by the diagrams it is absent from
          GroupUpdate g;
          g.sum_birth = d.bars[static_cast<size_t>(xi)].birth;
          g.sum_death = d.bars[static_cast<size_t>(xi)].death;
          g.matched = 1;
          spawned.push_back(group_optimum(g, n, dim));
        }
      }
    }

    PersistenceDiagram next;
    for (size_t k = 0; k < ny; ++k)
      if (groups[k].matched > 0) next.bars.push_back(group_optimum(groups[k], n, dim));
    next.bars.insert(next.bars.end(), spawned.begin(), spawned.end());
    auto dead = std::remove_if(next.bars.begin(), next.bars.end(),
                               [](const Bar& b) { return b.death - b.birth < 1e-12; });
    next.bars.erase(dead, next.bars.end());
    detail::finalize_diagram(next);

    double next_obj = total_objective(next, diagrams);
    res.iterations = iter + 1;
    if (next_obj > obj + 1e-12) break;  // safeguard; the update should not increase
    res.diagram = std::move(next);
    res.objective_trace.push_back(next_obj);
    double drop = obj - next_obj;
    bool settled = drop <= relative_tolerance * std::max(obj, 1e-30);
    obj = next_obj;
    if (settled) {
      res.converged = true;
      break;
    }
  }
  res.objective = obj;
  return res;
}

double median_w1_sigma(const std::vector<PersistenceDiagram>& pooled) {
  std::vector<double> dists;
  for (size_t i = 0; i < pooled.size(); ++i)
    for (size_t j = i + 1; j < pooled.size(); ++j)
      dists.push_back(wasserstein(pooled[i], pooled[j], 1.0).distance);
  if (dists.empty()) return 1.0;
  std::sort(dists.begin(), dists.end());
  size_t m = dists.size();
  double median = m % 2 == 1 ? dists[m / 2] : 0.5 * (dists[m / 2 - 1] + dists[m / 2]);
  return median > 0.0 ? median : 1.0;
}

void write_landscape_csv(const LandscapeVector& lv, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write landscape file: " + path);
  out << "t";
  for (int k = 1; k <= lv.levels; ++k) out << ",lambda" << k;
  out << "\n";
  char buf[64];
  for (size_t i = 0; i < lv.grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", lv.grid[i]);
    out << buf;
    for (int k = 0; k < lv.levels; ++k) {
      std::snprintf(buf, sizeof buf, ",%.17g", lv.values[static_cast<size_t>(k)][i]);
      out << buf;
    }
    out << "\n";
  }
}

}  // namespace topolayout
