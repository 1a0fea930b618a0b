#include "topolayout/matching.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "topolayout/errors.hpp"

namespace topolayout {

std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != n)
      throw validation_error("assignment matrix must be square");

  const double INF = std::numeric_limits<double>::infinity();
  // 1-based potentials; p[j] = row matched to column j
  std::vector<double> u(static_cast<size_t>(n) + 1, 0.0), v(static_cast<size_t>(n) + 1, 0.0);
  std::vector<int> p(static_cast<size_t>(n) + 1, 0), way(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<size_t>(n) + 1, INF);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    do {
      used[static_cast<size_t>(j0)] = 1;
      int i0 = p[static_cast<size_t>(j0)];
      double delta = INF;
      int j1 = -1;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        double cur = cost[static_cast<size_t>(i0 - 1)][static_cast<size_t>(j - 1)] -
                     u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
        if (cur < minv[static_cast<size_t>(j)]) {
          minv[static_cast<size_t>(j)] = cur;
          way[static_cast<size_t>(j)] = j0;
        }
        if (minv[static_cast<size_t>(j)] < delta) {
          delta = minv[static_cast<size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) {
          u[static_cast<size_t>(p[static_cast<size_t>(j)])] += delta;
          v[static_cast<size_t>(j)] -= delta;
        } else {
          minv[static_cast<size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<size_t>(j0)] != 0);
    do {
      int j1 = way[static_cast<size_t>(j0)];
      p[static_cast<size_t>(j0)] = p[static_cast<size_t>(j1)];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(static_cast<size_t>(n), -1);
  for (int j = 1; j <= n; ++j)
    if (p[static_cast<size_t>(j)] > 0) row_to_col[static_cast<size_t>(p[static_cast<size_t>(j)] - 1)] = j - 1;
  return row_to_col;
}

namespace {

void check_single_dimension(const PersistenceDiagram& d, const char* which) {
  for (size_t i = 1; i < d.bars.size(); ++i)
    if (d.bars[i].dim != d.bars[0].dim)
      throw validation_error(std::string("diagram ") + which +
                             " mixes homological dimensions in a matching call");
}

double ground_pow(double dx, double dy, double p) {
  double d = std::sqrt(dx * dx + dy * dy);
  return std::pow(d, p);
}

}  // namespace

WassersteinResult wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, double p) {
  if (p < 1.0) throw validation_error("wasserstein order p must be >= 1");
  check_single_dimension(a, "A");
  check_single_dimension(b, "B");
  if (!a.bars.empty() && !b.bars.empty() && a.bars[0].dim != b.bars[0].dim)
    throw validation_error("matching diagrams of different homological dimensions");

  const int n = static_cast<int>(a.bars.size());
  const int m = static_cast<int>(b.bars.size());
  WassersteinResult res;
  if (n == 0 && m == 0) return res;

  // Augmented (n+m) square matrix: any point of A may take any diagonal slot
  // at its own projection cost (slots are interchangeable), and vice versa;
  // diagonal-diagonal is free.
  const int N = n + m;
  std::vector<std::vector<double>> cost(static_cast<size_t>(N),
                                        std::vector<double>(static_cast<size_t>(N), 0.0));
  for (int i = 0; i < n; ++i) {
    double diag_i = std::pow(diagonal_gap(a.bars[static_cast<size_t>(i)]), p);
    for (int j = 0; j < m; ++j)
      cost[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          ground_pow(a.bars[static_cast<size_t>(i)].birth - b.bars[static_cast<size_t>(j)].birth,
                     a.bars[static_cast<size_t>(i)].death - b.bars[static_cast<size_t>(j)].death, p);
    for (int j = m; j < N; ++j) cost[static_cast<size_t>(i)][static_cast<size_t>(j)] = diag_i;
  }
  for (int i = n; i < N; ++i)
    for (int j = 0; j < m; ++j)
      cost[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          std::pow(diagonal_gap(b.bars[static_cast<size_t>(j)]), p);

  std::vector<int> assign = solve_assignment(cost);
  double total = 0.0;
  for (int i = 0; i < N; ++i) {
    int j = assign[static_cast<size_t>(i)];
    total += cost[static_cast<size_t>(i)][static_cast<size_t>(j)];
    bool row_real = i < n, col_real = j < m;
    if (row_real && col_real)
      res.matching.pairs.emplace_back(i, j);
    else if (row_real)
      res.matching.pairs.emplace_back(i, kDiagonal);
    else if (col_real)
      res.matching.pairs.emplace_back(kDiagonal, j);
  }
  res.distance = std::pow(total, 1.0 / p);
  res.matching.cost = res.distance;
  return res;
}

double matching_cost(const Matching& m, const PersistenceDiagram& a, const PersistenceDiagram& b,
                     double p) {
  double total = 0.0;
  for (auto [i, j] : m.pairs) {
    if (i != kDiagonal && j != kDiagonal) {
      total += ground_pow(a.bars[static_cast<size_t>(i)].birth - b.bars[static_cast<size_t>(j)].birth,
                          a.bars[static_cast<size_t>(i)].death - b.bars[static_cast<size_t>(j)].death,
                          p);
    } else if (i != kDiagonal) {
      total += std::pow(diagonal_gap(a.bars[static_cast<size_t>(i)]), p);
    } else if (j != kDiagonal) {
      total += std::pow(diagonal_gap(b.bars[static_cast<size_t>(j)]), p);
    }
  }
  return std::pow(total, 1.0 / p);
}

double w1_gaussian_kernel(const PersistenceDiagram& a, const PersistenceDiagram& b, double sigma) {
  if (!(sigma > 0.0)) throw validation_error("kernel sigma must be positive");
  double w1 = wasserstein(a, b, 1.0).distance;
  return std::exp(-w1 / (sigma * sigma));
}

void write_matching_json(const Matching& m, const std::string& path) {
  nlohmann::json j;
  j["cost"] = m.cost;
  auto& pairs = j["pairs"] = nlohmann::json::array();
  for (auto [i, jdx] : m.pairs) {
    nlohmann::json pj;
    pj["a"] = i == kDiagonal ? nlohmann::json(nullptr) : nlohmann::json(i);
    pj["b"] = jdx == kDiagonal ? nlohmann::json(nullptr) : nlohmann::json(jdx);
    pairs.push_back(pj);
  }
  std::ofstream out(path);
  if (!out) throw io_error("cannot write matching file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace topolayout
