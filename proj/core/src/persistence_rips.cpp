#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "topolayout/errors.hpp"
#include "topolayout/persistence.hpp"

namespace topolayout {

namespace {

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> birth_vertex;  // min vertex index in the component

  explicit UnionFind(int n) : parent(static_cast<size_t>(n)), birth_vertex(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
    std::iota(birth_vertex.begin(), birth_vertex.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
};

struct Edge {
  double value;
  int u, v;  // u < v
};

int64_t edge_code(int u, int v) { return (static_cast<int64_t>(u) << 21) | v; }
int64_t tri_code(int i, int j, int k) {
  return (static_cast<int64_t>(i) << 42) | (static_cast<int64_t>(j) << 21) | k;
}

// sorted symmetric difference, the Z/2 column addition
void symdiff_into(std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  a.swap(out);
}

}  // namespace

PersistenceDiagram rips_diagram(const std::vector<Point>& points, const FiltrationSpec& spec) {
  if (spec.max_scale <= 0.0) throw validation_error("rips filtration needs max_scale > 0");
  PersistenceDiagram diagram;
  const int n = static_cast<int>(points.size());
  if (n == 0) return diagram;
  if (n >= (1 << 21)) throw validation_error("rips point set too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dx = points[static_cast<size_t>(i)].x - points[static_cast<size_t>(j)].x;
      double dy = points[static_cast<size_t>(i)].y - points[static_cast<size_t>(j)].y;
      double d = std::sqrt(dx * dx + dy * dy);
      if (d <= spec.max_scale) edges.push_back({d, i, j});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });

  // H0 by Kruskal: a merge edge kills the younger component (larger min
  // vertex); classes alive at max_scale are essential and dropped.
  UnionFind uf(n);
  for (const Edge& e : edges) {
    int ru = uf.find(e.u), rv = uf.find(e.v);
    if (ru == rv) continue;
    int bu = uf.birth_vertex[static_cast<size_t>(ru)];
    int bv = uf.birth_vertex[static_cast<size_t>(rv)];
    int survivor = bu < bv ? ru : rv;
    int dying_birth = std::max(bu, bv);
    uf.parent[static_cast<size_t>(ru == survivor ? rv : ru)] = survivor;
    uf.birth_vertex[static_cast<size_t>(survivor)] = std::min(bu, bv);
    diagram.bars.push_back({0, 0.0, e.value, dying_birth, edge_code(e.u, e.v)});
  }

  if (spec.max_dimension >= 1 && n >= 3) {
    // position of each edge in the sorted filtration order
    std::unordered_map<int64_t, int> edge_pos;
    edge_pos.reserve(edges.size() * 2);
    for (size_t i = 0; i < edges.size(); ++i)
      edge_pos[edge_code(edges[i].u, edges[i].v)] = static_cast<int>(i);

    auto dist_of = [&](int i, int j) {
      double dx = points[static_cast<size_t>(i)].x - points[static_cast<size_t>(j)].x;
      double dy = points[static_cast<size_t>(i)].y - points[static_cast<size_t>(j)].y;
      return std::sqrt(dx * dx + dy * dy);
    };

    struct Tri {
      double value;
      int i, j, k;
    };
    std::vector<Tri> tris;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double dij = dist_of(i, j);
        if (dij > spec.max_scale) continue;
        for (int k = j + 1; k < n; ++k) {
          double v = std::max({dij, dist_of(i, k), dist_of(j, k)});
          if (v <= spec.max_scale) tris.push_back({v, i, j, k});
        }
      }
    std::sort(tris.begin(), tris.end(), [](const Tri& a, const Tri& b) {
      if (a.value != b.value) return a.value < b.value;
      if (a.i != b.i) return a.i < b.i;
      if (a.j != b.j) return a.j < b.j;
      return a.k < b.k;
    });

    // reduce triangle columns against each other; a pivot pairs the triangle
    // with the edge that created the cycle it fills
    std::vector<std::vector<int>> reduced(tris.size());
    std::vector<int> pivot_owner(edges.size(), -1);
    std::vector<int> col;
    for (size_t t = 0; t < tris.size(); ++t) {
      const Tri& tr = tris[t];
      col = {edge_pos.at(edge_code(tr.i, tr.j)), edge_pos.at(edge_code(tr.i, tr.k)),
             edge_pos.at(edge_code(tr.j, tr.k))};
      std::sort(col.begin(), col.end());
      while (!col.empty()) {
        int low = col.back();
        int owner = pivot_owner[static_cast<size_t>(low)];
        if (owner < 0) {
          pivot_owner[static_cast<size_t>(low)] = static_cast<int>(t);
          const Edge& be = edges[static_cast<size_t>(low)];
          diagram.bars.push_back(
              {1, be.value, tr.value, edge_code(be.u, be.v), tri_code(tr.i, tr.j, tr.k)});
          break;
        }
        symdiff_into(col, reduced[static_cast<size_t>(owner)]);
      }
      reduced[t] = col;
    }
  }

  detail::finalize_diagram(diagram);
  return diagram;
}

}  // namespace topolayout
