#include <algorithm>
#include <numeric>

#include "topolayout/errors.hpp"
#include "topolayout/persistence.hpp"

namespace topolayout {

namespace {

// V-construction on the pixel grid: pixels are vertices; an edge or square
// takes the maximum of its vertices, with the argmax vertex (smallest flat
// index on ties) as its critical pixel.
struct CubEdge {
  double value;
  int32_t a, b;       // endpoint flat indices, a < b
  int32_t crit;       // argmax vertex
};

struct CubSquare {
  double value;
  int32_t anchor;     // top-left flat index (smallest of the four)
  int32_t crit;       // argmax vertex
};

struct UnionFind {
  std::vector<int32_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int32_t find(int32_t x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
};

void symdiff_into(std::vector<int32_t>& a, const std::vector<int32_t>& b) {
  std::vector<int32_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  a.swap(out);
}

}  // namespace

PersistenceDiagram cubical_sublevel_diagram(const ScalarField& field, const FiltrationSpec& spec) {
  const int W = field.width, H = field.height;
  PersistenceDiagram diagram;
  if (W <= 0 || H <= 0) return diagram;
  for (double v : field.data)
    if (!std::isfinite(v)) throw validation_error("cubical filtration needs finite field values");

  auto flat = [W](int r, int c) { return r * W + c; };
  auto vertex_less = [&](int32_t x, int32_t y) {
    double vx = field.data[static_cast<size_t>(x)], vy = field.data[static_cast<size_t>(y)];
    if (vx != vy) return vx < vy;
    return x < y;
  };
  auto make_edge = [&](int32_t a, int32_t b) {
    CubEdge e;
    e.a = std::min(a, b);
    e.b = std::max(a, b);
    // argmax vertex; smallest flat index on value ties
    e.crit = field.data[static_cast<size_t>(e.b)] > field.data[static_cast<size_t>(e.a)] ? e.b : e.a;
    e.value = field.data[static_cast<size_t>(e.crit)];
    return e;
  };

  std::vector<CubEdge> edges;
  edges.reserve(static_cast<size_t>(W - 1) * H + static_cast<size_t>(W) * (H - 1));
  for (int r = 0; r < H; ++r)
    for (int c = 0; c < W; ++c) {
      if (c + 1 < W) edges.push_back(make_edge(flat(r, c), flat(r, c + 1)));
      if (r + 1 < H) edges.push_back(make_edge(flat(r, c), flat(r + 1, c)));
    }
  std::sort(edges.begin(), edges.end(), [](const CubEdge& x, const CubEdge& y) {
    if (x.value != y.value) return x.value < y.value;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });

  // H0: elder rule over the sorted edges; the essential component is dropped.
  {
    UnionFind uf(static_cast<size_t>(W) * H);
    std::vector<int32_t> birth(static_cast<size_t>(W) * H);
    std::iota(birth.begin(), birth.end(), 0);
    for (const CubEdge& e : edges) {
      int32_t ra = uf.find(e.a), rb = uf.find(e.b);
      if (ra == rb) continue;
      int32_t ba = birth[static_cast<size_t>(ra)], bb = birth[static_cast<size_t>(rb)];
      int32_t elder = vertex_less(ba, bb) ? ba : bb;
      int32_t young = elder == ba ? bb : ba;
      int32_t survivor = elder == ba ? ra : rb;
      int32_t dying = elder == ba ? rb : ra;
      uf.parent[static_cast<size_t>(dying)] = survivor;
      birth[static_cast<size_t>(survivor)] = elder;
      diagram.bars.push_back(
          {0, field.data[static_cast<size_t>(young)], e.value, young, e.crit});
    }
  }

  if (spec.max_dimension >= 1 && W >= 2 && H >= 2) {
    // edge filtration positions for square boundaries
    // horizontal edge (r,c)-(r,c+1) and vertical edge (r,c)-(r+1,c)
    std::vector<int32_t> edge_pos(2 * static_cast<size_t>(W) * H, -1);
    auto hkey = [&](int r, int c) { return 2 * static_cast<size_t>(flat(r, c)); };
    auto vkey = [&](int r, int c) { return 2 * static_cast<size_t>(flat(r, c)) + 1; };
    for (size_t i = 0; i < edges.size(); ++i) {
      const CubEdge& e = edges[i];
      if (e.b == e.a + 1)
        edge_pos[2 * static_cast<size_t>(e.a)] = static_cast<int32_t>(i);
      else
        edge_pos[2 * static_cast<size_t>(e.a) + 1] = static_cast<int32_t>(i);
    }

    std::vector<CubSquare> squares;
    squares.reserve(static_cast<size_t>(W - 1) * (H - 1));
    for (int r = 0; r + 1 < H; ++r)
      for (int c = 0; c + 1 < W; ++c) {
        int32_t vs[4] = {flat(r, c), flat(r, c + 1), flat(r + 1, c), flat(r + 1, c + 1)};
        int32_t crit = vs[0];
        for (int i = 1; i < 4; ++i)
          if (field.data[static_cast<size_t>(vs[i])] > field.data[static_cast<size_t>(crit)])
            crit = vs[i];
        squares.push_back({field.data[static_cast<size_t>(crit)], vs[0], crit});
      }
    std::sort(squares.begin(), squares.end(), [](const CubSquare& x, const CubSquare& y) {
      if (x.value != y.value) return x.value < y.value;
      return x.anchor < y.anchor;
    });

    std::vector<std::vector<int32_t>> reduced(squares.size());
    std::vector<int32_t> pivot_owner(edges.size(), -1);
    std::vector<int32_t> col;
    for (size_t s = 0; s < squares.size(); ++s) {
      int r = squares[s].anchor / W, c = squares[s].anchor % W;
      col = {edge_pos[hkey(r, c)], edge_pos[hkey(r + 1, c)], edge_pos[vkey(r, c)],
             edge_pos[vkey(r, c + 1)]};
      std::sort(col.begin(), col.end());
      while (!col.empty()) {
        int32_t low = col.back();
        int32_t owner = pivot_owner[static_cast<size_t>(low)];
        if (owner < 0) {
          pivot_owner[static_cast<size_t>(low)] = static_cast<int32_t>(s);
          const CubEdge& be = edges[static_cast<size_t>(low)];
          diagram.bars.push_back({1, be.value, squares[s].value, be.crit, squares[s].crit});
          break;
        }
        symdiff_into(col, reduced[static_cast<size_t>(owner)]);
      }
      reduced[s] = col;
    }
  }

  detail::finalize_diagram(diagram);
  return diagram;
}

}  // namespace topolayout
