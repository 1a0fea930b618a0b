#include "topolayout/edt.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

#include "topolayout/errors.hpp"

namespace topolayout {

namespace {

int64_t isqrt_floor(int64_t v) {
  if (v <= 0) return 0;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

EdtResult exact_edt(const BinaryGrid& grid) {
  const int W = grid.width, H = grid.height;
  if (foreground_count(grid) == 0)
    throw validation_error("distance transform requires at least one foreground pixel");

  const int64_t NONE = -1;

  // Phase 1: per column, distance (in rows) to the nearest foreground row and
  // that row's index; ties resolved toward the smaller row.
  Grid<int32_t> near_row(W, H, -1);
  Grid<int64_t> row_dist(W, H, NONE);
  for (int c = 0; c < W; ++c) {
    int last = -1;
    for (int r = 0; r < H; ++r) {
      if (grid.at(r, c)) last = r;
      if (last >= 0) {
        row_dist.at(r, c) = r - last;
        near_row.at(r, c) = last;
      }
    }
    last = -1;
    for (int r = H - 1; r >= 0; --r) {
      if (grid.at(r, c)) last = r;
      if (last >= 0 &&
          (row_dist.at(r, c) == NONE || static_cast<int64_t>(last - r) < row_dist.at(r, c))) {
        row_dist.at(r, c) = last - r;
        near_row.at(r, c) = last;
      }
    }
  }

  // Phase 2: per row, lower envelope over columns of (x - j)^2 + rowdist^2.
  // Parabola intersections are compared as exact rationals so the winner at
  // each integer abscissa is never decided by floating-point rounding.
  EdtResult out{ScalarField(W, H, 0.0), Grid<int64_t>(W, H, 0), Grid<int32_t>(W, H, -1),
                Grid<uint8_t>(W, H, 0)};
  std::vector<int64_t> f(static_cast<size_t>(W));
  std::vector<int> cols;  // columns that contain any foreground
  cols.reserve(static_cast<size_t>(W));
  for (int c = 0; c < W; ++c)
    if (row_dist.at(0, c) != NONE) cols.push_back(c);
  assert(!cols.empty());

  std::vector<int> v(cols.size());
  std::vector<int64_t> z_num(cols.size() + 1), z_den(cols.size() + 1);
  const int64_t INF_NUM = std::numeric_limits<int64_t>::max();

  for (int r = 0; r < H; ++r) {
    for (int c : cols) {
      int64_t d = row_dist.at(r, c);
      f[static_cast<size_t>(c)] = d * d;
    }
    int k = 0;
    v[0] = cols[0];
    z_num[0] = INF_NUM;  // sentinel: boundary at -infinity (sign carried separately)
    z_den[0] = -1;       // den < 0 marks the -inf sentinel
    z_num[1] = INF_NUM;
    z_den[1] = 1;
    auto intersect = [&](int q, int p, int64_t& num, int64_t& den) {
      num = (f[static_cast<size_t>(q)] + static_cast<int64_t>(q) * q) -
            (f[static_cast<size_t>(p)] + static_cast<int64_t>(p) * p);
      den = 2 * static_cast<int64_t>(q - p);  // > 0 since q > p
    };
    for (size_t qi = 1; qi < cols.size(); ++qi) {
      int q = cols[qi];
      int64_t num, den;
      for (;;) {
        intersect(q, v[static_cast<size_t>(k)], num, den);
        // pop while intersection <= z[k]
        if (k > 0 && num * z_den[static_cast<size_t>(k)] <= z_num[static_cast<size_t>(k)] * den) {
          --k;
          continue;
        }
        break;
      }
      ++k;
      v[static_cast<size_t>(k)] = q;
      z_num[static_cast<size_t>(k)] = num;
      z_den[static_cast<size_t>(k)] = den;
      z_num[static_cast<size_t>(k) + 1] = INF_NUM;
      z_den[static_cast<size_t>(k) + 1] = 1;
    }
    int kk = 0;
    for (int c = 0; c < W; ++c) {
      while (kk < k && z_num[static_cast<size_t>(kk) + 1] <
                           static_cast<int64_t>(c) * z_den[static_cast<size_t>(kk) + 1])
        ++kk;
      int j = v[static_cast<size_t>(kk)];
      int64_t dx = static_cast<int64_t>(c) - j;
      int64_t d2 = dx * dx + f[static_cast<size_t>(j)];
      out.dist2.at(r, c) = d2;
      out.dist.at(r, c) = std::sqrt(static_cast<double>(d2));
    }
  }

  // Nearest sites: lexicographically smallest (row, col) among all foreground
  // pixels at the exact squared distance; ties recorded for gradient gating.
  for (int r = 0; r < H; ++r) {
    for (int c = 0; c < W; ++c) {
      int64_t d2 = out.dist2.at(r, c);
      if (d2 == 0) {
        out.site.at(r, c) = r * W + c;
        continue;
      }
      int64_t radius = isqrt_floor(d2);
      int found = 0;
      int32_t best = -1;
      for (int64_t dr = -radius; dr <= radius && found < 2; ++dr) {
        int rr = r + static_cast<int>(dr);
        if (rr < 0 || rr >= H) continue;
        int64_t rem = d2 - dr * dr;
        int64_t dc = isqrt_floor(rem);
        if (dc * dc != rem) continue;
        for (int sign = 0; sign < (dc == 0 ? 1 : 2) && found < 2; ++sign) {
          int cc = sign == 0 ? c - static_cast<int>(dc) : c + static_cast<int>(dc);
          if (cc < 0 || cc >= W || !grid.at(rr, cc)) continue;
          ++found;
          if (best < 0) best = rr * W + cc;
        }
      }
      assert(best >= 0);
      out.site.at(r, c) = best;
      out.site_tied.at(r, c) = found > 1 ? 1 : 0;
    }
  }
  return out;
}

PointGradient edt_point_gradient(const EdtResult& edt, const Grid<int32_t>& owner, int row,
                                 int col) {
  PointGradient g;
  if (edt.dist2.at(row, col) == 0) {
    g.on_foreground = true;
    return g;
  }
  int32_t s = edt.site.at(row, col);
  int sr = s / edt.dist.width, sc = s % edt.dist.width;
  double d = edt.dist.at(row, col);
  // derivative of ||x - site|| as the footprint translates with its point:
  // -(x - s)/||x - s||, in (x, y) = (col, row) coordinates
  g.gx = -(static_cast<double>(col) - sc) / d;
  g.gy = -(static_cast<double>(row) - sr) / d;
  g.owner = owner.at(sr, sc);
  g.tied = edt.site_tied.at(row, col) != 0;
  return g;
}

}  // namespace topolayout
