#include "topolayout/layout.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "topolayout/errors.hpp"

namespace topolayout {

std::vector<int> CellLayout::counts() const {
  std::vector<int> c;
  c.reserve(points.size());
  for (const auto& p : points) c.push_back(static_cast<int>(p.size()));
  return c;
}

int CellLayout::total_count() const {
  int t = 0;
  for (const auto& p : points) t += static_cast<int>(p.size());
  return t;
}

void CellLayout::validate() const {
  if (width <= 0 || height <= 0) throw validation_error("canvas dimensions must be positive");
  if (classes.count() < 1) throw validation_error("layout needs at least one class");
  if (points.size() != static_cast<size_t>(classes.count()))
    throw validation_error("points list does not match class count");
  for (int c = 0; c < n_classes(); ++c) {
    for (const Point& p : points[c]) {
      if (!(p.x >= 0.0 && p.x < width && p.y >= 0.0 && p.y < height))
        throw validation_error("point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                               ") outside canvas " + std::to_string(width) + "x" +
                               std::to_string(height));
    }
  }
}

std::string sidecar_path(const std::string& csv_path) {
  auto dot = csv_path.find_last_of('.');
  auto slash = csv_path.find_last_of("/\\");
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return csv_path + ".json";
  return csv_path.substr(0, dot) + ".json";
}

namespace {

double parse_double(const std::string& tok, const std::string& ctx) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw validation_error("non-numeric value '" + tok + "' in " + ctx);
  return v;
}

long parse_int(const std::string& tok, const std::string& ctx) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw validation_error("non-integer value '" + tok + "' in " + ctx);
  return v;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

CellLayout load_layout(const std::string& csv_path) {
  std::ifstream csv(csv_path);
  if (!csv) throw io_error("cannot open layout file: " + csv_path);

  std::ifstream meta(sidecar_path(csv_path));
  if (!meta) throw io_error("missing sidecar metadata: " + sidecar_path(csv_path));

  CellLayout layout;
  try {
    nlohmann::json j = nlohmann::json::parse(meta);
    layout.width = j.at("width").get<int>();
    layout.height = j.at("height").get<int>();
    for (const auto& name : j.at("classes")) layout.classes.names.push_back(name.get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw io_error("malformed sidecar " + sidecar_path(csv_path) + ": " + e.what());
  }
  if (layout.classes.count() < 1) throw validation_error("sidecar declares no classes");
  layout.points.resize(layout.classes.count());

  std::string line;
  bool saw_header = false;
  size_t lineno = 0;
  while (std::getline(csv, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != "class,x,y")
        throw validation_error("expected header 'class,x,y' in " + csv_path);
      saw_header = true;
      continue;
    }
    std::stringstream ss(line);
    std::string c_tok, x_tok, y_tok;
    if (!std::getline(ss, c_tok, ',') || !std::getline(ss, x_tok, ',') || !std::getline(ss, y_tok))
      throw validation_error("malformed row at line " + std::to_string(lineno) + " of " + csv_path);
    const std::string ctx = csv_path + ":" + std::to_string(lineno);
    long cls = parse_int(trim(c_tok), ctx);
    if (cls < 0 || cls >= layout.classes.count())
      throw validation_error("class id " + std::to_string(cls) + " out of range [0," +
                             std::to_string(layout.classes.count()) + ") at " + ctx);
    Point p{parse_double(trim(x_tok), ctx), parse_double(trim(y_tok), ctx)};
    layout.points[static_cast<size_t>(cls)].push_back(p);
  }
  if (!saw_header) throw validation_error("empty layout file (missing header): " + csv_path);
  layout.validate();
  return layout;
}

void save_layout(const CellLayout& layout, const std::string& csv_path) {
  layout.validate();
  std::ofstream csv(csv_path);
  if (!csv) throw io_error("cannot write layout file: " + csv_path);
  csv << "class,x,y\n";
  char buf[64];
  for (int c = 0; c < layout.n_classes(); ++c) {
    for (const Point& p : layout.points[c]) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", c, p.x, p.y);
      csv << buf;
    }
  }
  nlohmann::json j;
  j["width"] = layout.width;
  j["height"] = layout.height;
  j["classes"] = layout.classes.names;
  std::ofstream meta(sidecar_path(csv_path));
  if (!meta) throw io_error("cannot write sidecar: " + sidecar_path(csv_path));
  meta << j.dump(2) << "\n";
}

BinaryGrid load_mask_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open mask image: " + path);
  std::string magic;
  in >> magic;
  if (magic != "P5" && magic != "P2") throw io_error("unsupported mask format (need PGM P2/P5): " + path);
  auto next_token = [&]() -> long {
    std::string tok;
    for (;;) {
      if (!(in >> tok)) throw io_error("truncated PGM header: " + path);
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return parse_int(tok, path);
    }
  };
  long w = next_token(), h = next_token(), maxval = next_token();
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255)
    throw io_error("unsupported PGM geometry in " + path);
  BinaryGrid g(static_cast<int>(w), static_cast<int>(h), 0);
  if (magic == "P5") {
    in.get();  // single whitespace after maxval
    std::vector<unsigned char> raw(g.size());
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!in) throw io_error("truncated PGM payload: " + path);
    for (size_t i = 0; i < raw.size(); ++i) g.data[i] = raw[i] >= 128 ? 1 : 0;
  } else {
    for (size_t i = 0; i < g.size(); ++i) {
      long v = next_token();
      g.data[i] = v >= 128 ? 1 : 0;
    }
  }
  return g;
}

namespace {

void stamp_footprint(BinaryGrid& mask, Grid<int32_t>& owner, const Point& p, int32_t id) {
  int cx = static_cast<int>(std::lround(p.x));
  int cy = static_cast<int>(std::lround(p.y));
  for (int r = cy - 1; r <= cy + 1; ++r) {
    if (r < 0 || r >= mask.height) continue;
    for (int c = cx - 1; c <= cx + 1; ++c) {
      if (c < 0 || c >= mask.width) continue;
      mask.at(r, c) = 1;
      if (owner.at(r, c) < 0) owner.at(r, c) = id;
    }
  }
}

}  // namespace

MaskWithOwners rasterize_channel(const CellLayout& layout, int class_id) {
  if (class_id < 0 || class_id >= layout.n_classes())
    throw validation_error("class id out of range in rasterize_channel");
  MaskWithOwners out{BinaryGrid(layout.width, layout.height, 0),
                     Grid<int32_t>(layout.width, layout.height, -1)};
  const auto& pts = layout.points[static_cast<size_t>(class_id)];
  for (size_t i = 0; i < pts.size(); ++i)
    stamp_footprint(out.mask, out.owner, pts[i], static_cast<int32_t>(i));
  return out;
}

int global_point_index(const CellLayout& layout, int class_id, int point_idx) {
  int base = 0;
  for (int c = 0; c < class_id; ++c) base += static_cast<int>(layout.points[c].size());
  return base + point_idx;
}

MaskWithOwners rasterize_aggregate(const CellLayout& layout) {
  MaskWithOwners out{BinaryGrid(layout.width, layout.height, 0),
                     Grid<int32_t>(layout.width, layout.height, -1)};
  int32_t id = 0;
  for (int c = 0; c < layout.n_classes(); ++c)
    for (const Point& p : layout.points[c]) stamp_footprint(out.mask, out.owner, p, id++);
  return out;
}

RasterLayout rasterize(const CellLayout& layout) {
  layout.validate();
  RasterLayout raster;
  raster.width = layout.width;
  raster.height = layout.height;
  raster.channels.reserve(layout.n_classes());
  for (int c = 0; c < layout.n_classes(); ++c)
    raster.channels.push_back(rasterize_channel(layout, c).mask);
  return raster;
}

BinaryGrid aggregate(const RasterLayout& raster) {
  if (raster.channels.empty()) throw validation_error("aggregate needs at least one channel");
  BinaryGrid out(raster.width, raster.height, 0);
  for (const auto& ch : raster.channels)
    for (size_t i = 0; i < out.size(); ++i) out.data[i] = std::max(out.data[i], ch.data[i]);
  return out;
}

int count_components(const BinaryGrid& grid, Connectivity conn) {
  Grid<uint8_t> seen(grid.width, grid.height, 0);
  std::vector<int> stack;
  int components = 0;
  const bool diag = conn == Connectivity::eight;
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < grid.width; ++c) {
      if (!grid.at(r, c) || seen.at(r, c)) continue;
      ++components;
      seen.at(r, c) = 1;
      stack.push_back(r * grid.width + c);
      while (!stack.empty()) {
        int idx = stack.back();
        stack.pop_back();
        int cr = idx / grid.width, cc = idx % grid.width;
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            if (!diag && dr != 0 && dc != 0) continue;
            int nr = cr + dr, nc = cc + dc;
            if (!grid.in_bounds(nr, nc) || !grid.at(nr, nc) || seen.at(nr, nc)) continue;
            seen.at(nr, nc) = 1;
            stack.push_back(nr * grid.width + nc);
          }
        }
      }
    }
  }
  return components;
}

CountReport count_metrics(const std::vector<CellLayout>& real_set,
                          const std::vector<CellLayout>& syn_set) {
  if (real_set.size() != syn_set.size() || real_set.empty())
    throw validation_error("count_metrics requires paired non-empty sets of equal size");
  const ClassSpec& spec = real_set.front().classes;
  for (const auto& l : real_set)
    if (!(l.classes == spec)) throw validation_error("class spec mismatch within real set");
  for (const auto& l : syn_set)
    if (!(l.classes == spec)) throw validation_error("class spec mismatch between sets");

  const size_t n = static_cast<size_t>(spec.count());
  const size_t N = real_set.size();
  CountReport report;
  report.per_class_cce.assign(n, 0.0);
  for (size_t j = 0; j < N; ++j) {
    auto cr = real_set[j].counts();
    auto cs = syn_set[j].counts();
    long total_r = std::accumulate(cr.begin(), cr.end(), 0L);
    long total_s = std::accumulate(cs.begin(), cs.end(), 0L);
    for (size_t i = 0; i < n; ++i) report.per_class_cce[i] += std::abs(cr[i] - cs[i]);
    report.tce += std::abs(total_r - total_s);
    report.per_sample_counts.emplace_back(std::move(cr), std::move(cs));
  }
  for (double& v : report.per_class_cce) v /= static_cast<double>(N);
  report.tce /= static_cast<double>(N);
  return report;
}

}  // namespace topolayout
