#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "topolayout/errors.hpp"
#include "topolayout/persistence.hpp"

namespace topolayout {

std::vector<Bar> PersistenceDiagram::dim_bars(int dim) const {
  std::vector<Bar> out;
  for (const Bar& b : bars)
    if (b.dim == dim) out.push_back(b);
  return out;
}

double PersistenceDiagram::total_persistence() const {
  double t = 0.0;
  for (const Bar& b : bars) t += b.death - b.birth;
  return t;
}

namespace detail {

void finalize_diagram(PersistenceDiagram& d) {
  auto dead = std::remove_if(d.bars.begin(), d.bars.end(),
                             [](const Bar& b) { return !(b.death > b.birth); });
  d.bars.erase(dead, d.bars.end());
  std::sort(d.bars.begin(), d.bars.end(), [](const Bar& a, const Bar& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death != b.death) return a.death < b.death;
    if (a.birth_cell != b.birth_cell) return a.birth_cell < b.birth_cell;
    return a.death_cell < b.death_cell;
  });
}

}  // namespace detail

std::vector<std::vector<int>> betti_curve(const PersistenceDiagram& diagram,
                                          const std::vector<double>& thresholds,
                                          int max_dimension) {
  std::vector<std::vector<int>> out(static_cast<size_t>(max_dimension) + 1,
                                    std::vector<int>(thresholds.size(), 0));
  for (const Bar& b : diagram.bars) {
    if (b.dim > max_dimension) continue;
    for (size_t i = 0; i < thresholds.size(); ++i) {
      double t = thresholds[i];
      if (b.birth <= t && t < b.death) ++out[static_cast<size_t>(b.dim)][i];
    }
  }
  return out;
}

void write_diagram_csv(const PersistenceDiagram& diagram, const std::string& path,
                       const std::string& manifest_comment) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write diagram file: " + path);
  if (!manifest_comment.empty()) out << "# manifest: " << manifest_comment << "\n";
  out << "dim,birth,death,b_cell,d_cell\n";
  char buf[128];
  for (const Bar& b : diagram.bars) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%lld,%lld\n", b.dim, b.birth, b.death,
                  static_cast<long long>(b.birth_cell), static_cast<long long>(b.death_cell));
    out << buf;
  }
}

PersistenceDiagram read_diagram_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open diagram file: " + path);
  PersistenceDiagram d;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line.rfind("dim,birth,death", 0) != 0)
        throw validation_error("expected diagram header in " + path);
      saw_header = true;
      continue;
    }
    std::stringstream ss(line);
    std::string tok;
    Bar b;
    if (!std::getline(ss, tok, ',')) throw validation_error("malformed diagram row in " + path);
    b.dim = std::stoi(tok);
    if (!std::getline(ss, tok, ',')) throw validation_error("malformed diagram row in " + path);
    b.birth = std::stod(tok);
    if (!std::getline(ss, tok, ',')) throw validation_error("malformed diagram row in " + path);
    b.death = std::stod(tok);
    if (std::getline(ss, tok, ',')) b.birth_cell = std::stoll(tok);
    if (std::getline(ss, tok, ',')) b.death_cell = std::stoll(tok);
    d.bars.push_back(b);
  }
  detail::finalize_diagram(d);
  return d;
}

}  // namespace topolayout
