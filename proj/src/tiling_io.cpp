#include "tiling_io.hpp"

#include <json.hpp>

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "shape.hpp"

namespace hextile {

using nlohmann::json;

namespace {

json dims_json(const HexDims& d) {
  return json{{"a", d.a}, {"b", d.b}, {"c", d.c}};
}

HexDims dims_of(const json& j) {
  if (!j.contains("a") || !j.contains("b") || !j.contains("c"))
    throw validation_error("json object lacks dimensions a,b,c");
  return HexDims(j["a"].get<int>(), j["b"].get<int>(), j["c"].get<int>());
}

}  // namespace

std::string tiling_to_json(const LozengeTiling& t) {
  json j = dims_json(t.dims);
  j["verticals"] = t.verticals;
  return j.dump();
}

std::string partition_to_json(const PlanePartition& p) {
  json j = dims_json(p.dims);
  j["parts"] = p.parts;
  return j.dump();
}

std::string pattern_to_json(const GelfandPattern& g, const HexDims& d) {
  json j = dims_json(d);
  j["rows"] = g.rows;
  return j.dump();
}

ObjectKind detect_kind(const std::string& text) {
  const json j = json::parse(text);
  if (j.contains("verticals")) return ObjectKind::Tiling;
  if (j.contains("parts")) return ObjectKind::Partition;
  if (j.contains("rows")) return ObjectKind::Pattern;
  throw validation_error("json object is not a tiling, partition or pattern");
}

LozengeTiling tiling_from_json(const std::string& text) {
  const json j = json::parse(text);
  const HexDims d = dims_of(j);
  if (j.contains("verticals"))
    return LozengeTiling(d, j["verticals"].get<std::vector<std::vector<int>>>());
  if (j.contains("parts"))
    return tiling_from_partition(
        PlanePartition(d, j["parts"].get<std::vector<std::vector<int>>>()));
  if (j.contains("rows")) {
    GelfandPattern g;
    g.rows = j["rows"].get<std::vector<std::vector<long long>>>();
    return tiling_from_pattern(g, d);
  }
  throw validation_error("json object is not a tiling, partition or pattern");
}

void write_batch_jsonl(std::ostream& os, const SampleBatch& batch) {
  json meta{{"dims", {batch.dims.a, batch.dims.b, batch.dims.c}},
            {"n", batch.tilings.size()},
            {"method", batch.method},
            {"seed", batch.seed},
            {"version", "hextile 0.1.0"}};
  os << meta.dump() << "\n";
  for (const auto& t : batch.tilings) os << tiling_to_json(t) << "\n";
}

SampleBatch read_batch_jsonl(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw validation_error("empty sample file");
  const json meta = json::parse(line);
  if (!meta.contains("dims")) throw validation_error("sample file lacks metadata line");
  const auto dm = meta["dims"].get<std::vector<int>>();
  if (dm.size() != 3) throw validation_error("metadata dims must have 3 entries");
  SampleBatch batch{HexDims(dm[0], dm[1], dm[2]), meta.value("seed", (std::uint64_t)0),
                    meta.value("method", std::string("unknown")), {}};
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    LozengeTiling t = tiling_from_json(line);
    if (!(t.dims == batch.dims)) throw validation_error("sample dims mismatch");
    batch.tilings.push_back(std::move(t));
  }
  return batch;
}

namespace {

const char* fill_of(Orientation o) {
  switch (o) {
    case Orientation::Vertical: return "#b9b9b9";
    case Orientation::Left: return "#7d7d7d";
    default: return "#f4f4f4";
  }
}

}  // namespace

std::string tiling_to_svg(const LozengeTiling& t, const std::vector<char>* arctic) {
  const HexDims& d = t.dims;
  const LozengeSet ls = lozenges_of(t);
  if (arctic && arctic->size() != ls.lozenges.size())
    throw validation_error("arctic mask size mismatch");
  const double unit = 24.0;
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  for (int k = 0; k <= d.lines(); k++) {
    xmin = std::min({xmin, vertex_x(d, k, 0)});
    xmax = std::max({xmax, vertex_x(d, k, line_slot_count(d, k))});
    ymin = std::min(ymin, vertex_y(d, k));
    ymax = std::max(ymax, vertex_y(d, k));
  }
  const double pad = 0.6;
  auto px = [&](double X) { return (X - xmin + pad) * unit; };
  auto py = [&](double Y) { return (ymax - Y + pad) * unit; };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << (xmax - xmin + 2 * pad) * unit << "\" height=\"" << (ymax - ymin + 2 * pad) * unit
     << "\">\n";
  os << "<!-- hextile 0.1.0 -->\n";
  for (size_t j = 0; j < ls.lozenges.size(); j++) {
    const Lozenge& z = ls.lozenges[j];
    os << "<polygon points=\"";
    for (const auto& [k, i] : z.corners)
      os << px(vertex_x(d, k, i)) << "," << py(vertex_y(d, k)) << " ";
    const bool dim = arctic && !(*arctic)[j];
    os << "\" fill=\"" << (dim ? "#dfe9ff" : fill_of(z.o))
       << "\" stroke=\"#303030\" stroke-width=\"1\"/>\n";
  }
  if (arctic) {
    // overlay the inscribed ellipse of the normalized shape, mapped back to
    // lattice coordinates
    const NormalizedFrame fr = frame_of(d);
    const ShapeParams sp(fr.alpha, fr.beta, fr.gamma);
    const double a = sp.alpha, b = sp.beta, c = sp.gamma;
    const double q = a + 2 * b + c;
    const double m11 = 3 * (a + c) * (a + c);
    const double m12 = -std::sqrt(3.0) * q * (a - c);
    const double m22 = q * q - 4 * a * c;
    const double rhs = 3 * a * b * c * (a + b + c);
    os << "<polyline fill=\"none\" stroke=\"#c03030\" stroke-width=\"1.5\" points=\"";
    const int steps = 180;
    for (int i = 0; i <= steps; i++) {
      const double th = 2 * M_PI * i / steps;
      const double dx = std::cos(th), dy = std::sin(th);
      const double v = m11 * dx * dx + 2 * m12 * dx * dy + m22 * dy * dy;
      const double r = std::sqrt(rhs / v);
      os << px(r * dx * fr.sigma + fr.cx) << "," << py(r * dy * fr.sigma + fr.cy) << " ";
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string tiling_to_ascii(const LozengeTiling& t) {
  const HexDims& d = t.dims;
  const HeightField f = heights_from_tiling(t);
  double xmin = 1e9;
  for (int k = 0; k <= d.lines(); k++) xmin = std::min(xmin, vertex_x(d, k, 0));
  std::ostringstream os;
  for (int k = 0; k < d.lines(); k++) {
    const int off = row_shift(d, k);
    struct Tri { double x; char ch; };
    std::vector<Tri> tris;
    // down-pointing triangles: horizontal edge on line k
    for (int i = 0; i + 1 <= line_slot_count(d, k); i++) {
      const int apex = i + 1 - off;
      char ch;
      if (f.h[k][i + 1] - f.h[k][i] == -2) ch = '|';
      else if (f.h[k + 1][apex] - f.h[k][i] == 2) ch = '\\';
      else ch = '/';
      tris.push_back({vertex_x(d, k, i) + 0.5, ch});
    }
    // up-pointing triangles: horizontal edge on line k+1
    for (int j = 0; j + 1 <= line_slot_count(d, k + 1); j++) {
      const int apex = j + off;
      char ch;
      if (f.h[k + 1][j + 1] - f.h[k + 1][j] == -2) ch = '|';
      else if (f.h[k + 1][j] - f.h[k][apex] == -2) ch = '/';
      else ch = '\\';
      tris.push_back({vertex_x(d, k + 1, j) + 0.5, ch});
    }
    std::sort(tris.begin(), tris.end(), [](const Tri& u, const Tri& v) { return u.x < v.x; });
    std::string row;
    if (!tris.empty()) {
      const int indent = (int)std::lround(2 * (tris.front().x - xmin));
      row.assign(indent, ' ');
      for (const Tri& tr : tris) row.push_back(tr.ch);
    }
    os << row << "\n";
  }
  return os.str();
}

std::string density_to_csv(const DensityGrid& g) {
  std::ostringstream os;
  os << "bin_x,bin_y,freq,n\n";
  os.precision(10);
  for (int by = 0; by < g.ny; by++)
    for (int bx = 0; bx < g.nx; bx++) {
      const long long n = g.total[g.idx(bx, by)];
      if (!n && g.area[g.idx(bx, by)] == 0) continue;
      os << g.x0 + (bx + 0.5) * g.bin_w << "," << g.y0 + (by + 0.5) * g.bin_w << ","
         << g.freq(bx, by) << "," << n << "\n";
    }
  return os.str();
}

}  // namespace hextile
