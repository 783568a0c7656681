#include "swe2d/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace swe {

namespace {

double twice_signed_area(const Vertex& a, const Vertex& b, const Vertex& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("mesh: " + msg); }

}  // namespace

Mesh::Mesh(std::vector<Vertex> vertices, std::vector<std::array<int, 3>> cells,
           std::vector<double> vertex_b,
           const std::vector<std::tuple<int, int, std::string>>& boundary_tags)
    : vertices_(std::move(vertices)), cells_(std::move(cells)), vertex_b_(std::move(vertex_b)) {
  const int nv = n_vertices();
  const int nc = n_cells();
  if (nv < 3 || nc < 1) fail("needs at least 3 vertices and 1 cell");
  if (vertex_b_.empty()) vertex_b_.assign(nv, 0.0);
  if (static_cast<int>(vertex_b_.size()) != nv) fail("vertex bottom array size mismatch");

  bbox_ = {std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest(),
           std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
  for (int v = 0; v < nv; ++v) {
    if (!std::isfinite(vertices_[v].x) || !std::isfinite(vertices_[v].y) ||
        !std::isfinite(vertex_b_[v]))
      fail("non-finite data at vertex " + std::to_string(v));
    bbox_[0] = std::min(bbox_[0], vertices_[v].x);
    bbox_[1] = std::max(bbox_[1], vertices_[v].x);
    bbox_[2] = std::min(bbox_[2], vertices_[v].y);
    bbox_[3] = std::max(bbox_[3], vertices_[v].y);
  }

  // Normalize to counter-clockwise order; remember flips so that explicit boundary
  // tags (given in input ordering) can be remapped. Swapping vertices 1 and 2 maps
  // input edge k to edge 2-k.
  std::vector<char> flipped(nc, 0);
  for (int c = 0; c < nc; ++c) {
    for (int k = 0; k < 3; ++k) {
      const int v = cells_[c][k];
      if (v < 0 || v >= nv) fail("cell " + std::to_string(c) + " references vertex " + std::to_string(v));
    }
    const double a2 = twice_signed_area(vertices_[cells_[c][0]], vertices_[cells_[c][1]],
                                        vertices_[cells_[c][2]]);
    if (a2 < 0.0) {
      std::swap(cells_[c][1], cells_[c][2]);
      flipped[c] = 1;
    } else if (a2 == 0.0) {
      fail("cell " + std::to_string(c) + " has zero area");
    }
  }

  // Pair edges across cells.
  std::unordered_map<std::uint64_t, std::pair<int, int>> first_visit;
  first_visit.reserve(static_cast<std::size_t>(nc) * 2);
  geom_.assign(nc, CellGeometry{});
  for (int c = 0; c < nc; ++c) {
    for (int k = 0; k < 3; ++k) {
      const int a = cells_[c][k];
      const int b = cells_[c][(k + 1) % 3];
      if (a == b) fail("cell " + std::to_string(c) + " repeats a vertex");
      const auto key = edge_key(a, b);
      auto it = first_visit.find(key);
      if (it == first_visit.end()) {
        first_visit.emplace(key, std::make_pair(c, k));
      } else if (it->second.first >= 0) {
        const auto [oc, ok] = it->second;
        geom_[c].edge[k].neighbor = oc;
        geom_[oc].edge[ok].neighbor = c;
        it->second.first = -2;  // seen twice
      } else {
        fail("edge " + std::to_string(a) + "-" + std::to_string(b) + " shared by more than two cells");
      }
    }
  }

  // Resolve boundary tags. Explicit tags first, then bounding-box classification.
  auto tag_id = [this](const std::string& label) {
    for (int i = 0; i < static_cast<int>(tag_labels_.size()); ++i)
      if (tag_labels_[i] == label) return i;
    tag_labels_.push_back(label);
    return static_cast<int>(tag_labels_.size()) - 1;
  };
  std::vector<std::array<int, 3>> explicit_tag(nc, {-1, -1, -1});
  for (const auto& [c, k_in, label] : boundary_tags) {
    if (c < 0 || c >= nc || k_in < 0 || k_in > 2) fail("boundary tag references invalid cell/edge");
    const int k = flipped[c] ? 2 - k_in : k_in;
    explicit_tag[c][k] = tag_id(label);
  }
  const double tol = 1e-9 * std::max(bbox_[1] - bbox_[0], bbox_[3] - bbox_[2]);
  auto classify = [&](const Vertex& a, const Vertex& b) {
    if (std::abs(a.x - bbox_[0]) <= tol && std::abs(b.x - bbox_[0]) <= tol) return tag_id("left");
    if (std::abs(a.x - bbox_[1]) <= tol && std::abs(b.x - bbox_[1]) <= tol) return tag_id("right");
    if (std::abs(a.y - bbox_[2]) <= tol && std::abs(b.y - bbox_[2]) <= tol) return tag_id("bottom");
    if (std::abs(a.y - bbox_[3]) <= tol && std::abs(b.y - bbox_[3]) <= tol) return tag_id("top");
    return tag_id("boundary");
  };

  // Geometry, unique edge list, boundary list.
  total_area_ = 0.0;
  max_cell_area_ = 0.0;
  min_inradius_ = std::numeric_limits<double>::max();
  for (int c = 0; c < nc; ++c) {
    CellGeometry& g = geom_[c];
    const Vertex& v0 = vertices_[cells_[c][0]];
    const Vertex& v1 = vertices_[cells_[c][1]];
    const Vertex& v2 = vertices_[cells_[c][2]];
    g.area = 0.5 * twice_signed_area(v0, v1, v2);
    g.cx = (v0.x + v1.x + v2.x) / 3.0;
    g.cy = (v0.y + v1.y + v2.y) / 3.0;
    double perimeter = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Vertex& a = vertices_[cells_[c][k]];
      const Vertex& b = vertices_[cells_[c][(k + 1) % 3]];
      EdgeGeometry& e = g.edge[k];
      const double ex = b.x - a.x;
      const double ey = b.y - a.y;
      e.length = std::hypot(ex, ey);
      // For counter-clockwise ordering the outward normal is the edge vector
      // rotated clockwise by 90 degrees.
      e.nx = ey / e.length;
      e.ny = -ex / e.length;
      e.mx = 0.5 * (a.x + b.x);
      e.my = 0.5 * (a.y + b.y);
      perimeter += e.length;
      if (e.neighbor < 0) {
        e.boundary_tag = explicit_tag[c][k] >= 0 ? explicit_tag[c][k] : classify(a, b);
        e.boundary_slot = static_cast<int>(boundary_edges_.size());
        boundary_edges_.push_back({c, k, e.boundary_tag});
        edges_.push_back({c, k, -1, -1});
      } else if (e.neighbor > c) {
        // Find the matching local edge on the neighbor (same vertex pair).
        const auto& ncell = cells_[e.neighbor];
        int kn = -1;
        for (int m = 0; m < 3; ++m) {
          const int na = ncell[m];
          const int nb = ncell[(m + 1) % 3];
          if ((na == cells_[c][k] && nb == cells_[c][(k + 1) % 3]) ||
              (nb == cells_[c][k] && na == cells_[c][(k + 1) % 3])) {
            kn = m;
            break;
          }
        }
        if (kn < 0) fail("internal topology error");
        edges_.push_back({c, k, e.neighbor, kn});
      }
    }
    g.inradius = 2.0 * g.area / perimeter;
    total_area_ += g.area;
    max_cell_area_ = std::max(max_cell_area_, g.area);
    min_inradius_ = std::min(min_inradius_, g.inradius);
  }
}

Mesh generate_rect_mesh(double x0, double x1, double y0, double y1, int nx, int ny,
                        DiagonalPattern pattern) {
  if (!(x1 > x0) || !(y1 > y0)) fail("generate_rect_mesh: empty domain");
  if (nx < 1 || ny < 1) fail("generate_rect_mesh: nx and ny must be at least 1");

  std::vector<Vertex> verts;
  verts.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      verts.push_back({x0 + (x1 - x0) * i / nx, y0 + (y1 - y0) * j / ny});

  auto vid = [nx](int i, int j) { return j * (nx + 1) + i; };
  std::vector<std::array<int, 3>> cells;
  cells.reserve(static_cast<std::size_t>(nx) * ny * 2);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int ll = vid(i, j), lr = vid(i + 1, j);
      const int ul = vid(i, j + 1), ur = vid(i + 1, j + 1);
      const bool main_diag =
          pattern == DiagonalPattern::uniform ? true : ((i + j) % 2 == 0);
      if (main_diag) {  // split along lower-left to upper-right
        cells.push_back({ll, lr, ur});
        cells.push_back({ll, ur, ul});
      } else {  // split along lower-right to upper-left
        cells.push_back({ll, lr, ul});
        cells.push_back({lr, ur, ul});
      }
    }
  }
  return Mesh(std::move(verts), std::move(cells));
}

Mesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");

  int lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++lineno;
      const auto hash = out.find('#');
      if (hash != std::string::npos) out.erase(hash);
      if (out.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };
  auto parse_error = [&](const std::string& what) {
    fail("'" + path + "' line " + std::to_string(lineno) + ": " + what);
  };

  std::string line;
  if (!next_line(line)) parse_error("missing header");
  int nv = 0, nt = 0;
  {
    std::istringstream s(line);
    if (!(s >> nv >> nt) || nv < 3 || nt < 1) parse_error("expected 'NV NT' header");
  }
  std::vector<Vertex> verts(nv);
  std::vector<double> vb(nv);
  for (int v = 0; v < nv; ++v) {
    if (!next_line(line)) parse_error("unexpected end of file in vertex list");
    std::istringstream s(line);
    if (!(s >> verts[v].x >> verts[v].y >> vb[v])) parse_error("expected 'x y B' vertex line");
  }
  std::vector<std::array<int, 3>> cells(nt);
  for (int c = 0; c < nt; ++c) {
    if (!next_line(line)) parse_error("unexpected end of file in cell list");
    std::istringstream s(line);
    if (!(s >> cells[c][0] >> cells[c][1] >> cells[c][2]))
      parse_error("expected 'i1 i2 i3' cell line");
  }
  std::vector<std::tuple<int, int, std::string>> tags;
  if (next_line(line)) {
    std::istringstream s(line);
    std::string word;
    s >> word;
    if (word != "boundary") parse_error("expected 'boundary' section or end of file");
    while (next_line(line)) {
      std::istringstream b(line);
      int c = 0, k = 0;
      std::string label;
      if (!(b >> c >> k >> label)) parse_error("expected 'cell edge tag' boundary line");
      tags.emplace_back(c, k, label);
    }
  }
  return Mesh(std::move(verts), std::move(cells), std::move(vb), tags);
}

void save_mesh(const Mesh& mesh, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) fail("cannot write '" + path + "'");
  std::fprintf(f, "# triangular mesh: vertices (x y B), cells, boundary tags\n");
  std::fprintf(f, "%d %d\n", mesh.n_vertices(), mesh.n_cells());
  for (int v = 0; v < mesh.n_vertices(); ++v)
    std::fprintf(f, "%.17g %.17g %.17g\n", mesh.vertex(v).x, mesh.vertex(v).y, mesh.vertex_b(v));
  for (int c = 0; c < mesh.n_cells(); ++c)
    std::fprintf(f, "%d %d %d\n", mesh.cell(c)[0], mesh.cell(c)[1], mesh.cell(c)[2]);
  if (!mesh.boundary_edges().empty()) {
    std::fprintf(f, "boundary\n");
    for (const auto& b : mesh.boundary_edges())
      std::fprintf(f, "%d %d %s\n", b.cell, b.k, mesh.boundary_tags()[b.tag].c_str());
  }
  std::fclose(f);
}

std::optional<int> locate_cell(const Mesh& mesh, double x, double y) {
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const auto& cell = mesh.cell(c);
    const double tol = 1e-12 * 2.0 * mesh.geometry(c).area;
    bool inside = true;
    for (int k = 0; k < 3; ++k) {
      const Vertex& a = mesh.vertex(cell[k]);
      const Vertex& b = mesh.vertex(cell[(k + 1) % 3]);
      const double cross = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
      if (cross < -tol) {
        inside = false;
        break;
      }
    }
    if (inside) return c;
  }
  return std::nullopt;
}

}  // namespace swe
