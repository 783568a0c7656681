#include "swe2d/io.hpp"

#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace swe {

namespace {

std::FILE* open_for_write(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("io: cannot write '" + path + "'");
  return f;
}

}  // namespace

void write_gauge_csv(const std::string& path, const std::vector<GaugeRow>& rows) {
  std::FILE* f = open_for_write(path);
  std::fprintf(f, "t,w,h,u,v\n");
  for (const GaugeRow& r : rows)
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.w, r.h, r.u, r.v);
  std::fclose(f);
}

void write_snapshot_csv(const std::string& path, const Mesh& mesh, const BathymetryField& bathy,
                        const CellStateField& states) {
  std::FILE* f = open_for_write(path);
  std::fprintf(f, "cell_id,x,y,B,w,h,qx,qy\n");
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const CellGeometry& g = mesh.geometry(c);
    const double b = bathy.cell_value(c);
    std::fprintf(f, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", c, g.cx, g.cy, b,
                 states.w[c], states.w[c] - b, states.qx[c], states.qy[c]);
  }
  std::fclose(f);
}

void write_snapshot_vtk(const std::string& path, const Mesh& mesh, const BathymetryField& bathy,
                        const CellStateField& states) {
  std::FILE* f = open_for_write(path);
  std::fprintf(f, "# vtk DataFile Version 3.0\nshallow water snapshot\nASCII\n");
  std::fprintf(f, "DATASET UNSTRUCTURED_GRID\nPOINTS %d double\n", mesh.n_vertices());
  for (int v = 0; v < mesh.n_vertices(); ++v)
    std::fprintf(f, "%.17g %.17g 0\n", mesh.vertex(v).x, mesh.vertex(v).y);
  std::fprintf(f, "CELLS %d %d\n", mesh.n_cells(), 4 * mesh.n_cells());
  for (int c = 0; c < mesh.n_cells(); ++c)
    std::fprintf(f, "3 %d %d %d\n", mesh.cell(c)[0], mesh.cell(c)[1], mesh.cell(c)[2]);
  std::fprintf(f, "CELL_TYPES %d\n", mesh.n_cells());
  for (int c = 0; c < mesh.n_cells(); ++c) std::fprintf(f, "5\n");
  std::fprintf(f, "CELL_DATA %d\n", mesh.n_cells());
  auto scalar = [&](const char* name, auto&& value) {
    std::fprintf(f, "SCALARS %s double 1\nLOOKUP_TABLE default\n", name);
    for (int c = 0; c < mesh.n_cells(); ++c) std::fprintf(f, "%.17g\n", value(c));
  };
  scalar("B", [&](int c) { return bathy.cell_value(c); });
  scalar("w", [&](int c) { return states.w[c]; });
  scalar("h", [&](int c) { return states.w[c] - bathy.cell_value(c); });
  scalar("qx", [&](int c) { return states.qx[c]; });
  scalar("qy", [&](int c) { return states.qy[c]; });
  std::fclose(f);
}

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw std::runtime_error("io: cannot create directory '" + path + "': " + ec.message());
}

}  // namespace swe
