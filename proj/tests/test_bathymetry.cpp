#include <cmath>

#include "doctest.h"
#include "swe2d/bathymetry.hpp"
#include "swe2d/mesh.hpp"

using namespace swe;

TEST_CASE("constant bottom is constant everywhere") {
  Mesh mesh = generate_rect_mesh(0.0, 1.0, 0.0, 1.0, 5, 4);
  BathymetryField b = BathymetryField::sample(mesh, [](double, double) { return 0.375; });
  for (int v = 0; v < mesh.n_vertices(); ++v) CHECK(b.vertex_value(v) == 0.375);
  for (int c = 0; c < mesh.n_cells(); ++c) {
    CHECK(b.cell_value(c) == doctest::Approx(0.375).epsilon(1e-16));
    CHECK(b.grad_x(c) == doctest::Approx(0.0));
    CHECK(b.grad_y(c) == doctest::Approx(0.0));
    for (int k = 0; k < 3; ++k)
      CHECK(b.interface_value(c, k) == doctest::Approx(0.375).epsilon(1e-16));
  }
  CHECK(b.max_value() == 0.375);
}

TEST_CASE("linear bottom is reproduced exactly") {
  auto plane = [](double x, double y) { return 2.0 * x - 3.0 * y + 0.5; };
  Mesh mesh = generate_rect_mesh(-1.0, 2.0, 0.0, 1.5, 6, 5, DiagonalPattern::alternating);
  BathymetryField b = BathymetryField::sample(mesh, plane);
  for (int v = 0; v < mesh.n_vertices(); ++v)
    CHECK(b.vertex_value(v) == plane(mesh.vertex(v).x, mesh.vertex(v).y));
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const CellGeometry& g = mesh.geometry(c);
    CHECK(b.cell_value(c) == doctest::Approx(plane(g.cx, g.cy)).epsilon(1e-13));
    CHECK(b.grad_x(c) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(b.grad_y(c) == doctest::Approx(-3.0).epsilon(1e-12));
    for (int k = 0; k < 3; ++k)
      CHECK(b.interface_value(c, k) ==
            doctest::Approx(plane(g.edge[k].mx, g.edge[k].my)).epsilon(1e-13));
  }
}

TEST_CASE("interface values agree bitwise across interior edges") {
  Mesh mesh = generate_rect_mesh(0.0, 2.0, 0.0, 1.0, 7, 3, DiagonalPattern::alternating);
  BathymetryField b = BathymetryField::sample(
      mesh, [](double x, double y) { return std::sin(3.0 * x) * std::cos(2.0 * y); });
  int interior = 0;
  for (const MeshEdge& e : mesh.edges()) {
    if (e.cell_out < 0) continue;
    ++interior;
    CHECK(b.interface_value(e.cell_in, e.k_in) == b.interface_value(e.cell_out, e.k_out));
  }
  CHECK(interior > 0);
}

TEST_CASE("sample equals from_vertex_values on the sampled vertices") {
  Mesh mesh = generate_rect_mesh(0.0, 1.0, 0.0, 1.0, 3, 3);
  auto fn = [](double x, double y) { return x * x + y; };
  BathymetryField sampled = BathymetryField::sample(mesh, fn);
  std::vector<double> vb(mesh.n_vertices());
  for (int v = 0; v < mesh.n_vertices(); ++v) vb[v] = fn(mesh.vertex(v).x, mesh.vertex(v).y);
  BathymetryField direct = BathymetryField::from_vertex_values(mesh, vb);
  for (int c = 0; c < mesh.n_cells(); ++c) {
    CHECK(sampled.cell_value(c) == direct.cell_value(c));
    for (int k = 0; k < 3; ++k)
      CHECK(sampled.interface_value(c, k) == direct.interface_value(c, k));
  }
  CHECK(sampled.max_value() == direct.max_value());
}
